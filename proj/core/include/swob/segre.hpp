#pragma once

#include "swob/schur_series.hpp"

namespace swob {

// Phi^s(l) mod 2: sum of D^{s,s+l}_{mu,nu} s_{(s+l)^s+mu, nu^T}; l >= 0
GradedSchurSeries phi(int s, int l, int max_degree);

// Phi^1(l) in closed form: sum binom(l+i,j) s_{(l+1+j, 1^{i-j})}
GradedSchurSeries phi1_closed(int l, int max_degree);

// Phi^i(-1) = transpose of Phi^{i-1}(1); i >= 2
GradedSchurSeries phi_dual(int i, int max_degree);

// Segre-SW class of Sigma^r(l): open uses binom(s,r), closed binom(s-1,r-1).
// l = -1 is routed through phi_dual (needs r >= 2).
GradedSchurSeries ssw_sigma(int r, int l, int max_degree, bool closed);

}  // namespace swob
