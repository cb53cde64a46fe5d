#include <stdexcept>

#include "swob/symfun.hpp"

namespace swob {

namespace {

bool wu_binom(long top, long i) {
    if (i == 0) return true;  // also for negative top, so that Sq^m w_m = w_m^2
    if (top < 0) return false;
    return lucas_binom(top, i);
}

Mod2Poly w_or_one(int i) { return i == 0 ? Mod2Poly::one() : Mod2Poly::var(i); }

Mod2Poly sq_w(int k, int m) {
    Mod2Poly r;
    if (k > m) return r;
    if (k == 0) return Mod2Poly::var(m);
    for (int i = 0; i <= k; ++i)
        if (wu_binom(m - k + i - 1, i)) r += w_or_one(k - i) * Mod2Poly::var(m + i);
    return r;
}

// total square of w_m, i.e. sum over k of Sq^k w_m
Mod2Poly sq_total_w(int m) {
    Mod2Poly r;
    for (int k = 0; k <= m; ++k) r += sq_w(k, m);
    return r;
}

Mod2Poly sq_total_monomial(const WMonomial& m, int max_degree) {
    Mod2Poly r = Mod2Poly::one();
    for (int i : m.indices()) r = Mod2Poly::multiply(r, sq_total_w(i), max_degree);
    return r;
}

}  // namespace

Mod2Poly steenrod_sq(int k, const Mod2Poly& p) {
    if (k < 0) throw std::invalid_argument("steenrod_sq: k must be >= 0");
    if (k == 0) return p;
    Mod2Poly out;
    for (const auto& m : p.terms()) {
        if (k > m.degree()) continue;
        out += sq_total_monomial(m, m.degree() + k).part(m.degree() + k);
    }
    return out;
}

Mod2Poly steenrod_total(const Mod2Poly& p) {
    Mod2Poly out;
    for (const auto& m : p.terms()) out += sq_total_monomial(m, -1);
    return out;
}

}  // namespace swob
