#pragma once

#include <set>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "swob/partition.hpp"
#include "swob/poly.hpp"

namespace swob {

using BigInt = boost::multiprecision::cpp_int;

// F2 combination of Schur classes s_lambda.
class SchurCombo {
public:
    SchurCombo() = default;
    SchurCombo(std::initializer_list<Partition> ps) { for (const auto& p : ps) toggle(p); }

    const std::set<Partition>& partitions() const noexcept { return parts_; }
    bool is_zero() const noexcept { return parts_.empty(); }
    std::size_t size() const noexcept { return parts_.size(); }
    bool contains(const Partition& p) const { return parts_.count(p) != 0; }
    void toggle(const Partition& p);
    SchurCombo part(int d) const;
    int max_degree() const noexcept { return parts_.empty() ? -1 : parts_.rbegin()->weight(); }
    int min_degree() const noexcept { return parts_.empty() ? -1 : parts_.begin()->weight(); }

    SchurCombo& operator+=(const SchurCombo& o);
    friend SchurCombo operator+(SchurCombo a, const SchurCombo& b) { return a += b; }
    friend bool operator==(const SchurCombo&, const SchurCombo&) = default;

    std::string str() const;  // "s[2,2]+s[3,1]", "0"

private:
    std::set<Partition> parts_;
};

// "s[2,2]+s[3,1]", "[11,9]", "(11,9)", "0"
SchurCombo parse_schur(std::string_view text);

// binom(m,k) mod 2 by Lucas: k's binary digits must sit inside m's
constexpr bool lucas_binom(long m, long k) noexcept {
    if (m < 0 || k < 0 || k > m) return false;
    return (k & ~m) == 0;
}

BigInt binomial(long m, long k);

// D^{s,t}_{mu,nu} = det binom(mu_i+s-i+nu_j+t-j, mu_i+s-i), i,j = 1..s
BigInt binom_det(const Partition& mu, const Partition& nu, int s, int t);
bool binom_det_mod2(const Partition& mu, const Partition& nu, int s, int t);

// Jacobi-Trudi det(w_{lambda_i+j-i}), w_0 = 1, negative indices 0
Mod2Poly schur_to_poly(const Partition& lambda);
Mod2Poly schur_to_poly(const SchurCombo& c);
SchurCombo poly_to_schur(const Mod2Poly& p);

Mod2Poly multiply(const Mod2Poly& p, const Mod2Poly& q);

// Wu formula on w_m, Cartan on products
Mod2Poly steenrod_sq(int k, const Mod2Poly& p);
// total square Sq = sum_k Sq^k
Mod2Poly steenrod_total(const Mod2Poly& p);

// coefficient of t^j in p(w_i -> w_i + t w_{i-1})
Mod2Poly lowering(const Mod2Poly& p, int j);

}  // namespace swob
