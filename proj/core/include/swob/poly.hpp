#pragma once

#include <compare>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace swob {

struct WVar { static constexpr std::string_view prefix = "w"; };
struct TVar { static constexpr std::string_view prefix = "t"; };
struct TauVar { static constexpr std::string_view prefix = "tau"; };

// Monomial in graded variables v_1, v_2, ... (deg v_i = i), stored as the
// multiset of variable indices in decreasing order: w1^2*w3 <-> {3,1,1}.
template <class Var>
class Monomial {
public:
    Monomial() = default;
    // indices in any order, each >= 1
    explicit Monomial(std::vector<int> indices);
    static Monomial var(int i, int exponent = 1);

    const std::vector<int>& indices() const noexcept { return idx_; }
    int degree() const noexcept { return deg_; }
    bool is_one() const noexcept { return idx_.empty(); }
    int exponent(int i) const noexcept;
    // variable index -> exponent, zero exponents never present
    std::map<int, int> exponents() const;

    friend Monomial operator*(const Monomial& a, const Monomial& b) { return a.times(b); }
    friend bool operator==(const Monomial& a, const Monomial& b) noexcept { return a.idx_ == b.idx_; }
    // degree ascending, then index multiset lexicographic descending
    friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) noexcept {
        if (auto c = a.deg_ <=> b.deg_; c != 0) return c;
        return std::lexicographical_compare_three_way(b.idx_.begin(), b.idx_.end(),
                                                      a.idx_.begin(), a.idx_.end());
    }

    std::string str() const;  // "w1^2*w3", "1"

private:
    Monomial times(const Monomial& b) const;
    std::vector<int> idx_;
    int deg_ = 0;
};

// F2 polynomial: a set of monomials, adding a monomial twice removes it.
template <class Var>
class GradedPoly {
public:
    using monomial_type = Monomial<Var>;

    GradedPoly() = default;
    GradedPoly(std::initializer_list<monomial_type> ms) { for (const auto& m : ms) toggle(m); }
    static GradedPoly one() { return GradedPoly{monomial_type()}; }
    static GradedPoly var(int i) { return GradedPoly{monomial_type::var(i)}; }

    const std::set<monomial_type>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }
    bool contains(const monomial_type& m) const { return terms_.count(m) != 0; }
    void toggle(const monomial_type& m);

    int max_degree() const noexcept { return terms_.empty() ? -1 : terms_.rbegin()->degree(); }
    int min_degree() const noexcept { return terms_.empty() ? -1 : terms_.begin()->degree(); }
    bool is_homogeneous() const noexcept { return terms_.empty() || min_degree() == max_degree(); }
    GradedPoly part(int d) const;
    GradedPoly truncated(int max_degree) const;

    GradedPoly& operator+=(const GradedPoly& o);
    GradedPoly& operator*=(const GradedPoly& o) { return *this = *this * o; }
    friend GradedPoly operator+(GradedPoly a, const GradedPoly& b) { return a += b; }
    friend GradedPoly operator*(const GradedPoly& a, const GradedPoly& b) { return multiply(a, b); }
    friend bool operator==(const GradedPoly&, const GradedPoly&) = default;

    // product dropping every term above max_degree (negative = no truncation)
    static GradedPoly multiply(const GradedPoly& a, const GradedPoly& b, int max_degree = -1);

    std::string str() const;  // "w1^2+w2", "0"

private:
    std::set<monomial_type> terms_;
};

using WMonomial = Monomial<WVar>;
using Mod2Poly = GradedPoly<WVar>;
using TMonomial = Monomial<TVar>;
using TangentPoly = GradedPoly<TVar>;
using TauMonomial = Monomial<TauVar>;
using TauPoly = GradedPoly<TauVar>;

// Parses "w1^2*w3 + w2", "1", "0". The variable prefix must match Var
// (for tau also the bare "t" prefix is accepted). Throws std::invalid_argument.
template <class Var>
GradedPoly<Var> parse_poly(std::string_view text);

// same index multiset, other variable namespace
template <class To, class From>
Monomial<To> rename(const Monomial<From>& m) { return Monomial<To>(m.indices()); }
template <class To, class From>
GradedPoly<To> rename(const GradedPoly<From>& p) {
    GradedPoly<To> r;
    for (const auto& m : p.terms()) r.toggle(rename<To>(m));
    return r;
}

extern template class Monomial<WVar>;
extern template class Monomial<TVar>;
extern template class Monomial<TauVar>;
extern template class GradedPoly<WVar>;
extern template class GradedPoly<TVar>;
extern template class GradedPoly<TauVar>;

}  // namespace swob
