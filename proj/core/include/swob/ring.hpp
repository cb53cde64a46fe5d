#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "swob/schur_series.hpp"
#include "swob/symfun.hpp"

namespace swob {

struct Generator {
    std::string name;
    int degree;      // >= 1
    int nilpotency;  // g^nilpotency = 0, >= 2
};

// F2[g_1,...,g_r]/(g_i^{e_i}). Monomials are numbered in mixed radix, first generator fastest.
class RingSpec {
public:
    explicit RingSpec(std::vector<Generator> gens);

    const std::vector<Generator>& generators() const noexcept { return gens_; }
    int dimension() const noexcept { return dim_; }
    std::size_t monomial_count() const noexcept { return count_; }
    std::vector<int> exponents(std::size_t index) const;
    std::size_t index(const std::vector<int>& exponents) const;
    int degree(std::size_t index) const { return deg_[index]; }
    // index of the product, or nullopt if it is truncated away
    std::optional<std::size_t> multiply(std::size_t a, std::size_t b) const;
    std::size_t top_index() const noexcept { return count_ - 1; }
    std::optional<std::size_t> generator_index(const std::string& name) const;
    std::string monomial_str(std::size_t index) const;  // "x^4*y^4", "1"

    friend bool operator==(const RingSpec& a, const RingSpec& b);

private:
    std::vector<Generator> gens_;
    std::vector<std::size_t> stride_;
    std::vector<int> deg_;
    std::size_t count_ = 1;
    int dim_ = 0;
};

using RingSpecPtr = std::shared_ptr<const RingSpec>;

class RingElement {
public:
    RingElement() = default;  // the zero of an unspecified ring; only assignable
    explicit RingElement(RingSpecPtr spec);
    static RingElement zero(RingSpecPtr spec) { return RingElement(std::move(spec)); }
    static RingElement one(RingSpecPtr spec);
    static RingElement monomial(RingSpecPtr spec, const std::vector<int>& exponents);
    static RingElement generator(RingSpecPtr spec, const std::string& name);

    const RingSpecPtr& spec() const noexcept { return spec_; }
    bool coefficient(std::size_t index) const { return coef_[index] != 0; }
    bool coefficient(const std::vector<int>& exponents) const { return coefficient(spec_->index(exponents)); }
    void toggle(std::size_t index) { coef_[index] ^= 1u; }
    bool is_zero() const noexcept;
    bool is_one() const;
    std::vector<std::size_t> support() const;  // sorted by degree, then exponent vector descending

    RingElement part(int d) const;
    RingElement truncated(int max_degree) const;
    // -1 for zero
    int max_degree() const;
    int min_degree() const;
    bool is_homogeneous() const { return is_zero() || min_degree() == max_degree(); }

    RingElement& operator+=(const RingElement& o);
    friend RingElement operator+(RingElement a, const RingElement& b) { return a += b; }
    friend RingElement operator*(const RingElement& a, const RingElement& b);
    friend bool operator==(const RingElement& a, const RingElement& b);
    RingElement pow(unsigned k) const;

    std::string str() const;  // "1+x+x^4+x^5", "0"

private:
    void check_same(const RingElement& o) const;
    RingSpecPtr spec_;
    std::vector<std::uint8_t> coef_;
};

// multiplicative inverse of an element with constant term 1
RingElement inverse(const RingElement& e);

// coefficient of the top monomial
bool integrate(const RingElement& e);

class ManifoldModel {
public:
    // wbar is computed; rejects w without constant term 1
    ManifoldModel(std::string name, RingSpecPtr ring, RingElement w);

    const std::string& name() const noexcept { return name_; }
    const RingSpecPtr& ring() const noexcept { return ring_; }
    const RingElement& w() const noexcept { return w_; }
    const RingElement& wbar() const noexcept { return wbar_; }
    int dim() const noexcept { return ring_->dimension(); }
    RingElement fundamental() const;
    // one generator of degree 1 (H^*(RP^n))
    bool is_projective_space() const noexcept;

private:
    std::string name_;
    RingSpecPtr ring_;
    RingElement w_;
    RingElement wbar_;
};

ManifoldModel rp(int n, const std::string& generator = "x");
ManifoldModel product(const ManifoldModel& a, const ManifoldModel& b);
ManifoldModel wu_manifold();

// "rp:N", "rp:A,rp:B,...", "wu"; products get generators x, y, z, ...
ManifoldModel parse_space(const std::string& descriptor);

// w_i |-> element, w_0 = 1, indices beyond the table map to 0.
class ClassAssignment {
public:
    ClassAssignment(RingSpecPtr ring, std::vector<RingElement> images);  // images[0] is w_1
    // w_i |-> degree-i part of `total`
    static ClassAssignment from_total(const RingElement& total);

    const RingSpecPtr& ring() const noexcept { return ring_; }
    RingElement image(int i) const;
    // every w_i maps to a homogeneous element of degree i
    bool graded() const noexcept { return graded_; }

    // h-images for the dual Jacobi-Trudi form (parts of 1/total); graded only
    RingElement dual_image(int i) const;
    // single-generator graded case: coefficient of g^{i/deg g} in image(i)
    bool coefficient_table(int i) const;

private:
    std::vector<std::uint8_t> table_;
    RingSpecPtr ring_;
    std::vector<RingElement> img_;
    std::vector<RingElement> dual_;
    bool graded_ = false;
};

RingElement evaluate(const Mod2Poly& p, const ClassAssignment& a);
RingElement evaluate(const Partition& lambda, const ClassAssignment& a);
RingElement evaluate(const SchurCombo& c, const ClassAssignment& a);
RingElement evaluate(const GradedSchurSeries& s, const ClassAssignment& a);

// in-ring determinant only (no dual form, no projective-space shortcut); used to cross-check
RingElement evaluate_schur_generic(const Partition& lambda, const ClassAssignment& a);

}  // namespace swob
