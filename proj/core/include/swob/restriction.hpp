#pragma once

#include <map>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "swob/poly.hpp"

namespace swob {

using Rational = boost::multiprecision::cpp_rational;

// Truncated power series in one variable a with exact rational coefficients.
class IntSeries {
public:
    explicit IntSeries(int order, std::vector<Rational> coefficients = {});
    static IntSeries monomial(int order, const Rational& c, int power);

    int order() const noexcept { return order_; }  // coefficients of a^0..a^order are kept
    Rational coefficient(int k) const;
    IntSeries operator+(const IntSeries& o) const;
    IntSeries operator*(const IntSeries& o) const;
    IntSeries scaled(const Rational& c) const;
    IntSeries inverse() const;  // needs a nonzero constant term
    friend bool operator==(const IntSeries&, const IntSeries&) = default;

private:
    int order_;
    std::vector<Rational> c_;
};

struct LinearSystemQ {
    std::vector<std::string> unknowns;
    std::vector<std::vector<Rational>> matrix;
    std::vector<Rational> rhs;
    std::vector<std::string> equation_labels;
    friend bool operator==(const LinearSystemQ&, const LinearSystemQ&) = default;
};

enum class SolveStatus { unique, underdetermined, inconsistent };

struct SolveResult {
    SolveStatus status;
    std::vector<Rational> solution;          // particular solution (unique case: the solution)
    std::vector<std::vector<Rational>> kernel;  // basis of the homogeneous solutions
};

SolveResult solve(const LinearSystemQ& system);

// c1 = i a, c2 = -i a^2, c3 = i a^3
std::map<std::string, IntSeries> restriction_series(int i, int order);

// coefficient of a^3 on the weight side of the A2 (i = 2) and A3 (i = 3) equations
Rational weight_side(int i);

struct RestrictionDemo {
    LinearSystemQ system;
    Rational A, B, C;      // s3 = A c1^3 + B c1 c2 + C c3
    std::string answer;    // "(c1^2+c2)-(3c1^3+6c1c2+3c3)"
    Mod2Poly mod2_degree2;  // w1^2+w2
    Mod2Poly mod2_degree3;  // w1^3+w3
    friend bool operator==(const RestrictionDemo&, const RestrictionDemo&) = default;
};

RestrictionDemo solve_s3_A2();

}  // namespace swob
