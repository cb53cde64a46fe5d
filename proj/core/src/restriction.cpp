#include "swob/restriction.hpp"

#include <algorithm>
#include <stdexcept>

namespace swob {

IntSeries::IntSeries(int order, std::vector<Rational> coefficients) : order_(order), c_(std::move(coefficients)) {
    if (order < 0) throw std::invalid_argument("IntSeries: order must be >= 0");
    c_.resize(static_cast<std::size_t>(order + 1));
}

IntSeries IntSeries::monomial(int order, const Rational& c, int power) {
    IntSeries s(order);
    if (power >= 0 && power <= order) s.c_[static_cast<std::size_t>(power)] = c;
    return s;
}

Rational IntSeries::coefficient(int k) const {
    if (k < 0 || k > order_) return 0;
    return c_[static_cast<std::size_t>(k)];
}

IntSeries IntSeries::operator+(const IntSeries& o) const {
    IntSeries r(std::min(order_, o.order_));
    for (int k = 0; k <= r.order_; ++k) r.c_[static_cast<std::size_t>(k)] = coefficient(k) + o.coefficient(k);
    return r;
}

IntSeries IntSeries::operator*(const IntSeries& o) const {
    IntSeries r(std::min(order_, o.order_));
    for (int i = 0; i <= r.order_; ++i)
        for (int j = 0; i + j <= r.order_; ++j)
            r.c_[static_cast<std::size_t>(i + j)] += coefficient(i) * o.coefficient(j);
    return r;
}

IntSeries IntSeries::scaled(const Rational& c) const {
    IntSeries r = *this;
    for (auto& x : r.c_) x *= c;
    return r;
}

IntSeries IntSeries::inverse() const {
    if (c_[0] == 0) throw std::domain_error("IntSeries: constant term is zero");
    IntSeries r(order_);
    r.c_[0] = 1 / c_[0];
    for (int k = 1; k <= order_; ++k) {
        Rational acc = 0;
        for (int i = 1; i <= k; ++i) acc += coefficient(i) * r.c_[static_cast<std::size_t>(k - i)];
        r.c_[static_cast<std::size_t>(k)] = -acc / c_[0];
    }
    return r;
}

SolveResult solve(const LinearSystemQ& sys) {
    const std::size_t rows = sys.matrix.size();
    const std::size_t cols = sys.unknowns.size();
    if (sys.rhs.size() != rows) throw std::invalid_argument("solve: rhs size mismatch");
    std::vector<std::vector<Rational>> a = sys.matrix;
    for (std::size_t r = 0; r < rows; ++r) {
        if (a[r].size() != cols) throw std::invalid_argument("solve: row size mismatch");
        a[r].push_back(sys.rhs[r]);
    }
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[r]);
        const Rational lead = a[r][c];
        for (auto& x : a[r]) x /= lead;
        for (std::size_t k = 0; k < rows; ++k) {
            if (k == r || a[k][c] == 0) continue;
            const Rational f = a[k][c];
            for (std::size_t j = c; j <= cols; ++j) a[k][j] -= f * a[r][j];
        }
        pivot_col.push_back(c);
        ++r;
    }
    for (std::size_t k = r; k < rows; ++k)
        if (a[k][cols] != 0) return {SolveStatus::inconsistent, {}, {}};
    SolveResult res{pivot_col.size() == cols ? SolveStatus::unique : SolveStatus::underdetermined,
                    std::vector<Rational>(cols, 0), {}};
    for (std::size_t k = 0; k < pivot_col.size(); ++k) res.solution[pivot_col[k]] = a[k][cols];
    for (std::size_t free = 0; free < cols; ++free) {
        if (std::find(pivot_col.begin(), pivot_col.end(), free) != pivot_col.end()) continue;
        std::vector<Rational> v(cols, 0);
        v[free] = 1;
        for (std::size_t k = 0; k < pivot_col.size(); ++k) v[pivot_col[k]] = -a[k][free];
        res.kernel.push_back(std::move(v));
    }
    return res;
}

std::map<std::string, IntSeries> restriction_series(int i, int order) {
    if (i < 1) throw std::invalid_argument("restriction_series: i must be >= 1");
    return {{"c1", IntSeries::monomial(order, i, 1)},
            {"c2", IntSeries::monomial(order, -i, 2)},
            {"c3", IntSeries::monomial(order, i, 3)}};
}

Rational weight_side(int i) {
    constexpr int order = 3;
    IntSeries denom = IntSeries::monomial(order, 1, 0);
    for (int k = 1; k <= i; ++k) denom = denom * (IntSeries::monomial(order, 1, 0) + IntSeries::monomial(order, k, 1));
    IntSeries num(order);
    if (i == 2) {
        // normal weights of A2 in the source: a and 2a
        num = IntSeries::monomial(order, 1, 1) * IntSeries::monomial(order, 2, 1);
    } else if (i == 3) {
        // the already known degree-2 term c1^2 + c2, restricted to A3
        auto c = restriction_series(3, order);
        num = c.at("c1") * c.at("c1") + c.at("c2");
    } else {
        throw std::invalid_argument("weight_side: only i = 2, 3");
    }
    return (num * denom.inverse()).coefficient(3);
}

RestrictionDemo solve_s3_A2() {
    RestrictionDemo d;
    d.system.unknowns = {"c1^3", "c1c2", "c3"};
    // A c1^3 + B c1 c2 + C c3 restricted to A_i, with the known degree-2 part carried along
    for (int i = 1; i <= 3; ++i) {
        auto c = restriction_series(i, 3);
        const Rational c1 = c.at("c1").coefficient(1), c2 = c.at("c2").coefficient(2), c3 = c.at("c3").coefficient(3);
        d.system.matrix.push_back({c1 * c1 * c1, c1 * c2, c3});
        d.system.rhs.push_back(i == 1 ? Rational(0) : weight_side(i));
        d.system.equation_labels.push_back("A" + std::to_string(i));
    }
    const SolveResult r = solve(d.system);
    if (r.status != SolveStatus::unique) throw std::logic_error("solve_s3_A2: system is not uniquely solvable");
    d.A = r.solution[0];
    d.B = r.solution[1];
    d.C = r.solution[2];
    auto show = [](const Rational& q) {
        Rational a = q < 0 ? Rational(-q) : q;
        return a == 1 ? std::string() : a.str();
    };
    if (d.A < 0 && d.B < 0 && d.C < 0)
        d.answer = "(c1^2+c2)-(" + show(d.A) + "c1^3+" + show(d.B) + "c1c2+" + show(d.C) + "c3)";
    else
        d.answer = "(c1^2+c2)+(" + d.A.str() + ")c1^3+(" + d.B.str() + ")c1c2+(" + d.C.str() + ")c3";
    auto odd = [](const Rational& q) {
        if (boost::multiprecision::denominator(q) % 2 == 0) throw std::domain_error("coefficient not 2-integral");
        return boost::multiprecision::numerator(q) % 2 != 0;
    };
    d.mod2_degree2 = parse_poly<WVar>("w1^2+w2");
    if (odd(d.A)) d.mod2_degree3.toggle(WMonomial::var(1, 3));
    if (odd(d.B)) d.mod2_degree3.toggle(WMonomial({2, 1}));
    if (odd(d.C)) d.mod2_degree3.toggle(WMonomial::var(3));
    return d;
}

}  // namespace swob
