#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "swob/ring.hpp"
#include "swob/symfun.hpp"

using namespace swob;

namespace {

RingElement xpoly(const ManifoldModel& m, std::initializer_list<int> powers) {
    RingElement r(m.ring());
    for (int k : powers) r.toggle(m.ring()->index({k}));
    return r;
}

// F2[x,y]/(x^{a+1}, y^{b+1}) as a dense table c[i][j]
struct Biv {
    int a, b;
    std::vector<std::vector<int>> c;
    Biv(int a_, int b_) : a(a_), b(b_), c(a_ + 1, std::vector<int>(b_ + 1, 0)) {}
    Biv operator*(const Biv& o) const {
        Biv r(a, b);
        for (int i = 0; i <= a; ++i)
            for (int j = 0; j <= b; ++j)
                if (c[i][j])
                    for (int k = 0; i + k <= a; ++k)
                        for (int l = 0; j + l <= b; ++l) r.c[i + k][j + l] ^= o.c[k][l];
        return r;
    }
    Biv operator+(const Biv& o) const {
        Biv r = *this;
        for (int i = 0; i <= a; ++i)
            for (int j = 0; j <= b; ++j) r.c[i][j] ^= o.c[i][j];
        return r;
    }
    Biv part(int d) const {
        Biv r(a, b);
        for (int i = 0; i <= a; ++i)
            if (d - i >= 0 && d - i <= b) r.c[i][d - i] = c[i][d - i];
        return r;
    }
};

// s_lambda at the total class `total` of a product of two projective spaces, by Leibniz
Biv schur_biv(const std::vector<int>& lambda, const Biv& total) {
    std::vector<int> rows = lambda;
    Biv t = total;
    if (!lambda.empty() && static_cast<int>(lambda.size()) > lambda.front()) {
        rows = oracle::conjugate(lambda);
        // 1/total by fixed-point iteration inv = 1 + (1 + total) inv
        Biv one(total.a, total.b);
        one.c[0][0] = 1;
        Biv inv = one;
        for (int k = 0; k <= total.a + total.b; ++k) inv = one + (one + total) * inv;
        t = inv;
    }
    const int n = static_cast<int>(rows.size());
    auto entry = [&](int k) {
        Biv z(t.a, t.b);
        return k < 0 ? z : t.part(k);
    };
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    Biv sum(total.a, total.b);
    do {
        Biv term(total.a, total.b);
        term.c[0][0] = 1;
        for (int i = 0; i < n; ++i) term = term * entry(rows[i] + p[i] - i);
        sum = sum + term;
    } while (std::next_permutation(p.begin(), p.end()));
    return sum;
}

Biv to_biv(const RingElement& e, int a, int b) {
    Biv r(a, b);
    for (std::size_t idx : e.support()) {
        const auto ex = e.spec()->exponents(idx);
        r.c[ex[0]][ex[1]] = 1;
    }
    return r;
}

}  // namespace

TEST_CASE("ring spec") {
    const RingSpec s({{"x", 1, 5}, {"y", 1, 7}});
    CHECK(s.dimension() == 10);
    CHECK(s.monomial_count() == 35);
    CHECK(s.degree(s.top_index()) == 10);
    CHECK(s.monomial_str(s.top_index()) == "x^4*y^6");
    CHECK(s.monomial_str(0) == "1");
    CHECK(s.exponents(s.index({3, 2})) == std::vector<int>{3, 2});
    CHECK_FALSE(s.multiply(s.index({3, 0}), s.index({2, 0})).has_value());
    CHECK(s.multiply(s.index({1, 2}), s.index({2, 1})) == s.index({3, 3}));
    // the top monomial is the unique one of maximal degree
    int at_top = 0;
    for (std::size_t i = 0; i < s.monomial_count(); ++i) at_top += s.degree(i) == s.dimension();
    CHECK(at_top == 1);
    CHECK_THROWS_AS(RingSpec({{"x", 0, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(RingSpec({{"x", 1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(RingSpec({{"x", 1, 3}, {"x", 1, 3}}), std::invalid_argument);
}

TEST_CASE("inverse classes of projective spaces") {
    CHECK(rp(10).wbar().str() == "1+x+x^4+x^5");
    CHECK(rp(20).wbar().str() == "1+x+x^2+x^3+x^8+x^9+x^10+x^11");
    CHECK(rp(437).wbar() == xpoly(rp(437), {0, 2, 8, 10, 64, 66, 72, 74}));
    CHECK(rp(5).wbar().str() == "1+x^2");
    CHECK(rp(15).wbar().is_one());
    CHECK(rp(20).name() == "rp:20");
    CHECK(rp(20).dim() == 20);
    CHECK(rp(20).is_projective_space());
    CHECK_FALSE(wu_manifold().is_projective_space());
}

TEST_CASE("property: wbar(RP^n) coefficient of x^k is the bit test (k & n) == 0, n <= 512") {
    for (int n = 1; n <= 512; ++n) {
        const ManifoldModel m = rp(n);
        for (int k = 0; k <= n; ++k) REQUIRE(m.wbar().coefficient({k}) == ((k & n) == 0));
    }
}

TEST_CASE("wbar(RP^n) against long division of Pascal rows") {
    for (int n = 1; n <= 80; ++n) {
        const auto want = oracle::rp_wbar(n);
        const ManifoldModel m = rp(n);
        for (int k = 0; k <= n; ++k) CHECK(m.wbar().coefficient({k}) == (want[k] == 1));
    }
}

TEST_CASE("property: w * wbar = 1 on every model") {
    for (int n = 1; n <= 64; ++n) {
        const ManifoldModel m = rp(n);
        CHECK((m.w() * m.wbar()).is_one());
    }
    for (int a = 1; a <= 12; ++a)
        for (int b = 1; b <= 12; ++b) {
            const ManifoldModel m = product(rp(a, "x"), rp(b, "y"));
            CHECK((m.w() * m.wbar()).is_one());
            CHECK(m.dim() == a + b);
        }
    const ManifoldModel wu = wu_manifold();
    CHECK((wu.w() * wu.wbar()).is_one());
    CHECK(wu.wbar().str() == "1+u+v");
    CHECK(wu.dim() == 5);
    const ManifoldModel three = parse_space("rp:2,rp:2,rp:2");
    CHECK((three.w() * three.wbar()).is_one());
}

TEST_CASE("RP4 x RP6") {
    const ManifoldModel m = parse_space("rp:4,rp:6");
    const auto x = RingElement::generator(m.ring(), "x");
    const auto y = RingElement::generator(m.ring(), "y");
    const auto one = RingElement::one(m.ring());
    CHECK(m.w() == (one + x + x.pow(4)) * (one + y + y.pow(2) + y.pow(3) + y.pow(4) + y.pow(5) + y.pow(6)));
    CHECK(m.wbar() == one + (x + y) + (x.pow(2) + x * y) + (x.pow(3) + x.pow(2) * y) + x.pow(3) * y);
    CHECK(m.name() == "rp:4,rp:6");
}

TEST_CASE("ring elements") {
    const ManifoldModel m = rp(6);
    const auto x = RingElement::generator(m.ring(), "x");
    CHECK(x.pow(7).is_zero());
    CHECK(x.pow(6) == m.fundamental());
    CHECK(integrate(m.fundamental()));
    CHECK_FALSE(integrate(x.pow(5)));
    const auto e = RingElement::one(m.ring()) + x + x.pow(3);
    CHECK((e * inverse(e)).is_one());
    CHECK(e.part(3) == x.pow(3));
    CHECK(e.truncated(1) == RingElement::one(m.ring()) + x);
    CHECK(e.max_degree() == 3);
    CHECK(e.min_degree() == 0);
    CHECK_THROWS(inverse(x));
    CHECK_THROWS(x + RingElement::generator(rp(5).ring(), "x"));
    CHECK_THROWS(RingElement::generator(m.ring(), "q"));
    CHECK(integrate(RingElement::generator(rp(20).ring(), "x").pow(20)));
    CHECK_FALSE(integrate(RingElement::generator(rp(20).ring(), "x").pow(19)));
    const ManifoldModel wu = wu_manifold();
    CHECK(integrate(RingElement::generator(wu.ring(), "u") * RingElement::generator(wu.ring(), "v")));
    CHECK_THROWS_AS(parse_space("rp:x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_space("cp:2"), std::invalid_argument);
}

TEST_CASE("evaluation examples") {
    const auto a20 = ClassAssignment::from_total(rp(20).wbar());
    const auto x20 = RingElement::generator(rp(20).ring(), "x");
    CHECK(evaluate(Partition{11, 9}, a20) == x20.pow(20));
    CHECK(evaluate(Partition{8, 8}, a20) == x20.pow(16));
    const ManifoldModel wu = wu_manifold();
    const auto aw = ClassAssignment::from_total(wu.wbar());
    CHECK(evaluate(Partition{2, 2}, aw).is_zero());
    const auto uv = RingElement::generator(wu.ring(), "u") * RingElement::generator(wu.ring(), "v");
    CHECK(evaluate(parse_poly<WVar>("w2*w3 + w1*w4"), aw) == uv);
    CHECK(evaluate(parse_poly<WVar>("w2*w3 + w1*w4"), aw).str() == "u*v");
}

TEST_CASE("Schur evaluation on RP^n matches the permanent oracle") {
    for (int n = 1; n <= 22; ++n) {
        const auto a = ClassAssignment::from_total(rp(n).wbar());
        for (const auto& lam : oracle::all_partitions(n)) {
            const RingElement v = evaluate(Partition(lam), a);
            const int w = std::accumulate(lam.begin(), lam.end(), 0);
            CHECK((v.is_zero() || v.is_homogeneous()));
            CHECK(v.coefficient({w}) == (oracle::schur_at_rp(lam, n) == 1));
        }
    }
}

TEST_CASE("property: monomial route equals determinant route on RP^n, |lambda| <= 10") {
    for (int n = 1; n <= 20; ++n) {
        const auto a = ClassAssignment::from_total(rp(n).wbar());
        for (int w = 0; w <= 10; ++w)
            for (const auto& lam : partitions_of(w)) {
                const RingElement det_route = evaluate(lam, a);
                CHECK(evaluate(schur_to_poly(lam), a) == det_route);
                CHECK(evaluate_schur_generic(lam, a) == det_route);
            }
    }
}

TEST_CASE("Schur evaluation on products matches the bivariate Leibniz oracle") {
    for (auto [p, q] : {std::pair{4, 6}, std::pair{3, 5}, std::pair{2, 7}}) {
        const ManifoldModel m = product(rp(p, "x"), rp(q, "y"));
        const auto a = ClassAssignment::from_total(m.wbar());
        const Biv total = to_biv(m.wbar(), p, q);
        for (const auto& lam : oracle::all_partitions(p + q)) {
            const Biv want = schur_biv(lam, total);
            const RingElement got = evaluate(Partition(lam), a);
            CHECK(to_biv(got, p, q).c == want.c);
            CHECK(evaluate(schur_to_poly(Partition(lam)), a) == got);
        }
    }
}

TEST_CASE("Steenrod squares commute with evaluation (naturality on RP^n)") {
    // on H*(RP^n), Sq^k x^m = binom(m, k) x^{m+k}
    const oracle::PascalMod2 pas(64);
    std::mt19937 rng(17);
    for (int n : {6, 9, 12, 16}) {
        const ManifoldModel m = rp(n);
        const auto a = ClassAssignment::from_total(m.wbar());
        for (int trial = 0; trial < 25; ++trial) {
            const int d = 1 + trial % 5;
            const Mod2Poly p = oracle::random_poly(rng, d, 4).part(d);
            const RingElement v = evaluate(p, a);
            for (int k = 0; k <= 3; ++k) {
                RingElement want(m.ring());
                if (d + k <= n && v.coefficient({d}) && pas(d, k)) want.toggle(m.ring()->index({d + k}));
                CHECK(evaluate(steenrod_sq(k, p), a) == want);
            }
        }
    }
}

TEST_CASE("assignments") {
    const auto a = ClassAssignment::from_total(rp(10).wbar());
    CHECK(a.graded());
    CHECK(a.image(1).str() == "x");
    CHECK(a.image(2).is_zero());
    CHECK(a.image(4).str() == "x^4");
    CHECK(a.image(40).is_zero());
    CHECK(a.coefficient_table(5));
    CHECK_FALSE(a.coefficient_table(3));
    // dual images are the parts of w(RP^10) = (1+x)^11
    for (int i = 1; i <= 10; ++i) CHECK(a.dual_image(i) == rp(10).w().part(i));
    const auto spec = rp(4).ring();
    const auto x = RingElement::generator(spec, "x");
    const ClassAssignment ungraded(spec, {x + x.pow(2)});
    CHECK_FALSE(ungraded.graded());
    CHECK(evaluate(Partition{1, 1}, ungraded) == evaluate(parse_poly<WVar>("w1^2+w2"), ungraded));
}
