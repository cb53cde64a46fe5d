#include "doctest.h"
#include "oracles.hpp"
#include "swob/segre.hpp"
#include "swob/ring.hpp"
#include "swob/symfun.hpp"

using namespace swob;

namespace {

// Phi^s(l) mod 2 straight from the determinantal sum: Pascal binomials, Leibniz
// determinants, hand-built partitions
std::map<std::vector<int>, int> phi_oracle(int s, int l, int max_degree) {
    std::map<std::vector<int>, int> out;
    const int t = s + l;
    const int budget = max_degree - s * t;
    if (budget < 0) return out;
    std::vector<std::vector<int>> small;
    for (const auto& p : oracle::all_partitions(budget))
        if (static_cast<int>(p.size()) <= s) small.push_back(p);
    auto at = [](const std::vector<int>& v, int i) { return i < static_cast<int>(v.size()) ? v[i] : 0; };
    for (const auto& mu : small)
        for (const auto& nu : small) {
            const int wm = std::accumulate(mu.begin(), mu.end(), 0);
            const int wn = std::accumulate(nu.begin(), nu.end(), 0);
            if (wm + wn > budget) continue;
            std::vector<std::vector<oracle::cpp_int>> m(s, std::vector<oracle::cpp_int>(s));
            for (int i = 1; i <= s; ++i)
                for (int j = 1; j <= s; ++j) {
                    const long a = at(mu, i - 1) + s - i, b = at(nu, j - 1) + t - j;
                    m[i - 1][j - 1] = oracle::binom(a + b, a);
                }
            if (oracle::leibniz_det(m) % 2 == 0) continue;
            std::vector<int> lam;
            for (int i = 0; i < s; ++i) lam.push_back(t + at(mu, i));
            for (int c : oracle::conjugate(nu)) lam.push_back(c);
            out[lam] ^= 1;
        }
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

std::map<std::vector<int>, int> flatten(const GradedSchurSeries& g) {
    std::map<std::vector<int>, int> out;
    for (const auto& [d, c] : g.by_degree())
        for (const auto& p : c.partitions()) out[p.parts()] = 1;
    return out;
}

Mod2Poly P(const char* s) { return parse_poly<WVar>(s); }

}  // namespace

TEST_CASE("phi examples") {
    CHECK(phi(2, 0, 4).part(4) == SchurCombo{{2, 2}});
    CHECK(phi(2, 0, 4).lowest_degree() == 4);
    CHECK(phi(2, 7, 20).part(20).contains(Partition{11, 9}));
    const auto p = phi(1, 0, 2);
    CHECK(p.part(1) == SchurCombo{{1}});
    CHECK(p.part(2) == SchurCombo{{1, 1}, {2}});
    CHECK_THROWS_AS(phi(2, -1, 6), std::invalid_argument);
}

TEST_CASE("phi matches the determinantal-sum oracle") {
    for (int s = 1; s <= 3; ++s)
        for (int l = 0; l <= 3; ++l) {
            const int D = std::min(14, s * (s + l) + 6);
            CHECK(flatten(phi(s, l, D)) == phi_oracle(s, l, D));
        }
    CHECK(flatten(phi(2, 7, 20)) == phi_oracle(2, 7, 20));
}

TEST_CASE("closed form of Phi^1") {
    CHECK(phi1_closed(0, 1).part(1) == SchurCombo{{1}});
    for (int l = 0; l <= 3; ++l)
        for (int D = 1; D <= 14; ++D) CHECK(phi1_closed(l, D) == phi(1, l, D));
    const auto a = ClassAssignment::from_total(rp(10).wbar());
    CHECK(evaluate(phi1_closed(1, 11), a).str() == "x^4");
}

TEST_CASE("duality at level -1") {
    const auto d = phi_dual(2, 6);
    CHECK(d.lowest_degree() == 2);
    CHECK(d.part(2) == SchurCombo{{1, 1}});
    CHECK(phi_dual(3, 12) == phi(2, 1, 12).transposed());
    CHECK_THROWS_AS(phi_dual(1, 6), std::invalid_argument);
    for (int n : {4, 8, 16}) {
        const ManifoldModel m = rp(n);
        const auto a = ClassAssignment::from_total(m.wbar());
        const auto x = RingElement::generator(m.ring(), "x");
        CHECK(evaluate(phi_dual(2, n), a) == x.pow(static_cast<unsigned>(n)));
        CHECK(evaluate(ssw_sigma(2, -1, n, true), a) == x.pow(static_cast<unsigned>(n)));
    }
    CHECK_THROWS_AS(ssw_sigma(1, -1, 6, true), std::invalid_argument);
}

TEST_CASE("Segre-SW classes of Sigma^r") {
    const Mod2Poly s20 = ssw_sigma(2, 0, 6, false).to_poly();
    CHECK(s20.part(4) == P("w2^2 + w3*w1"));
    CHECK(s20.part(5).is_zero());
    CHECK(s20.part(6) == P("w2^2*w1^2+w3*w1^3+w3*w2*w1+w3^2+w4*w1^2+w5*w1"));
    CHECK(ssw_sigma(1, 0, 4, false).to_poly() == P("w1+w1^2+w1^3+w1^4"));
    CHECK(ssw_sigma(1, 0, 6, false).to_poly() ==
          P("w1+w1^2+w1^3+w1^4 + w1^5+w2^2*w1+w3*w1^2 + w1^6+w2^2*w1^2+w3*w1^3"));
    const auto a20 = ClassAssignment::from_total(rp(20).wbar());
    CHECK(evaluate(ssw_sigma(2, 7, 20, true), a20).str() == "x^20");
    CHECK_THROWS_AS(ssw_sigma(0, 0, 6, true), std::invalid_argument);
}

TEST_CASE("property: lowest term of the closed class is the Thom polynomial") {
    for (int r = 1; r <= 3; ++r)
        for (int l = 0; l <= 3; ++l) {
            const int w = r * (r + l);
            const auto s = ssw_sigma(r, l, w + 3, true);
            CHECK(s.lowest_degree() == w);
            CHECK(s.part(w) == SchurCombo{Partition::rectangle(r + l, r)});
        }
}

TEST_CASE("property: closed class is the sum of the open classes above it") {
    for (int r = 1; r <= 3; ++r)
        for (int l = 0; l <= 2; ++l) {
            GradedSchurSeries sum(14);
            for (int q = r; q * (q + l) <= 14; ++q) sum += ssw_sigma(q, l, 14, false);
            CHECK(ssw_sigma(r, l, 14, true) == sum);
        }
    // the binomial identity behind it
    for (int s = 1; s <= 40; ++s)
        for (int r = 1; r <= s; ++r) {
            bool acc = false;
            for (int q = r; q <= s; ++q) acc ^= lucas_binom(s, q);
            CHECK(acc == lucas_binom(s - 1, r - 1));
        }
}

TEST_CASE("property: first correction of the closed class is Sq^1 of the Thom polynomial") {
    for (int r = 1; r <= 3; ++r)
        for (int l = 0; l <= 3; ++l) {
            const int w = r * (r + l);
            const Mod2Poly next = ssw_sigma(r, l, w + 1, true).to_poly().part(w + 1);
            CHECK(next == steenrod_sq(1, schur_to_poly(Partition::rectangle(r + l, r))));
        }
}

TEST_CASE("schur series container") {
    GradedSchurSeries g(5);
    g.toggle(Partition{2, 2});
    g.toggle(Partition{3, 3});  // above max_degree, dropped
    g.toggle(Partition{1});
    CHECK(g.lowest_degree() == 1);
    CHECK(g.by_degree().size() == 2);
    CHECK(g.total() == SchurCombo{{1}, {2, 2}});
    g.toggle(Partition{1});
    CHECK(g.lowest_degree() == 4);
    CHECK(g.truncated(3).is_zero());
    CHECK(g.transposed().part(4) == SchurCombo{{2, 2}});
    CHECK(g.to_poly() == P("w2^2+w1*w3"));
    GradedSchurSeries h(8);
    h.toggle(Partition{2, 2});
    CHECK((g + h).is_zero());
}
