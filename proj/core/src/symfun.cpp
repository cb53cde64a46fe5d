#include "swob/symfun.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

#include "swob/f2.hpp"

namespace swob {

void SchurCombo::toggle(const Partition& p) {
    auto [it, inserted] = parts_.insert(p);
    if (!inserted) parts_.erase(it);
}

SchurCombo SchurCombo::part(int d) const {
    SchurCombo r;
    for (const auto& p : parts_)
        if (p.weight() == d) r.parts_.insert(r.parts_.end(), p);
    return r;
}

SchurCombo& SchurCombo::operator+=(const SchurCombo& o) {
    for (const auto& p : o.parts_) toggle(p);
    return *this;
}

std::string SchurCombo::str() const {
    if (parts_.empty()) return "0";
    std::string s;
    for (const auto& p : parts_) {
        if (!s.empty()) s += '+';
        s += "s[";
        for (int i = 0; i < p.length(); ++i) {
            if (i) s += ',';
            s += std::to_string(p[i]);
        }
        s += ']';
    }
    return s;
}

SchurCombo parse_schur(std::string_view text) {
    std::string body;
    for (char c : text)
        if (c != ' ' && c != '\t') body += c;
    if (body.empty()) throw std::invalid_argument("empty Schur text");
    SchurCombo c;
    if (body == "0") return c;
    std::size_t pos = 0;
    while (pos <= body.size()) {
        auto plus = body.find('+', pos);
        if (plus == std::string::npos) plus = body.size();
        std::string_view term(body.data() + pos, plus - pos);
        if (!term.empty() && term.front() == 's') term.remove_prefix(1);
        if (!term.empty() && term.front() == '_') term.remove_prefix(1);
        if (term.empty() || (term.front() != '[' && term.front() != '('))
            throw std::invalid_argument("bad Schur term in: " + std::string(text));
        c.toggle(parse_partition(term));
        pos = plus + 1;
    }
    return c;
}

BigInt binomial(long m, long k) {
    if (m < 0 || k < 0 || k > m) return 0;
    k = std::min(k, m - k);
    BigInt r = 1;
    for (long i = 1; i <= k; ++i) r = r * (m - k + i) / i;
    return r;
}

namespace {

long d_top(const Partition& mu, const Partition& nu, int s, int t, int i, int j) {
    // 1-based i, j as in the formula
    return static_cast<long>(mu[static_cast<std::size_t>(i - 1)]) + s - i +
           nu[static_cast<std::size_t>(j - 1)] + t - j;
}

void check_dmunu(const Partition& mu, const Partition& nu, int s, int t) {
    if (s < 1) throw std::invalid_argument("binom_det: s must be >= 1");
    if (t < 1) throw std::invalid_argument("binom_det: t must be >= 1");
    if (mu.length() > s || nu.length() > s)
        throw std::invalid_argument("binom_det: mu, nu must have length <= s");
}

}  // namespace

BigInt binom_det(const Partition& mu, const Partition& nu, int s, int t) {
    check_dmunu(mu, nu, s, t);
    std::vector<std::vector<BigInt>> a(static_cast<std::size_t>(s), std::vector<BigInt>(static_cast<std::size_t>(s)));
    for (int i = 1; i <= s; ++i)
        for (int j = 1; j <= s; ++j)
            a[i - 1][j - 1] = binomial(d_top(mu, nu, s, t, i, j), mu[static_cast<std::size_t>(i - 1)] + s - i);
    // Bareiss fraction-free elimination
    BigInt sign = 1, prev = 1;
    const auto n = static_cast<std::size_t>(s);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && a[p][k] == 0) ++p;
            if (p == n) return 0;
            std::swap(a[p], a[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

bool binom_det_mod2(const Partition& mu, const Partition& nu, int s, int t) {
    check_dmunu(mu, nu, s, t);
    F2Matrix m(static_cast<std::size_t>(s), static_cast<std::size_t>(s));
    for (int i = 1; i <= s; ++i)
        for (int j = 1; j <= s; ++j)
            m.set(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1),
                  lucas_binom(d_top(mu, nu, s, t, i, j), mu[static_cast<std::size_t>(i - 1)] + s - i));
    return m.det();
}

namespace {

Mod2Poly w_var(int i) {
    if (i < 0) return {};
    if (i == 0) return Mod2Poly::one();
    return Mod2Poly::var(i);
}

// Rows of the monomial basis of degree d are indexed by partitions of d
// (a w-monomial is its index multiset), columns likewise.
struct DegreeBasis {
    std::vector<Partition> parts;
    std::map<Partition, std::size_t> index;
    F2Echelon echelon;       // images of s_lambda, augmented with a tag block
};

BitRow monomial_vector(const Mod2Poly& p, const DegreeBasis& b, std::size_t width) {
    BitRow v(width);
    for (const auto& m : p.terms()) {
        auto it = b.index.find(Partition(m.indices()));
        if (it == b.index.end()) throw std::logic_error("poly_to_schur: unexpected monomial");
        v.set(it->second);
    }
    return v;
}

const DegreeBasis& degree_basis(int d) {
    static std::mutex mu;
    static std::map<int, DegreeBasis> cache;
    std::lock_guard lock(mu);
    auto it = cache.find(d);
    if (it != cache.end()) return it->second;
    DegreeBasis b;
    b.parts = partitions_of(d);
    const std::size_t n = b.parts.size();
    for (std::size_t k = 0; k < n; ++k) b.index.emplace(b.parts[k], k);
    // [monomial vector | unit tag], pivots on the monomial block
    for (std::size_t k = 0; k < n; ++k) {
        BitRow row = monomial_vector(schur_to_poly(b.parts[k]), b, 2 * n);
        row.set(n + k);
        if (!b.echelon.insert(std::move(row)))
            throw std::logic_error("poly_to_schur: Schur images dependent");
    }
    for (long p : b.echelon.pivots())
        if (static_cast<std::size_t>(p) >= n)
            throw std::logic_error("poly_to_schur: Schur images do not span");
    return cache.emplace(d, std::move(b)).first->second;
}

}  // namespace

Mod2Poly schur_to_poly(const Partition& lambda) {
    const int k = lambda.length();
    return det_char2<Mod2Poly>(k, [&](int i, int j) { return w_var(lambda[static_cast<std::size_t>(i)] + j - i); },
                               Mod2Poly::one());
}

Mod2Poly schur_to_poly(const SchurCombo& c) {
    Mod2Poly r;
    for (const auto& p : c.partitions()) r += schur_to_poly(p);
    return r;
}

SchurCombo poly_to_schur(const Mod2Poly& p) {
    SchurCombo out;
    if (p.is_zero()) return out;
    for (int d = p.min_degree(); d <= p.max_degree(); ++d) {
        Mod2Poly pd = p.part(d);
        if (pd.is_zero()) continue;
        const DegreeBasis& b = degree_basis(d);
        const std::size_t n = b.parts.size();
        BitRow v = b.echelon.reduce(monomial_vector(pd, b, 2 * n));
        // the monomial block must be fully eliminated; the tag block holds the combination
        for (std::size_t k = 0; k < n; ++k)
            if (v.get(k)) throw std::logic_error("poly_to_schur: inconsistent elimination");
        for (std::size_t k = 0; k < n; ++k)
            if (v.get(n + k)) out.toggle(b.parts[k]);
    }
    return out;
}

Mod2Poly multiply(const Mod2Poly& p, const Mod2Poly& q) { return p * q; }

Mod2Poly lowering(const Mod2Poly& p, int j) {
    if (j < 0) throw std::invalid_argument("lowering: j must be >= 0");
    // each monomial is a product of factors (w_i + t w_{i-1}); pick j of them to lower
    Mod2Poly out;
    for (const auto& m : p.terms()) {
        const auto& idx = m.indices();
        const int n = static_cast<int>(idx.size());
        if (j > n) continue;
        // dp over factors: layer[c] = sum of products using c lowered factors
        std::vector<Mod2Poly> layer(static_cast<std::size_t>(j + 1));
        layer[0] = Mod2Poly::one();
        for (int f = 0; f < n; ++f) {
            const Mod2Poly keep = w_var(idx[static_cast<std::size_t>(f)]);
            const Mod2Poly low = w_var(idx[static_cast<std::size_t>(f)] - 1);
            for (int c = std::min(j, f + 1); c >= 0; --c) {
                Mod2Poly next = layer[static_cast<std::size_t>(c)] * keep;
                if (c > 0) next += layer[static_cast<std::size_t>(c - 1)] * low;
                layer[static_cast<std::size_t>(c)] = std::move(next);
            }
        }
        out += layer[static_cast<std::size_t>(j)];
    }
    return out;
}

}  // namespace swob
