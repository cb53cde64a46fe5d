#include "swob/obstruction.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <stdexcept>

namespace swob {

SingularityFamily SingularityFamily::sigma(int i) {
    if (i < 1) throw std::invalid_argument("Sigma^i needs i >= 1");
    return {FamilyKind::sigma, i};
}

int SingularityFamily::min_level() const noexcept {
    return kind == FamilyKind::sigma && rank == 2 ? -1 : 0;
}

Partition SingularityFamily::rectangle(int l) const {
    if (l < min_level()) throw std::invalid_argument("level " + std::to_string(l) + " unsupported for " + name());
    if (kind == FamilyKind::a2) return Partition::rectangle(l + 1, 2);
    return Partition::rectangle(rank + l, rank);
}

std::string SingularityFamily::name() const {
    return kind == FamilyKind::a2 ? "A2" : "Sigma" + std::to_string(rank);
}

SingularityFamily parse_family(const std::string& text) {
    std::string s;
    for (char c : text) s += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (s == "a2") return SingularityFamily::a2();
    if (s.rfind("sigma", 0) == 0 && s.size() > 5) {
        const std::string digits = s.substr(5);
        if (std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
            return SingularityFamily::sigma(std::stoi(digits));
    }
    throw std::invalid_argument("unknown singularity family: " + text);
}

SchurCombo thom_polynomial(const SingularityFamily& f, int l) { return SchurCombo{f.rectangle(l)}; }

std::vector<Partition> avoiding_basis(const SingularityFamily& f, int l, int max_weight) {
    return enumerate(max_weight, f.rectangle(l));
}

namespace {

// Above this level the rectangle alone outweighs dim M, so every class in the
// ideal has degree > dim M and evaluates to 0.
int last_level(const ManifoldModel& m, const SingularityFamily& f) {
    int l = f.min_level();
    while (f.rectangle(l + 1).weight() <= m.dim()) ++l;
    return l;
}

}  // namespace

int tau_bound(const ManifoldModel& m, const SingularityFamily& f) {
    const auto a = ClassAssignment::from_total(m.wbar());
    int result = f.min_level();
    for (int l = f.min_level(); f.rectangle(l).weight() <= m.dim(); ++l)
        if (!evaluate(f.rectangle(l), a).is_zero()) result = l + 1;
    return result;
}

std::vector<std::pair<Partition, RingElement>> nonzero_evaluations(const ManifoldModel& m,
                                                                   const SingularityFamily& f, int l) {
    const auto a = ClassAssignment::from_total(m.wbar());
    std::vector<std::pair<Partition, RingElement>> out;
    for (const auto& p : avoiding_basis(f, l, m.dim())) {
        RingElement v = evaluate(p, a);
        if (!v.is_zero()) out.emplace_back(p, std::move(v));
    }
    return out;
}

int kappa_bruteforce(const ManifoldModel& m, const SingularityFamily& f) {
    const auto a = ClassAssignment::from_total(m.wbar());
    // the ideals shrink as l grows, so scan downward and stop at the first obstruction
    const int top = last_level(m, f);
    for (int l = top; l >= f.min_level(); --l) {
        if (f.rectangle(l).weight() > m.dim()) continue;
        for (const auto& p : avoiding_basis(f, l, m.dim()))
            if (!evaluate(p, a).is_zero()) return l + 1;
    }
    return f.min_level();
}

CaseLabel classify_case(long n) {
    if (n < 1) throw std::invalid_argument("classify_case: n must be >= 1");
    const auto un = static_cast<unsigned long>(n);
    CaseLabel c;
    c.t = static_cast<int>(std::bit_width(un));
    c.p = std::countr_zero(un);
    const bool isolated_ones = (un & (un >> 1)) == 0;
    if (isolated_ones) {
        c.letter = n % 2 == 0 ? 'a' : 'b';
        return c;
    }
    const long L = (1L << (c.t + 1)) / 3;
    if (n > L) {
        c.letter = 'c';
        return c;
    }
    c.letter = 'd';
    int best = -1;
    for (int u = 0; u + 2 < c.t; ++u)
        if (((un >> u) & 7u) == 3u) best = u;
    if (best < 0) throw std::logic_error("classify_case: no 011 block in case d");
    c.u = best;
    c.a = static_cast<long>(un >> (best + 3));
    c.b = static_cast<long>(un & ((1ul << best) - 1));
    return c;
}

long kappa_closed(long n) {
    const CaseLabel c = classify_case(n);
    switch (c.letter) {
        case 'a': return (n - (1L << c.p)) / 2 + 1;
        case 'b': return (n - 1) / 2;
        case 'c': return (1L << c.t) - n - 1;
        default: return (1L << (c.u + 2)) * c.a + ((1L << c.u) - 1 - c.b);
    }
}

std::vector<Partition> nonvanishing_lambdas(long n) {
    const CaseLabel c = classify_case(n);
    if (c.letter != 'a' || c.p < 1)
        throw std::domain_error("nonvanishing_lambdas: n = " + std::to_string(n) + " is not in case a");
    const long l = n / 2 - (1L << (c.p - 1)) - 1;
    const long q = n - 2 * (l + 2);
    std::vector<Partition> out;
    for (long j = 0; j <= q; ++j) {
        std::vector<int> parts{static_cast<int>(l + 2 + j), static_cast<int>(l + 2)};
        parts.insert(parts.end(), static_cast<std::size_t>(q - j), 1);
        out.emplace_back(parts);
    }
    std::sort(out.begin(), out.end());
    return out;
}

BoundReport bounds(const ManifoldModel& m, const SingularityFamily& f) {
    BoundReport r;
    r.n = m.dim();
    r.manifold = m.name();
    r.family = f;
    r.tau = tau_bound(m, f);
    r.kappa_bruteforce = kappa_bruteforce(m, f);
    const auto a = ClassAssignment::from_total(m.wbar());
    for (int l = f.min_level(); f.rectangle(l).weight() <= m.dim(); ++l) {
        LevelWitness w{l, {}, !evaluate(f.rectangle(l), a).is_zero()};
        for (const auto& p : avoiding_basis(f, l, m.dim()))
            if (!evaluate(p, a).is_zero()) w.nonzero.push_back(p);
        r.witnesses.push_back(std::move(w));
    }
    if (m.is_projective_space()) {
        r.case_label = classify_case(m.dim());
        const long k = kappa_closed(m.dim());
        if (f.kind == FamilyKind::a2) r.kappa_closed = static_cast<int>(k);
        else if (f.rank == 2) r.kappa_closed = static_cast<int>(k - 1);
    }
    return r;
}

}  // namespace swob
