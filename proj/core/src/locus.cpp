#include "swob/locus.hpp"

#include <stdexcept>

#include "swob/obstruction.hpp"
#include "swob/segre.hpp"

namespace swob {

LocusReport analyze(const ManifoldModel& m, const GradedSchurSeries& series, std::string label, int level,
                    std::optional<int> codimension) {
    if (series.max_degree() < m.dim())
        throw std::invalid_argument("analyze: series truncated below the manifold dimension");
    LocusReport r;
    r.manifold = m.name();
    r.level = level;
    r.series = std::move(label);
    r.ssw_value = evaluate(series, ClassAssignment::from_total(m.wbar()));
    r.sw_value = r.ssw_value * m.w();
    r.chi2 = integrate(r.sw_value);
    if (m.is_projective_space()) r.slices = all_slices(m, r.sw_value);
    if (codimension) r.expected_dim = m.dim() - *codimension;
    return r;
}

LocusReport euler_sigma2_case_a(long n) {
    const CaseLabel c = classify_case(n);
    if (c.letter != 'a' || c.p < 1)
        throw std::domain_error("n = " + std::to_string(n) + " is not in case a");
    const int l = static_cast<int>(n / 2 - (1L << (c.p - 1)) - 1);
    const ManifoldModel m = rp(static_cast<int>(n));
    LocusReport r = analyze(m, ssw_sigma(2, l, static_cast<int>(n), true),
                            "Sigma2(" + std::to_string(l) + ") closed", l, 2 * (2 + l));
    if (!r.chi2) throw std::logic_error("euler_sigma2_case_a: chi2 = 0 for n = " + std::to_string(n));
    if (r.expected_dim != (1 << c.p) - 2)
        throw std::logic_error("euler_sigma2_case_a: unexpected locus dimension");
    return r;
}

namespace {

void require_rp(const ManifoldModel& m) {
    if (!m.is_projective_space()) throw std::invalid_argument("slices are defined on RP^n only");
}

}  // namespace

bool slice_chi(const ManifoldModel& m, const RingElement& sw, int i) {
    require_rp(m);
    const int n = m.dim();
    if (i < 0 || i > n) throw std::invalid_argument("slice dimension out of range");
    const auto& spec = m.ring();
    const RingElement x = RingElement::monomial(spec, {1});
    const RingElement one = RingElement::one(spec);
    const RingElement slice = x.pow(static_cast<unsigned>(n - i)) * (one + x).pow(static_cast<unsigned>(i + 1));
    return integrate(sw * slice * m.wbar());
}

std::map<int, bool> all_slices(const ManifoldModel& m, const RingElement& sw) {
    std::map<int, bool> out;
    for (int i = 0; i <= m.dim(); ++i) out[i] = slice_chi(m, sw, i);
    return out;
}

BitRow coefficient_vector(const RingElement& e) {
    const auto& spec = *e.spec();
    if (spec.generators().size() != 1 || spec.generators()[0].degree != 1)
        throw std::invalid_argument("coefficient_vector: RP^n classes only");
    BitRow v(spec.monomial_count());
    for (std::size_t k = 0; k < spec.monomial_count(); ++k) v.set(k, e.coefficient(k));
    return v;
}

AluffiTransform aluffi_matrix(int n) {
    if (n < 0) throw std::invalid_argument("aluffi_matrix: n must be >= 0");
    const auto size = static_cast<std::size_t>(n + 1);
    F2Matrix t(size, size);
    if (n == 0) {
        t.set(0, 0);
    } else {
        const ManifoldModel m = rp(n);
        for (int k = 0; k <= n; ++k) {
            const RingElement basis = RingElement::monomial(m.ring(), {k});
            for (int i = 0; i <= n; ++i)
                t.set(static_cast<std::size_t>(i), static_cast<std::size_t>(k), slice_chi(m, basis, i));
        }
    }
    auto inv = t.inverse();
    if (!inv) throw std::logic_error("aluffi_matrix: singular transform");
    return {t, *inv};
}

}  // namespace swob
