#include "swob/segre.hpp"

#include <stdexcept>

namespace swob {

GradedSchurSeries phi(int s, int l, int max_degree) {
    if (s < 1) throw std::invalid_argument("phi: s must be >= 1");
    if (l < 0) throw std::invalid_argument("phi: l must be >= 0 (use phi_dual for l = -1)");
    GradedSchurSeries out(max_degree);
    const int base = s * (s + l);
    if (base > max_degree) return out;
    const int budget = max_degree - base;
    // canonical order: mu, then nu, each in partition order
    const auto shapes = enumerate(budget, Partition(), s);
    for (const auto& mu : shapes) {
        for (const auto& nu : shapes) {
            if (mu.weight() + nu.weight() > budget) break;  // shapes sorted by weight
            if (binom_det_mod2(mu, nu, s, s + l)) out.toggle(prepend_rectangle(s, l, mu, nu));
        }
    }
    return out;
}

GradedSchurSeries phi1_closed(int l, int max_degree) {
    if (l < 0) throw std::invalid_argument("phi1_closed: l must be >= 0");
    GradedSchurSeries out(max_degree);
    for (int i = 0; l + 1 + i <= max_degree; ++i) {
        for (int j = 0; j <= i; ++j) {
            if (!lucas_binom(l + i, j)) continue;
            std::vector<int> parts{l + 1 + j};
            parts.insert(parts.end(), static_cast<std::size_t>(i - j), 1);
            out.toggle(Partition(parts));
        }
    }
    return out;
}

GradedSchurSeries phi_dual(int i, int max_degree) {
    if (i < 2) throw std::invalid_argument("phi_dual: i must be >= 2");
    return phi(i - 1, 1, max_degree).transposed();
}

GradedSchurSeries ssw_sigma(int r, int l, int max_degree, bool closed) {
    if (r < 1) throw std::invalid_argument("ssw_sigma: r must be >= 1");
    if (l < -1) throw std::invalid_argument("ssw_sigma: l must be >= -1");
    if (l == -1 && r < 2) throw std::invalid_argument("ssw_sigma: l = -1 needs r >= 2");
    GradedSchurSeries out(max_degree);
    // s(s+l) grows with s, so the first s past max_degree ends the sum
    for (int s = r; s * (s + l) <= max_degree; ++s) {
        const bool coef = closed ? lucas_binom(s - 1, r - 1) : lucas_binom(s, r);
        if (!coef) continue;
        out += l == -1 ? phi_dual(s, max_degree) : phi(s, l, max_degree);
    }
    return out;
}

}  // namespace swob
