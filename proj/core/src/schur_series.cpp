#include "swob/schur_series.hpp"

#include <stdexcept>

namespace swob {

GradedSchurSeries::GradedSchurSeries(int max_degree) : max_degree_(max_degree) {
    if (max_degree < 0) throw std::invalid_argument("max_degree must be >= 0");
}

SchurCombo GradedSchurSeries::part(int d) const {
    auto it = by_degree_.find(d);
    return it == by_degree_.end() ? SchurCombo() : it->second;
}

SchurCombo GradedSchurSeries::total() const {
    SchurCombo c;
    for (const auto& [d, part] : by_degree_) c += part;
    return c;
}

void GradedSchurSeries::toggle(const Partition& p) {
    const int d = p.weight();
    if (d > max_degree_) return;
    auto& slot = by_degree_[d];
    slot.toggle(p);
    if (slot.is_zero()) by_degree_.erase(d);
}

void GradedSchurSeries::add(const SchurCombo& c) {
    for (const auto& p : c.partitions()) toggle(p);
}

GradedSchurSeries& GradedSchurSeries::operator+=(const GradedSchurSeries& o) {
    if (o.max_degree_ < max_degree_) {
        *this = truncated(o.max_degree_);
    }
    for (const auto& [d, part] : o.by_degree_) add(part);
    return *this;
}

GradedSchurSeries GradedSchurSeries::truncated(int max_degree) const {
    GradedSchurSeries r(std::min(max_degree, max_degree_));
    for (const auto& [d, part] : by_degree_)
        if (d <= r.max_degree_) r.by_degree_.emplace(d, part);
    return r;
}

GradedSchurSeries GradedSchurSeries::transposed() const {
    GradedSchurSeries r(max_degree_);
    for (const auto& [d, part] : by_degree_)
        for (const auto& p : part.partitions()) r.toggle(transpose(p));
    return r;
}

Mod2Poly GradedSchurSeries::to_poly() const {
    Mod2Poly p;
    for (const auto& [d, part] : by_degree_) p += schur_to_poly(part);
    return p;
}

std::string GradedSchurSeries::str() const {
    std::string s;
    for (const auto& [d, part] : by_degree_) s += std::to_string(d) + ": " + part.str() + "\n";
    if (s.empty()) s = "0\n";
    return s;
}

}  // namespace swob
