#include "swob/charseries.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

#include "swob/f2.hpp"
#include "swob/partition.hpp"

namespace swob {

TauSeries::TauSeries(TauPoly terms, int max_degree) : terms_(std::move(terms)), max_degree_(max_degree) {
    if (max_degree_ >= 0) terms_ = terms_.truncated(max_degree_);
}

std::map<int, TauPoly> TauSeries::by_degree() const {
    std::map<int, TauPoly> out;
    for (const auto& m : terms_.terms()) out[m.degree()].toggle(m);
    return out;
}

void TauSeries::mark_unreduced(int d) {
    if (std::find(unreduced_.begin(), unreduced_.end(), d) == unreduced_.end()) {
        unreduced_.push_back(d);
        std::sort(unreduced_.begin(), unreduced_.end());
    }
}

TauSeries& TauSeries::operator+=(const TauSeries& o) {
    terms_ += o.terms_;
    if (o.max_degree_ >= 0 && (max_degree_ < 0 || o.max_degree_ < max_degree_)) max_degree_ = o.max_degree_;
    if (max_degree_ >= 0) terms_ = terms_.truncated(max_degree_);
    for (int d : o.unreduced_) mark_unreduced(d);
    incomplete_ = incomplete_ || o.incomplete_;
    return *this;
}

std::string TauSeries::line(int lo, int hi) const {
    std::string s;
    for (int d = lo; d <= hi; ++d) {
        if (d > lo) s += '+';
        const TauPoly p = terms_.part(d);
        if (p.is_zero()) s += '0';
        else if (p.size() == 1) s += p.str();
        else s += '(' + p.str() + ')';
    }
    return s;
}

std::vector<TangentPoly> inverse_tangent_parts(int max_degree) {
    // tbar_d = sum_{i=1}^{d} t_i tbar_{d-i} in characteristic 2
    std::vector<TangentPoly> tb{TangentPoly::one()};
    for (int d = 1; d <= max_degree; ++d) {
        TangentPoly acc;
        for (int i = 1; i <= d; ++i) acc += TangentPoly::var(i) * tb[static_cast<std::size_t>(d - i)];
        tb.push_back(std::move(acc));
    }
    return tb;
}

TangentPoly w_to_t(const Mod2Poly& p, int max_degree) {
    if (max_degree < 0) throw std::invalid_argument("w_to_t: max_degree must be >= 0");
    const auto tb = inverse_tangent_parts(max_degree);
    TangentPoly out;
    for (const auto& m : p.terms()) {
        if (m.degree() > max_degree) break;
        TangentPoly t = TangentPoly::one();
        for (int i : m.indices()) t = TangentPoly::multiply(t, tb[static_cast<std::size_t>(i)], max_degree);
        out += t;
    }
    return out;
}

TangentPoly hat_w(const Mod2Poly& p, int max_degree) {
    TangentPoly total = TangentPoly::one();
    for (int i = 1; i <= max_degree; ++i) total += TangentPoly::var(i);
    return TangentPoly::multiply(w_to_t(p, max_degree), total, max_degree);
}

TauSeries chi_series(const TangentPoly& hp, int max_degree) { return TauSeries(rename<TauVar>(hp), max_degree); }

namespace {

TauPoly tau(const std::string& s) { return parse_poly<TauVar>(s); }

// "a = b = c" -> {a+b, b+c}
std::vector<TauPoly> chain(const std::vector<std::string>& terms) {
    std::vector<TauPoly> out;
    for (std::size_t k = 0; k + 1 < terms.size(); ++k) out.push_back(tau(terms[k]) + tau(terms[k + 1]));
    return out;
}

// every monomial of degree d vanishes except those in `kept`
std::vector<TauPoly> all_zero_except(int d, const std::vector<std::string>& kept) {
    std::vector<TauMonomial> keep;
    for (const auto& k : kept) keep.push_back(*tau(k).terms().begin());
    std::vector<TauPoly> out;
    for (const auto& p : partitions_of(d)) {
        TauMonomial m(p.parts());
        if (std::find(keep.begin(), keep.end(), m) == keep.end()) out.push_back(TauPoly{m});
    }
    return out;
}

}  // namespace

RelationTable::RelationTable() {
    source_ = {
        "t_I = 0 for |I| = 1,3,5,7 except t3*t2 and t5*t2 = t4*t2*t1 = t3*t2*t1^2",
        "t2 = t1^2",
        "t3*t1 = 0",
        "t2*t1^2 = t1^4",
        "a: t6 = t5*t1 = t4*t1^2 = t2^2*t1^2",
        "b: t2^3 = t3^2 = t3*t2*t1",
        "c: t1^4*t2 = t1^3*t3 = t4*t2 = t1^6",
    };
    rel_[0] = {};
    rel_[1] = all_zero_except(1, {});
    rel_[2] = chain({"t2", "t1^2"});
    rel_[3] = all_zero_except(3, {});
    rel_[4] = {tau("t3*t1")};
    for (auto& r : chain({"t2*t1^2", "t1^4"})) rel_[4].push_back(r);
    rel_[5] = all_zero_except(5, {"t3*t2"});
    for (const auto& c : {std::vector<std::string>{"t6", "t5*t1", "t4*t1^2", "t2^2*t1^2"},
                          std::vector<std::string>{"t2^3", "t3^2", "t3*t2*t1"},
                          std::vector<std::string>{"t1^4*t2", "t1^3*t3", "t4*t2", "t1^6"}})
        for (auto& r : chain(c)) rel_[6].push_back(r);
    rel_[7] = all_zero_except(7, {"t5*t2", "t4*t2*t1", "t3*t2*t1^2"});
    for (auto& r : chain({"t5*t2", "t4*t2*t1", "t3*t2*t1^2"})) rel_[7].push_back(r);
}

const RelationTable& RelationTable::builtin() {
    static const RelationTable table;
    return table;
}

const std::vector<TauPoly>& RelationTable::relations(int d) const {
    static const std::vector<TauPoly> none;
    auto it = rel_.find(d);
    return it == rel_.end() ? none : it->second;
}

namespace {

struct DegreeReducer {
    std::vector<Partition> monos;  // index -> monomial, ascending in the partition order
    std::map<Partition, std::size_t> index;
    F2Echelon echelon{true};  // pivots on the greatest monomials

    explicit DegreeReducer(int d) {
        monos = partitions_of(d);
        for (std::size_t k = 0; k < monos.size(); ++k) index.emplace(monos[k], k);
        for (const auto& r : RelationTable::builtin().relations(d)) echelon.insert(vec(r));
    }
    BitRow vec(const TauPoly& p) const {
        BitRow v(monos.size());
        for (const auto& m : p.terms()) v.flip(index.at(Partition(m.indices())));
        return v;
    }
    TauPoly poly(const BitRow& v) const {
        TauPoly p;
        for (std::size_t k = 0; k < monos.size(); ++k)
            if (v.get(k)) p.toggle(TauMonomial(monos[k].parts()));
        return p;
    }
};

const DegreeReducer& reducer(int d) {
    static const std::vector<DegreeReducer> all = [] {
        std::vector<DegreeReducer> v;
        for (int k = 0; k <= RelationTable::max_covered_degree; ++k) v.emplace_back(k);
        return v;
    }();
    return all.at(static_cast<std::size_t>(d));
}

}  // namespace

TauSeries dold_reduce(const TauSeries& ts) {
    const auto& table = RelationTable::builtin();
    TauPoly out;
    std::vector<int> uncovered;
    for (const auto& [d, p] : ts.by_degree()) {
        if (!table.covers(d)) {
            out += p;
            uncovered.push_back(d);
            continue;
        }
        const auto& r = reducer(d);
        out += r.poly(r.echelon.reduce(r.vec(p)));
    }
    TauSeries res(out, ts.max_degree());
    for (int d : ts.unreduced_degrees()) res.mark_unreduced(d);
    for (int d : uncovered) res.mark_unreduced(d);
    if (ts.catalog_incomplete()) res.mark_incomplete();
    return res;
}

bool dold_equivalent(const TauSeries& a, const TauSeries& b, int max_degree) {
    TauPoly diff = a.terms() + b.terms();
    for (int d = 0; d <= max_degree; ++d) {
        const TauPoly p = diff.part(d);
        if (p.is_zero()) continue;
        if (!RelationTable::builtin().covers(d)) return false;
        const auto& r = reducer(d);
        if (!r.echelon.in_span(r.vec(p))) return false;
    }
    return true;
}

TauSeries closure_series(const std::vector<std::string>& names, int max_degree, bool allow_partial) {
    if (names.empty()) throw std::invalid_argument("closure_series: no strata given");
    if (max_degree < 0) throw std::invalid_argument("closure_series: max_degree must be >= 0");
    int cap = max_degree;
    for (const auto& n : names) cap = std::min(cap, catalog_entry(n).truncation);
    if (cap < max_degree)
        throw std::invalid_argument("closure_series: catalog series end at degree " + std::to_string(cap));
    if (max_degree > catalog_complete_degree && !allow_partial)
        throw std::domain_error("closure_series: catalog incomplete beyond degree " +
                                std::to_string(catalog_complete_degree));
    TauSeries sum(TauPoly(), max_degree);
    for (const auto& n : names)
        sum += dold_reduce(chi_series(hat_w(catalog_entry(n).ssw, max_degree), max_degree));
    sum = dold_reduce(sum);
    if (max_degree > catalog_complete_degree) sum.mark_incomplete();
    return sum;
}

}  // namespace swob
