#pragma once

#include <map>
#include <string>
#include <vector>

#include "swob/poly.hpp"
#include "swob/schur_series.hpp"

namespace swob {

// Characteristic series: tau-monomials (Stiefel-Whitney numbers) graded by degree.
class TauSeries {
public:
    TauSeries() = default;
    explicit TauSeries(TauPoly terms, int max_degree = -1);

    const TauPoly& terms() const noexcept { return terms_; }
    TauPoly part(int d) const { return terms_.part(d); }
    // degree -> monomials, nonzero degrees only
    std::map<int, TauPoly> by_degree() const;
    int max_degree() const noexcept { return max_degree_; }  // -1 = untruncated
    bool is_zero() const noexcept { return terms_.is_zero(); }

    // degrees that a reduction left untouched because the relation table does not cover them
    const std::vector<int>& unreduced_degrees() const noexcept { return unreduced_; }
    bool catalog_incomplete() const noexcept { return incomplete_; }
    void mark_unreduced(int d);
    void mark_incomplete() { incomplete_ = true; }

    TauSeries& operator+=(const TauSeries& o);
    friend bool operator==(const TauSeries&, const TauSeries&) = default;

    // "tau2+0+tau4+0" over degrees [lo, hi]
    std::string line(int lo, int hi) const;

private:
    TauPoly terms_;
    int max_degree_ = -1;
    std::vector<int> unreduced_;
    bool incomplete_ = false;
};

// parts of 1/(1+t1+t2+...) up to max_degree; index 0 is 1
std::vector<TangentPoly> inverse_tangent_parts(int max_degree);

TangentPoly w_to_t(const Mod2Poly& p, int max_degree);
// w_to_t(p) * (1+t1+t2+...), truncated
TangentPoly hat_w(const Mod2Poly& p, int max_degree);
TauSeries chi_series(const TangentPoly& hp, int max_degree = -1);

// relations declared zero in degree d; empty vector with covered == false above the table
struct RelationTable {
    // every degree 0..7 is covered; degree 0 has no relations
    static constexpr int max_covered_degree = 7;
    static const RelationTable& builtin();
    bool covers(int d) const noexcept { return d >= 0 && d <= max_covered_degree; }
    const std::vector<TauPoly>& relations(int d) const;
    // the printed chains, for display
    const std::vector<std::string>& source() const noexcept { return source_; }

private:
    RelationTable();
    std::map<int, std::vector<TauPoly>> rel_;
    std::vector<std::string> source_;
};

// canonical representative modulo the relation table (least monomials survive)
TauSeries dold_reduce(const TauSeries& ts);
// true if a and b agree modulo the relations in every covered degree <= max_degree
bool dold_equivalent(const TauSeries& a, const TauSeries& b, int max_degree);

struct CatalogEntry {
    std::string name;        // "A2", "A3", "A4", "A5", "I22", "Sigma1", "Sigma2"
    std::string display;     // "A2(0)"
    int codimension = 0;     // target codimension parameter l
    int lowest_degree = 0;
    int truncation = 0;      // series known through this degree
    Mod2Poly ssw;
    std::string provenance;
};

const std::vector<CatalogEntry>& catalog();
const CatalogEntry& catalog_entry(const std::string& name);  // case-insensitive; throws

// highest degree through which the catalog lists every stratum of the A2 closure
constexpr int catalog_complete_degree = 5;

// sum of reduced chi series; degrees past catalog_complete_degree need allow_partial
TauSeries closure_series(const std::vector<std::string>& names, int max_degree, bool allow_partial = false);

}  // namespace swob
