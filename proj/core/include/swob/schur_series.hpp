#pragma once

#include <map>
#include <string>

#include "swob/symfun.hpp"

namespace swob {

// Degree-indexed F2 combination of Schur classes, truncated at max_degree (inclusive).
class GradedSchurSeries {
public:
    explicit GradedSchurSeries(int max_degree = 0);

    int max_degree() const noexcept { return max_degree_; }
    // nonzero degrees only
    const std::map<int, SchurCombo>& by_degree() const noexcept { return by_degree_; }
    SchurCombo part(int d) const;
    SchurCombo total() const;
    bool is_zero() const noexcept { return by_degree_.empty(); }
    // lowest degree carrying a nonzero part, -1 if zero
    int lowest_degree() const noexcept { return by_degree_.empty() ? -1 : by_degree_.begin()->first; }

    // terms above max_degree are dropped
    void toggle(const Partition& p);
    void add(const SchurCombo& c);
    GradedSchurSeries& operator+=(const GradedSchurSeries& o);
    friend GradedSchurSeries operator+(GradedSchurSeries a, const GradedSchurSeries& b) { return a += b; }
    friend bool operator==(const GradedSchurSeries&, const GradedSchurSeries&) = default;

    GradedSchurSeries truncated(int max_degree) const;
    GradedSchurSeries transposed() const;
    Mod2Poly to_poly() const;

    // one line per nonzero degree: "d: s[..]+s[..]"
    std::string str() const;

private:
    int max_degree_;
    std::map<int, SchurCombo> by_degree_;
};

}  // namespace swob
