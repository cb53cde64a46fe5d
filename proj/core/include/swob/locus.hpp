#pragma once

#include <map>
#include <optional>
#include <string>

#include "swob/f2.hpp"
#include "swob/ring.hpp"

namespace swob {

struct LocusReport {
    std::string manifold;
    int level = 0;           // target codimension parameter l
    std::string series;      // label of the series used, e.g. "Sigma2 closed"
    RingElement ssw_value;
    RingElement sw_value;
    bool chi2 = false;       // parity of the Euler characteristic
    std::map<int, bool> slices;  // slice dimension -> chi2 of the slice (RP^n only)
    std::optional<int> expected_dim;  // dim M - r(r+l); negative means empty expected
    friend bool operator==(const LocusReport&, const LocusReport&) = default;
};

LocusReport analyze(const ManifoldModel& m, const GradedSchurSeries& series, std::string label = {},
                    int level = 0, std::optional<int> codimension = std::nullopt);

// Sigma^2 closure at the level where the theorem predicts odd Euler characteristic
LocusReport euler_sigma2_case_a(long n);

// coefficient of x^n in sw * x^{n-i} (1+x)^{i+1} * wbar(RP^n)
bool slice_chi(const ManifoldModel& m, const RingElement& sw, int i);
std::map<int, bool> all_slices(const ManifoldModel& m, const RingElement& sw);

struct AluffiTransform {
    F2Matrix forward;  // rows: slice dimension i; columns: codimension k of [RP^{n-k}]
    F2Matrix inverse;
    friend bool operator==(const AluffiTransform&, const AluffiTransform&) = default;
};

AluffiTransform aluffi_matrix(int n);

// coefficient vector of a class on RP^n indexed by codimension
BitRow coefficient_vector(const RingElement& e);

}  // namespace swob
