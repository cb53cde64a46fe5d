#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "swob/ring.hpp"

namespace swob {

enum class FamilyKind { sigma, a2 };

// Sigma^i or A2; the level l is passed separately.
struct SingularityFamily {
    FamilyKind kind = FamilyKind::a2;
    int rank = 2;  // i for Sigma^i, unused for A2

    static SingularityFamily sigma(int i);
    static SingularityFamily a2() { return {FamilyKind::a2, 2}; }

    // lowest supported level: -1 for Sigma^2, otherwise 0
    int min_level() const noexcept;
    Partition rectangle(int l) const;  // (i+l)^i or (l+1,l+1)
    std::string name() const;          // "A2", "Sigma2"
    friend bool operator==(const SingularityFamily&, const SingularityFamily&) = default;
};

// parses "a2", "A2", "sigma2", "Sigma1", ...
SingularityFamily parse_family(const std::string& text);

struct CaseLabel {
    char letter = 'a';
    int t = 0;  // binary digit count
    int p = 0;  // 2-adic valuation
    // case d only: n = 2^u (8a+3) + b in binary as [a][011][b]
    long a = 0;
    int u = 0;
    long b = 0;
    friend bool operator==(const CaseLabel&, const CaseLabel&) = default;
};

struct LevelWitness {
    int level;
    std::vector<Partition> nonzero;  // sorted
    bool thom_nonzero;               // the rectangle itself
    friend bool operator==(const LevelWitness&, const LevelWitness&) = default;
};

struct BoundReport {
    int n = 0;  // dimension of the manifold
    std::string manifold;
    SingularityFamily family;
    int tau = 0;
    int kappa_bruteforce = 0;
    std::optional<int> kappa_closed;  // only for RP^n
    std::optional<CaseLabel> case_label;
    std::vector<LevelWitness> witnesses;
    friend bool operator==(const BoundReport&, const BoundReport&) = default;
};

SchurCombo thom_polynomial(const SingularityFamily& f, int l);
std::vector<Partition> avoiding_basis(const SingularityFamily& f, int l, int max_weight);

int tau_bound(const ManifoldModel& m, const SingularityFamily& f);
int kappa_bruteforce(const ManifoldModel& m, const SingularityFamily& f);

// evaluations at wbar(M) of every basis element at level l that are nonzero
std::vector<std::pair<Partition, RingElement>> nonzero_evaluations(const ManifoldModel& m,
                                                                   const SingularityFamily& f, int l);

CaseLabel classify_case(long n);
long kappa_closed(long n);
std::vector<Partition> nonvanishing_lambdas(long n);

// full report; kappa_closed is filled for projective spaces (shifted by -1 for Sigma^2)
BoundReport bounds(const ManifoldModel& m, const SingularityFamily& f);

}  // namespace swob
