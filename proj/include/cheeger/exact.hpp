#pragma once

#include <utility>
#include <vector>

#include "cheeger/graph.hpp"

namespace cheeger {

inline constexpr double kDefaultBudget = 3e8;

// The enumeration engine works on a vertex measure plus symmetric pair
// weights; graphs use (degree, edge weight), Markov operators use
// (mu_x, mu_x P_xy). Shared with markov-core.
struct EnumInstance {
    std::vector<double> measure;
    std::vector<std::vector<std::pair<int, double>>> pairs;  // symmetric, sorted by id

    int size() const { return static_cast<int>(measure.size()); }
};

EnumInstance enum_instance_of(const WeightedGraph& g);

struct LabelOptimum {
    double value = 0.0;
    std::vector<int> labels;
};

// min over canonical k-subpartition labelings of max_i cut(S_i)/measure(S_i).
LabelOptimum best_subpartition_labels(const EnumInstance& inst, int k, double budget);

// max over canonical Pair(k) labelings of
// min_i (2 cross_i + (star ? residual_i / 2 : 0)) / measure_i.
LabelOptimum best_pair_labels(const EnumInstance& inst, int k, bool star, double budget);

Subpartition subpartition_from_labels(int n, int k, const std::vector<int>& labels);
SubBipartition sub_bipartition_from_labels(int n, int k, const std::vector<int>& labels);

struct HResult {
    double value = 0.0;
    Subpartition witness;
};

struct HbarResult {
    double value = 0.0;
    SubBipartition witness;
};

// Estimated enumeration counts used for the budget pre-check.
double h_enumeration_estimate(int n, int k);
double hbar_enumeration_estimate(int n, int k);

// Exact k-way Cheeger constant by pruned exhaustive enumeration. Label
// vectors over {0 (unused), 1..k} with canonical first-use ordering quotient
// the k! label symmetry. Throws BudgetError when the estimate exceeds budget.
HResult h_exact(const WeightedGraph& g, int k, double budget = kDefaultBudget);

// Exact k-way dual Cheeger constant over Pair(k); labels {0 (residual),
// 1..2k}, canonical in pair order and within-pair swap.
HbarResult hbar_exact(const WeightedGraph& g, int k, double budget = kDefaultBudget);

// The strengthened constant with the residual boundary term
// (2|E(V_odd,V_even)| + |E(V_odd u V_even, V*)|/2) / vol(V_odd u V_even).
HbarResult hbar_star_exact(const WeightedGraph& g, int k, double budget = kDefaultBudget);

// Per-k aggregates. h values are nondecreasing in k and reach 1 for
// k > N/2; hbar values are nonincreasing and reach 0 there; hbar_star
// dominates hbar pointwise.
struct CheegerProfile {
    int kmax = 0;
    std::vector<HResult> per_k;  // index k-1
};

struct DualCheegerProfile {
    int kmax = 0;
    bool with_star = false;
    std::vector<HbarResult> hbar;       // index k-1
    std::vector<HbarResult> hbar_star;  // empty unless with_star
};

CheegerProfile h_profile(const WeightedGraph& g, int kmax, double budget = kDefaultBudget);
DualCheegerProfile hbar_profile(const WeightedGraph& g, int kmax, bool with_star,
                                double budget = kDefaultBudget);

// When h(k) + hbar(k) = 1, the max-expansion pair of the hbar witness must be
// internally edge-free. Report-only check.
struct BipartiteWitnessReport {
    bool applicable = false;   // |h + hbar - 1| <= 1e-12
    bool pass = true;
    int pair_index = -1;       // argmax expansion among witness pairs
    double internal_odd = 0.0;
    double internal_even = 0.0;
};
BipartiteWitnessReport check_bipartite_witness(const WeightedGraph& g, const HResult& h,
                                               const HbarResult& hbar);

}  // namespace cheeger
