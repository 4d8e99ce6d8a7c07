#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cheeger/graph.hpp"

namespace cheeger {

// One inequality instance, normalized to the form lhs <= rhs + tolerance.
struct CheckResult {
    std::string name;
    int k = 0;  // 0 when the check is not per-k
    double lhs = 0.0;
    double rhs = 0.0;
    double slack = 0.0;  // rhs - lhs
    double tolerance = 0.0;
    bool pass = false;   // slack >= -tolerance
    bool skipped = false;  // budget exceeded; lhs/rhs are meaningless
    std::string witness;
};

CheckResult make_check(std::string name, int k, double lhs, double rhs, double tolerance,
                       std::string witness = {});

struct Tolerances {
    double eig = 1e-9;    // checks involving eigenvalues
    double comb = 1e-12;  // purely combinatorial checks
};

// Named deterministic test graphs; regeneration from (kind, params, seed) is
// bit-identical.
struct CorpusEntry {
    std::string name;
    std::string kind;
    std::vector<double> params;
    std::uint64_t seed = 0;
    WeightedGraph graph;
};

// cycles 3..10, paths 2..10, K_2..K_6, K_{2,3}, Q_3, 20 random connected
// weighted graphs (N in 4..8, weights in [0.1,10], seeds 0..19), 5 random
// trees (N in 6..10).
std::vector<CorpusEntry> default_corpus();

// The universal inequalities for one graph, every k <= kmax:
// the spectral sandwich sides, the h/hbar relations, both monotonicities,
// bipartite equalities where the graph is bipartite, and the top-k embedding
// bound. Budget shortfalls mark the affected checks skipped; the suite never
// throws for them.
std::vector<CheckResult> run_suite(const WeightedGraph& g, int kmax,
                                   double budget = 3e8, const Tolerances& tol = {});

// Closed-form and brute-force cycle checks: the parity-constant inequalities
// between lambda_k and h(k), their duals, and the shifted-index lower bound
// via edge contraction.
std::vector<CheckResult> cycle_suite(int nmax_brute, int nmax_spectral,
                                     double budget = 3e8, const Tolerances& tol = {});

// Contracts one edge of C_N and verifies lambda'_k >= lambda_k per index.
CheckResult interlacing_check(int n, const Tolerances& tol = {});

bool all_pass(const std::vector<CheckResult>& checks);
bool any_violation(const std::vector<CheckResult>& checks);
bool any_skipped(const std::vector<CheckResult>& checks);

}  // namespace cheeger
