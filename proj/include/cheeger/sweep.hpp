#pragma once

#include <vector>

#include "cheeger/graph.hpp"

namespace cheeger {

struct SweepResult {
    VertexSet set;
    double phi = 0.0;
};

// Threshold sweep over S_t = {v : h(v)^2 > t} for all distinct values of h^2.
// Returns the expansion minimizer. Requires h >= 0 with non-empty support.
SweepResult cheeger_sweep(const WeightedGraph& g, const std::vector<double>& h);

// The duplication graph from the dual sweep argument: duplicate every vertex
// of P(f) = {f > 0} and N(f) = {f < 0}; each same-sign edge {u,v} is replaced
// by {u,v'} and {v,u'} of the same weight; everything else is unchanged.
struct SignedDuplicationGraph {
    WeightedGraph base;
    WeightedGraph lifted;
    std::vector<int> origin;    // lifted id -> base id
    std::vector<int> sign;      // base id -> +1 / -1 / 0
    std::vector<int> duplicate; // base id -> lifted duplicate id, or -1

    // |f| on P u N in the lifted vertex numbering, 0 elsewhere.
    std::vector<double> lifted_function(const std::vector<double>& f) const;
};

SignedDuplicationGraph build_duplication(const WeightedGraph& g, const std::vector<double>& f);

struct DualSweepResult {
    VertexSet v1;  // positive side
    VertexSet v2;  // negative side
    double phi_bar = 0.0;
};

// Runs cheeger_sweep on the duplication graph with |f| and maps the best
// threshold set back as (S n P(f), S n N(f)).
DualSweepResult dual_sweep(const WeightedGraph& g, const std::vector<double>& f);

}  // namespace cheeger
