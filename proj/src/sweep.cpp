#include "cheeger/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cheeger {

SweepResult cheeger_sweep(const WeightedGraph& g, const std::vector<double>& h) {
    const int n = g.size();
    if (static_cast<int>(h.size()) != n)
        throw std::invalid_argument("cheeger_sweep: function length mismatch");
    std::vector<double> squares;
    for (int v = 0; v < n; ++v) {
        if (h[v] < 0.0) throw std::domain_error("cheeger_sweep: function must be nonnegative");
        if (h[v] > 0.0) squares.push_back(h[v] * h[v]);
    }
    if (squares.empty()) throw std::domain_error("cheeger_sweep: zero function");
    std::sort(squares.begin(), squares.end());
    squares.erase(std::unique(squares.begin(), squares.end()), squares.end());

    SweepResult best;
    bool first = true;
    // Descending thresholds: every threshold set {h^2 >= c} shows up once.
    for (auto it = squares.rbegin(); it != squares.rend(); ++it) {
        VertexSet s(n);
        for (int v = 0; v < n; ++v)
            if (h[v] * h[v] >= *it) s.insert(v);
        const double phi = expansion(g, s);
        if (first || phi < best.phi) {
            best = {s, phi};
            first = false;
        }
    }
    return best;
}

SignedDuplicationGraph build_duplication(const WeightedGraph& g, const std::vector<double>& f) {
    const int n = g.size();
    if (static_cast<int>(f.size()) != n)
        throw std::invalid_argument("build_duplication: function length mismatch");
    std::vector<int> sign(n, 0);
    bool any = false;
    for (int v = 0; v < n; ++v) {
        if (f[v] > 0.0) sign[v] = 1;
        if (f[v] < 0.0) sign[v] = -1;
        any |= sign[v] != 0;
    }
    if (!any) throw std::domain_error("build_duplication: zero function");

    std::vector<int> duplicate(n, -1);
    std::vector<int> origin(n);
    for (int v = 0; v < n; ++v) origin[v] = v;
    int next = n;
    for (int v = 0; v < n; ++v)
        if (sign[v] != 0) {
            duplicate[v] = next++;
            origin.push_back(v);
        }

    std::vector<Edge> lifted_edges;
    for (const Edge& e : g.edges()) {
        if (sign[e.u] != 0 && sign[e.u] == sign[e.v]) {
            lifted_edges.push_back({e.u, duplicate[e.v], e.w});
            lifted_edges.push_back({e.v, duplicate[e.u], e.w});
        } else {
            lifted_edges.push_back(e);
        }
    }

    SignedDuplicationGraph d{g, WeightedGraph::with_isolated(next, std::move(lifted_edges)),
                             std::move(origin), std::move(sign), std::move(duplicate)};
    return d;
}

std::vector<double> SignedDuplicationGraph::lifted_function(const std::vector<double>& f) const {
    std::vector<double> out(lifted.size(), 0.0);
    for (int v = 0; v < base.size(); ++v)
        if (sign[v] != 0) out[v] = std::fabs(f[v]);
    return out;
}

DualSweepResult dual_sweep(const WeightedGraph& g, const std::vector<double>& f) {
    const auto dup = build_duplication(g, f);
    const auto sweep = cheeger_sweep(dup.lifted, dup.lifted_function(f));
    const int n = g.size();
    VertexSet v1(n), v2(n);
    for (int v = 0; v < n; ++v) {
        if (!sweep.set.contains(v)) continue;  // duplicates are never in supp
        (dup.sign[v] > 0 ? v1 : v2).insert(v);
    }
    return {v1, v2, dual_expansion(g, v1, v2)};
}

}  // namespace cheeger
