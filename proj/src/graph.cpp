#include "cheeger/graph.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <queue>
#include <stdexcept>

#include "cheeger/rng.hpp"

namespace cheeger {

// --- VertexSet --------------------------------------------------------------

int VertexSet::count() const {
    int c = 0;
    for (std::uint64_t w : bits_) c += std::popcount(w);
    return c;
}

bool VertexSet::empty() const {
    for (std::uint64_t w : bits_)
        if (w) return false;
    return true;
}

bool VertexSet::intersects(const VertexSet& o) const {
    const std::size_t m = std::min(bits_.size(), o.bits_.size());
    for (std::size_t i = 0; i < m; ++i)
        if (bits_[i] & o.bits_[i]) return true;
    return false;
}

bool VertexSet::is_subset_of(const VertexSet& o) const {
    for (std::size_t i = 0; i < bits_.size(); ++i) {
        const std::uint64_t other = i < o.bits_.size() ? o.bits_[i] : 0;
        if (bits_[i] & ~other) return false;
    }
    return true;
}

VertexSet VertexSet::complement() const {
    VertexSet r(n_);
    for (std::size_t i = 0; i < bits_.size(); ++i) r.bits_[i] = ~bits_[i];
    const int tail = n_ & 63;
    if (tail && !r.bits_.empty()) r.bits_.back() &= (std::uint64_t(1) << tail) - 1;
    return r;
}

VertexSet VertexSet::operator|(const VertexSet& o) const {
    VertexSet r(std::max(n_, o.n_));
    for (std::size_t i = 0; i < r.bits_.size(); ++i) {
        const std::uint64_t a = i < bits_.size() ? bits_[i] : 0;
        const std::uint64_t b = i < o.bits_.size() ? o.bits_[i] : 0;
        r.bits_[i] = a | b;
    }
    return r;
}

VertexSet VertexSet::operator&(const VertexSet& o) const {
    VertexSet r(std::max(n_, o.n_));
    for (std::size_t i = 0; i < r.bits_.size(); ++i) {
        const std::uint64_t a = i < bits_.size() ? bits_[i] : 0;
        const std::uint64_t b = i < o.bits_.size() ? o.bits_[i] : 0;
        r.bits_[i] = a & b;
    }
    return r;
}

std::vector<int> VertexSet::members() const {
    std::vector<int> out;
    for (int v = 0; v < n_; ++v)
        if (contains(v)) out.push_back(v);
    return out;
}

// --- WeightedGraph ----------------------------------------------------------

WeightedGraph::WeightedGraph(int n, std::vector<Edge> edges)
    : WeightedGraph(n, std::move(edges), false) {}

WeightedGraph WeightedGraph::with_isolated(int n, std::vector<Edge> edges) {
    return WeightedGraph(n, std::move(edges), true);
}

WeightedGraph::WeightedGraph(int n, std::vector<Edge> edges, bool allow_isolated)
    : n_(n), edges_(std::move(edges)) {
    if (n_ < 1) throw std::invalid_argument("graph needs at least one vertex");
    for (Edge& e : edges_) {
        if (e.u < 0 || e.u >= n_ || e.v < 0 || e.v >= n_)
            throw std::invalid_argument("edge endpoint out of range");
        if (e.u == e.v) throw std::invalid_argument("self-loops are not permitted");
        if (!(e.w > 0.0) || !std::isfinite(e.w))
            throw std::invalid_argument("edge weights must be strictly positive");
        if (e.u > e.v) std::swap(e.u, e.v);
    }
    std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) {
        return a.u != b.u ? a.u < b.u : a.v < b.v;
    });
    for (std::size_t i = 1; i < edges_.size(); ++i)
        if (edges_[i].u == edges_[i - 1].u && edges_[i].v == edges_[i - 1].v)
            throw std::invalid_argument("duplicate unordered edge");

    adj_.assign(n_, {});
    for (const Edge& e : edges_) {
        adj_[e.u].emplace_back(e.v, e.w);
        adj_[e.v].emplace_back(e.u, e.w);
    }
    for (auto& nbrs : adj_) std::sort(nbrs.begin(), nbrs.end());

    // Degrees are the row sums of the weight matrix in sorted neighbor order,
    // not an independently stored quantity.
    degrees_.assign(n_, 0.0);
    for (int u = 0; u < n_; ++u) {
        double d = 0.0;
        for (const auto& [v, w] : adj_[u]) d += w;
        degrees_[u] = d;
        if (!allow_isolated && d == 0.0)
            throw std::invalid_argument("isolated vertex " + std::to_string(u));
    }
    total_volume_ = 0.0;
    for (double d : degrees_) total_volume_ += d;
}

double WeightedGraph::weight(int u, int v) const {
    const auto& nbrs = adj_[u];
    auto it = std::lower_bound(nbrs.begin(), nbrs.end(), std::make_pair(v, 0.0));
    if (it != nbrs.end() && it->first == v) return it->second;
    return 0.0;
}

bool WeightedGraph::is_connected() const {
    std::vector<char> seen(n_, 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int reached = 1;
    while (!q.empty()) {
        const int u = q.front();
        q.pop();
        for (const auto& [v, w] : adj_[u]) {
            (void)w;
            if (!seen[v]) {
                seen[v] = 1;
                ++reached;
                q.push(v);
            }
        }
    }
    return reached == n_;
}

bool WeightedGraph::is_bipartite() const {
    std::vector<int> color(n_, -1);
    for (int s = 0; s < n_; ++s) {
        if (color[s] != -1) continue;
        color[s] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            const int u = q.front();
            q.pop();
            for (const auto& [v, w] : adj_[u]) {
                (void)w;
                if (color[v] == -1) {
                    color[v] = 1 - color[u];
                    q.push(v);
                } else if (color[v] == color[u]) {
                    return false;
                }
            }
        }
    }
    return true;
}

// --- SubBipartition ----------------------------------------------------------

SubBipartition make_sub_bipartition(int n, std::vector<std::pair<VertexSet, VertexSet>> pairs) {
    VertexSet used(n);
    for (const auto& [odd, even] : pairs) {
        if (odd.intersects(even)) throw std::invalid_argument("pair sides overlap");
        const VertexSet both = odd | even;
        if (both.empty()) throw std::invalid_argument("pair with empty union");
        if (used.intersects(both)) throw std::invalid_argument("pairs are not disjoint");
        used = used | both;
    }
    SubBipartition sb;
    sb.k = static_cast<int>(pairs.size());
    sb.pairs = std::move(pairs);
    sb.residual = used.complement();
    return sb;
}

// --- Set functionals ----------------------------------------------------------

double volume(const WeightedGraph& g, const VertexSet& s) {
    double v = 0.0;
    for (int u = 0; u < g.size(); ++u)
        if (s.contains(u)) v += g.degree(u);
    return v;
}

double boundary_measure(const WeightedGraph& g, const VertexSet& a, const VertexSet& b) {
    double sum = 0.0;
    for (const Edge& e : g.edges()) {
        if ((a.contains(e.u) && b.contains(e.v)) || (a.contains(e.v) && b.contains(e.u)))
            sum += e.w;
    }
    return sum;
}

double expansion(const WeightedGraph& g, const VertexSet& s) {
    if (s.empty()) throw std::domain_error("expansion of the empty set");
    return boundary_measure(g, s, s.complement()) / volume(g, s);
}

double dual_expansion(const WeightedGraph& g, const VertexSet& v1, const VertexSet& v2) {
    if (v1.intersects(v2)) throw std::domain_error("dual expansion needs disjoint sets");
    const VertexSet both = v1 | v2;
    if (both.empty()) throw std::domain_error("dual expansion of an empty pair");
    return 2.0 * boundary_measure(g, v1, v2) / volume(g, both);
}

std::pair<VertexSet, VertexSet> dominant_bipartition(const WeightedGraph& g, const VertexSet& s) {
    if (s.empty()) throw std::domain_error("dominant bipartition of the empty set");
    const int n = g.size();
    // side[v]: 0 = V1, 1 = V2 (for members of s only).
    std::vector<char> side(n, 0);
    bool moved = true;
    while (moved) {
        moved = false;
        for (int u = 0; u < n; ++u) {
            if (!s.contains(u)) continue;
            double same = 0.0, cross = 0.0;
            for (const auto& [v, w] : g.neighbors(u)) {
                if (!s.contains(v)) continue;
                (side[v] == side[u] ? same : cross) += w;
            }
            if (same > cross) {
                side[u] = 1 - side[u];
                moved = true;
            }
        }
    }
    VertexSet v1(n), v2(n);
    for (int u = 0; u < n; ++u) {
        if (!s.contains(u)) continue;
        (side[u] == 0 ? v1 : v2).insert(u);
    }
    return {v1, v2};
}

WeightedGraph contract_edge(const WeightedGraph& g, int u, int v) {
    if (u > v) std::swap(u, v);
    if (u < 0 || v >= g.size() || g.weight(u, v) == 0.0)
        throw std::domain_error("contract_edge: {u,v} is not an edge");
    const int n = g.size();
    auto remap = [&](int x) {
        if (x == v) return u;
        return x > v ? x - 1 : x;
    };
    // Accumulate weights on remapped endpoints; parallel edges add up.
    std::vector<Edge> merged;
    for (const Edge& e : g.edges()) {
        if ((e.u == u && e.v == v)) continue;  // the contracted edge is dropped
        int a = remap(e.u), b = remap(e.v);
        if (a > b) std::swap(a, b);
        merged.push_back({a, b, e.w});
    }
    std::sort(merged.begin(), merged.end(), [](const Edge& a, const Edge& b) {
        return a.u != b.u ? a.u < b.u : a.v < b.v;
    });
    std::vector<Edge> out;
    for (const Edge& e : merged) {
        if (!out.empty() && out.back().u == e.u && out.back().v == e.v)
            out.back().w += e.w;
        else
            out.push_back(e);
    }
    return WeightedGraph(n - 1, std::move(out));
}

// --- Generators ----------------------------------------------------------------

WeightedGraph make_cycle(int n) {
    if (n < 3) throw std::domain_error("cycle needs at least 3 vertices");
    std::vector<Edge> es;
    for (int i = 0; i < n; ++i) es.push_back({i, (i + 1) % n, 1.0});
    return WeightedGraph(n, std::move(es));
}

WeightedGraph make_path(int n) {
    if (n < 2) throw std::domain_error("path needs at least 2 vertices");
    std::vector<Edge> es;
    for (int i = 0; i + 1 < n; ++i) es.push_back({i, i + 1, 1.0});
    return WeightedGraph(n, std::move(es));
}

WeightedGraph make_complete(int n) {
    if (n < 2) throw std::domain_error("complete graph needs at least 2 vertices");
    std::vector<Edge> es;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) es.push_back({i, j, 1.0});
    return WeightedGraph(n, std::move(es));
}

WeightedGraph make_complete_bipartite(int a, int b) {
    if (a < 1 || b < 1) throw std::domain_error("complete bipartite needs both sides non-empty");
    std::vector<Edge> es;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) es.push_back({i, a + j, 1.0});
    return WeightedGraph(a + b, std::move(es));
}

WeightedGraph make_hypercube(int d) {
    if (d < 1) throw std::domain_error("hypercube needs dimension >= 1");
    const int n = 1 << d;
    std::vector<Edge> es;
    for (int u = 0; u < n; ++u)
        for (int bit = 0; bit < d; ++bit) {
            const int v = u ^ (1 << bit);
            if (u < v) es.push_back({u, v, 1.0});
        }
    return WeightedGraph(n, std::move(es));
}

WeightedGraph make_random_connected(int n, double density, double wmin, double wmax,
                                    std::uint64_t seed) {
    if (n < 2) throw std::domain_error("random connected graph needs at least 2 vertices");
    if (!(wmin > 0.0) || wmax < wmin) throw std::domain_error("bad weight range");
    Rng rng(seed);
    for (;;) {
        std::vector<Edge> es;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (rng.uniform() < density) es.push_back({i, j, rng.uniform(wmin, wmax)});
        if (es.empty()) continue;
        bool isolated = false;
        std::vector<char> touched(n, 0);
        for (const Edge& e : es) touched[e.u] = touched[e.v] = 1;
        for (char t : touched) isolated |= !t;
        if (isolated) continue;
        WeightedGraph g(n, std::move(es));
        if (g.is_connected()) return g;
    }
}

WeightedGraph make_random_tree(int n, std::uint64_t seed) {
    if (n < 2) throw std::domain_error("random tree needs at least 2 vertices");
    Rng rng(seed);
    std::vector<Edge> es;
    for (int i = 1; i < n; ++i) es.push_back({rng.below_int(i), i, 1.0});
    return WeightedGraph(n, std::move(es));
}

WeightedGraph generate(const std::string& kind, const std::vector<double>& params,
                       std::uint64_t seed) {
    auto need = [&](std::size_t count) {
        if (params.size() != count)
            throw std::domain_error("generator '" + kind + "' expects " +
                                    std::to_string(count) + " parameter(s)");
    };
    auto as_int = [](double x) { return static_cast<int>(x); };
    if (kind == "cycle") {
        need(1);
        return make_cycle(as_int(params[0]));
    }
    if (kind == "path") {
        need(1);
        return make_path(as_int(params[0]));
    }
    if (kind == "complete") {
        need(1);
        return make_complete(as_int(params[0]));
    }
    if (kind == "complete_bipartite") {
        need(2);
        return make_complete_bipartite(as_int(params[0]), as_int(params[1]));
    }
    if (kind == "hypercube") {
        need(1);
        return make_hypercube(as_int(params[0]));
    }
    if (kind == "random_connected_weighted") {
        need(4);
        return make_random_connected(as_int(params[0]), params[1], params[2], params[3], seed);
    }
    if (kind == "random_tree") {
        need(1);
        return make_random_tree(as_int(params[0]), seed);
    }
    throw std::domain_error("unknown generator kind '" + kind + "'");
}

}  // namespace cheeger
