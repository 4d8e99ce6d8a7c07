#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace cheeger {

struct Edge {
    int u;
    int v;
    double w;
};

// Subset of 0..n-1 with bitset semantics.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int n) : n_(n), bits_((n + 63) / 64, 0) {}
    VertexSet(int n, std::initializer_list<int> vs) : VertexSet(n) {
        for (int v : vs) insert(v);
    }

    static VertexSet full(int n) {
        VertexSet s(n);
        for (int v = 0; v < n; ++v) s.insert(v);
        return s;
    }

    int universe_size() const { return n_; }

    bool contains(int v) const { return (bits_[v >> 6] >> (v & 63)) & 1u; }
    void insert(int v) { bits_[v >> 6] |= std::uint64_t(1) << (v & 63); }
    void erase(int v) { bits_[v >> 6] &= ~(std::uint64_t(1) << (v & 63)); }

    int count() const;
    bool empty() const;
    bool intersects(const VertexSet& o) const;
    bool is_subset_of(const VertexSet& o) const;

    VertexSet complement() const;
    VertexSet operator|(const VertexSet& o) const;
    VertexSet operator&(const VertexSet& o) const;
    bool operator==(const VertexSet& o) const = default;

    // Members in ascending order.
    std::vector<int> members() const;

private:
    int n_ = 0;
    std::vector<std::uint64_t> bits_;
};

// Undirected loop-free weighted graph with the degree measure mu(u) = d_u.
// Immutable after construction; all queries are safe for concurrent reads.
class WeightedGraph {
public:
    // Validates: ids in range, no self-loops, no duplicate unordered edges,
    // strictly positive weights, no isolated vertices.
    WeightedGraph(int n, std::vector<Edge> edges);

    // Same validation except isolated vertices are permitted. Needed for the
    // signed duplication construction, whose duplicate vertices can end up
    // with no incident edges.
    static WeightedGraph with_isolated(int n, std::vector<Edge> edges);

    int size() const { return n_; }
    const std::vector<Edge>& edges() const { return edges_; }
    double degree(int u) const { return degrees_[u]; }
    const std::vector<double>& degrees() const { return degrees_; }
    double total_volume() const { return total_volume_; }

    // Sorted by neighbor id.
    const std::vector<std::pair<int, double>>& neighbors(int u) const { return adj_[u]; }

    // 0 when u,v are not adjacent.
    double weight(int u, int v) const;

    bool is_connected() const;
    bool is_bipartite() const;

private:
    WeightedGraph(int n, std::vector<Edge> edges, bool allow_isolated);

    int n_ = 0;
    std::vector<Edge> edges_;                             // canonical (min,max) order, sorted
    std::vector<std::vector<std::pair<int, double>>> adj_;
    std::vector<double> degrees_;
    double total_volume_ = 0.0;
};

// k mutually disjoint non-empty vertex sets.
struct Subpartition {
    int k = 0;
    std::vector<VertexSet> parts;
};

// k disjoint pairs (V_odd, V_even); within a pair either side may be empty
// but not both. residual = complement of the union of all 2k sets.
struct SubBipartition {
    int k = 0;
    std::vector<std::pair<VertexSet, VertexSet>> pairs;
    VertexSet residual;
};

// Builds the residual and validates pairwise disjointness / non-empty unions.
SubBipartition make_sub_bipartition(int n, std::vector<std::pair<VertexSet, VertexSet>> pairs);

// --- Set functionals ------------------------------------------------------

// vol(S) = sum of degrees over S.
double volume(const WeightedGraph& g, const VertexSet& s);

// Sum of w_uv over unordered edges {u,v} with one endpoint in a and the other
// in b (or both endpoints in a∩b). Each qualifying edge counts once, so
// vol(S) = 2*boundary_measure(S,S) + boundary_measure(S, complement).
double boundary_measure(const WeightedGraph& g, const VertexSet& a, const VertexSet& b);

// phi(S) = |E(S, S-bar)| / vol(S). Throws std::domain_error on empty s.
double expansion(const WeightedGraph& g, const VertexSet& s);

// phi-bar(V1,V2) = 2|E(V1,V2)| / vol(V1 u V2). Throws std::domain_error when
// the sets overlap or their union is empty.
double dual_expansion(const WeightedGraph& g, const VertexSet& v1, const VertexSet& v2);

// Partition of s into (V1,V2) with cut weight >= max of the two internal
// weights. Deterministic local search: start with everything in V1, scan in
// index order, move a vertex only on strict improvement.
std::pair<VertexSet, VertexSet> dominant_bipartition(const WeightedGraph& g, const VertexSet& s);

// Contracts edge {u,v}: drops w_uv, merges parallel edges by weight addition.
// The merged vertex takes id min(u,v); ids above max(u,v) shift down by one.
WeightedGraph contract_edge(const WeightedGraph& g, int u, int v);

// --- Generators -----------------------------------------------------------

WeightedGraph make_cycle(int n);
WeightedGraph make_path(int n);
WeightedGraph make_complete(int n);
WeightedGraph make_complete_bipartite(int a, int b);
WeightedGraph make_hypercube(int d);
WeightedGraph make_random_connected(int n, double density, double wmin, double wmax,
                                    std::uint64_t seed);
WeightedGraph make_random_tree(int n, std::uint64_t seed);

// Dispatch by kind name; params are kind-specific (see the CLI help).
// Kinds: cycle N | path N | complete N | complete_bipartite A B |
//        hypercube D | random_connected_weighted N DENSITY WMIN WMAX |
//        random_tree N
WeightedGraph generate(const std::string& kind, const std::vector<double>& params,
                       std::uint64_t seed);

}  // namespace cheeger
