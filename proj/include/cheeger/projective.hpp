#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cheeger/graph.hpp"
#include "cheeger/rng.hpp"
#include "cheeger/spectral.hpp"

namespace cheeger {

// Rough metric on the projective space: min{||x/|x| - y/|y|||, ||x/|x| + y/|y|||}.
// Invariant under sign flips of either argument; diameter sqrt(2).
double rough_distance(const std::vector<double>& x, const std::vector<double>& y);

// supp(F) as a pseudo-metric space under the rough projective distance, with
// the point masses mu(v) ||F(v)||^2. Distances are cached only for small
// spaces (<= 512 points) and computed on demand otherwise.
class ProjectiveSpace {
public:
    ProjectiveSpace(const WeightedGraph& g, const EmbeddingMap& F);

    int universe_size() const { return universe_; }  // vertex count of the graph
    int point_count() const { return static_cast<int>(points_.size()); }
    int vertex_at(int i) const { return points_[i]; }
    int index_of(int v) const { return index_[v]; }  // -1 when F(v) = 0

    double distance(int i, int j) const;  // point indices
    double mass(int i) const { return mass_[i]; }
    double total_mass() const { return total_mass_; }

    // Set arguments use base vertex ids; vertices outside the space are ignored.
    double mass_of(const VertexSet& s) const;
    double set_diameter(const VertexSet& s) const;                      // 0 for <2 points
    double set_distance(const VertexSet& a, const VertexSet& b) const;  // +inf when empty
    double distance_to_set(int v, const VertexSet& s) const;

private:
    int universe_ = 0;
    std::vector<int> points_;
    std::vector<int> index_;
    std::vector<std::vector<double>> unit_;
    std::vector<double> mass_;
    double total_mass_ = 0.0;
    std::vector<double> cache_;  // full matrix when point_count() <= 512
};

// Parameters of the clustering pipeline for a given k >= 2, all fixed by the
// construction: r = 1/(3 sqrt k), delta = 1/(4k), C = 4(log2 pi - 1/2),
// alpha = 128 k C (k-1), eps = r / alpha.
struct PipelineParams {
    int k = 0;
    double r = 0.0;
    double delta = 0.0;
    double doubling_const = 0.0;
    double alpha = 0.0;
    double eps = 0.0;
    int max_partition_attempts = 1000;
    std::uint64_t seed = 0;

    static PipelineParams for_k(int k, std::uint64_t seed, int max_attempts = 1000);
};

double doubling_dimension_constant();        // 4 (log2 pi - 1/2)
double certificate_bound_factor(int k);      // 2 (768 C)^2 k^6

// Ball carving: beta uniform in [r/4, r/2], random point permutation, each
// point joins the first permuted point within beta. Every cluster has rough
// diameter <= 2 beta <= r. Returns clusters as base-vertex sets.
std::vector<VertexSet> padded_random_partition(const ProjectiveSpace& space, double r, Rng& rng);

// S-hat = {v in S : B(v, radius) within S}, per partition cluster.
std::vector<VertexSet> padded_subsets(const ProjectiveSpace& space,
                                      const std::vector<VertexSet>& partition, double radius);

// Spreading bound E_S <= E_V / (k (1 - r^2)) whenever diam(S n supp F) <= r.
struct SpreadingReport {
    bool applicable = false;
    double mass = 0.0;
    double bound = 0.0;
    bool pass = true;
};
SpreadingReport spreading_bound_check(const WeightedGraph& g, const EmbeddingMap& F,
                                      const VertexSet& s, double r);

// A sampled partition that fails the preconditions of cluster merging; the
// caller resamples.
class PartitionRejected : public std::runtime_error {
public:
    enum class Reason { mass_condition, merge };
    PartitionRejected(Reason reason, const std::string& why)
        : std::runtime_error(why), reason_(reason) {}
    Reason reason() const noexcept { return reason_; }

private:
    Reason reason_;
};

// Mass-merge core: repeatedly merge two sets of mass < total/(2k) each, then
// union the trailing sets into the k-th. Exposed for direct testing.
std::vector<VertexSet> merge_by_mass(std::vector<VertexSet> sets, std::vector<double> masses,
                                     double total, int k);

// Full merging step: padded subsets -> mass merge -> k clusters with
// E_{T_i} >= E_V/(2k) and pairwise separation >= 2r/alpha. Throws
// PartitionRejected when the sample cannot deliver that.
std::vector<VertexSet> merge_heavy_clusters(const ProjectiveSpace& space,
                                            const std::vector<VertexSet>& partition,
                                            const PipelineParams& params);

// Psi = theta F with the tent cut-off theta(v) = max{0, 1 - d(v, T)/eps}
// (0 wherever F vanishes). Support reaches less than eps beyond T.
std::vector<std::vector<double>> cutoff_localize(const WeightedGraph& g, const EmbeddingMap& F,
                                                 const ProjectiveSpace& space, const VertexSet& t,
                                                 double eps);

// Coordinate with the smallest dual Rayleigh quotient among the nonzero ones;
// ties broken by the smaller index. Returns (index, coordinate function).
std::pair<int, std::vector<double>> best_coordinate(const WeightedGraph& g,
                                                    const std::vector<std::vector<double>>& psi);

struct PairCertificate {
    double phi_bar = 0.0;
    double lhs = 0.0;  // 1 - sqrt(1 - (1 - phi_bar)^2)
    bool pass = false;
};

struct Certificate {
    int k = 0;
    double rbar = 0.0;   // dual Rayleigh quotient of the certifying map
    double bound = 0.0;  // B(k) = 2 (768 C)^2 k^6 rbar, or rbar itself at k=1
    std::vector<PairCertificate> pairs;
    int attempts_used = 0;

    bool all_pass() const {
        for (const auto& p : pairs)
            if (!p.pass) return false;
        return true;
    }
};

struct ExtractionResult {
    SubBipartition partition;
    Certificate certificate;
};

// The full pipeline. k = 1 short-circuits to a dual sweep of the top
// eigenfunction. Throws PipelineError when no partition sample passes the
// mass condition within max_attempts.
ExtractionResult extract_sub_bipartition(const WeightedGraph& g, int k, std::uint64_t seed,
                                         int max_attempts = 1000);

}  // namespace cheeger
