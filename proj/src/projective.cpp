#include "cheeger/projective.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "cheeger/errors.hpp"
#include "cheeger/sweep.hpp"

namespace cheeger {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::vector<double> normalized(const std::vector<double>& x) {
    double norm2 = 0.0;
    for (double xi : x) norm2 += xi * xi;
    if (norm2 == 0.0) throw std::domain_error("rough_distance: zero vector");
    const double inv = 1.0 / std::sqrt(norm2);
    std::vector<double> u(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) u[i] = x[i] * inv;
    return u;
}

double unit_rough_distance(const std::vector<double>& a, const std::vector<double>& b) {
    double minus = 0.0, plus = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double dm = a[i] - b[i];
        const double dp = a[i] + b[i];
        minus += dm * dm;
        plus += dp * dp;
    }
    return std::sqrt(std::min(minus, plus));
}

}  // namespace

double rough_distance(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size()) throw std::invalid_argument("rough_distance: dimension mismatch");
    return unit_rough_distance(normalized(x), normalized(y));
}

ProjectiveSpace::ProjectiveSpace(const WeightedGraph& g, const EmbeddingMap& F) {
    const int n = g.size();
    universe_ = n;
    index_.assign(n, -1);
    for (int v = 0; v < n; ++v) {
        std::vector<double> x = F.at(v);
        double norm2 = 0.0;
        for (double xi : x) norm2 += xi * xi;
        if (norm2 == 0.0) continue;
        index_[v] = static_cast<int>(points_.size());
        points_.push_back(v);
        const double inv = 1.0 / std::sqrt(norm2);
        for (double& xi : x) xi *= inv;
        unit_.push_back(std::move(x));
        mass_.push_back(g.degree(v) * norm2);
    }
    if (points_.empty()) throw std::domain_error("ProjectiveSpace: empty support");
    total_mass_ = 0.0;
    for (double m : mass_) total_mass_ += m;

    const int m = point_count();
    if (m <= 512) {
        cache_.assign(static_cast<std::size_t>(m) * m, 0.0);
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j) {
                const double d = unit_rough_distance(unit_[i], unit_[j]);
                cache_[static_cast<std::size_t>(i) * m + j] = d;
                cache_[static_cast<std::size_t>(j) * m + i] = d;
            }
    }
}

double ProjectiveSpace::distance(int i, int j) const {
    if (!cache_.empty()) return cache_[static_cast<std::size_t>(i) * point_count() + j];
    return unit_rough_distance(unit_[i], unit_[j]);
}

double ProjectiveSpace::mass_of(const VertexSet& s) const {
    double m = 0.0;
    for (int i = 0; i < point_count(); ++i)
        if (s.contains(points_[i])) m += mass_[i];
    return m;
}

double ProjectiveSpace::set_diameter(const VertexSet& s) const {
    double d = 0.0;
    std::vector<int> idx;
    for (int i = 0; i < point_count(); ++i)
        if (s.contains(points_[i])) idx.push_back(i);
    for (std::size_t a = 0; a < idx.size(); ++a)
        for (std::size_t b = a + 1; b < idx.size(); ++b)
            d = std::max(d, distance(idx[a], idx[b]));
    return d;
}

double ProjectiveSpace::set_distance(const VertexSet& a, const VertexSet& b) const {
    double d = kInf;
    std::vector<int> ia, ib;
    for (int i = 0; i < point_count(); ++i) {
        if (a.contains(points_[i])) ia.push_back(i);
        if (b.contains(points_[i])) ib.push_back(i);
    }
    for (int i : ia)
        for (int j : ib) d = std::min(d, distance(i, j));
    return d;
}

double ProjectiveSpace::distance_to_set(int v, const VertexSet& s) const {
    const int i = index_[v];
    if (i < 0) return kInf;
    double d = kInf;
    for (int j = 0; j < point_count(); ++j)
        if (s.contains(points_[j])) d = std::min(d, distance(i, j));
    return d;
}

double doubling_dimension_constant() {
    return 4.0 * (std::log2(std::numbers::pi) - 0.5);
}

double certificate_bound_factor(int k) {
    const double c = 768.0 * doubling_dimension_constant();
    return 2.0 * c * c * std::pow(static_cast<double>(k), 6);
}

PipelineParams PipelineParams::for_k(int k, std::uint64_t seed, int max_attempts) {
    if (k < 2) throw std::domain_error("PipelineParams: k must be at least 2");
    PipelineParams p;
    p.k = k;
    p.r = 1.0 / (3.0 * std::sqrt(static_cast<double>(k)));
    p.delta = 1.0 / (4.0 * k);
    p.doubling_const = doubling_dimension_constant();
    p.alpha = 128.0 * k * p.doubling_const * (k - 1);
    p.eps = p.r / p.alpha;
    p.max_partition_attempts = max_attempts;
    p.seed = seed;
    return p;
}

std::vector<VertexSet> padded_random_partition(const ProjectiveSpace& space, double r, Rng& rng) {
    if (!(r > 0.0)) throw std::domain_error("padded_random_partition: r must be positive");
    const int m = space.point_count();
    const double beta = rng.uniform(r / 4.0, r / 2.0);
    const std::vector<int> order = rng.permutation(m);
    std::vector<int> owner(m, -1);
    for (int i = 0; i < m; ++i) {
        for (int center : order) {
            if (space.distance(i, center) <= beta) {
                owner[i] = center;
                break;
            }
        }
    }
    std::vector<VertexSet> clusters;
    for (int center : order) {
        VertexSet c(space.universe_size());
        bool used = false;
        for (int i = 0; i < m; ++i)
            if (owner[i] == center) {
                c.insert(space.vertex_at(i));
                used = true;
            }
        if (used) clusters.push_back(std::move(c));
    }
    return clusters;
}

std::vector<VertexSet> padded_subsets(const ProjectiveSpace& space,
                                      const std::vector<VertexSet>& partition, double radius) {
    const int m = space.point_count();
    std::vector<VertexSet> out;
    out.reserve(partition.size());
    for (const VertexSet& s : partition) {
        VertexSet hat(s.universe_size());
        for (int i = 0; i < m; ++i) {
            const int v = space.vertex_at(i);
            if (!s.contains(v)) continue;
            bool padded = true;
            for (int j = 0; j < m && padded; ++j)
                if (space.distance(i, j) <= radius && !s.contains(space.vertex_at(j)))
                    padded = false;
            if (padded) hat.insert(v);
        }
        out.push_back(std::move(hat));
    }
    return out;
}

SpreadingReport spreading_bound_check(const WeightedGraph& g, const EmbeddingMap& F,
                                      const VertexSet& s, double r) {
    if (!(r > 0.0) || r >= 1.0) throw std::domain_error("spreading bound needs 0 < r < 1");
    const ProjectiveSpace space(g, F);
    SpreadingReport rep;
    rep.applicable = space.set_diameter(s) <= r;
    if (!rep.applicable) return rep;
    rep.mass = space.mass_of(s);
    rep.bound = space.total_mass() / (F.k * (1.0 - r * r));
    rep.pass = rep.mass <= rep.bound + 1e-9;
    return rep;
}

std::vector<VertexSet> merge_by_mass(std::vector<VertexSet> sets, std::vector<double> masses,
                                     double total, int k) {
    const double threshold = total / (2.0 * k);
    for (;;) {
        int first = -1, second = -1;
        for (int i = 0; i < static_cast<int>(sets.size()) && second < 0; ++i)
            if (masses[i] < threshold) (first < 0 ? first : second) = i;
        if (second < 0) break;
        sets[first] = sets[first] | sets[second];
        masses[first] += masses[second];
        sets.erase(sets.begin() + second);
        masses.erase(masses.begin() + second);
    }
    if (static_cast<int>(sets.size()) < k)
        throw PartitionRejected(PartitionRejected::Reason::merge,
                                "fewer than k clusters after merging");
    // At most one light set remains; the trailing union must absorb it.
    for (int i = 0; i + 1 < static_cast<int>(sets.size()); ++i)
        if (masses[i] < threshold) {
            std::rotate(sets.begin() + i, sets.begin() + i + 1, sets.end());
            std::rotate(masses.begin() + i, masses.begin() + i + 1, masses.end());
            break;
        }
    while (static_cast<int>(sets.size()) > k) {
        sets[k - 1] = sets[k - 1] | sets.back();
        masses[k - 1] += masses.back();
        sets.pop_back();
        masses.pop_back();
    }
    for (int i = 0; i < k; ++i)
        if (masses[i] < threshold - 1e-12)
            throw PartitionRejected(PartitionRejected::Reason::merge,
                                    "merged cluster below the mass threshold");
    return sets;
}

std::vector<VertexSet> merge_heavy_clusters(const ProjectiveSpace& space,
                                            const std::vector<VertexSet>& partition,
                                            const PipelineParams& params) {
    const double total = space.total_mass();
    const double padding_radius = params.r / params.alpha;
    auto hats = padded_subsets(space, partition, padding_radius);

    double padded_mass = 0.0;
    std::vector<double> hat_masses(hats.size());
    for (std::size_t i = 0; i < hats.size(); ++i) {
        hat_masses[i] = space.mass_of(hats[i]);
        padded_mass += hat_masses[i];
    }
    if (padded_mass < (1.0 - 1.0 / (4.0 * params.k)) * total)
        throw PartitionRejected(PartitionRejected::Reason::mass_condition,
                                "padded mass condition failed");

    const double cap = (1.0 + 1.0 / (8.0 * params.k)) * total / params.k;
    std::vector<VertexSet> sets;
    std::vector<double> masses;
    for (std::size_t i = 0; i < hats.size(); ++i) {
        if (hat_masses[i] > cap + 1e-9)
            throw PartitionRejected(PartitionRejected::Reason::merge,
                                    "padded cluster exceeds the spreading cap");
        if (hats[i].empty()) continue;
        sets.push_back(std::move(hats[i]));
        masses.push_back(hat_masses[i]);
    }

    auto merged = merge_by_mass(std::move(sets), std::move(masses), total, params.k);

    for (std::size_t i = 0; i < merged.size(); ++i)
        for (std::size_t j = i + 1; j < merged.size(); ++j)
            if (space.set_distance(merged[i], merged[j]) < 2.0 * padding_radius)
                throw PartitionRejected(PartitionRejected::Reason::merge,
                                        "merged clusters closer than 2r/alpha");
    return merged;
}

std::vector<std::vector<double>> cutoff_localize(const WeightedGraph& g, const EmbeddingMap& F,
                                                 const ProjectiveSpace& space, const VertexSet& t,
                                                 double eps) {
    if (!(eps > 0.0) || eps >= 2.0) throw std::domain_error("cutoff_localize: eps outside (0,2)");
    if (t.empty()) throw std::domain_error("cutoff_localize: empty target set");
    const int n = g.size();
    std::vector<std::vector<double>> psi(F.k, std::vector<double>(n, 0.0));
    for (int v = 0; v < n; ++v) {
        if (space.index_of(v) < 0) continue;  // F(v) = 0 stays 0
        const double d = space.distance_to_set(v, t);
        const double theta = std::max(0.0, 1.0 - d / eps);
        if (theta == 0.0) continue;
        for (int j = 0; j < F.k; ++j) psi[j][v] = theta * F.columns[j][v];
    }
    return psi;
}

std::pair<int, std::vector<double>> best_coordinate(const WeightedGraph& g,
                                                    const std::vector<std::vector<double>>& psi) {
    int best = -1;
    double best_value = kInf;
    for (int j = 0; j < static_cast<int>(psi.size()); ++j) {
        bool nonzero = false;
        for (double x : psi[j]) nonzero |= x != 0.0;
        if (!nonzero) continue;
        const double value = dual_rayleigh(g, psi[j]);
        if (value < best_value) {
            best = j;
            best_value = value;
        }
    }
    if (best < 0) throw std::domain_error("best_coordinate: identically zero map");
    return {best, psi[best]};
}

namespace {

PairCertificate certify_pair(double phi_bar, double bound) {
    PairCertificate c;
    c.phi_bar = phi_bar;
    const double t = 1.0 - phi_bar;
    c.lhs = 1.0 - std::sqrt(std::max(0.0, 1.0 - t * t));
    c.pass = c.lhs <= bound + 1e-9;
    return c;
}

}  // namespace

ExtractionResult extract_sub_bipartition(const WeightedGraph& g, int k, std::uint64_t seed,
                                         int max_attempts) {
    const int n = g.size();
    if (k < 1 || k > n) throw std::domain_error("extract_sub_bipartition: k out of range");
    const EigenSystem es = eigensystem(g);

    if (k == 1) {
        const auto& f = es.functions[n - 1];
        const auto sweep = dual_sweep(g, f);
        Certificate cert;
        cert.k = 1;
        cert.rbar = dual_rayleigh(g, f);
        cert.bound = cert.rbar;
        cert.pairs.push_back(certify_pair(sweep.phi_bar, cert.bound));
        cert.attempts_used = 0;
        return {make_sub_bipartition(n, {{sweep.v1, sweep.v2}}), cert};
    }

    const PipelineParams params = PipelineParams::for_k(k, seed, max_attempts);
    const EmbeddingMap F = top_embedding(es, k);
    const ProjectiveSpace space(g, F);
    const double rbar = dual_rayleigh(g, F);

    int mass_failures = 0, merge_failures = 0;
    for (int attempt = 0; attempt < params.max_partition_attempts; ++attempt) {
        Rng rng(derive_seed(seed, static_cast<std::uint64_t>(attempt)));
        const auto partition = padded_random_partition(space, params.r, rng);
        std::vector<VertexSet> clusters;
        try {
            clusters = merge_heavy_clusters(space, partition, params);
        } catch (const PartitionRejected& e) {
            (e.reason() == PartitionRejected::Reason::mass_condition ? mass_failures
                                                                     : merge_failures)++;
            continue;
        }

        Certificate cert;
        cert.k = k;
        cert.rbar = rbar;
        cert.bound = certificate_bound_factor(k) * rbar;
        cert.attempts_used = attempt + 1;
        std::vector<std::pair<VertexSet, VertexSet>> pairs;
        for (const VertexSet& t : clusters) {
            const auto psi = cutoff_localize(g, F, space, t, params.eps);
            const auto [j0, coord] = best_coordinate(g, psi);
            const auto sweep = dual_sweep(g, coord);
            pairs.emplace_back(sweep.v1, sweep.v2);
            cert.pairs.push_back(certify_pair(sweep.phi_bar, cert.bound));
        }
        return {make_sub_bipartition(n, std::move(pairs)), cert};
    }
    throw PipelineError(params.max_partition_attempts, mass_failures, merge_failures);
}

}  // namespace cheeger
