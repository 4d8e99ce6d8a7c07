// Acceptance suite: one line per criterion, nonzero exit if any fails.
//
//   1  cycle spectra vs the closed form, N = 3..64
//   2  brute-force cycle constants vs the floor formulas, N = 3..10
//   3  complete-graph constants K4, K6
//   4  universal inequality suite over the default corpus
//   5  cycle constant suite (parity constants) + contraction interlacing
//   6  pipeline certification over the corpus, k <= N/2, seeds 0..9
//   7  lemma property suites, 200 seeded trials each
//   8  Markov operator suite

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <map>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "cheeger/errors.hpp"
#include "cheeger/exact.hpp"
#include "cheeger/graph.hpp"
#include "cheeger/markov.hpp"
#include "cheeger/projective.hpp"
#include "cheeger/rng.hpp"
#include "cheeger/spectral.hpp"
#include "cheeger/sweep.hpp"
#include "cheeger/verify.hpp"

using namespace cheeger;

namespace {

constexpr double kPi = std::numbers::pi;

struct Outcome {
    bool pass = true;
    std::string detail;
};

double cycle_lambda(int n, int k) { return 1.0 - std::cos(2.0 * kPi * (k / 2) / n); }

// ---------------------------------------------------------------- criterion 1

Outcome cycle_spectra() {
    double worst = 0.0;
    for (int n = 3; n <= 64; ++n) {
        const auto es = eigensystem(make_cycle(n));
        for (int k = 1; k <= n; ++k)
            worst = std::max(worst, std::fabs(es.values[k - 1] - cycle_lambda(n, k)));
    }
    std::ostringstream os;
    os << "max |lambda - closed form| = " << worst;
    return {worst <= 1e-9, os.str()};
}

// ---------------------------------------------------------------- criterion 2

Outcome cycle_constants() {
    double worst = 0.0;
    for (int n = 3; n <= 10; ++n) {
        const auto g = make_cycle(n);
        const double hbar1 = hbar_exact(g, 1).value;
        const double expect1 = n % 2 == 1 ? (n - 1.0) / n : 1.0;
        worst = std::max(worst, std::fabs(hbar1 - expect1));
        for (int k = 2; k <= n; ++k) {
            const double floor_term = 1.0 / (n / k);
            worst = std::max(worst, std::fabs(h_exact(g, k).value - floor_term));
            worst = std::max(worst, std::fabs(hbar_exact(g, k).value - (1.0 - floor_term)));
        }
    }
    std::ostringstream os;
    os << "max |constant - formula| = " << worst;
    return {worst <= 1e-12, os.str()};
}

// ---------------------------------------------------------------- criterion 3

Outcome complete_graphs() {
    double worst = 0.0;
    for (int n : {2, 3}) {  // K_{2n} with 2n = 4, 6
        const auto g = make_complete(2 * n);
        worst = std::max(worst,
                         std::fabs(h_exact(g, n).value - (2.0 * n - 2.0) / (2.0 * n - 1.0)));
        worst = std::max(worst, std::fabs(hbar_exact(g, n).value - 1.0 / (2.0 * n - 1.0)));
    }
    std::ostringstream os;
    os << "max |constant - formula| = " << worst;
    return {worst <= 1e-12, os.str()};
}

// ---------------------------------------------------------------- criterion 4

Outcome universal_suite() {
    int checks = 0, violations = 0, skipped = 0;
    for (const auto& e : default_corpus()) {
        const auto results = run_suite(e.graph, std::min(e.graph.size(), 8));
        for (const auto& c : results) {
            ++checks;
            if (c.skipped) ++skipped;
            else if (!c.pass) ++violations;
        }
    }
    std::ostringstream os;
    os << checks << " checks, " << violations << " violations, " << skipped << " skipped";
    return {violations == 0 && skipped == 0, os.str()};
}

// ---------------------------------------------------------------- criterion 5

Outcome cycle_suite_criterion() {
    int checks = 0, violations = 0;
    for (const auto& c : cycle_suite(10, 64)) {
        ++checks;
        if (!c.pass && !c.skipped) ++violations;
    }
    for (int n = 4; n <= 32; ++n) {
        const auto c = interlacing_check(n);
        ++checks;
        if (!c.pass) ++violations;
    }
    std::ostringstream os;
    os << checks << " checks, " << violations << " violations";
    return {violations == 0, os.str()};
}

// ---------------------------------------------------------------- criterion 6

Outcome pipeline_certification() {
    int runs = 0, hard_failures = 0, invalid = 0, cert_failures = 0, gap_failures = 0;
    for (const auto& e : default_corpus()) {
        const auto& g = e.graph;
        const int n = g.size();
        const auto es = eigensystem(g);
        for (int k = 1; k <= n / 2; ++k) {
            const double hbar = hbar_exact(g, k).value;
            const double rbar =
                k == 1 ? dual_rayleigh(g, es.functions[n - 1])
                       : dual_rayleigh(g, top_embedding(es, k));
            const double bound = (k == 1 ? 1.0 : certificate_bound_factor(k)) * rbar;
            for (std::uint64_t seed = 0; seed < 10; ++seed) {
                ++runs;
                ExtractionResult res;
                try {
                    res = extract_sub_bipartition(g, k, seed, 1000);
                } catch (const PipelineError&) {
                    ++hard_failures;
                    continue;
                }
                // validity, independently of the construction
                VertexSet used(n);
                bool valid = res.partition.k == k;
                double min_phibar = 2.0;
                for (const auto& [odd, even] : res.partition.pairs) {
                    const VertexSet both = odd | even;
                    if (both.empty() || odd.intersects(even) || used.intersects(both))
                        valid = false;
                    used = used | both;
                    const double pb = dual_expansion(g, odd, even);
                    min_phibar = std::min(min_phibar, pb);
                    const double t = 1.0 - pb;
                    const double lhs = 1.0 - std::sqrt(std::max(0.0, 1.0 - t * t));
                    if (lhs > bound + 1e-9) ++cert_failures;
                }
                if (!valid) ++invalid;
                if (min_phibar > hbar + 1e-12) ++gap_failures;
            }
        }
    }
    std::ostringstream os;
    os << runs << " runs, " << hard_failures << " hard failures, " << invalid
       << " invalid, " << cert_failures << " certificate misses, " << gap_failures
       << " oracle-gap misses";
    return {hard_failures == 0 && invalid == 0 && cert_failures == 0 && gap_failures == 0,
            os.str()};
}

// ---------------------------------------------------------------- criterion 7

std::vector<double> random_function(Rng& rng, int n, bool nonnegative) {
    std::vector<double> f(n);
    bool any = false;
    for (double& x : f) {
        x = rng.uniform(-1.0, 1.0);
        if (nonnegative) x = std::fabs(x);
        if (rng.uniform() < 0.2) x = 0.0;
        any |= x != 0.0;
    }
    if (!any) f[0] = 1.0;
    return f;
}

Outcome lemma_properties() {
    const auto corpus = default_corpus();
    int violations = 0;
    std::ostringstream os;

    // (i) sweep guarantee
    int sweep_checked = 0;
    for (int t = 0; t < 200; ++t) {
        const auto& g = corpus[t % corpus.size()].graph;
        Rng rng(derive_seed(1000, t));
        const auto h = random_function(rng, g.size(), true);
        const auto res = cheeger_sweep(g, h);
        const double r = rayleigh(g, h);
        if (r <= 1.0) {
            ++sweep_checked;
            if (res.phi > std::sqrt(r * (2.0 - r)) + 1e-9) ++violations;
        }
    }
    os << "sweep " << sweep_checked << "/200, ";

    // (ii) dual sweep guarantee + duplication identity
    int dual_checked = 0;
    for (int t = 0; t < 200; ++t) {
        const auto& g = corpus[t % corpus.size()].graph;
        Rng rng(derive_seed(2000, t));
        const auto f = random_function(rng, g.size(), false);
        const auto res = dual_sweep(g, f);
        const double rb = dual_rayleigh(g, f);
        if (rb <= 1.0) {
            ++dual_checked;
            if (1.0 - res.phi_bar > std::sqrt(rb * (2.0 - rb)) + 1e-9) ++violations;
        }
        if (res.v1.intersects(res.v2) || (res.v1 | res.v2).empty()) ++violations;
        const auto dup = build_duplication(g, f);
        if (rayleigh(dup.lifted, dup.lifted_function(f)) > rb + 1e-12) ++violations;
    }
    os << "dual-sweep " << dual_checked << "/200, ";

    // (iii) spreading bound on sampled partition clusters
    int spread_checked = 0;
    for (int t = 0; t < 200; ++t) {
        const auto& g = corpus[t % corpus.size()].graph;
        const int k = std::min(2 + t % 2, g.size());
        const auto F = top_embedding(eigensystem(g), k);
        const ProjectiveSpace space(g, F);
        const double r = 1.0 / (3.0 * std::sqrt(static_cast<double>(k)));
        Rng rng(derive_seed(3000, t));
        const auto part = padded_random_partition(space, r, rng);
        for (const auto& s : part) {
            const auto rep = spreading_bound_check(g, F, s, r);
            ++spread_checked;
            if (!rep.applicable || !rep.pass) ++violations;
        }
    }
    os << "spreading " << spread_checked << " sets, ";

    // (iv) per-edge localization bound
    int local_edges = 0;
    for (int t = 0; t < 200; ++t) {
        const auto& g = corpus[t % corpus.size()].graph;
        const int n = g.size();
        const int k = std::min(2, n);
        Rng rng(derive_seed(4000, t));
        EmbeddingMap F;
        F.k = k;
        F.columns.assign(k, std::vector<double>(n, 0.0));
        for (int v = 0; v < n; ++v)
            if (rng.uniform() < 0.85)
                for (int j = 0; j < k; ++j) F.columns[j][v] = rng.uniform(-1.0, 1.0);
        const VertexSet supp = support(n, F.columns);
        if (supp.empty()) continue;
        const ProjectiveSpace space(g, F);
        VertexSet target(n);
        for (int v : supp.members())
            if (rng.uniform() < 0.4) target.insert(v);
        if (target.empty()) target.insert(supp.members().front());
        const double eps = std::exp(rng.uniform(std::log(1e-4), std::log(1.9)));
        const auto psi = cutoff_localize(g, F, space, target, eps);
        for (const Edge& e : g.edges()) {
            double lhs = 0.0, rhs = 0.0;
            for (int j = 0; j < k; ++j) {
                const double ps = psi[j][e.u] + psi[j][e.v];
                const double fs = F.columns[j][e.u] + F.columns[j][e.v];
                lhs += ps * ps;
                rhs += fs * fs;
            }
            ++local_edges;
            if (std::sqrt(lhs) > (1.0 + 2.0 / eps) * std::sqrt(rhs) + 1e-9) ++violations;
        }
    }
    os << "localization " << local_edges << " edges, ";

    // (v) triangle inequality and diameter of the rough metric
    int triples = 0;
    for (int t = 0; t < 200; ++t) {
        const auto& g = corpus[t % corpus.size()].graph;
        const int k = std::min(2 + t % 3, g.size());
        const ProjectiveSpace space(g, top_embedding(eigensystem(g), k));
        Rng rng(derive_seed(5000, t));
        const int m = space.point_count();
        for (int i = 0; i < 50; ++i) {
            const int a = rng.below_int(m), b = rng.below_int(m), c = rng.below_int(m);
            ++triples;
            if (space.distance(a, c) > space.distance(a, b) + space.distance(b, c) + 1e-12)
                ++violations;
            if (space.distance(a, b) > std::sqrt(2.0) + 1e-12) ++violations;
        }
    }
    os << "metric " << triples << " triples, ";

    // (vi) cluster mass and separation
    int merges = 0;
    for (int t = 0; t < 200; ++t) {
        const auto& g = corpus[t % corpus.size()].graph;
        const int n = g.size();
        const int k = std::min(2 + t % 2, n / 2);
        if (k < 2) continue;
        const auto params = PipelineParams::for_k(k, derive_seed(6000, t));
        const auto F = top_embedding(eigensystem(g), k);
        const ProjectiveSpace space(g, F);
        bool produced = false;
        for (int attempt = 0; attempt < 1000 && !produced; ++attempt) {
            Rng rng(derive_seed(params.seed, attempt));
            const auto part = padded_random_partition(space, params.r, rng);
            std::vector<VertexSet> clusters;
            try {
                clusters = merge_heavy_clusters(space, part, params);
            } catch (const PartitionRejected&) {
                continue;
            }
            produced = true;
            ++merges;
            for (std::size_t i = 0; i < clusters.size(); ++i) {
                if (space.mass_of(clusters[i]) < space.total_mass() / (2.0 * k) - 1e-12)
                    ++violations;
                for (std::size_t j = i + 1; j < clusters.size(); ++j)
                    if (space.set_distance(clusters[i], clusters[j]) <
                        2.0 * params.r / params.alpha)
                        ++violations;
            }
        }
        if (!produced) ++violations;
    }
    os << "clusters " << merges << " merges; violations = " << violations;
    return {violations == 0, os.str()};
}

// ---------------------------------------------------------------- criterion 8

Outcome markov_suite() {
    int violations = 0;
    double worst_match = 0.0, worst_spec = 0.0;
    for (const auto& e : default_corpus()) {
        const auto& g = e.graph;
        if (g.size() > 8) continue;
        const auto op = markov_from_graph(g);
        const int kmax = std::min(g.size(), 4);
        const auto prof = markov_profiles(op, kmax);
        const auto es = eigensystem(g);
        for (int k = 1; k <= kmax; ++k) {
            worst_match =
                std::max(worst_match, std::fabs(prof.hbar[k - 1] - hbar_exact(g, k).value));
            worst_spec = std::max(worst_spec, std::fabs(prof.lambda_bar[k - 1] -
                                                        (2.0 - es.values[g.size() - k])));
        }
    }
    if (worst_match > 1e-12 || worst_spec > 1e-9) ++violations;

    int chains = 0;
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const int n = 5 + static_cast<int>(seed % 4);  // 5..8
        const auto base = make_random_connected(n, 0.6, 0.1, 10.0, derive_seed(8000, seed));
        const auto op = metropolis(base, random_target(n, derive_seed(8100, seed)));
        ++chains;
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                if (std::fabs(op.mu(x) * op.p(x, y) - op.mu(y) * op.p(y, x)) > 1e-12)
                    ++violations;
        const int kmax = std::min(n, 4);
        const auto prof = markov_profiles(op, kmax);
        const auto rep = check_markov_hci(op, kmax);
        for (int k = 1; k <= kmax; ++k) {
            if (prof.h[k - 1] + prof.hbar[k - 1] > 1.0 + 1e-12) ++violations;
            if (!rep.checks[k - 1].upper_pass) ++violations;
        }
    }
    std::ostringstream os;
    os << "graph-match err " << worst_match << ", spectrum err " << worst_spec << ", "
       << chains << " chains, violations = " << violations;
    return {violations == 0, os.str()};
}

}  // namespace

int main() {
    struct Criterion {
        const char* name;
        std::function<Outcome()> run;
        double time_limit_s;
    };
    const std::vector<Criterion> criteria{
        {"cycle-spectra", cycle_spectra, 10.0},
        {"cycle-constants", cycle_constants, 120.0},
        {"complete-graphs", complete_graphs, 120.0},
        {"universal-suite", universal_suite, 600.0},
        {"cycle-suite", cycle_suite_criterion, 600.0},
        {"pipeline-certification", pipeline_certification, 600.0},
        {"lemma-properties", lemma_properties, 600.0},
        {"markov-suite", markov_suite, 120.0},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = criteria[i].run();
        } catch (const std::exception& e) {
            out = {false, std::string("exception: ") + e.what()};
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_time = secs < criteria[i].time_limit_s;
        const bool pass = out.pass && in_time;
        if (!pass) ++failures;
        std::printf("%s  %zu  %-24s %s  (%.2fs%s)\n", pass ? "PASS" : "FAIL", i + 1,
                    criteria[i].name, out.detail.c_str(), secs,
                    in_time ? "" : ", over time limit");
        std::fflush(stdout);
    }
    return failures == 0 ? 0 : 1;
}
