#include "cheeger/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>

#include "cheeger/errors.hpp"
#include "cheeger/exact.hpp"
#include "cheeger/spectral.hpp"

namespace cheeger {

namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();
constexpr double kPi = std::numbers::pi;

CheckResult skipped_check(std::string name, int k, std::string note) {
    CheckResult c;
    c.name = std::move(name);
    c.k = k;
    c.lhs = c.rhs = c.slack = kNan;
    c.pass = false;
    c.skipped = true;
    c.witness = std::move(note);
    return c;
}

double cycle_lambda(int n, int k) { return 1.0 - std::cos(2.0 * kPi * (k / 2) / n); }

double cycle_h(int n, int k) { return k == 1 ? 0.0 : 1.0 / (n / k); }

double cycle_hbar(int n, int k) {
    if (k == 1) return n % 2 == 1 ? (n - 1.0) / n : 1.0;
    return 1.0 - 1.0 / (n / k);
}

double c1_constant(int k) { return k % 2 == 0 ? 1.0 : kPi / 9.0; }
double c2_constant(int n, int k) { return (n - k + 1) % 2 == 0 ? kPi / 9.0 : 1.0; }
double c3_constant(int n, int k) {
    const int idx = n - k + 1;
    if (idx % 2 == 1 || idx >= n - 1) return 0.5;
    return 1.0 / 48.0;
}

}  // namespace

CheckResult make_check(std::string name, int k, double lhs, double rhs, double tolerance,
                       std::string witness) {
    CheckResult c;
    c.name = std::move(name);
    c.k = k;
    c.lhs = lhs;
    c.rhs = rhs;
    c.slack = rhs - lhs;
    c.tolerance = tolerance;
    c.pass = c.slack >= -tolerance;
    c.witness = std::move(witness);
    return c;
}

std::vector<CorpusEntry> default_corpus() {
    std::vector<CorpusEntry> corpus;
    auto add = [&](std::string kind, std::vector<double> params, std::uint64_t seed,
                   std::string name) {
        corpus.push_back({std::move(name), kind, params, seed, generate(kind, params, seed)});
    };
    for (int n = 3; n <= 10; ++n) add("cycle", {double(n)}, 0, "cycle-" + std::to_string(n));
    for (int n = 2; n <= 10; ++n) add("path", {double(n)}, 0, "path-" + std::to_string(n));
    for (int n = 2; n <= 6; ++n) add("complete", {double(n)}, 0, "complete-" + std::to_string(n));
    add("complete_bipartite", {2, 3}, 0, "complete-bipartite-2-3");
    add("hypercube", {3}, 0, "hypercube-3");
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const int n = 4 + static_cast<int>(seed % 5);
        add("random_connected_weighted", {double(n), 0.5, 0.1, 10.0}, seed,
            "random-" + std::to_string(n) + "-s" + std::to_string(seed));
    }
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const int n = 6 + static_cast<int>(seed % 5);
        add("random_tree", {double(n)}, seed,
            "tree-" + std::to_string(n) + "-s" + std::to_string(seed));
    }
    return corpus;
}

std::vector<CheckResult> run_suite(const WeightedGraph& g, int kmax, double budget,
                                   const Tolerances& tol) {
    const int n = g.size();
    kmax = std::min(kmax, n);
    const EigenSystem es = eigensystem(g);
    const bool bipartite = g.is_bipartite();

    std::vector<CheckResult> checks;
    std::vector<std::optional<double>> hs(kmax + 1), hbars(kmax + 1);

    for (int k = 1; k <= kmax; ++k) {
        std::optional<HResult> h;
        std::optional<HbarResult> hbar, hstar;
        std::string budget_note;
        try {
            h = h_exact(g, k, budget);
        } catch (const BudgetError& e) {
            budget_note = e.what();
        }
        try {
            hbar = hbar_exact(g, k, budget);
            hstar = hbar_star_exact(g, k, budget);
        } catch (const BudgetError& e) {
            budget_note = e.what();
        }
        if (h) hs[k] = h->value;
        if (hbar) hbars[k] = hbar->value;

        const double lambda_top = es.values[n - k];  // lambda_{N-k+1}

        if (hbar)
            checks.push_back(make_check("gap-vs-hbar-upper", k, 2.0 - lambda_top,
                                        2.0 * (1.0 - hbar->value), tol.eig));
        else
            checks.push_back(skipped_check("gap-vs-hbar-upper", k, budget_note));

        if (hstar)
            checks.push_back(
                make_check("hbar-star-eigen-lower", k, 2.0 * hstar->value, lambda_top, tol.eig));
        else
            checks.push_back(skipped_check("hbar-star-eigen-lower", k, budget_note));

        if (h && hbar) {
            checks.push_back(make_check("h-plus-hbar", k, h->value + hbar->value, 1.0, tol.comb));
            checks.push_back(
                make_check("hbar-halved-gap", k, 0.5 * (1.0 - h->value), hbar->value, tol.comb));
            const auto wrep = check_bipartite_witness(g, *h, *hbar);
            if (wrep.applicable)
                checks.push_back(make_check(
                    "tight-witness-bipartite", k, std::max(wrep.internal_odd, wrep.internal_even),
                    0.0, tol.comb, "pair " + std::to_string(wrep.pair_index)));
            if (bipartite)
                checks.push_back(make_check("bipartite-duality", k,
                                            std::fabs(h->value + hbar->value - 1.0), 0.0,
                                            tol.comb));
        } else {
            checks.push_back(skipped_check("h-plus-hbar", k, budget_note));
            checks.push_back(skipped_check("hbar-halved-gap", k, budget_note));
            if (bipartite) checks.push_back(skipped_check("bipartite-duality", k, budget_note));
        }

        const EmbeddingMap F = top_embedding(es, k);
        checks.push_back(
            make_check("embedding-energy", k, dual_rayleigh(g, F), 2.0 - lambda_top, tol.eig));

        if (bipartite)
            checks.push_back(make_check("bipartite-spectrum", k,
                                        std::fabs(es.values[k - 1] + lambda_top - 2.0), 0.0,
                                        tol.eig));
    }

    for (int k = 1; k < kmax; ++k) {
        if (hs[k] && hs[k + 1])
            checks.push_back(make_check("monotone-h", k, *hs[k], *hs[k + 1], tol.comb));
        if (hbars[k] && hbars[k + 1])
            checks.push_back(make_check("monotone-hbar", k, *hbars[k + 1], *hbars[k], tol.comb));
    }
    return checks;
}

std::vector<CheckResult> cycle_suite(int nmax_brute, int nmax_spectral, double budget,
                                     const Tolerances& tol) {
    std::vector<CheckResult> checks;
    auto push_cycle_bounds = [&](int n, int k, double h, double hbar, double lam_k, double lam_top,
                           const std::string& tag) {
        const std::string id = "C" + std::to_string(n) + "-" + tag;
        checks.push_back(
            make_check("cycle-h-lower-" + id, k, c1_constant(k) * h * h, lam_k, tol.eig));
        checks.push_back(
            make_check("cycle-h-upper-" + id, k, lam_k, 0.5 * kPi * kPi * h * h, tol.eig));
        const double gap = 1.0 - hbar;
        checks.push_back(make_check("cycle-hbar-lower-" + id, k,
                                    c2_constant(n, k) * gap * gap, 2.0 - lam_top, tol.eig));
        checks.push_back(make_check("cycle-hbar-upper-" + id, k, 2.0 - lam_top,
                                    0.5 * kPi * kPi * gap * gap, tol.eig));
    };

    for (int n = 3; n <= nmax_spectral; ++n) {
        // Closed forms on both sides.
        for (int k = 1; k <= n; ++k) {
            push_cycle_bounds(n, k, cycle_h(n, k), cycle_hbar(n, k), cycle_lambda(n, k),
                        cycle_lambda(n, n - k + 1), "closed");
            const double prev_hbar = cycle_hbar(n, std::max(1, k - 1));  // hbar(0) := hbar(1)
            const double gap = 1.0 - prev_hbar;
            checks.push_back(make_check(
                "cycle-shifted-lower-C" + std::to_string(n) + "-closed", k,
                c3_constant(n, k) * gap * gap, 2.0 - cycle_lambda(n, n - k + 1), tol.eig));
        }
        if (n > nmax_brute) continue;

        // Brute-force constants against the eigensolver spectrum.
        const auto g = make_cycle(n);
        const auto es = eigensystem(g);
        std::vector<double> h(n + 1), hbar(n + 1);
        bool ok = true;
        try {
            for (int k = 1; k <= n; ++k) {
                h[k] = h_exact(g, k, budget).value;
                hbar[k] = hbar_exact(g, k, budget).value;
            }
        } catch (const BudgetError& e) {
            checks.push_back(skipped_check("cycle-brute-C" + std::to_string(n), 0, e.what()));
            ok = false;
        }
        if (!ok) continue;
        for (int k = 1; k <= n; ++k) {
            push_cycle_bounds(n, k, h[k], hbar[k], es.values[k - 1], es.values[n - k], "brute");
            const double gap = 1.0 - hbar[std::max(1, k - 1)];
            checks.push_back(make_check("cycle-shifted-lower-C" + std::to_string(n) + "-brute", k,
                                        c3_constant(n, k) * gap * gap,
                                        2.0 - es.values[n - k], tol.eig));
        }
    }
    return checks;
}

CheckResult interlacing_check(int n, const Tolerances& tol) {
    if (n < 4) throw std::domain_error("interlacing_check: cycle contraction needs N >= 4");
    const auto g = make_cycle(n);
    const auto contracted = contract_edge(g, 0, 1);
    const auto es = eigensystem(g);
    const auto esc = eigensystem(contracted);
    double worst = -std::numeric_limits<double>::infinity();
    for (int k = 0; k < n - 1; ++k) worst = std::max(worst, es.values[k] - esc.values[k]);
    return make_check("interlacing-C" + std::to_string(n), 0, worst, 0.0, tol.eig);
}

bool all_pass(const std::vector<CheckResult>& checks) {
    for (const auto& c : checks)
        if (!c.pass && !c.skipped) return false;
    return true;
}

bool any_violation(const std::vector<CheckResult>& checks) { return !all_pass(checks); }

bool any_skipped(const std::vector<CheckResult>& checks) {
    for (const auto& c : checks)
        if (c.skipped) return true;
    return false;
}

}  // namespace cheeger
