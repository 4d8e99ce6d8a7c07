#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "cheeger/exact.hpp"
#include "cheeger/graph.hpp"
#include "cheeger/markov.hpp"
#include "cheeger/spectral.hpp"

using namespace cheeger;

namespace {

FiniteMarkovOperator identity_chain(int n) {
    std::vector<double> mu(n, 1.0 / n);
    std::vector<double> kernel(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) kernel[static_cast<std::size_t>(i) * n + i] = 1.0;
    return FiniteMarkovOperator(std::move(mu), std::move(kernel));
}

void check_operator_residuals(const FiniteMarkovOperator& op) {
    const int n = op.size();
    for (int x = 0; x < n; ++x) {
        double row = 0.0;
        for (int y = 0; y < n; ++y) {
            CHECK(op.p(x, y) >= -1e-15);
            row += op.p(x, y);
        }
        CHECK(std::fabs(row - 1.0) <= 1e-12);
        for (int y = x + 1; y < n; ++y)
            CHECK(std::fabs(op.mu(x) * op.p(x, y) - op.mu(y) * op.p(y, x)) <= 1e-12);
    }
}

}  // namespace

TEST_CASE("construction validation") {
    CHECK_THROWS_AS(FiniteMarkovOperator({0.5, 0.5}, {1.0, 0.1, 0.0, 1.0}),
                    std::invalid_argument);  // rows do not sum to one
    CHECK_THROWS_AS(FiniteMarkovOperator({0.9, 0.2}, {0.0, 1.0, 1.0, 0.0}),
                    std::invalid_argument);  // mu not normalized
    CHECK_THROWS_AS(FiniteMarkovOperator({0.9, 0.1}, {0.0, 1.0, 1.0, 0.0}),
                    std::invalid_argument);  // not reversible
    CHECK_NOTHROW(identity_chain(3));
}

TEST_CASE("from_graph kernels") {
    SUBCASE("K2") {
        const auto op = markov_from_graph(make_complete(2));
        CHECK(op.p(0, 1) == 1.0);
        CHECK(op.p(1, 0) == 1.0);
        CHECK(op.p(0, 0) == 0.0);
        CHECK(op.mu(0) == 0.5);
    }
    SUBCASE("C4") {
        const auto op = markov_from_graph(make_cycle(4));
        for (int x = 0; x < 4; ++x) {
            int half_entries = 0;
            for (int y = 0; y < 4; ++y)
                if (op.p(x, y) == 0.5) ++half_entries;
            CHECK(half_entries == 2);
            CHECK(op.mu(x) == 0.25);
        }
    }
    SUBCASE("weighted P3") {
        const WeightedGraph g(3, {{0, 1, 1.0}, {1, 2, 2.0}});
        const auto op = markov_from_graph(g);
        CHECK(op.p(0, 1) == 1.0);
        CHECK(op.p(1, 0) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
        CHECK(op.p(1, 2) == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
        CHECK(op.p(2, 1) == 1.0);
        check_operator_residuals(op);
    }
}

TEST_CASE("j measure") {
    const auto c4 = markov_from_graph(make_cycle(4));
    const auto all = VertexSet::full(4);
    CHECK(j_measure(c4, all, all) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(j_measure(c4, VertexSet(4, {0}), VertexSet(4, {1})) ==
          doctest::Approx(0.125).epsilon(1e-15));
    CHECK(j_measure(c4, VertexSet(4, {0}), all) ==
          doctest::Approx(c4.mu(0)).epsilon(1e-14));
    const auto id3 = identity_chain(3);
    CHECK(j_measure(id3, VertexSet(3, {0}), VertexSet(3, {1, 2})) == 0.0);
    // Symmetry under reversibility.
    const auto g = make_random_connected(6, 0.6, 0.1, 10.0, 8);
    const auto op = markov_from_graph(g);
    const VertexSet a(6, {0, 2, 3}), b(6, {1, 3, 5});
    CHECK(j_measure(op, a, b) == doctest::Approx(j_measure(op, b, a)).epsilon(1e-13));
}

TEST_CASE("metropolis kernels") {
    SUBCASE("uniform target on a regular base is symmetric") {
        const auto c5 = make_cycle(5);
        const auto op = metropolis(c5, std::vector<double>(5, 0.2));
        for (int x = 0; x < 5; ++x)
            for (int y = 0; y < 5; ++y) CHECK(op.p(x, y) == op.p(y, x));
        check_operator_residuals(op);
    }
    SUBCASE("seeded chains satisfy detailed balance") {
        for (std::uint64_t seed = 0; seed < 10; ++seed) {
            const auto base = make_random_connected(6, 0.5, 0.1, 10.0, seed);
            const auto op = metropolis(base, random_target(6, seed));
            check_operator_residuals(op);
        }
    }
    SUBCASE("deterministic construction") {
        const auto base = make_random_connected(6, 0.5, 0.1, 10.0, 4);
        const auto t = random_target(6, 11);
        const auto a = metropolis(base, t);
        const auto b = metropolis(base, t);
        CHECK(a.kernel() == b.kernel());
    }
}

TEST_CASE("profiles of graph operators match graph constants") {
    for (const auto& g : {make_cycle(5), make_cycle(6), make_path(5), make_complete(4),
                          make_random_connected(6, 0.6, 0.1, 10.0, 2)}) {
        const auto op = markov_from_graph(g);
        const int kmax = std::min(3, g.size());
        const auto prof = markov_profiles(op, kmax);
        const auto es = eigensystem(g);
        const int n = g.size();
        for (int k = 1; k <= kmax; ++k) {
            CHECK(std::fabs(prof.h[k - 1] - h_exact(g, k).value) <= 1e-12);
            CHECK(std::fabs(prof.hbar[k - 1] - hbar_exact(g, k).value) <= 1e-12);
            CHECK(std::fabs(prof.lambda_bar[k - 1] - (2.0 - es.values[n - k])) <= 1e-9);
        }
    }
}

TEST_CASE("identity chain profile") {
    const auto op = identity_chain(4);
    const auto prof = markov_profiles(op, 4);
    for (int k = 1; k <= 4; ++k) {
        CHECK(prof.h[k - 1] == 0.0);
        CHECK(prof.hbar[k - 1] == 0.0);
        CHECK(std::fabs(prof.lambda_bar[k - 1] - 2.0) <= 1e-12);
    }
}

TEST_CASE("profile monotonicity and spectral positivity") {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const auto base = make_random_connected(6, 0.6, 0.1, 10.0, seed);
        const auto op = metropolis(base, random_target(6, seed + 100));
        const auto prof = markov_profiles(op, 3);
        for (int k = 1; k <= 3; ++k) {
            if (k > 1) {
                CHECK(prof.h[k - 1] >= prof.h[k - 2] - 1e-12);
                CHECK(prof.hbar[k - 1] <= prof.hbar[k - 2] + 1e-12);
            }
            CHECK(prof.h[k - 1] + prof.hbar[k - 1] <= 1.0 + 1e-12);
        }
        for (double lb : prof.lambda_bar) CHECK(lb >= -1e-9);
    }
}

TEST_CASE("spectral sandwich checks") {
    SUBCASE("C5 random walk at k = 1") {
        const auto rep = check_markov_hci(markov_from_graph(make_cycle(5)), 1);
        const auto& c = rep.checks[0];
        CHECK(std::fabs(c.lambda_bar - (1.0 + std::cos(4.0 * std::acos(-1.0) / 5.0))) <= 1e-9);
        CHECK(std::fabs(c.upper_rhs - 0.4) <= 1e-12);  // hbar(1) = 4/5
        CHECK(c.upper_pass);
        CHECK(c.lower_slack >= -1e-9);
    }
    SUBCASE("bipartite C6 achieves equality at k = 1") {
        const auto rep = check_markov_hci(markov_from_graph(make_cycle(6)), 1);
        CHECK(std::fabs(rep.checks[0].lambda_bar) <= 1e-9);
        CHECK(std::fabs(rep.checks[0].upper_rhs) <= 1e-12);
        CHECK(rep.checks[0].upper_pass);
    }
    SUBCASE("seeded Metropolis chains satisfy the upper bound") {
        for (std::uint64_t seed = 0; seed < 10; ++seed) {
            const auto base = make_random_connected(7, 0.5, 0.1, 10.0, seed);
            const auto op = metropolis(base, random_target(7, seed + 50));
            const auto rep = check_markov_hci(op, 3);
            CHECK(rep.all_upper_pass);
            for (const auto& c : rep.checks) CHECK(c.lower_slack >= -1e-9);
        }
    }
}
