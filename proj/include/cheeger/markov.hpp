#pragma once

#include <cstdint>
#include <vector>

#include "cheeger/exact.hpp"
#include "cheeger/graph.hpp"

namespace cheeger {

// Reversible row-stochastic kernel with invariant probability mu. Unlike
// graph-core, holding probabilities (diagonal entries) are allowed.
class FiniteMarkovOperator {
public:
    // Validates stochasticity, positivity of mu, normalization of mu, and
    // detailed balance mu_x P_xy = mu_y P_yx, all within 1e-12.
    FiniteMarkovOperator(std::vector<double> mu, std::vector<double> kernel);

    int size() const { return n_; }
    double mu(int x) const { return mu_[x]; }
    const std::vector<double>& mu() const { return mu_; }
    double p(int x, int y) const { return kernel_[static_cast<std::size_t>(x) * n_ + y]; }
    const std::vector<double>& kernel() const { return kernel_; }

    double mu_of(const VertexSet& s) const;

private:
    int n_ = 0;
    std::vector<double> mu_;
    std::vector<double> kernel_;
};

// J(A,B) = (1_A, P 1_B)_mu; symmetric by reversibility, J(A, X) = mu(A).
double j_measure(const FiniteMarkovOperator& op, const VertexSet& a, const VertexSet& b);

// Random walk operator of a graph: P = D^{-1} A, mu = d / vol(V).
FiniteMarkovOperator markov_from_graph(const WeightedGraph& g);

// Metropolis kernel over the uniform-neighbor proposal of the base graph,
// reversible with respect to target_mu. Deterministic in its inputs.
FiniteMarkovOperator metropolis(const WeightedGraph& base, const std::vector<double>& target_mu);

// Strictly positive normalized vector derived from the seed; handy for
// seeding Metropolis chains.
std::vector<double> random_target(int n, std::uint64_t seed);

struct MarkovProfile {
    int kmax = 0;
    std::vector<double> h;                      // h_P(k), index k-1
    std::vector<double> hbar;                   // hbar_P(k)
    std::vector<Subpartition> h_witness;
    std::vector<SubBipartition> hbar_witness;
    std::vector<double> lambda_bar;             // all eigenvalues of I + P, ascending
};

// Brute-force h_P / hbar_P via the shared enumeration engine, and the
// spectrum of I + P via the mu-symmetrized kernel.
MarkovProfile markov_profiles(const FiniteMarkovOperator& op, int kmax,
                              double budget = kDefaultBudget);

struct MarkovCheck {
    int k = 0;
    double lambda_bar = 0.0;
    double hbar = 0.0;
    double upper_rhs = 0.0;   // 2 (1 - hbar_P(k))
    bool upper_pass = false;  // lambda_bar <= upper_rhs + 1e-9
    double lower_bound = 0.0; // (1 - hbar_P(k))^2 / (2 B(k)), report only
    double lower_slack = 0.0; // lambda_bar - lower_bound
};

struct MarkovHciReport {
    std::vector<MarkovCheck> checks;
    bool all_upper_pass = true;
};

// Asserts the upper half of the spectral sandwich and reports the slack of
// the certificate-constant lower bound (the sharp universal constant is not
// known, so the lower side is reported rather than asserted).
MarkovHciReport check_markov_hci(const FiniteMarkovOperator& op, int kmax,
                                 double budget = kDefaultBudget);

}  // namespace cheeger
