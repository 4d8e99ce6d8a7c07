#include "cheeger/markov.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "cheeger/projective.hpp"
#include "cheeger/rng.hpp"
#include "cheeger/spectral.hpp"

namespace cheeger {

FiniteMarkovOperator::FiniteMarkovOperator(std::vector<double> mu, std::vector<double> kernel)
    : n_(static_cast<int>(mu.size())), mu_(std::move(mu)), kernel_(std::move(kernel)) {
    if (n_ < 1 || kernel_.size() != static_cast<std::size_t>(n_) * n_)
        throw std::invalid_argument("FiniteMarkovOperator: bad dimensions");
    double mass = 0.0;
    for (double m : mu_) {
        if (!(m > 0.0)) throw std::invalid_argument("mu must be strictly positive");
        mass += m;
    }
    if (std::fabs(mass - 1.0) > 1e-12)
        throw std::invalid_argument("mu must sum to one");
    for (int x = 0; x < n_; ++x) {
        double row = 0.0;
        for (int y = 0; y < n_; ++y) {
            const double v = p(x, y);
            if (v < -1e-15) throw std::invalid_argument("kernel entries must be nonnegative");
            row += v;
        }
        if (std::fabs(row - 1.0) > 1e-12)
            throw std::invalid_argument("kernel rows must sum to one");
    }
    for (int x = 0; x < n_; ++x)
        for (int y = x + 1; y < n_; ++y)
            if (std::fabs(mu_[x] * p(x, y) - mu_[y] * p(y, x)) > 1e-12)
                throw std::invalid_argument("kernel is not reversible for mu");
}

double FiniteMarkovOperator::mu_of(const VertexSet& s) const {
    double m = 0.0;
    for (int x = 0; x < n_; ++x)
        if (s.contains(x)) m += mu_[x];
    return m;
}

double j_measure(const FiniteMarkovOperator& op, const VertexSet& a, const VertexSet& b) {
    double sum = 0.0;
    for (int x = 0; x < op.size(); ++x) {
        if (!a.contains(x)) continue;
        double inner = 0.0;
        for (int y = 0; y < op.size(); ++y)
            if (b.contains(y)) inner += op.p(x, y);
        sum += op.mu(x) * inner;
    }
    return sum;
}

FiniteMarkovOperator markov_from_graph(const WeightedGraph& g) {
    const int n = g.size();
    std::vector<double> mu(n), kernel(static_cast<std::size_t>(n) * n, 0.0);
    for (int x = 0; x < n; ++x) {
        mu[x] = g.degree(x) / g.total_volume();
        for (const auto& [y, w] : g.neighbors(x))
            kernel[static_cast<std::size_t>(x) * n + y] = w / g.degree(x);
    }
    return FiniteMarkovOperator(std::move(mu), std::move(kernel));
}

FiniteMarkovOperator metropolis(const WeightedGraph& base, const std::vector<double>& target_mu) {
    const int n = base.size();
    if (static_cast<int>(target_mu.size()) != n)
        throw std::invalid_argument("metropolis: target length mismatch");
    double mass = 0.0;
    for (double m : target_mu) {
        if (!(m > 0.0)) throw std::invalid_argument("metropolis: target must be positive");
        mass += m;
    }
    if (std::fabs(mass - 1.0) > 1e-12)
        throw std::invalid_argument("metropolis: target must sum to one");

    std::vector<double> kernel(static_cast<std::size_t>(n) * n, 0.0);
    for (int x = 0; x < n; ++x) {
        const double qx = 1.0 / static_cast<double>(base.neighbors(x).size());
        double off = 0.0;
        for (const auto& [y, w] : base.neighbors(x)) {
            (void)w;
            const double qy = 1.0 / static_cast<double>(base.neighbors(y).size());
            // mu_x P_xy = min(mu_x q_x, mu_y q_y): symmetric by construction.
            const double flow = std::min(target_mu[x] * qx, target_mu[y] * qy);
            kernel[static_cast<std::size_t>(x) * n + y] = flow / target_mu[x];
            off += flow / target_mu[x];
        }
        kernel[static_cast<std::size_t>(x) * n + x] = std::max(0.0, 1.0 - off);
    }
    return FiniteMarkovOperator(target_mu, std::move(kernel));
}

std::vector<double> random_target(int n, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<double> mu(n);
    double mass = 0.0;
    for (double& m : mu) {
        m = rng.uniform(0.1, 1.0);
        mass += m;
    }
    for (double& m : mu) m /= mass;
    // Renormalize exactly enough for the 1e-12 gate.
    double check = 0.0;
    for (double m : mu) check += m;
    mu[0] += 1.0 - check;
    return mu;
}

namespace {

EnumInstance enum_instance_of(const FiniteMarkovOperator& op) {
    const int n = op.size();
    EnumInstance inst;
    inst.measure = op.mu();
    inst.pairs.resize(n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            if (y == x) continue;
            const double w = op.mu(x) * op.p(x, y);
            if (w != 0.0) inst.pairs[x].emplace_back(y, w);
        }
    return inst;
}

std::vector<double> lambda_bar_spectrum(const FiniteMarkovOperator& op) {
    const int n = op.size();
    std::vector<double> sym(static_cast<std::size_t>(n) * n, 0.0);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            // Average the two algebraically equal forms to keep it symmetric.
            const double a = op.p(x, y) * std::sqrt(op.mu(x) / op.mu(y));
            const double b = op.p(y, x) * std::sqrt(op.mu(y) / op.mu(x));
            sym[static_cast<std::size_t>(x) * n + y] = 0.5 * (a + b);
        }
    auto se = jacobi_eigen(std::move(sym), n);
    std::vector<double> out(n);
    for (int i = 0; i < n; ++i) out[i] = 1.0 + se.values[i];
    return out;
}

}  // namespace

MarkovProfile markov_profiles(const FiniteMarkovOperator& op, int kmax, double budget) {
    const int n = op.size();
    if (kmax < 1 || kmax > n) throw std::domain_error("markov_profiles: kmax out of range");
    const EnumInstance inst = enum_instance_of(op);
    MarkovProfile prof;
    prof.kmax = kmax;
    prof.lambda_bar = lambda_bar_spectrum(op);
    for (int k = 1; k <= kmax; ++k) {
        const auto hopt = best_subpartition_labels(inst, k, budget);
        auto hw = subpartition_from_labels(n, k, hopt.labels);
        double hval = 0.0;
        for (const auto& part : hw.parts)
            hval = std::max(hval, j_measure(op, part, part.complement()) / op.mu_of(part));
        prof.h.push_back(hval);
        prof.h_witness.push_back(std::move(hw));

        const auto bopt = best_pair_labels(inst, k, /*star=*/false, budget);
        auto bw = sub_bipartition_from_labels(n, k, bopt.labels);
        double bval = std::numeric_limits<double>::infinity();
        for (const auto& [odd, even] : bw.pairs)
            bval = std::min(bval, 2.0 * j_measure(op, odd, even) / op.mu_of(odd | even));
        prof.hbar.push_back(bval);
        prof.hbar_witness.push_back(std::move(bw));
    }
    return prof;
}

MarkovHciReport check_markov_hci(const FiniteMarkovOperator& op, int kmax, double budget) {
    const auto prof = markov_profiles(op, kmax, budget);
    MarkovHciReport rep;
    for (int k = 1; k <= kmax; ++k) {
        MarkovCheck c;
        c.k = k;
        c.lambda_bar = prof.lambda_bar[k - 1];
        c.hbar = prof.hbar[k - 1];
        c.upper_rhs = 2.0 * (1.0 - c.hbar);
        c.upper_pass = c.lambda_bar <= c.upper_rhs + 1e-9;
        const double gap = 1.0 - c.hbar;
        const double denom = k == 1 ? 2.0 : 2.0 * certificate_bound_factor(k);
        c.lower_bound = gap * gap / denom;
        c.lower_slack = c.lambda_bar - c.lower_bound;
        rep.all_upper_pass &= c.upper_pass;
        rep.checks.push_back(c);
    }
    return rep;
}

}  // namespace cheeger
