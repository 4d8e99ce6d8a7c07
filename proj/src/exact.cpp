#include "cheeger/exact.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>
#include <utility>
#include <vector>

#include "cheeger/errors.hpp"

namespace cheeger {

namespace {

double factorial(int k) {
    double f = 1.0;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
}

// Exact rollback of incremental sums: restore stored values instead of
// subtracting, so floating-point state cannot drift across the search.
class UndoLog {
public:
    std::size_t mark() const { return log_.size(); }
    void touch(double* slot) { log_.emplace_back(slot, *slot); }
    void rollback(std::size_t mark) {
        while (log_.size() > mark) {
            *log_.back().first = log_.back().second;
            log_.pop_back();
        }
    }

private:
    std::vector<std::pair<double*, double>> log_;
};

struct Candidate {
    bool found = false;
    double value = 0.0;
    std::vector<int> labels;
};

// Canonical k-subpartition labelings: vertex labels in {0,..,k}, the first
// use of label j+1 comes after the first use of label j.
class SubpartitionSearch {
public:
    SubpartitionSearch(const EnumInstance& inst, int k) : inst_(inst), k_(k), n_(inst.size()) {
        labels_.assign(n_, 0);
        vol_.assign(k + 1, 0.0);
        cut_.assign(k + 1, 0.0);
    }

    // Enumerates canonical label prefixes of the first `depth` vertices.
    std::vector<std::vector<int>> prefixes(int depth) {
        prefix_depth_ = depth;
        collected_.clear();
        walk(0, 0, /*collect=*/true);
        return std::move(collected_);
    }

    Candidate run(const std::vector<int>& prefix) {
        int used = 0;
        const std::size_t m = undo_.mark();
        for (int v = 0; v < static_cast<int>(prefix.size()); ++v) {
            apply(v, prefix[v]);
            used = std::max(used, prefix[v]);
        }
        best_ = Candidate{};
        walk(static_cast<int>(prefix.size()), used, /*collect=*/false);
        undo_.rollback(m);
        for (int v = 0; v < static_cast<int>(prefix.size()); ++v) labels_[v] = 0;
        return std::move(best_);
    }

private:
    void apply(int v, int lab) {
        labels_[v] = lab;
        if (lab > 0) {
            undo_.touch(&vol_[lab]);
            vol_[lab] += inst_.measure[v];
        }
        for (const auto& [u, w] : inst_.pairs[v]) {
            if (u >= v) continue;
            const int lu = labels_[u];
            if (lab == 0) {
                if (lu > 0) {
                    undo_.touch(&cut_[lu]);
                    cut_[lu] += w;
                }
            } else if (lu == 0) {
                undo_.touch(&cut_[lab]);
                cut_[lab] += w;
            } else if (lu != lab) {
                undo_.touch(&cut_[lab]);
                cut_[lab] += w;
                undo_.touch(&cut_[lu]);
                cut_[lu] += w;
            }
        }
    }

    void walk(int v, int used, bool collect) {
        if (k_ - used > n_ - v) return;  // not enough vertices left to start all parts
        if (collect && v == prefix_depth_) {
            collected_.emplace_back(labels_.begin(), labels_.begin() + v);
            return;
        }
        if (v == n_) {
            double worst = 0.0;
            for (int i = 1; i <= k_; ++i) worst = std::max(worst, cut_[i] / vol_[i]);
            if (!best_.found || worst < best_.value) {
                best_.found = true;
                best_.value = worst;
                best_.labels = labels_;
            }
            return;
        }
        const int top = std::min(k_, used + 1);
        for (int lab = 0; lab <= top; ++lab) {
            const std::size_t m = undo_.mark();
            apply(v, lab);
            walk(v + 1, std::max(used, lab), collect);
            undo_.rollback(m);
            labels_[v] = 0;
        }
    }

    const EnumInstance& inst_;
    int k_;
    int n_;
    int prefix_depth_ = 0;
    std::vector<int> labels_;
    std::vector<double> vol_;
    std::vector<double> cut_;
    UndoLog undo_;
    Candidate best_;
    std::vector<std::vector<int>> collected_;
};

// Canonical Pair(k) labelings: vertex labels in {0,..,2k}; pair i owns labels
// 2i-1 (odd side) and 2i; a pair is started by its odd label, pairs start in
// vertex order. Quotients the k! pair permutations and 2^k side swaps.
class PairSearch {
public:
    PairSearch(const EnumInstance& inst, int k, bool star)
        : inst_(inst), k_(k), star_(star), n_(inst.size()) {
        labels_.assign(n_, 0);
        vol_.assign(k + 1, 0.0);
        cross_.assign(k + 1, 0.0);
        residual_.assign(k + 1, 0.0);
    }

    std::vector<std::vector<int>> prefixes(int depth) {
        prefix_depth_ = depth;
        collected_.clear();
        walk(0, 0, /*collect=*/true);
        return std::move(collected_);
    }

    Candidate run(const std::vector<int>& prefix) {
        int started = 0;
        const std::size_t m = undo_.mark();
        for (int v = 0; v < static_cast<int>(prefix.size()); ++v) {
            apply(v, prefix[v]);
            started = std::max(started, (prefix[v] + 1) / 2);
        }
        best_ = Candidate{};
        walk(static_cast<int>(prefix.size()), started, /*collect=*/false);
        undo_.rollback(m);
        for (int v = 0; v < static_cast<int>(prefix.size()); ++v) labels_[v] = 0;
        return std::move(best_);
    }

private:
    static int pair_of(int lab) { return (lab + 1) / 2; }
    static int partner(int lab) { return (lab % 2 == 1) ? lab + 1 : lab - 1; }

    void apply(int v, int lab) {
        labels_[v] = lab;
        if (lab > 0) {
            undo_.touch(&vol_[pair_of(lab)]);
            vol_[pair_of(lab)] += inst_.measure[v];
        }
        for (const auto& [u, w] : inst_.pairs[v]) {
            if (u >= v) continue;
            const int lu = labels_[u];
            if (lab == 0) {
                if (lu > 0) {
                    undo_.touch(&residual_[pair_of(lu)]);
                    residual_[pair_of(lu)] += w;
                }
            } else if (lu == 0) {
                undo_.touch(&residual_[pair_of(lab)]);
                residual_[pair_of(lab)] += w;
            } else if (lu == partner(lab)) {
                undo_.touch(&cross_[pair_of(lab)]);
                cross_[pair_of(lab)] += w;
            }
            // same label or a different pair: no numerator contribution
        }
    }

    void walk(int v, int started, bool collect) {
        if (k_ - started > n_ - v) return;
        if (collect && v == prefix_depth_) {
            collected_.emplace_back(labels_.begin(), labels_.begin() + v);
            return;
        }
        if (v == n_) {
            double worst = std::numeric_limits<double>::infinity();
            for (int i = 1; i <= k_; ++i) {
                const double num = 2.0 * cross_[i] + (star_ ? 0.5 * residual_[i] : 0.0);
                worst = std::min(worst, num / vol_[i]);
            }
            if (!best_.found || worst > best_.value) {
                best_.found = true;
                best_.value = worst;
                best_.labels = labels_;
            }
            return;
        }
        const int top = started < k_ ? 2 * started + 1 : 2 * started;
        for (int lab = 0; lab <= top; ++lab) {
            const std::size_t m = undo_.mark();
            apply(v, lab);
            walk(v + 1, std::max(started, pair_of(lab)), collect);
            undo_.rollback(m);
            labels_[v] = 0;
        }
    }

    const EnumInstance& inst_;
    int k_;
    bool star_;
    int n_;
    int prefix_depth_ = 0;
    std::vector<int> labels_;
    std::vector<double> vol_;
    std::vector<double> cross_;
    std::vector<double> residual_;
    UndoLog undo_;
    Candidate best_;
    std::vector<std::vector<int>> collected_;
};

// Static split over canonical prefixes; each worker owns a private search.
// The reduction prefers strictly better values, then the lower prefix index,
// which reproduces the sequential first-found tie-break.
template <class MakeSearch>
Candidate parallel_best(MakeSearch make, int n, bool maximize, double estimate) {
    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    int depth = 0;
    std::vector<std::vector<int>> prefixes{{}};
    if (estimate > 2e5 && hw > 1) {
        auto probe = make();
        while (depth < n && prefixes.size() < 4 * hw) {
            ++depth;
            prefixes = probe.prefixes(depth);
        }
    }
    std::vector<Candidate> results(prefixes.size());
    if (prefixes.size() == 1) {
        auto search = make();
        results[0] = search.run(prefixes[0]);
    } else {
        const unsigned workers = std::min<std::size_t>(hw, prefixes.size());
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < workers; ++t)
            pool.emplace_back([&, t] {
                auto search = make();
                for (std::size_t i = t; i < prefixes.size(); i += workers)
                    results[i] = search.run(prefixes[i]);
            });
        for (auto& th : pool) th.join();
    }
    Candidate best;
    for (const Candidate& c : results) {
        if (!c.found) continue;
        if (!best.found || (maximize ? c.value > best.value : c.value < best.value)) best = c;
    }
    return best;
}

}  // namespace

EnumInstance enum_instance_of(const WeightedGraph& g) {
    EnumInstance inst;
    inst.measure = g.degrees();
    inst.pairs.resize(g.size());
    for (int v = 0; v < g.size(); ++v) inst.pairs[v] = g.neighbors(v);
    return inst;
}

LabelOptimum best_subpartition_labels(const EnumInstance& inst, int k, double budget) {
    const int n = inst.size();
    if (k < 1 || k > n) throw std::domain_error("subpartition enumeration: k out of range");
    const double estimate = h_enumeration_estimate(n, k);
    if (estimate > budget) throw BudgetError(estimate, budget);
    auto best = parallel_best([&] { return SubpartitionSearch(inst, k); }, n,
                              /*maximize=*/false, estimate);
    return {best.value, std::move(best.labels)};
}

LabelOptimum best_pair_labels(const EnumInstance& inst, int k, bool star, double budget) {
    const int n = inst.size();
    if (k < 1 || k > n) throw std::domain_error("pair enumeration: k out of range");
    const double estimate = hbar_enumeration_estimate(n, k);
    if (estimate > budget) throw BudgetError(estimate, budget);
    auto best = parallel_best([&] { return PairSearch(inst, k, star); }, n,
                              /*maximize=*/true, estimate);
    return {best.value, std::move(best.labels)};
}

Subpartition subpartition_from_labels(int n, int k, const std::vector<int>& labels) {
    Subpartition sp;
    sp.k = k;
    sp.parts.assign(k, VertexSet(n));
    for (int v = 0; v < n; ++v)
        if (labels[v] > 0) sp.parts[labels[v] - 1].insert(v);
    return sp;
}

SubBipartition sub_bipartition_from_labels(int n, int k, const std::vector<int>& labels) {
    std::vector<std::pair<VertexSet, VertexSet>> pairs(k, {VertexSet(n), VertexSet(n)});
    for (int v = 0; v < n; ++v) {
        const int lab = labels[v];
        if (lab == 0) continue;
        auto& pr = pairs[(lab + 1) / 2 - 1];
        (lab % 2 == 1 ? pr.first : pr.second).insert(v);
    }
    return make_sub_bipartition(n, std::move(pairs));
}

double h_enumeration_estimate(int n, int k) {
    return std::pow(static_cast<double>(k + 1), n) / factorial(k);
}

double hbar_enumeration_estimate(int n, int k) {
    return std::pow(static_cast<double>(2 * k + 1), n) / (factorial(k) * std::pow(2.0, k));
}

HResult h_exact(const WeightedGraph& g, int k, double budget) {
    const int n = g.size();
    const auto best = best_subpartition_labels(enum_instance_of(g), k, budget);
    HResult out{0.0, subpartition_from_labels(n, k, best.labels)};
    // Re-evaluate through the public functionals so the returned value is
    // exactly what the witness evaluates to.
    for (const auto& part : out.witness.parts)
        out.value = std::max(out.value, expansion(g, part));
    return out;
}

namespace {

HbarResult pair_optimum(const WeightedGraph& g, int k, double budget, bool star) {
    const int n = g.size();
    const auto best = best_pair_labels(enum_instance_of(g), k, star, budget);
    HbarResult out{std::numeric_limits<double>::infinity(),
                   sub_bipartition_from_labels(n, k, best.labels)};
    for (const auto& [odd, even] : out.witness.pairs) {
        const VertexSet both = odd | even;
        double num = 2.0 * boundary_measure(g, odd, even);
        if (star) num += 0.5 * boundary_measure(g, both, out.witness.residual);
        out.value = std::min(out.value, num / volume(g, both));
    }
    return out;
}

}  // namespace

HbarResult hbar_exact(const WeightedGraph& g, int k, double budget) {
    return pair_optimum(g, k, budget, /*star=*/false);
}

HbarResult hbar_star_exact(const WeightedGraph& g, int k, double budget) {
    return pair_optimum(g, k, budget, /*star=*/true);
}

CheegerProfile h_profile(const WeightedGraph& g, int kmax, double budget) {
    CheegerProfile prof;
    prof.kmax = kmax;
    for (int k = 1; k <= kmax; ++k) prof.per_k.push_back(h_exact(g, k, budget));
    return prof;
}

DualCheegerProfile hbar_profile(const WeightedGraph& g, int kmax, bool with_star, double budget) {
    DualCheegerProfile prof;
    prof.kmax = kmax;
    prof.with_star = with_star;
    for (int k = 1; k <= kmax; ++k) {
        prof.hbar.push_back(hbar_exact(g, k, budget));
        if (with_star) prof.hbar_star.push_back(hbar_star_exact(g, k, budget));
    }
    return prof;
}

BipartiteWitnessReport check_bipartite_witness(const WeightedGraph& g, const HResult& h,
                                               const HbarResult& hbar) {
    BipartiteWitnessReport rep;
    rep.applicable = std::fabs(h.value + hbar.value - 1.0) <= 1e-12;
    if (!rep.applicable) return rep;
    double max_phi = -1.0;
    for (int i = 0; i < hbar.witness.k; ++i) {
        const auto& [odd, even] = hbar.witness.pairs[i];
        const double phi = expansion(g, odd | even);
        if (phi > max_phi) {
            max_phi = phi;
            rep.pair_index = i;
        }
    }
    const auto& [odd, even] = hbar.witness.pairs[rep.pair_index];
    rep.internal_odd = boundary_measure(g, odd, odd);
    rep.internal_even = boundary_measure(g, even, even);
    rep.pass = rep.internal_odd == 0.0 && rep.internal_even == 0.0;
    return rep;
}

}  // namespace cheeger
