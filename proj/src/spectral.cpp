#include "cheeger/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace cheeger {

namespace {

double offdiag_norm(const std::vector<double>& a, int n) {
    double s = 0.0;
    for (int p = 0; p < n; ++p)
        for (int q = p + 1; q < n; ++q) s += 2.0 * a[p * n + q] * a[p * n + q];
    return std::sqrt(s);
}

}  // namespace

SymmetricEigen jacobi_eigen(std::vector<double> a, int n, double tol) {
    if (n < 1 || static_cast<int>(a.size()) != n * n)
        throw std::invalid_argument("jacobi_eigen: bad matrix size");
    std::vector<double> v(n * n, 0.0);
    for (int i = 0; i < n; ++i) v[i * n + i] = 1.0;

    const int max_sweeps = 64;
    int sweep = 0;
    while (offdiag_norm(a, n) > tol) {
        if (++sweep > max_sweeps)
            throw std::runtime_error("jacobi_eigen: no convergence");
        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double apq = a[p * n + q];
                if (apq == 0.0) continue;
                const double theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                                 (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (int i = 0; i < n; ++i) {
                    const double aip = a[i * n + p];
                    const double aiq = a[i * n + q];
                    a[i * n + p] = c * aip - s * aiq;
                    a[i * n + q] = s * aip + c * aiq;
                }
                for (int i = 0; i < n; ++i) {
                    const double api = a[p * n + i];
                    const double aqi = a[q * n + i];
                    a[p * n + i] = c * api - s * aqi;
                    a[q * n + i] = s * api + c * aqi;
                }
                for (int i = 0; i < n; ++i) {
                    const double vip = v[i * n + p];
                    const double viq = v[i * n + q];
                    v[i * n + p] = c * vip - s * viq;
                    v[i * n + q] = s * vip + c * viq;
                }
            }
        }
    }

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int i, int j) { return a[i * n + i] < a[j * n + j]; });
    SymmetricEigen out;
    out.values.resize(n);
    out.vectors.assign(n, std::vector<double>(n));
    for (int k = 0; k < n; ++k) {
        out.values[k] = a[order[k] * n + order[k]];
        for (int i = 0; i < n; ++i) out.vectors[k][i] = v[i * n + order[k]];
    }
    return out;
}

EigenSystem eigensystem(const WeightedGraph& g, double tol) {
    const int n = g.size();
    std::vector<double> m(n * n, 0.0);
    for (int i = 0; i < n; ++i) m[i * n + i] = 1.0;
    for (const Edge& e : g.edges()) {
        const double x = e.w / std::sqrt(g.degree(e.u) * g.degree(e.v));
        m[e.u * n + e.v] -= x;
        m[e.v * n + e.u] -= x;
    }
    SymmetricEigen se = jacobi_eigen(std::move(m), n, tol);
    EigenSystem es;
    es.values = std::move(se.values);
    es.functions.assign(n, std::vector<double>(n));
    for (int k = 0; k < n; ++k)
        for (int u = 0; u < n; ++u)
            es.functions[k][u] = se.vectors[k][u] / std::sqrt(g.degree(u));
    return es;
}

namespace {

double quotient(const WeightedGraph& g, const std::vector<std::vector<double>>& columns,
                bool dual) {
    const int n = g.size();
    double den = 0.0;
    for (const auto& col : columns) {
        if (static_cast<int>(col.size()) != n)
            throw std::invalid_argument("column length does not match the graph");
        for (int u = 0; u < n; ++u) den += g.degree(u) * col[u] * col[u];
    }
    if (den == 0.0) throw std::domain_error("Rayleigh quotient of an identically zero map");
    double num = 0.0;
    for (const Edge& e : g.edges()) {
        double s = 0.0;
        for (const auto& col : columns) {
            const double d = dual ? col[e.u] + col[e.v] : col[e.u] - col[e.v];
            s += d * d;
        }
        num += s * e.w;
    }
    return num / den;
}

}  // namespace

double rayleigh(const WeightedGraph& g, const std::vector<std::vector<double>>& columns) {
    return quotient(g, columns, false);
}
double rayleigh(const WeightedGraph& g, const std::vector<double>& f) {
    return quotient(g, {f}, false);
}
double rayleigh(const WeightedGraph& g, const EmbeddingMap& F) {
    return quotient(g, F.columns, false);
}

double dual_rayleigh(const WeightedGraph& g, const std::vector<std::vector<double>>& columns) {
    return quotient(g, columns, true);
}
double dual_rayleigh(const WeightedGraph& g, const std::vector<double>& f) {
    return quotient(g, {f}, true);
}
double dual_rayleigh(const WeightedGraph& g, const EmbeddingMap& F) {
    return quotient(g, F.columns, true);
}

EmbeddingMap top_embedding(const EigenSystem& es, int k) {
    const int n = static_cast<int>(es.values.size());
    if (k < 1 || k > n) throw std::domain_error("top_embedding: k out of range");
    EmbeddingMap F;
    F.k = k;
    F.columns.assign(es.functions.end() - k, es.functions.end());
    return F;
}

VertexSet support(int n, const std::vector<std::vector<double>>& columns) {
    VertexSet s(n);
    for (int u = 0; u < n; ++u)
        for (const auto& col : columns)
            if (col[u] != 0.0) {
                s.insert(u);
                break;
            }
    return s;
}

}  // namespace cheeger
