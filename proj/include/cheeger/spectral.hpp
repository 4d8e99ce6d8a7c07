#pragma once

#include <vector>

#include "cheeger/graph.hpp"

namespace cheeger {

// Ascending spectrum of the normalized Laplacian with mu-orthonormal
// eigenfunctions f_k: V -> R, where mu(u) = d_u.
struct EigenSystem {
    std::vector<double> values;                  // lambda_1 <= ... <= lambda_N
    std::vector<std::vector<double>> functions;  // functions[k][u]
};

// Map F: V -> R^k assembled from k functions (the columns).
struct EmbeddingMap {
    int k = 0;
    std::vector<std::vector<double>> columns;  // columns[j][u]

    std::vector<double> at(int u) const {
        std::vector<double> x(k);
        for (int j = 0; j < k; ++j) x[j] = columns[j][u];
        return x;
    }
};

// Cyclic Jacobi on dense symmetric matrices. Rotates until the off-diagonal
// Frobenius norm drops below tol. Returns ascending eigenvalues and the
// matching orthonormal eigenvectors as columns (vectors[k][i]).
struct SymmetricEigen {
    std::vector<double> values;
    std::vector<std::vector<double>> vectors;
};
SymmetricEigen jacobi_eigen(std::vector<double> matrix, int n, double tol = 1e-12);

// Spectrum of Delta = I - D^{-1}A, computed on the symmetric normalization
// I - D^{-1/2} A D^{-1/2} and mapped back by f = D^{-1/2} phi.
EigenSystem eigensystem(const WeightedGraph& g, double tol = 1e-12);

// R(F): edge-difference energy over mu-mass. Throws on identically zero maps.
double rayleigh(const WeightedGraph& g, const std::vector<std::vector<double>>& columns);
double rayleigh(const WeightedGraph& g, const std::vector<double>& f);
double rayleigh(const WeightedGraph& g, const EmbeddingMap& F);

// Dual quotient R-bar(F) with edge sums instead of differences.
// R(F) + R-bar(F) = 2 for every nonzero F.
double dual_rayleigh(const WeightedGraph& g, const std::vector<std::vector<double>>& columns);
double dual_rayleigh(const WeightedGraph& g, const std::vector<double>& f);
double dual_rayleigh(const WeightedGraph& g, const EmbeddingMap& F);

// The top-k map v -> (f_{N-k+1}(v), ..., f_N(v)).
EmbeddingMap top_embedding(const EigenSystem& es, int k);

// Support of a map: vertices where some coordinate is exactly nonzero.
VertexSet support(int n, const std::vector<std::vector<double>>& columns);

}  // namespace cheeger
