#pragma once

#include <vector>

#include "abc/graph.hpp"
#include "abc/sym_matrix.hpp"

namespace abc {

/// Spectral radius with Perron vector and convergence metadata.
struct SpectralResult {
    double rho = 0.0;
    std::vector<double> perron;  // unit Euclidean norm
    double residual = 0.0;       // ||Mx - rho x||
    int sweeps = 0;
    /// Set when the matrix is all-zero or reducible as a weighted matrix;
    /// the Perron positivity guarantee does not apply then.
    bool degenerate = false;
};

struct EigenSystem {
    std::vector<double> values;                // descending
    std::vector<std::vector<double>> vectors;  // vectors[i] pairs with values[i]
    int sweeps = 0;
};

/// Cyclic Jacobi on the full dense matrix. Converges when the off-diagonal
/// Frobenius mass falls below 1e-12 * ||m||; numeric error with the achieved
/// residual after too many sweeps. Contract error on asymmetric input.
EigenSystem eigen_system(const SymMatrix& m);

/// Eigenvalues only, in descending order.
std::vector<double> eigen_spectrum(const SymMatrix& m);

double spectral_radius(const SymMatrix& m);
SpectralResult perron_result(const SymMatrix& m);

/// Conveniences over M(G).
double spectral_radius(const Graph& g);
SpectralResult perron_result(const Graph& g);

}  // namespace abc
