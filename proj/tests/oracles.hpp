#pragma once

// Independent oracles for the enumeration and spectra tests. Everything here
// recomputes results by brute force, by construction different from the
// library's generation paths.

#include <cstdint>
#include <vector>

#include "abc/graph.hpp"
#include "abc/sym_matrix.hpp"

namespace oracle {

/// All n^(n-2) labeled trees via Prüfer decoding (n <= 8).
std::vector<abc::Graph> prufer_labeled_trees(int n);

/// Count of isomorphism classes among all labeled trees on n vertices,
/// deduplicated by a packed AHU code over the full Prüfer range (n <= 11).
std::uint64_t prufer_free_tree_count(int n, unsigned threads);

/// Count of connected-graph isomorphism classes on n vertices from the
/// exhaustive 2^C(n,2) labeled sweep with canonical-form dedup (n <= 7).
std::uint64_t labeled_connected_graph_count(int n);

/// Same count, deduplicated by minimum adjacency code over all n!
/// permutations; independent of the library's canonical forms (n <= 6).
std::uint64_t labeled_connected_graph_count_bruteforce(int n);

/// Free-tree count by min-over-permutations dedup of Prüfer trees (n <= 7).
std::uint64_t prufer_free_tree_count_bruteforce(int n);

/// Dominant eigenvalue by power iteration with deflation-free restarts;
/// independent check of the Jacobi path for nonnegative matrices.
double power_iteration_radius(const abc::SymMatrix& m, int max_iters = 20000,
                              double tol = 1e-12);

/// Determinant by cofactor expansion (n <= 9); checks charpoly_eval.
double naive_det(const abc::SymMatrix& m);

}  // namespace oracle
