#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "abc/graph.hpp"
#include "abc/sym_matrix.hpp"

namespace abc {

/// det(lambda*I - m) by elimination with partial pivoting.
/// The order-0 matrix gives P(empty, lambda) = 1.
double charpoly_eval(const SymMatrix& m, double lambda);

/// Default sample set for polynomial identity checks: a fixed grid plus 16
/// uniform draws in [-4,4] from a seeded generator (25 points total).
std::vector<double> lambda_samples(std::uint64_t seed = 0x5eed);

/// Lemma-2.1-style check on M(G u H): max over samples of the defect of
/// P(M) = P(M_G) P(M_H). The defect at each sample is normalized by the
/// magnitude of the factors so it stays comparable across orders.
double verify_union_identity(const Graph& g, const Graph& h, std::span<const double> lambdas);

/// Lemma-2.2-style check on M(G(u,v)H):
/// P(M) = P(M_G) P(M_H) - f^2(d(u),d(v)) P(M_{G-u}) P(M_{H-v}),
/// all factors taken as submatrices of M with joined-graph degrees.
double verify_join_identity(const Graph& g, int u, const Graph& h, int v,
                            std::span<const double> lambdas);

/// The graph G(u,v)H: disjoint union plus the edge u-(v shifted).
Graph join_graphs(const Graph& g, int u, const Graph& h, int v);

}  // namespace abc
