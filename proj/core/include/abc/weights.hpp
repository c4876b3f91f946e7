#pragma once

#include "abc/graph.hpp"
#include "abc/sym_matrix.hpp"

namespace abc {

/// f(x,y) = sqrt((x+y-2)/(x*y)) for degrees of adjacent vertices.
double edge_weight(int di, int dj);

/// M(G): entry (i,j) = f(d_i,d_j) on edges, 0 elsewhere.
/// Domain error naming the vertex if some degree is 0.
SymMatrix abc_matrix(const Graph& g);

/// ABC(G) = sum of f(d_i,d_j) over edges.
double abc_index(const Graph& g);

/// R_{-1}(G) = sum of 1/(d_i*d_j) over edges.
double r_minus_one(const Graph& g);

namespace detail {
SymMatrix abc_matrix_lenient(const Graph& g);
}

}  // namespace abc
