#include "abc/weights.hpp"

#include <cmath>
#include <string>

#include "abc/errors.hpp"

namespace abc {

double edge_weight(int di, int dj) {
    if (di < 1 || dj < 1)
        throw domain_error("edge_weight: degrees must be >= 1, got (" + std::to_string(di) +
                           ", " + std::to_string(dj) + ")");
    return std::sqrt(static_cast<double>(di + dj - 2) /
                     (static_cast<double>(di) * static_cast<double>(dj)));
}

namespace {

// K_1 is admitted with M(K_1) = (0); beyond that an isolated vertex is a
// domain error because the weight function has no value at degree 0.
void require_no_isolated(const Graph& g, const char* who) {
    if (g.order() <= 1) return;
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) == 0)
            throw domain_error(std::string(who) + ": isolated vertex " + std::to_string(v));
}

}  // namespace

namespace detail {

// Isolated vertices get zero rows; used by the charpoly identity checks
// where K_1 operands are legitimate.
SymMatrix abc_matrix_lenient(const Graph& g) {
    SymMatrix m(g.order());
    for (auto [u, v] : g.edges()) m.set(u, v, edge_weight(g.degree(u), g.degree(v)));
    return m;
}

}  // namespace detail

SymMatrix abc_matrix(const Graph& g) {
    require_no_isolated(g, "abc_matrix");
    return detail::abc_matrix_lenient(g);
}

double abc_index(const Graph& g) {
    require_no_isolated(g, "abc_index");
    double s = 0.0;
    for (auto [u, v] : g.edges()) s += edge_weight(g.degree(u), g.degree(v));
    return s;
}

double r_minus_one(const Graph& g) {
    require_no_isolated(g, "r_minus_one");
    double s = 0.0;
    for (auto [u, v] : g.edges())
        s += 1.0 / (static_cast<double>(g.degree(u)) * static_cast<double>(g.degree(v)));
    return s;
}

}  // namespace abc
