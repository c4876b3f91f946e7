#include "abc/charpoly.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "abc/errors.hpp"
#include "abc/weights.hpp"

namespace abc {

double charpoly_eval(const SymMatrix& m, double lambda) {
    const int n = m.order();
    if (n == 0) return 1.0;
    std::vector<double> a(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            a[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) +
              static_cast<std::size_t>(j)] = (i == j ? lambda : 0.0) - m(i, j);

    auto at = [&](int i, int j) -> double& {
        return a[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) +
                 static_cast<std::size_t>(j)];
    };

    double det = 1.0;
    for (int col = 0; col < n; ++col) {
        int pivot = col;
        for (int r = col + 1; r < n; ++r)
            if (std::abs(at(r, col)) > std::abs(at(pivot, col))) pivot = r;
        if (at(pivot, col) == 0.0) return 0.0;
        if (pivot != col) {
            for (int j = col; j < n; ++j) std::swap(at(pivot, j), at(col, j));
            det = -det;
        }
        det *= at(col, col);
        for (int r = col + 1; r < n; ++r) {
            double f = at(r, col) / at(col, col);
            if (f == 0.0) continue;
            for (int j = col; j < n; ++j) at(r, j) -= f * at(col, j);
        }
    }
    return det;
}

std::vector<double> lambda_samples(std::uint64_t seed) {
    std::vector<double> out{-3.0, -2.0, -1.0, -0.5, 0.0, 0.5, 1.0, 2.0, 3.0};
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> dist(-4.0, 4.0);
    for (int i = 0; i < 16; ++i) out.push_back(dist(rng));
    return out;
}

namespace {

std::vector<int> iota_range(int from, int count) {
    std::vector<int> v(static_cast<std::size_t>(count));
    std::iota(v.begin(), v.end(), from);
    return v;
}

}  // namespace

Graph join_graphs(const Graph& g, int u, const Graph& h, int v) {
    if (u < 0 || u >= g.order()) throw contract_error("join_graphs: u outside G");
    if (v < 0 || v >= h.order()) throw contract_error("join_graphs: v outside H");
    Graph joined = g.disjoint_union(h);
    joined.add_edge(u, g.order() + v);
    return joined;
}

double verify_union_identity(const Graph& g, const Graph& h, std::span<const double> lambdas) {
    const Graph u = g.disjoint_union(h);
    const SymMatrix m = detail::abc_matrix_lenient(u);
    const SymMatrix mg = m.submatrix(iota_range(0, g.order()));
    const SymMatrix mh = m.submatrix(iota_range(g.order(), h.order()));

    double worst = 0.0;
    for (double lam : lambdas) {
        double whole = charpoly_eval(m, lam);
        double pg = charpoly_eval(mg, lam);
        double ph = charpoly_eval(mh, lam);
        double scale = std::max({1.0, std::abs(whole), std::abs(pg * ph)});
        worst = std::max(worst, std::abs(whole - pg * ph) / scale);
    }
    return worst;
}

double verify_join_identity(const Graph& g, int u, const Graph& h, int v,
                            std::span<const double> lambdas) {
    const Graph joined = join_graphs(g, u, h, v);
    const SymMatrix m = detail::abc_matrix_lenient(joined);

    const int gn = g.order(), hn = h.order();
    const SymMatrix mg = m.submatrix(iota_range(0, gn));
    const SymMatrix mh = m.submatrix(iota_range(gn, hn));

    std::vector<int> g_minus_u;
    for (int i = 0; i < gn; ++i)
        if (i != u) g_minus_u.push_back(i);
    std::vector<int> h_minus_v;
    for (int i = 0; i < hn; ++i)
        if (i != v) h_minus_v.push_back(gn + i);
    const SymMatrix mgu = m.submatrix(g_minus_u);
    const SymMatrix mhv = m.submatrix(h_minus_v);

    const double f2 = [&] {
        double f = edge_weight(joined.degree(u), joined.degree(gn + v));
        return f * f;
    }();

    double worst = 0.0;
    for (double lam : lambdas) {
        double whole = charpoly_eval(m, lam);
        double t1 = charpoly_eval(mg, lam) * charpoly_eval(mh, lam);
        double t2 = f2 * charpoly_eval(mgu, lam) * charpoly_eval(mhv, lam);
        double scale = std::max({1.0, std::abs(whole), std::abs(t1), std::abs(t2)});
        worst = std::max(worst, std::abs(whole - (t1 - t2)) / scale);
    }
    return worst;
}

}  // namespace abc
