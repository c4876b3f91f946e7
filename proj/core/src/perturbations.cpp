#include "abc/perturbations.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "abc/errors.hpp"
#include "abc/spectra.hpp"

namespace abc {

namespace {

constexpr double kSqrt2 = 1.4142135623730951;
constexpr double kSqrt2BranchTol = 1e-9;

void check_anchor(const Graph& base, int v, const char* who) {
    if (v < 0 || v >= base.order())
        throw contract_error(std::string(who) + ": anchor vertex " + std::to_string(v) +
                             " outside base");
}

}  // namespace

Graph attach_paths(const Graph& base, int v0, int k, int l) {
    check_anchor(base, v0, "attach_paths");
    if (base.order() < 2) throw contract_error("attach_paths: base must be nontrivial");
    if (k < 0 || l < 0) throw contract_error("attach_paths: path lengths must be >= 0");
    const int b = base.order();
    Graph g(b + k + l);
    for (auto [x, y] : base.edges()) g.add_edge(x, y);
    if (k > 0) {
        g.add_edge(v0, b);
        for (int i = 1; i < k; ++i) g.add_edge(b + i - 1, b + i);
    }
    if (l > 0) {
        g.add_edge(v0, b + k);
        for (int j = 1; j < l; ++j) g.add_edge(b + k + j - 1, b + k + j);
    }
    return g;
}

int attached_path_vertex(int base_order, int k, int i) {
    if (i > 0) return base_order + i - 1;
    if (i < 0) return base_order + k - i - 1;
    throw contract_error("attached_path_vertex: i must be nonzero");
}

Graph attach_stars(const Graph& base, int w, int k, int l) {
    check_anchor(base, w, "attach_stars");
    if (k < 0 || l < 0) throw contract_error("attach_stars: star sizes must be >= 0");
    const int b = base.order();
    Graph g(b + k + l + 2);
    for (auto [x, y] : base.edges()) g.add_edge(x, y);
    const int u = b, v = b + k + 1;
    g.add_edge(w, u);
    for (int i = 1; i <= k; ++i) g.add_edge(u, b + i);
    g.add_edge(w, v);
    for (int j = 1; j <= l; ++j) g.add_edge(v, b + k + 1 + j);
    return g;
}

double check_star_shift(const Graph& base, int w, int k, int l) {
    if (!(k >= l && l >= 1))
        throw contract_error("check_star_shift: requires k >= l >= 1");
    double before = spectral_radius(attach_stars(base, w, k, l));
    double after = spectral_radius(attach_stars(base, w, k + 1, l - 1));
    return after - before;
}

double check_path_shift(const Graph& base, int v0, int k, int l, int variant) {
    check_anchor(base, v0, "check_path_shift");
    switch (variant) {
        case 1:
            if (!(k >= l && l >= 3))
                throw contract_error("check_path_shift variant 1: requires k >= l >= 3");
            return spectral_radius(attach_paths(base, v0, k, l)) -
                   spectral_radius(attach_paths(base, v0, k + 1, l - 1));
        case 2:
            if (!(k >= l && l >= 2))
                throw contract_error("check_path_shift variant 2: requires k >= l >= 2");
            return spectral_radius(attach_paths(base, v0, k + l - 1, 1)) -
                   spectral_radius(attach_paths(base, v0, k, l));
        case 3: {
            if (k < 1) throw contract_error("check_path_shift variant 3: requires k >= 1");
            if (l != 1)
                throw contract_error(
                    "check_path_shift variant 3 compares G_{k,1} with G_{k+1,0}; call with l = 1");
            for (int nb : base.neighbors(v0))
                if (base.degree(nb) > 2)
                    throw contract_error(
                        "check_path_shift variant 3: all base neighbors of v0 must have degree "
                        "1 or 2 (vertex " +
                        std::to_string(nb) + " has degree " + std::to_string(base.degree(nb)) +
                        ")");
            return spectral_radius(attach_paths(base, v0, k, 1)) -
                   spectral_radius(attach_paths(base, v0, k + 1, 0));
        }
        default:
            throw contract_error("check_path_shift: variant must be 1, 2, or 3");
    }
}

PendantPathProfile pendant_path_profile(const Graph& g, std::span<const int> path) {
    if (path.size() < 3)
        throw contract_error("pendant_path_profile: need k >= 2 (at least 3 path vertices)");
    for (std::size_t i = 0; i + 1 < path.size(); ++i)
        if (!g.has_edge(path[i], path[i + 1]))
            throw contract_error("pendant_path_profile: path vertices not consecutive");
    const int k = static_cast<int>(path.size()) - 1;
    if (g.degree(path[0]) < 3)
        throw contract_error("pendant_path_profile: d(v0) must be >= 3");
    for (int i = 1; i < k; ++i)
        if (g.degree(path[static_cast<std::size_t>(i)]) != 2)
            throw contract_error("pendant_path_profile: internal path degrees must be 2");
    if (g.degree(path[static_cast<std::size_t>(k)]) != 1)
        throw contract_error("pendant_path_profile: path end must be a pendant vertex");
    if (!g.is_connected()) throw contract_error("pendant_path_profile: graph must be connected");

    PendantPathProfile out;
    out.k = k;
    SpectralResult pr = perron_result(g);
    out.rho = pr.rho;

    out.observed.resize(static_cast<std::size_t>(k) + 1);
    for (int i = 0; i <= k; ++i)
        out.observed[static_cast<std::size_t>(i)] =
            pr.perron[static_cast<std::size_t>(path[static_cast<std::size_t>(i)])];
    const double x0 = out.observed[0];

    out.sqrt2_branch = std::abs(out.rho - kSqrt2) <= kSqrt2BranchTol;
    out.predicted.resize(static_cast<std::size_t>(k) + 1);
    if (out.sqrt2_branch) {
        out.gamma = 1.0;
        for (int i = 0; i <= k; ++i)
            out.predicted[static_cast<std::size_t>(i)] =
                x0 * static_cast<double>(k + 1 - i) / static_cast<double>(k + 1);
    } else {
        const double disc = std::sqrt(std::max(0.0, out.rho * out.rho - 2.0));
        out.gamma = (out.rho + disc) / kSqrt2;
        const double g2k2 = std::pow(out.gamma, 2 * k + 2);
        for (int i = 0; i <= k; ++i)
            out.predicted[static_cast<std::size_t>(i)] =
                x0 * std::pow(out.gamma, i) *
                (std::pow(out.gamma, 2 * k + 2 - 2 * i) - 1.0) / (g2k2 - 1.0);
    }

    out.max_deviation = 0.0;
    for (int i = 0; i <= k; ++i)
        out.max_deviation =
            std::max(out.max_deviation, std::abs(out.predicted[static_cast<std::size_t>(i)] -
                                                 out.observed[static_cast<std::size_t>(i)]));

    out.decay_bound_ok = true;
    for (int i = 1; i <= k; ++i)
        if (!(out.observed[static_cast<std::size_t>(i)] < x0 / std::pow(out.gamma, i)))
            out.decay_bound_ok = false;
    return out;
}

std::vector<std::vector<int>> pendant_paths(const Graph& g, int min_length) {
    std::vector<std::vector<int>> out;
    for (int leaf = 0; leaf < g.order(); ++leaf) {
        if (g.degree(leaf) != 1) continue;
        std::vector<int> rev{leaf};
        int prev = leaf, cur = g.neighbors(leaf).front();
        while (g.degree(cur) == 2) {
            rev.push_back(cur);
            int nxt = g.neighbors(cur).front() == prev ? g.neighbors(cur).back()
                                                       : g.neighbors(cur).front();
            prev = cur;
            cur = nxt;
        }
        if (g.degree(cur) < 3) continue;  // whole graph is a path
        rev.push_back(cur);
        if (static_cast<int>(rev.size()) - 1 < min_length) continue;
        out.emplace_back(rev.rbegin(), rev.rend());
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<ChainEntry> explore_gkl_chain(const Graph& base, int v0, int total) {
    if (total < 2) throw contract_error("explore_gkl_chain: total must be >= 2");
    std::vector<ChainEntry> out;
    auto push = [&](int k, int l) {
        out.push_back({k, l, spectral_radius(attach_paths(base, v0, k, l))});
    };
    push(total - 1, 1);
    for (int l = total / 2; l >= 2; --l) push(total - l, l);
    push(total, 0);
    return out;
}

}  // namespace abc
