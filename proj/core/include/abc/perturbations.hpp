#pragma once

#include <span>
#include <vector>

#include "abc/graph.hpp"

namespace abc {

/// G_{k,l}: two pendant paths of k and l vertices attached at v0.
/// Labels: base keeps 0..b-1; path vertex v_i -> b+i-1 (i = 1..k);
/// v_{-j} -> b+k+j-1 (j = 1..l). Base must be nontrivial (order >= 2).
Graph attach_paths(const Graph& base, int v0, int k, int l);

/// Label of v_i in attach_paths output; i > 0 addresses the k-path,
/// i < 0 the l-path.
int attached_path_vertex(int base_order, int k, int i);

/// G^1_{k,l}: star centers u (k leaves) and v (l leaves) joined to w.
/// Labels: u -> b, u-leaves b+1..b+k, v -> b+k+1, v-leaves b+k+2..b+k+l+1.
Graph attach_stars(const Graph& base, int w, int k, int l);

/// rho(G^1_{k+1,l-1}) - rho(G^1_{k,l}); requires k >= l >= 1.
double check_star_shift(const Graph& base, int w, int k, int l);

/// Signed margins with the theorem-predicted positive orientation:
///   variant 1 (k >= l >= 3):  rho(G_{k,l})     - rho(G_{k+1,l-1})
///   variant 2 (k >= l >= 2):  rho(G_{k+l-1,1}) - rho(G_{k,l})
///   variant 3 (k >= 1, l = 1, every base neighbor of v0 of degree <= 2):
///                             rho(G_{k,1})     - rho(G_{k+1,0})
double check_path_shift(const Graph& base, int v0, int k, int l, int variant);

/// Perron components along a pendant path v0..vk against the closed forms
/// x_i = x_0 (k+1-i)/(k+1) at rho = sqrt(2), else
/// x_i = x_0 gamma^i (gamma^{2k+2-2i}-1)/(gamma^{2k+2}-1)
/// with gamma = (rho + sqrt(rho^2-2))/sqrt(2).
struct PendantPathProfile {
    double rho = 0.0;
    double gamma = 1.0;
    int k = 0;
    bool sqrt2_branch = false;
    std::vector<double> predicted;  // x_0..x_k, anchored at observed x_0
    std::vector<double> observed;
    double max_deviation = 0.0;
    bool decay_bound_ok = false;  // x_i < x_0 / gamma^i strictly, i = 1..k
};

PendantPathProfile pendant_path_profile(const Graph& g, std::span<const int> path);

/// All pendant paths v0..vk of g with d(v0) >= 3 and k >= min_length.
std::vector<std::vector<int>> pendant_paths(const Graph& g, int min_length = 2);

/// Observed spectral radii for all G_{k,l} with k+l = total, ordered along
/// the conjectured chain (k+l-1,1), (ceil,floor), ..., (k+l-2,2), (k+l,0).
struct ChainEntry {
    int k = 0, l = 0;
    double rho = 0.0;
};
std::vector<ChainEntry> explore_gkl_chain(const Graph& base, int v0, int total);

}  // namespace abc
