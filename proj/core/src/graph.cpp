#include "abc/graph.hpp"

#include <algorithm>
#include <string>

#include "abc/errors.hpp"

namespace abc {

Graph::Graph(int order) {
    if (order < 0) throw parameter_error("graph order must be nonnegative");
    adj_.resize(static_cast<std::size_t>(order));
    degree_.assign(static_cast<std::size_t>(order), 0);
}

Graph::Graph(int order, std::span<const std::pair<int, int>> edges) : Graph(order) {
    for (auto [u, v] : edges) add_edge(u, v);
}

Graph::Graph(int order, std::initializer_list<std::pair<int, int>> edges) : Graph(order) {
    for (auto [u, v] : edges) add_edge(u, v);
}

void Graph::check_vertex(int v, const char* who) const {
    if (v < 0 || v >= order())
        throw contract_error(std::string(who) + ": vertex " + std::to_string(v) +
                             " out of range 0.." + std::to_string(order() - 1));
}

void Graph::add_edge(int u, int v) {
    check_vertex(u, "add_edge");
    check_vertex(v, "add_edge");
    if (u == v) throw contract_error("add_edge: loop at vertex " + std::to_string(u));
    if (has_edge(u, v))
        throw contract_error("add_edge: parallel edge " + std::to_string(u) + "-" +
                             std::to_string(v));
    auto& au = adj_[static_cast<std::size_t>(u)];
    auto& av = adj_[static_cast<std::size_t>(v)];
    au.insert(std::lower_bound(au.begin(), au.end(), v), v);
    av.insert(std::lower_bound(av.begin(), av.end(), u), u);
    ++degree_[static_cast<std::size_t>(u)];
    ++degree_[static_cast<std::size_t>(v)];
    ++edge_count_;
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u, "has_edge");
    check_vertex(v, "has_edge");
    const auto& au = adj_[static_cast<std::size_t>(u)];
    return std::binary_search(au.begin(), au.end(), v);
}

const std::vector<int>& Graph::neighbors(int v) const {
    check_vertex(v, "neighbors");
    return adj_[static_cast<std::size_t>(v)];
}

int Graph::degree(int v) const {
    check_vertex(v, "degree");
    return degree_[static_cast<std::size_t>(v)];
}

int Graph::max_degree() const {
    int d = 0;
    for (int x : degree_) d = std::max(d, x);
    return d;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(edge_count_));
    for (int u = 0; u < order(); ++u)
        for (int v : adj_[static_cast<std::size_t>(u)])
            if (u < v) out.emplace_back(u, v);
    return out;
}

bool Graph::is_connected() const {
    const int n = order();
    if (n == 0) return true;
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int v : adj_[static_cast<std::size_t>(u)]) {
            if (!seen[static_cast<std::size_t>(v)]) {
                seen[static_cast<std::size_t>(v)] = 1;
                ++reached;
                stack.push_back(v);
            }
        }
    }
    return reached == n;
}

Graph Graph::relabeled(std::span<const int> perm) const {
    const int n = order();
    if (static_cast<int>(perm.size()) != n)
        throw contract_error("relabeled: permutation size mismatch");
    std::vector<char> hit(static_cast<std::size_t>(n), 0);
    for (int p : perm) {
        if (p < 0 || p >= n || hit[static_cast<std::size_t>(p)])
            throw contract_error("relabeled: not a permutation of 0..n-1");
        hit[static_cast<std::size_t>(p)] = 1;
    }
    Graph out(n);
    for (int u = 0; u < n; ++u)
        for (int v : adj_[static_cast<std::size_t>(u)])
            if (u < v) out.add_edge(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
    return out;
}

Graph Graph::disjoint_union(const Graph& other) const {
    Graph out(order() + other.order());
    for (auto [u, v] : edges()) out.add_edge(u, v);
    const int shift = order();
    for (auto [u, v] : other.edges()) out.add_edge(u + shift, v + shift);
    return out;
}

Graph Graph::without_vertex(int v) const {
    check_vertex(v, "without_vertex");
    Graph out(order() - 1);
    auto map = [v](int x) { return x < v ? x : x - 1; };
    for (auto [a, b] : edges())
        if (a != v && b != v) out.add_edge(map(a), map(b));
    return out;
}

bool Graph::operator==(const Graph& other) const {
    return adj_ == other.adj_;
}

}  // namespace abc
