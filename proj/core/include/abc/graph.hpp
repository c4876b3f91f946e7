#pragma once

#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace abc {

/// Simple undirected graph on dense vertex labels 0..n-1.
///
/// Values are cheap to copy and are treated as immutable once built and
/// shared; all const operations are pure and thread-safe.
class Graph {
public:
    Graph() = default;
    explicit Graph(int order);
    Graph(int order, std::span<const std::pair<int, int>> edges);
    Graph(int order, std::initializer_list<std::pair<int, int>> edges);

    int order() const noexcept { return static_cast<int>(adj_.size()); }
    int edge_count() const noexcept { return edge_count_; }

    /// Rejects loops, parallel edges, and out-of-range endpoints.
    void add_edge(int u, int v);

    bool has_edge(int u, int v) const;

    /// Neighbors of v in increasing label order.
    const std::vector<int>& neighbors(int v) const;

    int degree(int v) const;
    const std::vector<int>& degrees() const noexcept { return degree_; }
    int max_degree() const;

    /// Edges as (u,v) with u < v, lexicographically sorted.
    std::vector<std::pair<int, int>> edges() const;

    bool is_connected() const;
    bool is_tree() const { return edge_count_ == order() - 1 && is_connected(); }

    /// New graph with vertex v relabeled to perm[v].
    Graph relabeled(std::span<const int> perm) const;

    /// Disjoint union; vertices of other are shifted by order().
    Graph disjoint_union(const Graph& other) const;

    /// Induced subgraph on all vertices except v (labels above v shift down).
    Graph without_vertex(int v) const;

    bool operator==(const Graph& other) const;

private:
    void check_vertex(int v, const char* who) const;

    std::vector<std::vector<int>> adj_;
    std::vector<int> degree_;
    int edge_count_ = 0;
};

}  // namespace abc
