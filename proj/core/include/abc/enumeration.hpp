#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "abc/graph.hpp"

namespace abc {

/// Materialized stream of canonical representatives, one per isomorphism
/// class, sorted lexicographically by canonical form. Deterministic and
/// safe to share across threads.
class EnumerationStream {
public:
    enum class Kind { trees, connected_graphs };

    EnumerationStream(Kind kind, int order, std::optional<int> delta,
                      std::shared_ptr<const std::vector<std::string>> g6)
        : kind_(kind), order_(order), delta_(delta), g6_(std::move(g6)) {}

    Kind kind() const noexcept { return kind_; }
    int order() const noexcept { return order_; }
    std::optional<int> delta_filter() const noexcept { return delta_; }

    std::size_t size() const noexcept { return g6_->size(); }
    const std::string& graph6_at(std::size_t i) const { return (*g6_)[i]; }
    const std::vector<std::string>& graph6_lines() const noexcept { return *g6_; }

    Graph at(std::size_t i) const;

    class iterator {
    public:
        iterator(const EnumerationStream* s, std::size_t i) : s_(s), i_(i) {}
        Graph operator*() const { return s_->at(i_); }
        iterator& operator++() { ++i_; return *this; }
        bool operator!=(const iterator& o) const { return i_ != o.i_; }

    private:
        const EnumerationStream* s_;
        std::size_t i_;
    };

    iterator begin() const { return {this, 0}; }
    iterator end() const { return {this, size()}; }

private:
    Kind kind_;
    int order_;
    std::optional<int> delta_;
    std::shared_ptr<const std::vector<std::string>> g6_;
};

/// All free trees on n vertices (level-sequence successor generation,
/// each class exactly once). Capacity 1 <= n <= 20.
EnumerationStream free_trees(int n);

/// All connected graphs on n vertices up to isomorphism (orderly generation
/// by edge addition). Capacity 1 <= n <= 8.
EnumerationStream connected_graphs(int n);

/// Trees with maximum degree exactly delta; requires 2 <= delta <= n-1.
EnumerationStream trees_with_max_degree(int n, int delta);

/// One graph6 value per line.
void write_graph6_lines(const EnumerationStream& stream, std::ostream& out);

}  // namespace abc
