#pragma once

#include <compare>
#include <string>
#include <vector>

#include "abc/graph.hpp"

namespace abc {

/// Byte string identifying an isomorphism class: the graph6 encoding of a
/// canonical representative. Equal bytes iff isomorphic (exact for n <= 16).
class CanonicalForm {
public:
    CanonicalForm() = default;
    explicit CanonicalForm(std::string bytes) : bytes_(std::move(bytes)) {}

    const std::string& bytes() const noexcept { return bytes_; }

    friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
    friend std::strong_ordering operator<=>(const CanonicalForm& a, const CanonicalForm& b) {
        return a.bytes_.compare(b.bytes_) <=> 0;
    }

private:
    std::string bytes_;
};

/// Canonical form of g; capacity error for n > 16.
CanonicalForm canonical_form(const Graph& g);

/// The canonical representative itself (g relabeled canonically).
Graph canonical_representative(const Graph& g);

/// Canonical labeling perm with new_label = perm[old_label].
std::vector<int> canonical_labeling(const Graph& g);

namespace detail {

/// AHU canonical labeling for trees; no size cap. Used directly by the
/// enumeration streams which sort beyond the public n <= 16 limit.
std::vector<int> tree_canonical_labeling(const Graph& tree);
std::string tree_canonical_graph6(const Graph& tree);

/// Centers of a tree (1 or 2 vertices).
std::vector<int> tree_centers(const Graph& tree);

/// Labeling that maximizes the row-major upper-triangle adjacency code
/// (individualization-refinement search, no tree fast path). The orderly
/// graph generator relies on this exact maximization.
std::vector<int> max_code_labeling(const Graph& g);

}  // namespace detail

}  // namespace abc
