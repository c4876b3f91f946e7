#include "abc/enumeration.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "abc/canonical.hpp"
#include "abc/errors.hpp"
#include "abc/graph6.hpp"

namespace abc {

Graph EnumerationStream::at(std::size_t i) const { return from_graph6((*g6_)[i]); }

namespace {

// ---- free trees: Beyer-Hedetniemi rooted successor + the WROM free-tree
// filter over canonical level sequences (layout[i] = level of vertex i in
// a depth-first order, subtrees in non-increasing canonical order).

// Successor of a canonical rooted level sequence, forcing the change at
// position p (p < 0 means the last position with level > 1). Returns false
// when the sequence was the star (no successor).
bool next_rooted(std::vector<int>& s, int p = -1) {
    const int n = static_cast<int>(s.size());
    if (p < 0) {
        p = n - 1;
        while (s[static_cast<std::size_t>(p)] == 1) --p;
    }
    if (p == 0) return false;
    int q = p - 1;
    while (s[static_cast<std::size_t>(q)] != s[static_cast<std::size_t>(p)] - 1) --q;
    for (int i = p; i < n; ++i) s[static_cast<std::size_t>(i)] = s[static_cast<std::size_t>(i - p + q)];
    return true;
}

struct SplitView {
    std::vector<int> left;  // first root subtree, levels shifted down by 1
    std::vector<int> rest;  // root plus the remaining subtrees
};

SplitView split_tree(const std::vector<int>& s) {
    const int n = static_cast<int>(s.size());
    int ones = 0, m = n;
    for (int i = 0; i < n; ++i) {
        if (s[static_cast<std::size_t>(i)] == 1 && ++ones == 2) {
            m = i;
            break;
        }
    }
    SplitView v;
    v.left.reserve(static_cast<std::size_t>(m - 1));
    for (int i = 1; i < m; ++i) v.left.push_back(s[static_cast<std::size_t>(i)] - 1);
    v.rest.push_back(0);
    for (int i = m; i < n; ++i) v.rest.push_back(s[static_cast<std::size_t>(i)]);
    return v;
}

// free-tree representative: the left subtree must not be higher than the
// rest, nor larger, nor lexicographically later at equal height and size
bool wrom_valid(const SplitView& v) {
    int lh = *std::max_element(v.left.begin(), v.left.end());
    int rh = *std::max_element(v.rest.begin(), v.rest.end());
    if (rh < lh) return false;
    if (rh == lh) {
        if (v.left.size() > v.rest.size()) return false;
        if (v.left.size() == v.rest.size() && v.left > v.rest) return false;
    }
    return true;
}

Graph layout_to_graph(const std::vector<int>& s) {
    const int n = static_cast<int>(s.size());
    Graph g(n);
    std::vector<int> stack;
    for (int i = 0; i < n; ++i) {
        while (!stack.empty() && s[static_cast<std::size_t>(stack.back())] >= s[static_cast<std::size_t>(i)])
            stack.pop_back();
        if (!stack.empty()) g.add_edge(i, stack.back());
        stack.push_back(i);
    }
    return g;
}

template <typename Emit>
void generate_free_trees(int n, Emit&& emit) {
    if (n == 1) {
        emit(Graph(1));
        return;
    }
    // start at the path rooted at its center
    std::vector<int> layout;
    for (int i = 0; i <= n / 2; ++i) layout.push_back(i);
    for (int i = 1; i < (n + 1) / 2; ++i) layout.push_back(i);

    while (true) {
        SplitView v = split_tree(layout);
        if (!wrom_valid(v)) {
            // jump to the next valid representative
            const int p = static_cast<int>(v.left.size());
            const int old = layout[static_cast<std::size_t>(p)];
            next_rooted(layout, p);
            if (old > 2) {
                SplitView nv = split_tree(layout);
                int nh = *std::max_element(nv.left.begin(), nv.left.end());
                int len = nh + 1;
                for (int i = 0; i < len; ++i)
                    layout[layout.size() - static_cast<std::size_t>(len) + static_cast<std::size_t>(i)] =
                        i + 1;
            }
        }
        emit(layout_to_graph(layout));
        if (!next_rooted(layout)) break;
    }
}

// ---- connected graphs: orderly generation. A labeled graph is canonical
// when its upper-triangle adjacency code is maximal over relabelings;
// removing the last 1-bit of a canonical code leaves a canonical code, so
// extending canonical graphs by later edge positions reaches every
// isomorphism class exactly once.

bool is_max_code(const Graph& g) {
    return g == g.relabeled(detail::max_code_labeling(g));
}

template <typename Emit>
void generate_connected_graphs(int n, Emit&& emit) {
    // column-major pair order, matching the code the max-code search maximizes
    std::vector<std::pair<int, int>> pairs;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) pairs.emplace_back(i, j);

    struct Rec {
        Graph g;
        int last;
    };
    std::vector<Rec> stack;
    stack.push_back({Graph(n), -1});
    while (!stack.empty()) {
        Rec cur = std::move(stack.back());
        stack.pop_back();
        if (cur.g.is_connected() && n > 0) emit(cur.g);
        for (int pos = cur.last + 1; pos < static_cast<int>(pairs.size()); ++pos) {
            Graph child = cur.g;
            child.add_edge(pairs[static_cast<std::size_t>(pos)].first,
                           pairs[static_cast<std::size_t>(pos)].second);
            if (is_max_code(child)) stack.push_back({std::move(child), pos});
        }
    }
}

// stream cache: enumeration is pure, so materialized streams are shared
std::shared_ptr<const std::vector<std::string>> cached(int key_kind, int n,
                                                       std::shared_ptr<const std::vector<std::string>> (*build)(int)) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::shared_ptr<const std::vector<std::string>>> cache;
    std::unique_lock lock(mu);
    auto it = cache.find({key_kind, n});
    if (it != cache.end()) return it->second;
    lock.unlock();
    auto built = build(n);
    lock.lock();
    return cache.try_emplace({key_kind, n}, std::move(built)).first->second;
}

std::shared_ptr<const std::vector<std::string>> build_trees(int n) {
    auto out = std::make_shared<std::vector<std::string>>();
    generate_free_trees(n, [&](const Graph& g) {
        out->push_back(detail::tree_canonical_graph6(g));
    });
    std::sort(out->begin(), out->end());
    return out;
}

std::shared_ptr<const std::vector<std::string>> build_graphs(int n) {
    auto out = std::make_shared<std::vector<std::string>>();
    generate_connected_graphs(n, [&](const Graph& g) {
        out->push_back(to_graph6(canonical_representative(g)));
    });
    std::sort(out->begin(), out->end());
    return out;
}

}  // namespace

EnumerationStream free_trees(int n) {
    if (n < 1 || n > 20)
        throw capacity_error("free_trees supports 1 <= n <= 20, got n = " + std::to_string(n));
    return {EnumerationStream::Kind::trees, n, std::nullopt, cached(0, n, &build_trees)};
}

EnumerationStream connected_graphs(int n) {
    if (n < 1 || n > 8)
        throw capacity_error("connected_graphs supports 1 <= n <= 8, got n = " +
                             std::to_string(n));
    return {EnumerationStream::Kind::connected_graphs, n, std::nullopt,
            cached(1, n, &build_graphs)};
}

EnumerationStream trees_with_max_degree(int n, int delta) {
    if (delta < 2 || delta > n - 1)
        throw capacity_error("trees_with_max_degree requires 2 <= delta <= n-1");
    EnumerationStream all = free_trees(n);
    auto out = std::make_shared<std::vector<std::string>>();
    for (std::size_t i = 0; i < all.size(); ++i)
        if (all.at(i).max_degree() == delta) out->push_back(all.graph6_at(i));
    return {EnumerationStream::Kind::trees, n, delta, std::move(out)};
}

void write_graph6_lines(const EnumerationStream& stream, std::ostream& out) {
    for (const auto& line : stream.graph6_lines()) out << line << '\n';
}

}  // namespace abc
