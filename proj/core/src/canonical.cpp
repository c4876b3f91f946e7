#include "abc/canonical.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>

#include "abc/errors.hpp"
#include "abc/graph6.hpp"

namespace abc {

namespace detail {

std::vector<int> tree_centers(const Graph& tree) {
    const int n = tree.order();
    if (n == 0) return {};
    if (n == 1) return {0};
    std::vector<int> deg = tree.degrees();
    std::vector<int> layer, next;
    for (int v = 0; v < n; ++v)
        if (deg[static_cast<std::size_t>(v)] <= 1) layer.push_back(v);
    int remaining = n;
    while (remaining > 2) {
        remaining -= static_cast<int>(layer.size());
        next.clear();
        for (int v : layer) {
            deg[static_cast<std::size_t>(v)] = 0;
            for (int w : tree.neighbors(v))
                if (--deg[static_cast<std::size_t>(w)] == 1) next.push_back(w);
        }
        layer.swap(next);
    }
    std::sort(layer.begin(), layer.end());
    return layer;
}

namespace {

// Subtree codes as parenthesis strings: '(' = 1, ')' = 0, children sorted
// descending. Computed bottom-up over the tree rooted at `root` (with the
// other center, if any, excluded via `skip` so both halves can be compared).
struct AhuCodes {
    std::vector<std::string> code;
    std::vector<int> parent;
    std::vector<std::vector<int>> children;
};

AhuCodes ahu_root(const Graph& tree, int root) {
    const int n = tree.order();
    AhuCodes r;
    r.code.resize(static_cast<std::size_t>(n));
    r.parent.assign(static_cast<std::size_t>(n), -1);
    r.children.resize(static_cast<std::size_t>(n));

    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(n));
    order.push_back(root);
    for (std::size_t i = 0; i < order.size(); ++i) {
        int u = order[i];
        for (int v : tree.neighbors(u)) {
            if (v == r.parent[static_cast<std::size_t>(u)]) continue;
            r.parent[static_cast<std::size_t>(v)] = u;
            r.children[static_cast<std::size_t>(u)].push_back(v);
            order.push_back(v);
        }
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        int u = *it;
        auto& kids = r.children[static_cast<std::size_t>(u)];
        std::sort(kids.begin(), kids.end(), [&](int a, int b) {
            return r.code[static_cast<std::size_t>(a)] > r.code[static_cast<std::size_t>(b)];
        });
        std::string c = "(";
        for (int k : kids) c += r.code[static_cast<std::size_t>(k)];
        c += ")";
        r.code[static_cast<std::size_t>(u)] = std::move(c);
    }
    return r;
}

}  // namespace

std::vector<int> tree_canonical_labeling(const Graph& tree) {
    const int n = tree.order();
    if (n == 0) return {};
    if (!tree.is_tree()) throw contract_error("tree_canonical_labeling: not a tree");
    auto centers = tree_centers(tree);
    int root = centers[0];
    if (centers.size() == 2) {
        // root at the center whose whole-tree code is larger
        auto a = ahu_root(tree, centers[0]);
        auto b = ahu_root(tree, centers[1]);
        root = a.code[static_cast<std::size_t>(centers[0])] >=
                       b.code[static_cast<std::size_t>(centers[1])]
                   ? centers[0]
                   : centers[1];
    }
    auto r = ahu_root(tree, root);

    // preorder with children already in descending code order
    std::vector<int> perm(static_cast<std::size_t>(n), -1);
    std::vector<int> stack{root};
    int next = 0;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        perm[static_cast<std::size_t>(u)] = next++;
        const auto& kids = r.children[static_cast<std::size_t>(u)];
        for (auto it = kids.rbegin(); it != kids.rend(); ++it) stack.push_back(*it);
    }
    return perm;
}

std::string tree_canonical_graph6(const Graph& tree) {
    auto perm = tree_canonical_labeling(tree);
    return to_graph6(tree.relabeled(perm));
}

}  // namespace detail

namespace {

constexpr int kCanonicalCap = 16;

// Adjacency code of a labeled graph: upper triangle row-major, packed
// MSB-first so lexicographically larger codes compare greater.
using Code = std::array<std::uint64_t, 2>;

Code code_of_order(const std::vector<std::uint32_t>& adjbits, const std::vector<int>& order) {
    Code code{0, 0};
    int bit = 0;
    const int n = static_cast<int>(order.size());
    for (int i = 0; i < n; ++i) {
        const std::uint32_t row = adjbits[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])];
        for (int j = i + 1; j < n; ++j, ++bit) {
            if (row >> order[static_cast<std::size_t>(j)] & 1u)
                code[static_cast<std::size_t>(bit >> 6)] |= 0x8000000000000000ull >> (bit & 63);
        }
    }
    return code;
}

// Individualization-refinement search for the relabeling that maximizes the
// adjacency code. Discovered automorphisms prune orbit-equivalent branches.
class CanonSearch {
public:
    explicit CanonSearch(const Graph& g) : g_(g), n_(g.order()) {
        adjbits_.assign(static_cast<std::size_t>(n_), 0);
        for (int v = 0; v < n_; ++v)
            for (int w : g.neighbors(v))
                adjbits_[static_cast<std::size_t>(v)] |= 1u << w;
    }

    std::vector<int> run() {
        if (n_ == 0) return {};
        // complete and empty graphs are label-independent
        if (g_.edge_count() == 0 || g_.edge_count() == n_ * (n_ - 1) / 2) {
            std::vector<int> id(static_cast<std::size_t>(n_));
            std::iota(id.begin(), id.end(), 0);
            return id;
        }
        auto cells = initial_cells();
        refine(cells);
        search(cells, {});
        // best_order_[new] = old; invert to old -> new
        std::vector<int> perm(static_cast<std::size_t>(n_));
        for (int i = 0; i < n_; ++i) perm[static_cast<std::size_t>(best_order_[static_cast<std::size_t>(i)])] = i;
        return perm;
    }

private:
    using Cells = std::vector<std::vector<int>>;

    Cells initial_cells() const {
        // group by degree, ascending
        Cells cells;
        std::vector<int> vs(static_cast<std::size_t>(n_));
        std::iota(vs.begin(), vs.end(), 0);
        std::stable_sort(vs.begin(), vs.end(),
                         [&](int a, int b) { return g_.degree(a) < g_.degree(b); });
        for (int v : vs) {
            if (cells.empty() || g_.degree(cells.back().front()) != g_.degree(v))
                cells.push_back({v});
            else
                cells.back().push_back(v);
        }
        return cells;
    }

    void refine(Cells& cells) const {
        std::vector<int> color(static_cast<std::size_t>(n_));
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t c = 0; c < cells.size(); ++c)
                for (int v : cells[c]) color[static_cast<std::size_t>(v)] = static_cast<int>(c);
            Cells next;
            next.reserve(cells.size());
            for (auto& cell : cells) {
                if (cell.size() == 1) {
                    next.push_back(cell);
                    continue;
                }
                // signature: sorted neighbor colors
                std::vector<std::pair<std::vector<int>, int>> sig;
                sig.reserve(cell.size());
                for (int v : cell) {
                    std::vector<int> s;
                    s.reserve(g_.neighbors(v).size());
                    for (int w : g_.neighbors(v)) s.push_back(color[static_cast<std::size_t>(w)]);
                    std::sort(s.begin(), s.end());
                    sig.emplace_back(std::move(s), v);
                }
                std::sort(sig.begin(), sig.end());
                std::vector<int> group{sig[0].second};
                for (std::size_t i = 1; i < sig.size(); ++i) {
                    if (sig[i].first != sig[i - 1].first) {
                        next.push_back(std::move(group));
                        group.clear();
                        changed = true;
                    }
                    group.push_back(sig[i].second);
                }
                next.push_back(std::move(group));
            }
            cells.swap(next);
        }
        // deterministic order inside cells
        for (auto& cell : cells) std::sort(cell.begin(), cell.end());
    }

    void search(const Cells& cells, const std::vector<int>& prefix) {
        if (++nodes_ > kNodeBudget)
            throw capacity_error("canonical_form: search exceeded node budget");

        int target = -1;
        std::size_t best_size = static_cast<std::size_t>(n_) + 1;
        for (std::size_t c = 0; c < cells.size(); ++c) {
            if (cells[c].size() > 1 && cells[c].size() < best_size) {
                best_size = cells[c].size();
                target = static_cast<int>(c);
            }
        }

        if (target < 0) {
            std::vector<int> order;
            order.reserve(static_cast<std::size_t>(n_));
            for (const auto& cell : cells) order.push_back(cell.front());
            Code code = code_of_order(adjbits_, order);
            if (!have_best_ || code > best_code_) {
                best_code_ = code;
                best_order_ = order;
                have_best_ = true;
            } else if (code == best_code_) {
                // candidate and best give the same labeled image: automorphism
                std::vector<int> sigma(static_cast<std::size_t>(n_));
                for (int i = 0; i < n_; ++i)
                    sigma[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] =
                        best_order_[static_cast<std::size_t>(i)];
                generators_.push_back(std::move(sigma));
            }
            return;
        }

        std::vector<int> tried;
        for (int v : cells[static_cast<std::size_t>(target)]) {
            if (orbit_equivalent(v, tried, prefix)) continue;
            tried.push_back(v);

            Cells child;
            child.reserve(cells.size() + 1);
            for (std::size_t c = 0; c < cells.size(); ++c) {
                if (static_cast<int>(c) != target) {
                    child.push_back(cells[c]);
                    continue;
                }
                child.push_back({v});
                std::vector<int> rest;
                for (int w : cells[c])
                    if (w != v) rest.push_back(w);
                child.push_back(std::move(rest));
            }
            refine(child);

            auto next_prefix = prefix;
            next_prefix.push_back(v);
            search(child, next_prefix);
        }
    }

    bool orbit_equivalent(int v, const std::vector<int>& tried, const std::vector<int>& prefix) const {
        if (tried.empty() || generators_.empty()) return false;
        // union-find over generators that fix the prefix pointwise
        std::vector<int> uf(static_cast<std::size_t>(n_));
        std::iota(uf.begin(), uf.end(), 0);
        auto find = [&](int x) {
            while (uf[static_cast<std::size_t>(x)] != x) {
                uf[static_cast<std::size_t>(x)] = uf[static_cast<std::size_t>(uf[static_cast<std::size_t>(x)])];
                x = uf[static_cast<std::size_t>(x)];
            }
            return x;
        };
        bool any = false;
        for (const auto& sigma : generators_) {
            bool fixes = true;
            for (int p : prefix)
                if (sigma[static_cast<std::size_t>(p)] != p) {
                    fixes = false;
                    break;
                }
            if (!fixes) continue;
            any = true;
            for (int x = 0; x < n_; ++x) {
                int a = find(x), b = find(sigma[static_cast<std::size_t>(x)]);
                if (a != b) uf[static_cast<std::size_t>(a)] = b;
            }
        }
        if (!any) return false;
        for (int u : tried)
            if (find(u) == find(v)) return true;
        return false;
    }

    static constexpr long long kNodeBudget = 5'000'000;

    const Graph& g_;
    int n_;
    std::vector<std::uint32_t> adjbits_;
    bool have_best_ = false;
    Code best_code_{};
    std::vector<int> best_order_;
    std::vector<std::vector<int>> generators_;
    long long nodes_ = 0;
};

// Exact maximum of the column-major upper-triangle adjacency code over all
// orders, by branch and bound on per-column chunks. The orderly graph
// generator needs the true maximum (a coloring-restricted maximum would
// break the remove-last-edge parent rule), so no refinement shortcuts here.
//
// rel_[p] records how column p of the current path compares with best;
// a branch is pruned only when all earlier columns are equal and its column
// is smaller. Whenever best is replaced, the current path IS best, so the
// whole rel_ array resets to equal and sibling comparisons stay valid.
class MaxCodeSearch {
public:
    explicit MaxCodeSearch(const Graph& g) : n_(g.order()) {
        adjbits_.assign(static_cast<std::size_t>(n_), 0);
        for (int v = 0; v < n_; ++v)
            for (int w : g.neighbors(v)) adjbits_[static_cast<std::size_t>(v)] |= 1u << w;
    }

    std::vector<int> run() {
        best_chunks_.assign(static_cast<std::size_t>(n_), 0);
        best_order_.assign(static_cast<std::size_t>(n_), 0);
        order_.assign(static_cast<std::size_t>(n_), 0);
        chunks_.assign(static_cast<std::size_t>(n_), 0);
        rel_.assign(static_cast<std::size_t>(n_), Rel::eq);
        have_best_ = false;
        dfs(0, 0u);
        std::vector<int> perm(static_cast<std::size_t>(n_));
        for (int pos = 0; pos < n_; ++pos)
            perm[static_cast<std::size_t>(best_order_[static_cast<std::size_t>(pos)])] = pos;
        return perm;
    }

private:
    enum class Rel { eq, gt };

    bool path_equals_best(int upto) const {
        for (int i = 0; i < upto; ++i)
            if (rel_[static_cast<std::size_t>(i)] != Rel::eq) return false;
        return true;
    }

    void dfs(int pos, std::uint32_t used) {
        if (pos == n_) {
            if (have_best_ && path_equals_best(n_)) return;  // automorphic image of best
            best_chunks_ = chunks_;
            best_order_ = order_;
            std::fill(rel_.begin(), rel_.end(), Rel::eq);
            have_best_ = true;
            return;
        }
        struct Cand {
            std::uint32_t chunk;
            int v;
        };
        Cand cands[16];
        int count = 0;
        for (int v = 0; v < n_; ++v) {
            if (used >> v & 1u) continue;
            std::uint32_t chunk = 0;
            const std::uint32_t row = adjbits_[static_cast<std::size_t>(v)];
            for (int i = 0; i < pos; ++i)
                chunk = (chunk << 1) | (row >> order_[static_cast<std::size_t>(i)] & 1u);
            cands[count++] = {chunk, v};
        }
        std::sort(cands, cands + count,
                  [](const Cand& a, const Cand& b) { return a.chunk > b.chunk; });
        for (int c = 0; c < count; ++c) {
            // comparison against best only binds while the path matches it
            const bool comparing = have_best_ && path_equals_best(pos);
            if (comparing) {
                const std::uint32_t bc = best_chunks_[static_cast<std::size_t>(pos)];
                if (cands[c].chunk < bc) break;  // sorted: the rest are smaller too
                rel_[static_cast<std::size_t>(pos)] = cands[c].chunk == bc ? Rel::eq : Rel::gt;
            } else {
                rel_[static_cast<std::size_t>(pos)] = Rel::gt;
            }
            order_[static_cast<std::size_t>(pos)] = cands[c].v;
            chunks_[static_cast<std::size_t>(pos)] = cands[c].chunk;
            dfs(pos + 1, used | (1u << cands[c].v));
        }
    }

    int n_;
    std::vector<std::uint32_t> adjbits_;
    std::vector<std::uint32_t> chunks_, best_chunks_;
    std::vector<int> order_, best_order_;
    std::vector<Rel> rel_;
    bool have_best_ = false;
};

}  // namespace

namespace detail {

std::vector<int> max_code_labeling(const Graph& g) {
    if (g.order() > kCanonicalCap)
        throw capacity_error("max_code_labeling supports n <= 16, got n = " +
                             std::to_string(g.order()));
    if (g.order() == 0) return {};
    return MaxCodeSearch(g).run();
}

}  // namespace detail

std::vector<int> canonical_labeling(const Graph& g) {
    if (g.order() > kCanonicalCap)
        throw capacity_error("canonical_form supports n <= 16, got n = " +
                             std::to_string(g.order()));
    if (g.is_tree()) return detail::tree_canonical_labeling(g);
    return CanonSearch(g).run();
}

Graph canonical_representative(const Graph& g) {
    auto perm = canonical_labeling(g);
    return g.relabeled(perm);
}

CanonicalForm canonical_form(const Graph& g) {
    return CanonicalForm(to_graph6(canonical_representative(g)));
}

}  // namespace abc
