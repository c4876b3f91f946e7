#include "oracles.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <cmath>
#include <cstring>
#include <numeric>
#include <stdexcept>
#include <string>
#include <thread>

#include "abc/canonical.hpp"

namespace oracle {

namespace {

// Prüfer decode into an edge list; eu/ev must hold n-1 entries.
void prufer_decode(const int* seq, int n, int* eu, int* ev) {
    std::array<int, 16> deg{};
    for (int v = 0; v < n; ++v) deg[static_cast<std::size_t>(v)] = 1;
    for (int i = 0; i < n - 2; ++i) ++deg[static_cast<std::size_t>(seq[i])];
    int ptr = 0;
    while (deg[static_cast<std::size_t>(ptr)] != 1) ++ptr;
    int leaf = ptr;
    for (int i = 0; i < n - 2; ++i) {
        const int v = seq[i];
        eu[i] = leaf;
        ev[i] = v;
        if (--deg[static_cast<std::size_t>(v)] == 1 && v < ptr) {
            leaf = v;
        } else {
            ++ptr;
            while (deg[static_cast<std::size_t>(ptr)] != 1) ++ptr;
            leaf = ptr;
        }
    }
    eu[n - 2] = leaf;
    ev[n - 2] = n - 1;
}

// Fused decode + AHU for the exhaustive counter. The caller maintains the
// degree array and the degree-one bitmask incrementally with the digit
// odometer. Decoding pops the smallest leaf from the bitmask (the ptr-scan
// formulation of Prüfer decoding amortizes exactly this), and the peel
// phase walks leaf layers as bitmasks, so both loops are ctz-driven with
// few data-dependent branches.
template <int N>
std::uint32_t tree_code_fused(const int* seq, const std::uint8_t* deg0, std::uint32_t leaves0) {
    constexpr int kLenShift = 25;
    std::uint8_t degd[16], degp[16];
    std::memcpy(degd, deg0, 16);
    std::memcpy(degp, deg0, 16);
    std::uint8_t xr[16] = {};

    {
        std::uint32_t avail = leaves0;
        for (int i = 0; i < N - 2; ++i) {
            const int leaf = std::countr_zero(avail);
            avail &= avail - 1;
            const int v = seq[i];
            xr[leaf] ^= static_cast<std::uint8_t>(v);
            xr[v] ^= static_cast<std::uint8_t>(leaf);
            avail |= static_cast<std::uint32_t>(--degd[v] == 1) << v;
        }
        const int leaf = std::countr_zero(avail);
        xr[leaf] ^= static_cast<std::uint8_t>(N - 1);
        xr[N - 1] ^= static_cast<std::uint8_t>(leaf);
    }

    std::uint32_t kid[N << 4];
    std::uint8_t kidc[16] = {};

    auto finalize = [&](int v) -> std::uint32_t {
        if (kidc[v] == 0) return (2u << kLenShift) | 2u;
        std::uint32_t c = 1;
        int len = 1;
        const std::uint32_t* kv = kid + (v << 4);
        for (int j = 0; j < kidc[v]; ++j) {
            const int cl = static_cast<int>(kv[j] >> kLenShift);
            c = (c << cl) | (kv[j] & ((1u << kLenShift) - 1));
            len += cl;
        }
        return (static_cast<std::uint32_t>(len + 1) << kLenShift) | (c << 1);
    };

    std::uint32_t layer = leaves0;
    int remaining = N;
    while (remaining > 2) {
        remaining -= std::popcount(layer);
        std::uint32_t next = 0;
        do {
            const int v = std::countr_zero(layer);
            layer &= layer - 1;
            const int w = xr[v];
            const std::uint32_t key = finalize(v);
            std::uint32_t* kw = kid + (w << 4);
            int at = kidc[w]++;
            while (at > 0 && kw[at - 1] < key) {
                kw[at] = kw[at - 1];
                --at;
            }
            kw[at] = key;
            xr[w] ^= static_cast<std::uint8_t>(v);
            next |= static_cast<std::uint32_t>(--degp[w] == 1) << w;
        } while (layer);
        layer = next;
    }

    constexpr std::uint32_t kBitsMask = (1u << kLenShift) - 1;
    if (remaining == 1) return finalize(std::countr_zero(layer)) & kBitsMask;
    const std::uint32_t k1 = finalize(std::countr_zero(layer));
    const std::uint32_t k2 = finalize(std::countr_zero(layer & (layer - 1)));
    const std::uint32_t hi = std::max(k1, k2), lo = std::min(k1, k2);
    const std::uint32_t combined =
        ((hi & kBitsMask) << static_cast<int>(lo >> kLenShift)) | (lo & kBitsMask);
    return combined | (1u << (2 * N));
}

template <int N>
std::uint64_t prufer_count_impl(unsigned threads) {
    constexpr int kSeqLen = N - 2;
    constexpr int kFixed = kSeqLen >= 2 ? 2 : 1;  // work split granularity
    constexpr int kTasks = kFixed == 2 ? N * N : N;
    constexpr std::size_t kBitsetWords = (std::size_t{1} << (2 * N + 1)) / 64;

    const unsigned workers = std::max(1u, std::min<unsigned>(threads, kTasks));
    std::vector<std::vector<std::uint64_t>> marks(
        workers, std::vector<std::uint64_t>(kBitsetWords, 0));

    std::atomic<int> next_task{0};
    auto task = [&](unsigned worker) {
        auto& bitset = marks[worker];
        int seq[kSeqLen];
        std::uint8_t deg0[16];
        while (true) {
            const int t = next_task.fetch_add(1);
            if (t >= kTasks) return;
            seq[0] = kFixed == 2 ? t / N : t;
            if (kFixed == 2) seq[1] = t % N;
            for (int i = kFixed; i < kSeqLen; ++i) seq[i] = 0;
            std::memset(deg0, 0, 16);
            for (int v = 0; v < N; ++v) deg0[v] = 1;
            for (int i = 0; i < kSeqLen; ++i) ++deg0[seq[i]];
            std::uint32_t leaves0 = 0;
            for (int v = 0; v < N; ++v)
                leaves0 |= static_cast<std::uint32_t>(deg0[v] == 1) << v;
            auto dec = [&](int x) {
                leaves0 |= static_cast<std::uint32_t>(--deg0[x] == 1) << x;
            };
            auto inc = [&](int x) {
                leaves0 &= ~(static_cast<std::uint32_t>(++deg0[x] == 2) << x);
            };
            while (true) {
                const std::uint32_t code = tree_code_fused<N>(seq, deg0, leaves0);
                bitset[code >> 6] |= std::uint64_t{1} << (code & 63);
                int at = kSeqLen - 1;
                while (at >= kFixed && seq[at] == N - 1) {
                    dec(N - 1);
                    inc(0);
                    seq[at--] = 0;
                }
                if (at < kFixed) break;
                dec(seq[at]);
                ++seq[at];
                inc(seq[at]);
            }
        }
    };

    std::vector<std::thread> pool;
    for (unsigned w = 1; w < workers; ++w) pool.emplace_back(task, w);
    task(0);
    for (auto& t : pool) t.join();

    std::uint64_t count = 0;
    for (std::size_t w = 1; w < marks.size(); ++w)
        for (std::size_t i = 0; i < kBitsetWords; ++i) marks[0][i] |= marks[w][i];
    for (std::size_t i = 0; i < kBitsetWords; ++i) count += std::popcount(marks[0][i]);
    return count;
}

std::uint64_t min_code_over_perms(const abc::Graph& g) {
    const int n = g.order();
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t best = ~std::uint64_t{0};
    do {
        std::uint64_t code = 0;
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i)
                code = (code << 1) |
                       (g.has_edge(perm[static_cast<std::size_t>(i)],
                                   perm[static_cast<std::size_t>(j)])
                            ? 1u
                            : 0u);
        best = std::min(best, code);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

}  // namespace

std::vector<abc::Graph> prufer_labeled_trees(int n) {
    if (n < 1 || n > 8) throw std::invalid_argument("prufer_labeled_trees: n must be 1..8");
    std::vector<abc::Graph> out;
    if (n == 1) {
        out.emplace_back(1);
        return out;
    }
    if (n == 2) {
        abc::Graph g(2);
        g.add_edge(0, 1);
        out.push_back(g);
        return out;
    }
    const int len = n - 2;
    std::vector<int> seq(static_cast<std::size_t>(len), 0);
    std::vector<int> eu(static_cast<std::size_t>(n - 1)), ev(static_cast<std::size_t>(n - 1));
    while (true) {
        prufer_decode(seq.data(), n, eu.data(), ev.data());
        abc::Graph g(n);
        for (int e = 0; e < n - 1; ++e) g.add_edge(eu[static_cast<std::size_t>(e)],
                                                   ev[static_cast<std::size_t>(e)]);
        out.push_back(std::move(g));
        int at = len - 1;
        while (at >= 0 && seq[static_cast<std::size_t>(at)] == n - 1)
            seq[static_cast<std::size_t>(at--)] = 0;
        if (at < 0) break;
        ++seq[static_cast<std::size_t>(at)];
    }
    return out;
}

std::uint64_t prufer_free_tree_count(int n, unsigned threads) {
    switch (n) {
        case 1:
        case 2:
            return 1;
        case 3: return prufer_count_impl<3>(threads);
        case 4: return prufer_count_impl<4>(threads);
        case 5: return prufer_count_impl<5>(threads);
        case 6: return prufer_count_impl<6>(threads);
        case 7: return prufer_count_impl<7>(threads);
        case 8: return prufer_count_impl<8>(threads);
        case 9: return prufer_count_impl<9>(threads);
        case 10: return prufer_count_impl<10>(threads);
        case 11: return prufer_count_impl<11>(threads);
        default:
            throw std::invalid_argument("prufer_free_tree_count: n must be 1..11");
    }
}

std::uint64_t prufer_free_tree_count_bruteforce(int n) {
    if (n < 1 || n > 7)
        throw std::invalid_argument("prufer_free_tree_count_bruteforce: n must be 1..7");
    if (n <= 2) return 1;
    auto trees = prufer_labeled_trees(n);
    std::vector<std::uint64_t> codes;
    codes.reserve(trees.size());
    for (const auto& t : trees) codes.push_back(min_code_over_perms(t));
    std::sort(codes.begin(), codes.end());
    codes.erase(std::unique(codes.begin(), codes.end()), codes.end());
    return codes.size();
}

namespace {

bool mask_connected(std::uint32_t mask, int n, const std::vector<std::pair<int, int>>& pairs) {
    std::uint32_t adj[8] = {};
    for (std::size_t p = 0; p < pairs.size(); ++p) {
        if (mask >> p & 1u) {
            adj[pairs[p].first] |= 1u << pairs[p].second;
            adj[pairs[p].second] |= 1u << pairs[p].first;
        }
    }
    std::uint32_t seen = 1, frontier = 1;
    while (frontier) {
        std::uint32_t next = 0;
        while (frontier) {
            const int v = std::countr_zero(frontier);
            frontier &= frontier - 1;
            next |= adj[v] & ~seen;
        }
        seen |= next;
        frontier = next;
    }
    return seen == (std::uint32_t{1} << n) - 1;
}

abc::Graph mask_to_graph(std::uint32_t mask, int n,
                         const std::vector<std::pair<int, int>>& pairs) {
    abc::Graph g(n);
    for (std::size_t p = 0; p < pairs.size(); ++p)
        if (mask >> p & 1u) g.add_edge(pairs[p].first, pairs[p].second);
    return g;
}

}  // namespace

std::uint64_t labeled_connected_graph_count(int n) {
    if (n < 1 || n > 7)
        throw std::invalid_argument("labeled_connected_graph_count: n must be 1..7");
    if (n == 1) return 1;
    std::vector<std::pair<int, int>> pairs;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) pairs.emplace_back(i, j);
    const std::uint32_t total = std::uint32_t{1} << pairs.size();

    const unsigned workers = std::max(1u, std::min(std::thread::hardware_concurrency(), 8u));
    std::vector<std::vector<std::string>> forms(workers);
    std::atomic<std::uint32_t> next_chunk{0};
    constexpr std::uint32_t kChunk = 1u << 12;
    auto task = [&](unsigned worker) {
        while (true) {
            const std::uint32_t begin = next_chunk.fetch_add(kChunk);
            if (begin >= total) return;
            const std::uint32_t end = std::min(total, begin + kChunk);
            for (std::uint32_t mask = begin; mask < end; ++mask) {
                if (!mask_connected(mask, n, pairs)) continue;
                forms[worker].push_back(
                    abc::canonical_form(mask_to_graph(mask, n, pairs)).bytes());
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned w = 1; w < workers; ++w) pool.emplace_back(task, w);
    task(0);
    for (auto& t : pool) t.join();

    std::vector<std::string> all;
    for (auto& part : forms)
        all.insert(all.end(), std::make_move_iterator(part.begin()),
                   std::make_move_iterator(part.end()));
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    return all.size();
}

std::uint64_t labeled_connected_graph_count_bruteforce(int n) {
    if (n < 1 || n > 6)
        throw std::invalid_argument("labeled_connected_graph_count_bruteforce: n must be 1..6");
    if (n == 1) return 1;
    std::vector<std::pair<int, int>> pairs;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) pairs.emplace_back(i, j);
    std::vector<std::uint64_t> codes;
    const std::uint32_t total = std::uint32_t{1} << pairs.size();
    for (std::uint32_t mask = 0; mask < total; ++mask) {
        if (!mask_connected(mask, n, pairs)) continue;
        codes.push_back(min_code_over_perms(mask_to_graph(mask, n, pairs)));
    }
    std::sort(codes.begin(), codes.end());
    codes.erase(std::unique(codes.begin(), codes.end()), codes.end());
    return codes.size();
}

double power_iteration_radius(const abc::SymMatrix& m, int max_iters, double tol) {
    const int n = m.order();
    if (n == 0) return 0.0;
    // Tree matrices are bipartite (spectrum symmetric about 0), so iterate on
    // the shifted matrix M + sigma*I where the Perron value is strictly
    // dominant in magnitude.
    double sigma = 0.0;
    for (double s : m.row_sums()) sigma = std::max(sigma, std::abs(s));
    sigma += 1.0;
    std::vector<double> x(static_cast<std::size_t>(n), 1.0 / std::sqrt(n));
    std::vector<double> y(static_cast<std::size_t>(n));
    double lambda = 0.0;
    for (int it = 0; it < max_iters; ++it) {
        for (int i = 0; i < n; ++i) {
            double s = sigma * x[static_cast<std::size_t>(i)];
            for (int j = 0; j < n; ++j) s += m(i, j) * x[static_cast<std::size_t>(j)];
            y[static_cast<std::size_t>(i)] = s;
        }
        double norm = 0.0;
        for (double v : y) norm += v * v;
        norm = std::sqrt(norm);
        if (norm == 0.0) return 0.0;
        double next = 0.0;
        for (int i = 0; i < n; ++i)
            next += x[static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(i)];
        for (int i = 0; i < n; ++i) x[static_cast<std::size_t>(i)] = y[static_cast<std::size_t>(i)] / norm;
        if (it > 4 && std::abs(next - lambda) <= tol * std::max(1.0, std::abs(next)))
            return next - sigma;
        lambda = next;
    }
    return lambda - sigma;
}

double naive_det(const abc::SymMatrix& m) {
    const int n = m.order();
    if (n == 0) return 1.0;
    if (n > 9) throw std::invalid_argument("naive_det: n too large");
    // cofactor expansion over the first row with a column mask
    struct Rec {
        const abc::SymMatrix& m;
        int n;
        double expand(int row, std::uint32_t cols) {
            if (cols == 0) return 1.0;
            double sum = 0.0;
            int sign = 1;
            std::uint32_t rest = cols;
            while (rest) {
                const int c = std::countr_zero(rest);
                rest &= rest - 1;
                const double a = m(row, c);
                if (a != 0.0)
                    sum += sign * a * expand(row + 1, cols & ~(std::uint32_t{1} << c));
                sign = -sign;
            }
            return sum;
        }
    } rec{m, n};
    return rec.expand(0, (std::uint32_t{1} << n) - 1);
}

}  // namespace oracle
