#include "abc/graph6.hpp"

#include <cstddef>

#include "abc/errors.hpp"

namespace abc {

namespace {

constexpr int kBias = 63;

bool printable(unsigned char c) { return c >= 63 && c <= 126; }

}  // namespace

Graph from_graph6(std::string_view text) {
    if (text.empty()) throw parse_error("empty graph6 input", 0);

    std::size_t pos = 0;
    long long n = 0;
    unsigned char c0 = static_cast<unsigned char>(text[0]);
    if (!printable(c0)) throw parse_error("invalid graph6 byte", 0);
    if (c0 != 126) {
        n = c0 - kBias;
        pos = 1;
    } else {
        // 126 prefix: 18-bit order in the next three bytes (the 126 126
        // 36-bit form is beyond this library's sizes).
        if (text.size() >= 2 && static_cast<unsigned char>(text[1]) == 126)
            throw parse_error("graph6 orders above 258047 are not supported", 1);
        if (text.size() < 4) throw parse_error("truncated graph6 header", text.size());
        n = 0;
        for (std::size_t i = 1; i <= 3; ++i) {
            unsigned char c = static_cast<unsigned char>(text[i]);
            if (!printable(c)) throw parse_error("invalid graph6 header byte", i);
            n = (n << 6) | (c - kBias);
        }
        pos = 4;
    }

    const long long pairs = n * (n - 1) / 2;
    const std::size_t body = static_cast<std::size_t>((pairs + 5) / 6);
    if (text.size() - pos < body)
        throw parse_error("truncated graph6 bitstream", text.size());
    if (text.size() - pos > body)
        throw parse_error("trailing bytes after graph6 bitstream", pos + body);

    Graph g(static_cast<int>(n));
    long long bit = 0;
    int word = 0, have = 0;
    std::size_t at = pos;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            if (have == 0) {
                unsigned char c = static_cast<unsigned char>(text[at]);
                if (!printable(c)) throw parse_error("invalid graph6 byte", at);
                word = c - kBias;
                have = 6;
                ++at;
            }
            if (word & (1 << (have - 1))) g.add_edge(i, j);
            --have;
            ++bit;
        }
    }
    if (have > 0 && (word & ((1 << have) - 1)) != 0)
        throw parse_error("nonzero graph6 padding bits", at - 1);
    return g;
}

std::string to_graph6(const Graph& g) {
    const long long n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kBias));
    } else if (n <= 258047) {
        out.push_back(static_cast<char>(126));
        out.push_back(static_cast<char>(((n >> 12) & 0x3f) + kBias));
        out.push_back(static_cast<char>(((n >> 6) & 0x3f) + kBias));
        out.push_back(static_cast<char>((n & 0x3f) + kBias));
    } else {
        throw capacity_error("to_graph6: order above 258047");
    }

    int word = 0, have = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            word = (word << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++have == 6) {
                out.push_back(static_cast<char>(word + kBias));
                word = 0;
                have = 0;
            }
        }
    }
    if (have > 0) out.push_back(static_cast<char>((word << (6 - have)) + kBias));
    return out;
}

std::vector<Graph> read_graph6_lines(std::string_view text) {
    std::vector<Graph> out;
    std::size_t start = 0;
    while (start < text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(start, end - start);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (line.empty()) throw parse_error("blank graph6 line", start);
        out.push_back(from_graph6(line));
        start = end + 1;
    }
    return out;
}

}  // namespace abc
