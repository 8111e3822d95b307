#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "isat/graph.hpp"

namespace isat {

// graph6: N(n) header then the upper-triangle adjacency bitmap in
// column-major order (x_01, x_02, x_12, x_03, ...), packed big-endian
// into 6-bit chunks, each offset by 63. Labels are not encoded.

inline std::string encode_graph6(const Graph& g) {
    const std::int64_t n = g.vertex_count();
    if (n >= (1LL << 36)) throw std::invalid_argument("graph6: graph too large");
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(63 + n));
    } else if (n <= 258047) {
        out.push_back(126);
        for (int shift = 12; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
    } else {
        out.push_back(126);
        out.push_back(126);
        for (int shift = 30; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
    }
    int acc = 0, bits = 0;
    for (int col = 1; col < n; ++col)
        for (int row = 0; row < col; ++row) {
            acc = (acc << 1) | (g.has_edge(row, col) ? 1 : 0);
            if (++bits == 6) {
                out.push_back(static_cast<char>(63 + acc));
                acc = 0;
                bits = 0;
            }
        }
    if (bits > 0) out.push_back(static_cast<char>(63 + (acc << (6 - bits))));
    return out;
}

inline Graph decode_graph6(std::string_view text) {
    // tolerate surrounding whitespace and the optional ">>graph6<<" header
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' '))
        text.remove_suffix(1);
    if (text.substr(0, 10) == ">>graph6<<") text.remove_prefix(10);
    if (text.empty()) throw parse_error("graph6: empty input");

    std::size_t pos = 0;
    auto next = [&]() -> int {
        if (pos >= text.size()) throw parse_error("graph6: truncated payload");
        const unsigned char c = static_cast<unsigned char>(text[pos++]);
        if (c < 63 || c > 126) throw parse_error("graph6: invalid character");
        return c - 63;
    };

    std::int64_t n;
    int first = next();
    if (first < 63) {
        n = first;
    } else {
        int second = next();
        int chunks = 3;
        std::int64_t acc = second;
        if (second == 63) {
            chunks = 6;
            acc = next();
        }
        for (int i = 1; i < chunks; ++i) acc = (acc << 6) | next();
        n = acc;
    }
    if (n >= (1LL << 36)) throw parse_error("graph6: vertex count out of range");

    Graph g(static_cast<int>(n));
    int acc = 0, bits = 0;
    for (int col = 1; col < n; ++col)
        for (int row = 0; row < col; ++row) {
            if (bits == 0) {
                acc = next();
                bits = 6;
            }
            if (acc & (1 << (bits - 1))) g.add_edge(row, col);
            --bits;
        }
    if (pos != text.size()) throw parse_error("graph6: trailing characters");
    return g;
}

}  // namespace isat
