#ifndef QEXTREMAL_GRAPH6_HPP
#define QEXTREMAL_GRAPH6_HPP

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qextremal/errors.hpp"
#include "qextremal/graph.hpp"

namespace qext {

// graph6 short form: byte n+63, then the upper-triangle bits in column-major
// order (pairs (0,1), (0,2), (1,2), (0,3), ...), packed 6 per byte MSB first,
// zero-padded, each byte offset by 63.
inline std::string graph6_encode(const Graph& g) {
    int n = g.vertex_count();
    if (n > 62) throw capacity_error("graph6 short form caps at 62 vertices, got " + std::to_string(n));
    std::string out;
    out.push_back(static_cast<char>(n + 63));
    int acc = 0, nbits = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row) {
            acc = (acc << 1) | (g.has_edge(row, col) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
    return out;
}

inline Graph graph6_decode(std::string_view text) {
    if (text.empty()) throw parse_error("empty graph6 text", 0);
    int c0 = static_cast<unsigned char>(text[0]);
    if (c0 < 63 || c0 > 125) throw parse_error("bad graph6 order byte", 0);
    int n = c0 - 63;
    if (n < 1) throw parse_error("graph6 order 0 not supported", 0);
    std::size_t need = (static_cast<std::size_t>(n) * (n - 1) / 2 + 5) / 6;
    if (text.size() < 1 + need) throw parse_error("truncated graph6 text", text.size());
    if (text.size() > 1 + need) throw parse_error("trailing bytes after graph6 payload", 1 + need);

    std::vector<std::pair<int, int>> edges;
    std::size_t byte_idx = 1;
    int acc = 0, nbits = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row) {
            if (nbits == 0) {
                int c = static_cast<unsigned char>(text[byte_idx]);
                if (c < 63 || c > 126) throw parse_error("bad graph6 payload byte", byte_idx);
                acc = c - 63;
                nbits = 6;
                ++byte_idx;
            }
            if ((acc >> (nbits - 1)) & 1) edges.emplace_back(row, col);
            --nbits;
        }
    }
    return build_graph(n, std::span<const std::pair<int, int>>(edges));
}

}  // namespace qext

#endif
