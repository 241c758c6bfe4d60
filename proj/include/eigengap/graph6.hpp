// graph6 text codec (the standard bit-packed upper-triangle encoding used by
// small-graph corpora).  Layout: size header N(n), then the upper triangle in
// column order x(0,1), x(0,2), x(1,2), x(0,3), ... packed six bits per
// printable character 63..126, zero-padded to a character boundary.

#pragma once

#include "eigengap/graph.hpp"

#include <cstdint>
#include <fstream>
#include <string>
#include <string_view>
#include <vector>

namespace eigengap {

namespace g6 {
constexpr int kLow = 63;
constexpr int kHigh = 126;
constexpr std::uint64_t kMaxOrder = (1ull << 36) - 1;
}  // namespace g6

inline std::string graph6_encode(const Graph& g) {
    const std::uint64_t n = static_cast<std::uint64_t>(g.order());
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + g6::kLow));
    } else if (n <= 258047) {
        out.push_back(126);
        out.push_back(static_cast<char>(((n >> 12) & 63) + g6::kLow));
        out.push_back(static_cast<char>(((n >> 6) & 63) + g6::kLow));
        out.push_back(static_cast<char>((n & 63) + g6::kLow));
    } else if (n <= g6::kMaxOrder) {
        out.push_back(126);
        out.push_back(126);
        for (int shift = 30; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63) + g6::kLow));
    } else {
        throw Error("graph6: order too large to encode");
    }
    int acc = 0, nbits = 0;
    for (std::uint64_t v = 1; v < n; ++v) {
        for (std::uint64_t u = 0; u < v; ++u) {
            acc = (acc << 1) | (g.has_edge(static_cast<int>(u), static_cast<int>(v)) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(acc + g6::kLow));
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + g6::kLow));
    return out;
}

inline Graph graph6_decode(std::string_view s) {
    if (s.empty()) throw Error("graph6: empty input");
    for (char c : s)
        if (c < g6::kLow || c > g6::kHigh)
            throw Error("graph6: character out of range 63..126");

    size_t pos = 0;
    std::uint64_t n = 0;
    if (s[0] != 126) {
        n = static_cast<std::uint64_t>(s[0]) - g6::kLow;
        pos = 1;
    } else if (s.size() >= 2 && s[1] != 126) {
        if (s.size() < 4) throw Error("graph6: truncated 3-byte order header");
        n = 0;
        for (size_t i = 1; i <= 3; ++i) n = (n << 6) | (static_cast<std::uint64_t>(s[i]) - g6::kLow);
        pos = 4;
    } else {
        if (s.size() < 8) throw Error("graph6: truncated 6-byte order header");
        n = 0;
        for (size_t i = 2; i <= 7; ++i) n = (n << 6) | (static_cast<std::uint64_t>(s[i]) - g6::kLow);
        pos = 8;
    }
    if (n < 1) throw Error("graph6: order must be >= 1");
    if (n > (1u << 20)) throw Error("graph6: order beyond supported in-memory size");

    const std::uint64_t nbits = n * (n - 1) / 2;
    const std::uint64_t nchars = (nbits + 5) / 6;
    if (s.size() - pos != nchars)
        throw Error("graph6: body length mismatch (expected " + std::to_string(nchars) +
                    " characters, got " + std::to_string(s.size() - pos) + ")");

    Graph g(static_cast<int>(n));
    std::uint64_t bit = 0;
    for (std::uint64_t v = 1; v < n; ++v) {
        for (std::uint64_t u = 0; u < v; ++u, ++bit) {
            int c = s[pos + bit / 6] - g6::kLow;
            if ((c >> (5 - bit % 6)) & 1) g.add_edge(static_cast<int>(u), static_cast<int>(v));
        }
    }
    // padding bits must be zero
    for (std::uint64_t b = nbits; b < nchars * 6; ++b) {
        int c = s[pos + b / 6] - g6::kLow;
        if ((c >> (5 - b % 6)) & 1) throw Error("graph6: nonzero trailing padding bits");
    }
    return g;
}

// Newline-delimited graph6 corpus files; '>>graph6<<' style headers are not
// used by our corpora, blank lines are skipped.
template <class F>
void for_each_graph6_line(std::istream& in, F&& f) {
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
        if (line.empty()) continue;
        try {
            f(graph6_decode(line), line);
        } catch (const Error& e) {
            throw Error("line " + std::to_string(lineno) + ": " + e.what());
        }
    }
}

inline std::vector<Graph> read_graph6_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open corpus file: " + path);
    std::vector<Graph> gs;
    for_each_graph6_line(in, [&](Graph g, const std::string&) { gs.push_back(std::move(g)); });
    return gs;
}

}  // namespace eigengap
