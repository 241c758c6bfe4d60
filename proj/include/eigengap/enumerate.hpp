// Exhaustive enumeration of labeled connected simple graphs on n <= 7
// vertices (every edge mask of the C(n,2) possible edges, filtered by
// connectivity, in increasing mask order) plus a seeded random connected
// graph generator for property sweeps.  Larger corpora come in as graph6
// files instead.

#pragma once

#include "eigengap/graph.hpp"

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace eigengap {

constexpr int kMaxEnumerationOrder = 7;

// Edge index order is lexicographic by (u,v), u < v:
// (0,1),(0,2),...,(0,n-1),(1,2),...
inline std::vector<std::pair<int, int>> edge_index_pairs(int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    return pairs;
}

inline Graph graph_from_edge_mask(int n, std::uint32_t mask) {
    auto pairs = edge_index_pairs(n);
    Graph g(n);
    for (size_t i = 0; i < pairs.size(); ++i)
        if ((mask >> i) & 1u) g.add_edge(pairs[i].first, pairs[i].second);
    return g;
}

namespace detail {
// Connectivity on the small adjacency rows (n <= 7) without building a Graph.
inline bool mask_connected(int n, std::uint32_t mask, const std::pair<int, int>* pairs, int m) {
    std::uint8_t adj[8] = {0};
    for (int i = 0; i < m; ++i)
        if ((mask >> i) & 1u) {
            adj[pairs[i].first] |= static_cast<std::uint8_t>(1u << pairs[i].second);
            adj[pairs[i].second] |= static_cast<std::uint8_t>(1u << pairs[i].first);
        }
    std::uint8_t seen = 1, frontier = 1;
    while (frontier) {
        std::uint8_t next = 0;
        while (frontier) {
            int v = __builtin_ctz(frontier);
            frontier &= static_cast<std::uint8_t>(frontier - 1);
            next |= adj[v];
        }
        frontier = next & static_cast<std::uint8_t>(~seen);
        seen |= next;
    }
    return seen == static_cast<std::uint8_t>((1u << n) - 1);
}
}  // namespace detail

// Visits every labeled connected graph on n vertices whose edge mask lies in
// [mask_begin, mask_end); f(mask, graph).  Range form exists so sweeps can
// partition the mask space across workers.
template <class F>
void enumerate_connected_range(int n, std::uint32_t mask_begin, std::uint32_t mask_end, F&& f) {
    if (n < 1 || n > kMaxEnumerationOrder)
        throw Error("enumerate_connected supports 1 <= n <= 7; supply a graph6 corpus file for larger orders");
    auto pairs = edge_index_pairs(n);
    const int m = static_cast<int>(pairs.size());
    for (std::uint32_t mask = mask_begin; mask < mask_end; ++mask) {
        if (!detail::mask_connected(n, mask, pairs.data(), m)) continue;
        f(mask, graph_from_edge_mask(n, mask));
    }
}

template <class F>
void enumerate_connected(int n, F&& f) {
    auto pairs = edge_index_pairs(n);
    std::uint32_t total = 1u << pairs.size();
    enumerate_connected_range(n, 0, total, [&](std::uint32_t, const Graph& g) { f(g); });
}

inline long count_connected(int n) {
    long count = 0;
    enumerate_connected(n, [&](const Graph&) { ++count; });
    return count;
}

// Random connected graph: a random spanning tree (random attachment) plus
// each remaining pair independently with probability p.  Deterministic for a
// fixed seed.
inline Graph random_connected_graph(int n, double p, std::mt19937_64& rng) {
    if (n < 1) throw Error("random_connected_graph: order must be >= 1");
    Graph g(n);
    for (int v = 1; v < n; ++v) {
        std::uniform_int_distribution<int> pick(0, v - 1);
        g.add_edge(v, pick(rng));
    }
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.has_edge(u, v) && coin(rng) < p) g.add_edge(u, v);
    return g;
}

}  // namespace eigengap
