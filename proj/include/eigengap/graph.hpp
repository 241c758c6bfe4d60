// Undirected simple graphs on vertices 0..n-1 with bitset adjacency rows,
// the named generator families, BFS metrics (distances, diameter,
// connectivity), bipartiteness with an auditable certificate, exact walk
// counts, and the plain edge-list text format.

#pragma once

#include "eigengap/bigfloat.hpp"

#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace eigengap {

class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : n_(n), words_((n + 63) / 64), bits_(static_cast<size_t>(n) * words_, 0) {
        if (n < 1) throw Error("graph order must be >= 1");
    }

    int order() const { return n_; }
    int word_count() const { return words_; }

    bool has_edge(int u, int v) const {
        return (bits_[static_cast<size_t>(u) * words_ + v / 64] >> (v % 64)) & 1u;
    }
    void add_edge(int u, int v) {
        check_pair(u, v);
        bits_[static_cast<size_t>(u) * words_ + v / 64] |= 1ull << (v % 64);
        bits_[static_cast<size_t>(v) * words_ + u / 64] |= 1ull << (u % 64);
    }
    void remove_edge(int u, int v) {
        check_pair(u, v);
        bits_[static_cast<size_t>(u) * words_ + v / 64] &= ~(1ull << (v % 64));
        bits_[static_cast<size_t>(v) * words_ + u / 64] &= ~(1ull << (u % 64));
    }

    const std::uint64_t* row(int v) const { return bits_.data() + static_cast<size_t>(v) * words_; }

    int degree(int v) const {
        int d = 0;
        for (int w = 0; w < words_; ++w) d += __builtin_popcountll(row(v)[w]);
        return d;
    }

    int edge_count() const {
        int total = 0;
        for (int v = 0; v < n_; ++v) total += degree(v);
        return total / 2;
    }

    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> e;
        for (int u = 0; u < n_; ++u)
            for (int v = u + 1; v < n_; ++v)
                if (has_edge(u, v)) e.emplace_back(u, v);
        return e;
    }

    bool operator==(const Graph& o) const {
        return n_ == o.n_ && bits_ == o.bits_;
    }

private:
    void check_pair(int u, int v) const {
        if (u < 0 || v < 0 || u >= n_ || v >= n_)
            throw Error("vertex out of range: (" + std::to_string(u) + "," + std::to_string(v) + ")");
        if (u == v)
            throw Error("self-loop rejected: (" + std::to_string(u) + "," + std::to_string(v) + ")");
    }

    int n_ = 0;
    int words_ = 0;
    std::vector<std::uint64_t> bits_;
};

inline Graph build_graph(int n, const std::vector<std::pair<int, int>>& edge_list) {
    Graph g(n);
    for (auto [u, v] : edge_list) g.add_edge(u, v);  // duplicates collapse in the bitset
    return g;
}

// --- generator families (canonical vertex numbering documented per family) ---

// K_s on vertices 0..s-1.
inline Graph complete_graph(int s) {
    if (s < 1) throw Error("complete: order must be >= 1");
    Graph g(s);
    for (int u = 0; u < s; ++u)
        for (int v = u + 1; v < s; ++v) g.add_edge(u, v);
    return g;
}

// K_{a,b}; part A = 0..a-1, part B = a..a+b-1.
inline Graph complete_bipartite_graph(int a, int b) {
    if (a < 1 || b < 1) throw Error("complete_bipartite: both part sizes must be >= 1");
    Graph g(a + b);
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) g.add_edge(u, a + v);
    return g;
}

// Path 0-1-...-(n-1).
inline Graph path_graph(int n) {
    if (n < 1) throw Error("path: order must be >= 1");
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

// Cycle 0-1-...-(n-1)-0.
inline Graph cycle_graph(int n) {
    if (n < 3) throw Error("cycle: order must be >= 3");
    Graph g(n);
    for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    return g;
}

// Star K_{1,n-1}; center 0, leaves 1..n-1.
inline Graph star_graph(int n) {
    if (n < 2) throw Error("star: order must be >= 2");
    Graph g(n);
    for (int v = 1; v < n; ++v) g.add_edge(0, v);
    return g;
}

inline Graph generate(const std::string& family, const std::vector<long>& params) {
    auto need = [&](size_t k) {
        if (params.size() != k)
            throw Error("family '" + family + "' takes " + std::to_string(k) + " parameter(s)");
    };
    if (family == "complete") { need(1); return complete_graph(static_cast<int>(params[0])); }
    if (family == "complete_bipartite") {
        need(2);
        return complete_bipartite_graph(static_cast<int>(params[0]), static_cast<int>(params[1]));
    }
    if (family == "path") { need(1); return path_graph(static_cast<int>(params[0])); }
    if (family == "cycle") { need(1); return cycle_graph(static_cast<int>(params[0])); }
    if (family == "star") { need(1); return star_graph(static_cast<int>(params[0])); }
    throw Error("unknown graph family: " + family);
}

// --- BFS queries -------------------------------------------------------------

struct DistanceMatrix {
    static constexpr int kUnreachable = -1;

    int n = 0;
    std::vector<int> d;  // n*n, kUnreachable marks disconnected pairs

    int at(int u, int v) const { return d[static_cast<size_t>(u) * n + v]; }
    bool finite(int u, int v) const { return at(u, v) >= 0; }
};

inline void bfs_from(const Graph& g, int src, int* dist) {
    const int n = g.order();
    for (int v = 0; v < n; ++v) dist[v] = DistanceMatrix::kUnreachable;
    dist[src] = 0;
    std::vector<int> frontier{src}, next;
    int level = 0;
    while (!frontier.empty()) {
        ++level;
        next.clear();
        for (int u : frontier) {
            const std::uint64_t* row = g.row(u);
            for (int w = 0; w < g.word_count(); ++w) {
                std::uint64_t bitsw = row[w];
                while (bitsw) {
                    int v = w * 64 + __builtin_ctzll(bitsw);
                    bitsw &= bitsw - 1;
                    if (dist[v] < 0) {
                        dist[v] = level;
                        next.push_back(v);
                    }
                }
            }
        }
        frontier.swap(next);
    }
}

inline DistanceMatrix all_pairs_distances(const Graph& g) {
    DistanceMatrix m;
    m.n = g.order();
    m.d.assign(static_cast<size_t>(m.n) * m.n, DistanceMatrix::kUnreachable);
    for (int s = 0; s < m.n; ++s) bfs_from(g, s, m.d.data() + static_cast<size_t>(s) * m.n);
    return m;
}

inline bool is_connected(const Graph& g) {
    std::vector<int> dist(g.order());
    bfs_from(g, 0, dist.data());
    for (int v = 0; v < g.order(); ++v)
        if (dist[v] < 0) return false;
    return true;
}

// Diameter of a connected graph; nullopt when disconnected (never a sentinel).
inline std::optional<int> diameter(const Graph& g) {
    int best = 0;
    std::vector<int> dist(g.order());
    for (int s = 0; s < g.order(); ++s) {
        bfs_from(g, s, dist.data());
        for (int v = 0; v < g.order(); ++v) {
            if (dist[v] < 0) return std::nullopt;
            best = std::max(best, dist[v]);
        }
    }
    return best;
}

struct GraphStats {
    int n = 0;
    int m = 0;
    int max_degree = 0;
    int min_degree = 0;
    bool is_regular = false;
    bool is_connected = false;
    bool is_bipartite = false;
    std::optional<int> diameter;
    // Certificate: a proper 2-coloring when bipartite, otherwise an odd closed
    // walk (vertex sequence, first = last, odd number of edges).
    std::vector<int> coloring;
    std::vector<int> odd_closed_walk;
};

inline GraphStats structure_flags(const Graph& g) {
    const int n = g.order();
    GraphStats s;
    s.n = n;
    s.m = g.edge_count();
    s.max_degree = 0;
    s.min_degree = n;
    for (int v = 0; v < n; ++v) {
        int d = g.degree(v);
        s.max_degree = std::max(s.max_degree, d);
        s.min_degree = std::min(s.min_degree, d);
    }
    s.is_regular = (s.max_degree == s.min_degree);

    // 2-coloring BFS over all components; remembers parents for the odd-walk
    // certificate.
    std::vector<int> color(n, -1), parent(n, -1);
    s.is_bipartite = true;
    int odd_u = -1, odd_v = -1;
    for (int root = 0; root < n && s.is_bipartite; ++root) {
        if (color[root] >= 0) continue;
        color[root] = 0;
        std::vector<int> frontier{root};
        while (!frontier.empty() && s.is_bipartite) {
            std::vector<int> next;
            for (int u : frontier) {
                const std::uint64_t* row = g.row(u);
                for (int w = 0; w < g.word_count() && s.is_bipartite; ++w) {
                    std::uint64_t bitsw = row[w];
                    while (bitsw) {
                        int v = w * 64 + __builtin_ctzll(bitsw);
                        bitsw &= bitsw - 1;
                        if (color[v] < 0) {
                            color[v] = color[u] ^ 1;
                            parent[v] = u;
                            next.push_back(v);
                        } else if (color[v] == color[u]) {
                            s.is_bipartite = false;
                            odd_u = u;
                            odd_v = v;
                            break;
                        }
                    }
                }
            }
            frontier.swap(next);
        }
    }
    if (s.is_bipartite) {
        s.coloring = color;
    } else {
        // Tree paths from odd_u and odd_v to their common ancestor plus the
        // edge (odd_u, odd_v) close an odd walk.
        std::vector<int> pu{odd_u}, pv{odd_v};
        for (int x = odd_u; parent[x] >= 0; x = parent[x]) pu.push_back(parent[x]);
        for (int x = odd_v; parent[x] >= 0; x = parent[x]) pv.push_back(parent[x]);
        // strip the shared tail
        while (pu.size() > 1 && pv.size() > 1 && pu[pu.size() - 2] == pv[pv.size() - 2]) {
            pu.pop_back();
            pv.pop_back();
        }
        // closed walk lca -> ... -> odd_u -> odd_v -> ... -> lca
        std::vector<int> walk(pu.rbegin(), pu.rend());
        walk.insert(walk.end(), pv.begin(), pv.end());
        s.odd_closed_walk = walk;
    }

    std::vector<int> dist(n);
    bfs_from(g, 0, dist.data());
    s.is_connected = true;
    for (int v = 0; v < n; ++v)
        if (dist[v] < 0) s.is_connected = false;
    if (s.is_connected) s.diameter = diameter(g);
    return s;
}

// Number of walks of k vertices (k-1 edges), exact: the grand sum of A^{k-1}.
inline mpz_class count_walks(const Graph& g, long k) {
    if (k < 1) throw Error("count_walks: k must be >= 1");
    const int n = g.order();
    std::vector<mpz_class> v(n, 1), next(n);
    for (long step = 1; step < k; ++step) {
        for (int u = 0; u < n; ++u) {
            mpz_class acc = 0;
            const std::uint64_t* row = g.row(u);
            for (int w = 0; w < g.word_count(); ++w) {
                std::uint64_t bitsw = row[w];
                while (bitsw) {
                    int x = w * 64 + __builtin_ctzll(bitsw);
                    bitsw &= bitsw - 1;
                    acc += v[x];
                }
            }
            next[u] = acc;
        }
        v.swap(next);
    }
    mpz_class total = 0;
    for (int u = 0; u < n; ++u) total += v[u];
    return total;
}

// --- edge subset helpers ------------------------------------------------------

inline bool is_edge_subset(const Graph& h, const Graph& g) {
    if (h.order() != g.order()) return false;
    for (auto [u, v] : h.edges())
        if (!g.has_edge(u, v)) return false;
    return true;
}

inline Graph delete_edge_copy(const Graph& g, int u, int v) {
    Graph h = g;
    h.remove_edge(u, v);
    return h;
}

// --- plain text edge-list format: "n m" header then one "u v" line per edge ---

inline Graph parse_edge_list(std::istream& in) {
    int n = 0, m = 0;
    if (!(in >> n >> m)) throw Error("edge list: malformed header, expected 'n m'");
    Graph g(n);
    for (int i = 0; i < m; ++i) {
        int u = 0, v = 0;
        if (!(in >> u >> v)) throw Error("edge list: expected " + std::to_string(m) + " edges");
        g.add_edge(u, v);
    }
    return g;
}

inline Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    return parse_edge_list(in);
}

inline std::string format_edge_list(const Graph& g) {
    std::ostringstream out;
    auto e = g.edges();
    out << g.order() << " " << e.size() << "\n";
    for (auto [u, v] : e) out << u << " " << v << "\n";
    return out.str();
}

}  // namespace eigengap
