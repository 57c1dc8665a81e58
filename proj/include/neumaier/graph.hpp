#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace neumaier {

// Vertex sets are single machine words: the library caps graphs at 64
// vertices so every neighborhood operation is one AND/OR plus a popcount.
using vset = std::uint64_t;

constexpr int max_vertices = 64;

inline int popcount(vset s) { return std::popcount(s); }
inline int lowest(vset s) { return std::countr_zero(s); }
inline vset bit(int v) { return vset{1} << v; }
inline vset all_below(int n) { return n >= 64 ? ~vset{0} : (vset{1} << n) - 1; }

// Iterate the members of a vertex set in increasing order.
template <typename F>
void for_each_vertex(vset s, F&& f) {
    while (s) {
        int v = std::countr_zero(s);
        s &= s - 1;
        f(v);
    }
}

inline std::vector<int> set_members(vset s) {
    std::vector<int> out;
    for_each_vertex(s, [&](int v) { out.push_back(v); });
    return out;
}

struct GraphError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Simple undirected graph on at most 64 vertices, one bitmask row per vertex.
// Rows stay symmetric and loop-free; all mutation goes through add/remove.
struct Graph {
    int n = 0;
    std::vector<vset> adj;

    Graph() = default;
    explicit Graph(int n_) : n(n_), adj(n_, 0) {
        if (n_ < 1 || n_ > max_vertices)
            throw GraphError("graph order must be between 1 and 64");
    }

    bool has_edge(int u, int w) const { return (adj[u] >> w) & 1; }

    void add_edge(int u, int w) {
        if (u == w) throw GraphError("loops are not allowed");
        adj[u] |= bit(w);
        adj[w] |= bit(u);
    }

    void remove_edge(int u, int w) {
        adj[u] &= ~bit(w);
        adj[w] &= ~bit(u);
    }

    int degree(int u) const { return popcount(adj[u]); }

    long edge_count() const {
        long total = 0;
        for (int u = 0; u < n; ++u) total += degree(u);
        return total / 2;
    }

    int common_neighbors(int u, int w) const { return popcount(adj[u] & adj[w]); }

    bool is_clique(vset s) const {
        bool ok = true;
        for_each_vertex(s, [&](int v) {
            if ((s & ~bit(v)) & ~adj[v]) ok = false;
        });
        return ok;
    }

    bool is_complete() const {
        for (int u = 0; u < n; ++u)
            if (adj[u] != (all_below(n) & ~bit(u))) return false;
        return true;
    }

    bool operator==(const Graph&) const = default;
};

// Throws GraphError unless adjacency is symmetric, loop-free and within range.
void validate(const Graph& g);

Graph complement(const Graph& g);

std::vector<std::pair<int, int>> edge_list(const Graph& g);

}  // namespace neumaier
