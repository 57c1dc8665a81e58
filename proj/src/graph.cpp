#include "neumaier/graph.hpp"

namespace neumaier {

void validate(const Graph& g) {
    if (g.n < 1 || g.n > max_vertices) throw GraphError("graph order out of range");
    if (static_cast<int>(g.adj.size()) != g.n) throw GraphError("adjacency row count mismatch");
    for (int u = 0; u < g.n; ++u) {
        if (g.adj[u] & ~all_below(g.n)) throw GraphError("adjacency bit beyond vertex count");
        if (g.adj[u] & bit(u)) throw GraphError("loop at vertex " + std::to_string(u));
        for_each_vertex(g.adj[u], [&](int w) {
            if (!g.has_edge(w, u)) throw GraphError("asymmetric adjacency");
        });
    }
}

Graph complement(const Graph& g) {
    Graph c(g.n);
    for (int u = 0; u < g.n; ++u) c.adj[u] = all_below(g.n) & ~g.adj[u] & ~bit(u);
    return c;
}

std::vector<std::pair<int, int>> edge_list(const Graph& g) {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < g.n; ++u)
        for_each_vertex(g.adj[u] & ~all_below(u + 1), [&](int w) { out.emplace_back(u, w); });
    return out;
}

}  // namespace neumaier
