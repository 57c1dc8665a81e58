#include "neumaier/cliques.hpp"

#include <algorithm>

namespace neumaier {

namespace {

void expand(const Graph& g, vset r, vset p, vset x, std::vector<vset>& out) {
    if (!p && !x) {
        out.push_back(r);
        return;
    }
    // pivot: vertex of P|X with most neighbors in P
    int pivot = -1, best = -1;
    for_each_vertex(p | x, [&](int u) {
        int c = popcount(g.adj[u] & p);
        if (c > best) {
            best = c;
            pivot = u;
        }
    });
    vset cand = p & ~g.adj[pivot];
    for_each_vertex(cand, [&](int v) {
        expand(g, r | bit(v), p & g.adj[v], x & g.adj[v], out);
        p &= ~bit(v);
        x |= bit(v);
    });
}

// lexicographic order on ascending member lists, not on raw masks
bool member_less(vset a, vset b) {
    while (a && b) {
        int va = lowest(a), vb = lowest(b);
        if (va != vb) return va < vb;
        a &= a - 1;
        b &= b - 1;
    }
    return !a && b;
}

}  // namespace

std::vector<vset> enumerate_maximal_cliques(const Graph& g) {
    std::vector<vset> out;
    expand(g, 0, all_below(g.n), 0, out);
    std::sort(out.begin(), out.end(), member_less);
    return out;
}

std::optional<int> clique_regularity(const Graph& g, vset s) {
    vset outside = all_below(g.n) & ~s;
    if (!outside) return std::nullopt;
    int e = -1;
    bool uniform = true;
    for_each_vertex(outside, [&](int u) {
        int c = popcount(g.adj[u] & s);
        if (e < 0)
            e = c;
        else if (c != e)
            uniform = false;
    });
    if (!uniform || e <= 0) return std::nullopt;
    return e;
}

std::vector<CliqueCertificate> find_regular_cliques(const Graph& g) {
    if (g.is_complete()) throw GraphError("complete graph has no outside vertices");
    std::vector<CliqueCertificate> out;
    for (vset c : enumerate_maximal_cliques(g))
        if (auto e = clique_regularity(g, c)) out.push_back({c, *e});
    return out;
}

int max_clique_size(const Graph& g) {
    int best = 0;
    for (vset c : enumerate_maximal_cliques(g)) best = std::max(best, popcount(c));
    return best;
}

}  // namespace neumaier
