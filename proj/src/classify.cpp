#include "neumaier/classify.hpp"

namespace neumaier {

RegularityProfile regularity_profile(const Graph& g) {
    if (g.n < 2) throw GraphError("profile needs at least two vertices");
    RegularityProfile p;
    bool regular = true;
    int k = g.degree(0);
    for (int u = 1; u < g.n; ++u)
        if (g.degree(u) != k) regular = false;
    if (regular) p.is_regular = k;

    for (int u = 0; u < g.n; ++u)
        for (int w = u + 1; w < g.n; ++w) {
            int c = g.common_neighbors(u, w);
            if (g.has_edge(u, w))
                ++p.lambda_values[c];
            else
                ++p.mu_values[c];
        }
    if (regular && p.lambda_values.size() == 1)
        p.edge_regular_lambda = p.lambda_values.begin()->first;
    if (regular && p.mu_values.size() == 1)
        p.co_edge_regular_mu = p.mu_values.begin()->first;
    return p;
}

const char* to_string(NeumaierTag tag) {
    switch (tag) {
        case NeumaierTag::NotEdgeRegular: return "NotEdgeRegular";
        case NeumaierTag::EdgeRegularNoRegularClique: return "EdgeRegularNoRegularClique";
        case NeumaierTag::NeumaierStronglyRegular: return "NeumaierStronglyRegular";
        case NeumaierTag::StrictlyNeumaier: return "StrictlyNeumaier";
    }
    return "?";
}

namespace {

NeumaierVerdict::Witness not_edge_regular_witness(const Graph& g,
                                                  const RegularityProfile& p) {
    if (!p.is_regular) {
        int k0 = g.degree(0);
        for (int u = 1; u < g.n; ++u)
            if (g.degree(u) != k0) return {0, u, g.common_neighbors(0, u)};
    }
    // regular but lambda varies (or no edges at all never reaches here:
    // lambda_values empty only for edgeless graphs, caught by caller)
    int first = -1;
    for (int u = 0; u < g.n; ++u)
        for (int w = u + 1; w < g.n; ++w)
            if (g.has_edge(u, w)) {
                int c = g.common_neighbors(u, w);
                if (first < 0)
                    first = c;
                else if (c != first)
                    return {u, w, c};
            }
    return {0, 1, g.common_neighbors(0, 1)};
}

NeumaierVerdict::Witness no_regular_clique_witness(const Graph& g) {
    auto cliques = enumerate_maximal_cliques(g);
    vset best = 0;
    for (vset c : cliques)
        if (popcount(c) > popcount(best)) best = c;
    int u_min = -1, u_max = -1, c_min = g.n + 1, c_max = -1;
    for_each_vertex(all_below(g.n) & ~best, [&](int u) {
        int c = popcount(g.adj[u] & best);
        if (c < c_min) { c_min = c; u_min = u; }
        if (c > c_max) { c_max = c; u_max = u; }
    });
    return {u_min, u_max, c_min};
}

}  // namespace

NeumaierVerdict classify(const Graph& g) {
    validate(g);
    if (g.n < 4) throw GraphError("classification requires at least 4 vertices");
    if (g.is_complete()) throw CompleteGraphError("classification undefined on complete graphs");

    NeumaierVerdict verdict;
    verdict.profile = regularity_profile(g);
    verdict.v = g.n;

    if (!verdict.profile.edge_regular_lambda) {
        verdict.tag = NeumaierTag::NotEdgeRegular;
        if (verdict.profile.lambda_values.empty())
            verdict.witness = NeumaierVerdict::Witness{0, 1, g.common_neighbors(0, 1)};
        else
            verdict.witness = not_edge_regular_witness(g, verdict.profile);
        return verdict;
    }

    verdict.k = *verdict.profile.is_regular;
    verdict.lambda = *verdict.profile.edge_regular_lambda;
    verdict.regular_cliques = find_regular_cliques(g);

    if (verdict.regular_cliques.empty()) {
        verdict.tag = NeumaierTag::EdgeRegularNoRegularClique;
        verdict.witness = no_regular_clique_witness(g);
        return verdict;
    }

    // Neumaier: all regular cliques must share e and size s, s = max clique
    verdict.e = verdict.regular_cliques.front().e;
    verdict.s = verdict.regular_cliques.front().size();
    for (const auto& c : verdict.regular_cliques)
        if (c.e != verdict.e || c.size() != verdict.s)
            throw std::logic_error("regular cliques disagree in a Neumaier graph");
    if (verdict.s != max_clique_size(g))
        throw std::logic_error("regular clique smaller than the maximum clique");

    verdict.tag = verdict.profile.co_edge_regular_mu ? NeumaierTag::NeumaierStronglyRegular
                                                     : NeumaierTag::StrictlyNeumaier;
    return verdict;
}

}  // namespace neumaier
