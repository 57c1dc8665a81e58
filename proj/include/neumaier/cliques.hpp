#pragma once

#include <optional>
#include <vector>

#include "neumaier/graph.hpp"

namespace neumaier {

// A clique found to be e-regular: every outside vertex has exactly e > 0
// neighbors inside.
struct CliqueCertificate {
    vset vertices = 0;
    int e = 0;

    int size() const { return popcount(vertices); }
};

// All maximal cliques, each once, sorted so the clique whose sorted member
// list is lexicographically smallest comes first.
std::vector<vset> enumerate_maximal_cliques(const Graph& g);

// e if every vertex outside s has exactly e > 0 neighbors in s, else nothing.
std::optional<int> clique_regularity(const Graph& g, vset s);

// Certificates for every maximal clique that is e-regular.  Requires a valid,
// non-complete graph (a complete graph has no outside vertices to count).
std::vector<CliqueCertificate> find_regular_cliques(const Graph& g);

int max_clique_size(const Graph& g);

}  // namespace neumaier
