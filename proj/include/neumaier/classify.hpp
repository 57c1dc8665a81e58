#pragma once

#include <map>
#include <optional>
#include <vector>

#include "neumaier/cliques.hpp"
#include "neumaier/graph.hpp"

namespace neumaier {

// Degree and common-neighbor statistics over all vertex pairs.
// lambda_values / mu_values are histograms (count value -> number of pairs)
// over adjacent / non-adjacent pairs.
struct RegularityProfile {
    std::optional<int> is_regular;
    std::optional<int> edge_regular_lambda;   // regular + non-empty + single value
    std::optional<int> co_edge_regular_mu;    // regular + non-complete + single value
    std::map<int, long> lambda_values;
    std::map<int, long> mu_values;
};

RegularityProfile regularity_profile(const Graph& g);

enum class NeumaierTag {
    NotEdgeRegular,
    EdgeRegularNoRegularClique,
    NeumaierStronglyRegular,
    StrictlyNeumaier,
};

const char* to_string(NeumaierTag tag);

struct CompleteGraphError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NeumaierVerdict {
    NeumaierTag tag;
    RegularityProfile profile;
    std::vector<CliqueCertificate> regular_cliques;

    // For negative tags: a vertex pair exhibiting the failure together with
    // its common-neighbor count.  NotEdgeRegular: a pair of vertices with
    // unequal degrees, or an adjacent pair whose count deviates from the
    // first adjacent pair's.  EdgeRegularNoRegularClique: two vertices
    // outside the first maximum clique with different neighbor counts into it
    // (count = the first one's).
    struct Witness {
        int u, w;
        int common_count;
    };
    std::optional<Witness> witness;

    bool is_neumaier() const {
        return tag == NeumaierTag::NeumaierStronglyRegular ||
               tag == NeumaierTag::StrictlyNeumaier;
    }

    // (v,k,lambda;e,s) for Neumaier verdicts.
    int v = 0, k = 0, lambda = 0, e = 0, s = 0;
};

// Requires n >= 4 and a non-complete graph; throws CompleteGraphError /
// GraphError otherwise.
NeumaierVerdict classify(const Graph& g);

}  // namespace neumaier
