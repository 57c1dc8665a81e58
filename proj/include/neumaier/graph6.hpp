#pragma once

#include <string>

#include "neumaier/graph.hpp"

namespace neumaier {

struct InvalidGraph6 : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Header-less graph6: order byte(s), then the upper triangle column-major in
// 6-bit groups, each offset by 63.  Strict: exact length, zero padding bits.
Graph decode_graph6(const std::string& text);

std::string encode_graph6(const Graph& g);

}  // namespace neumaier
