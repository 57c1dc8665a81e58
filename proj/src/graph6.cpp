#include "neumaier/graph6.hpp"

namespace neumaier {

namespace {

int sixbit(char c) {
    if (c < 63 || c > 126) throw InvalidGraph6("character out of range 63..126");
    return c - 63;
}

}  // namespace

Graph decode_graph6(const std::string& text) {
    if (text.empty()) throw InvalidGraph6("empty string");
    std::size_t pos = 0;
    long n;
    if (text[0] != '~') {
        n = sixbit(text[0]);
        pos = 1;
    } else {
        if (text.size() >= 2 && text[1] == '~')
            throw InvalidGraph6("8-byte order form exceeds the 64-vertex cap");
        if (text.size() < 4) throw InvalidGraph6("truncated 4-byte order form");
        n = (long{sixbit(text[1])} << 12) | (sixbit(text[2]) << 6) | sixbit(text[3]);
        pos = 4;
    }
    if (n < 1 || n > max_vertices)
        throw InvalidGraph6("order " + std::to_string(n) + " outside 1..64");

    long nbits = n * (n - 1) / 2;
    std::size_t expect = pos + (nbits + 5) / 6;
    if (text.size() != expect)
        throw InvalidGraph6("length " + std::to_string(text.size()) + ", expected " +
                            std::to_string(expect));

    Graph g(static_cast<int>(n));
    long t = 0;
    for (int col = 1; col < n; ++col)
        for (int row = 0; row < col; ++row, ++t) {
            int group = sixbit(text[pos + t / 6]);
            if ((group >> (5 - t % 6)) & 1) g.add_edge(row, col);
        }
    for (long b = nbits; b < 6 * static_cast<long>(text.size() - pos); ++b)
        if ((sixbit(text[pos + b / 6]) >> (5 - b % 6)) & 1)
            throw InvalidGraph6("nonzero padding bits");
    return g;
}

std::string encode_graph6(const Graph& g) {
    validate(g);
    std::string out;
    if (g.n <= 62) {
        out.push_back(static_cast<char>(63 + g.n));
    } else {
        out.push_back('~');
        out.push_back(static_cast<char>(63 + (g.n >> 12)));
        out.push_back(static_cast<char>(63 + ((g.n >> 6) & 63)));
        out.push_back(static_cast<char>(63 + (g.n & 63)));
    }
    int group = 0, filled = 0;
    for (int col = 1; col < g.n; ++col)
        for (int row = 0; row < col; ++row) {
            group = (group << 1) | (g.has_edge(row, col) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(63 + group));
                group = filled = 0;
            }
        }
    if (filled) out.push_back(static_cast<char>(63 + (group << (6 - filled))));
    return out;
}

}  // namespace neumaier
