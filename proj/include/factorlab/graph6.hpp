#ifndef FACTORLAB_GRAPH6_HPP
#define FACTORLAB_GRAPH6_HPP

#include <istream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "factorlab/graph.hpp"

namespace factorlab {

struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// graph6 codec, short form only (n <= 62 in the format; we cap at 24).
// Header byte is n+63; then the upper triangle x(0,1),x(0,2),x(1,2),...
// packed six bits per byte, most significant bit first, zero padded.

inline Graph parse_graph6(const std::string& text) {
    if (text.empty()) throw parse_error("graph6: empty input");
    unsigned char h = (unsigned char)text[0];
    if (h == 126)
        throw parse_error("graph6: order >= 63 not supported (cap is " +
                          std::to_string(kMaxVertices) + ")");
    if (h < 63 || h > 126) throw parse_error("graph6: malformed header byte");
    int n = h - 63;
    if (n > kMaxVertices)
        throw parse_error("graph6: order " + std::to_string(n) +
                          " exceeds supported cap " + std::to_string(kMaxVertices));

    int nbits = n * (n - 1) / 2;
    int nbytes = (nbits + 5) / 6;
    if ((int)text.size() < 1 + nbytes) throw parse_error("graph6: truncated bit field");
    if ((int)text.size() > 1 + nbytes) throw parse_error("graph6: trailing characters");

    std::vector<std::pair<int, int>> pairs;
    int bit = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u, ++bit) {
            unsigned char c = (unsigned char)text[1 + bit / 6];
            if (c < 63 || c > 126) throw parse_error("graph6: invalid byte in bit field");
            if ((c - 63) >> (5 - bit % 6) & 1) pairs.emplace_back(u, v);
        }
    }
    // Padding bits must be zero for a canonical encoding.
    for (; bit < 6 * nbytes; ++bit) {
        unsigned char c = (unsigned char)text[1 + bit / 6];
        if (c < 63 || c > 126) throw parse_error("graph6: invalid byte in bit field");
        if ((c - 63) >> (5 - bit % 6) & 1) throw parse_error("graph6: nonzero padding");
    }
    return Graph::from_edge_list(n, pairs);
}

inline std::string emit_graph6(const Graph& g) {
    int n = g.order();
    std::string out;
    out.push_back((char)(n + 63));
    int nbits = n * (n - 1) / 2;
    int nbytes = (nbits + 5) / 6;
    std::vector<int> bytes(nbytes, 0);
    int bit = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u, ++bit)
            if (g.has_edge(u, v)) bytes[bit / 6] |= 1 << (5 - bit % 6);
    for (int b : bytes) out.push_back((char)(b + 63));
    return out;
}

// Edge-list text: first line "n m", then m lines "u v".
inline Graph parse_edge_list(std::istream& in) {
    int n, m;
    if (!(in >> n >> m)) throw parse_error("edge list: missing 'n m' header");
    if (m < 0) throw parse_error("edge list: negative edge count");
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < m; ++i) {
        int u, v;
        if (!(in >> u >> v)) throw parse_error("edge list: truncated at edge " + std::to_string(i));
        pairs.emplace_back(u, v);
    }
    try {
        return Graph::from_edge_list(n, pairs);
    } catch (const std::invalid_argument& e) {
        throw parse_error(std::string("edge list: ") + e.what());
    }
}

inline Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    return parse_edge_list(in);
}

// One graph6 string per line; blank lines and '>' comment lines skipped
// (">>graph6<<" style headers are tolerated this way).
inline std::vector<Graph> read_graph6_stream(std::istream& in) {
    std::vector<Graph> out;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '>') continue;
        out.push_back(parse_graph6(line));
    }
    return out;
}

}  // namespace factorlab

#endif
