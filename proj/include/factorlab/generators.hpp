#ifndef FACTORLAB_GENERATORS_HPP
#define FACTORLAB_GENERATORS_HPP

#include <cstdint>
#include <vector>

#include "factorlab/graph.hpp"
#include "factorlab/rational.hpp"

namespace factorlab {

inline Graph complete(int n) {
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
    return Graph::from_edge_list(n, e);
}

inline Graph cycle(int n) {
    std::vector<std::pair<int, int>> e;
    if (n >= 3)
        for (int v = 0; v < n; ++v) e.emplace_back(v, (v + 1) % n);
    return Graph::from_edge_list(n, e);
}

inline Graph path(int n) {
    std::vector<std::pair<int, int>> e;
    for (int v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
    return Graph::from_edge_list(n, e);
}

inline Graph complete_bipartite(int p, int q) {
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < p; ++u)
        for (int v = 0; v < q; ++v) e.emplace_back(u, p + v);
    return Graph::from_edge_list(p + q, e);
}

// G v H: disjoint union plus all edges between the parts. H's vertices are
// shifted by |V(G)|.
inline Graph join(const Graph& g, const Graph& h) {
    int n = g.order() + h.order();
    std::vector<std::pair<int, int>> e = g.edges();
    for (auto [u, v] : h.edges()) e.emplace_back(g.order() + u, g.order() + v);
    for (int u = 0; u < g.order(); ++u)
        for (int v = 0; v < h.order(); ++v) e.emplace_back(u, g.order() + v);
    return Graph::from_edge_list(n, e);
}

// Complete multipartite graph with the given part sizes.
inline Graph complete_multipartite(const std::vector<int>& parts) {
    Graph g = Graph::from_edge_list(0, {});
    for (int p : parts) g = join(g, Graph::from_edge_list(p, {}));
    return g;
}

// SplitMix64. Fixed here (rather than <random>) so that seeded corpora are
// byte-identical across platforms and standard library versions.
struct SplitMix64 {
    std::uint64_t state;
    explicit SplitMix64(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d4ecda6cf98b2eULL;
        return z ^ (z >> 31);
    }
};

// G(n,p) with exact rational p. Pairs are visited in lexicographic order
// (0,1),(0,2),...,(n-2,n-1); pair (u,v) is an edge iff the next SplitMix64
// draw r satisfies r/2^64 < p, decided exactly in 128-bit arithmetic.
inline Graph random_gnp(int n, const Rational& p, std::uint64_t seed) {
    if (p < Rational(0) || p > Rational(1))
        throw std::invalid_argument("random_gnp: p must be in [0,1]");
    SplitMix64 rng(seed);
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            std::uint64_t r = rng.next();
            // r < p * 2^64  <=>  r * den < num * 2^64
            if ((unsigned __int128)r * (unsigned __int128)p.den() <
                ((unsigned __int128)p.num() << 64))
                e.emplace_back(u, v);
        }
    }
    return Graph::from_edge_list(n, e);
}

}  // namespace factorlab

#endif
