#ifndef FACTORLAB_GRAPH_HPP
#define FACTORLAB_GRAPH_HPP

#include <bit>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace factorlab {

// Everything here is sized for exhaustive subset scans: a vertex set is one
// machine word, so the cap is 24 vertices.
constexpr int kMaxVertices = 24;

using Mask = std::uint32_t;

// Subset of {0,...,n-1} as a bit mask, vertex v at bit (1u << v).
// Enumeration order throughout the project is ascending set size, then
// ascending mask value ("lexicographic by bit pattern").
struct VertexSet {
    Mask bits = 0;
    int n = 0;

    int count() const { return std::popcount(bits); }
    bool contains(int v) const { return (bits >> v) & 1u; }
    bool empty() const { return bits == 0; }

    std::string str() const {
        std::string out = "{";
        bool first = true;
        for (int v = 0; v < n; ++v) {
            if (!contains(v)) continue;
            if (!first) out += ",";
            out += std::to_string(v);
            first = false;
        }
        return out + "}";
    }

    friend bool operator==(const VertexSet& x, const VertexSet& y) {
        return x.bits == y.bits && x.n == y.n;
    }
};

class Graph;
struct DeletionResult;

// Immutable simple undirected graph, vertices 0..n-1.
class Graph {
public:
    static Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& pairs) {
        if (n < 0 || n > kMaxVertices)
            throw std::invalid_argument("Graph: vertex count out of supported range [0," +
                                        std::to_string(kMaxVertices) + "]");
        Graph g;
        g.n_ = n;
        g.adj_.assign(n, 0);
        for (auto [u, v] : pairs) {
            if (u < 0 || u >= n || v < 0 || v >= n)
                throw std::invalid_argument("Graph: vertex out of range");
            if (u == v) throw std::invalid_argument("Graph: self-loop");
            g.adj_[u] |= Mask(1) << v;
            g.adj_[v] |= Mask(1) << u;
        }
        g.rebuild_edges();
        return g;
    }

    int order() const { return n_; }
    int size() const { return (int)edges_.size(); }
    Mask adjacency(int v) const { return adj_[v]; }
    int degree(int v) const { return std::popcount(adj_[v]); }
    bool has_edge(int u, int v) const { return (adj_[u] >> v) & 1u; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    Mask full_mask() const { return n_ == 32 ? ~Mask(0) : (Mask(1) << n_) - 1; }
    VertexSet vertices() const { return {full_mask(), n_}; }

    int min_degree() const {
        if (n_ == 0) throw std::invalid_argument("min_degree: empty graph");
        int d = n_;
        for (int v = 0; v < n_; ++v) d = std::min(d, degree(v));
        return d;
    }

    // Index of (u,v) in the canonical edge list, -1 if absent.
    int edge_index(int u, int v) const {
        if (u > v) std::swap(u, v);
        for (int i = 0; i < (int)edges_.size(); ++i)
            if (edges_[i].first == u && edges_[i].second == v) return i;
        return -1;
    }

    bool is_connected() const {
        if (n_ <= 1) return true;
        Mask seen = 1, frontier = 1;
        while (frontier) {
            Mask next = 0;
            for (Mask f = frontier; f;) {
                int v = std::countr_zero(f);
                f &= f - 1;
                next |= adj_[v];
            }
            frontier = next & ~seen;
            seen |= next;
        }
        return seen == full_mask();
    }

    DeletionResult delete_vertices(VertexSet s) const;

private:
    void rebuild_edges() {
        edges_.clear();
        for (int u = 0; u < n_; ++u)
            for (int v = u + 1; v < n_; ++v)
                if (has_edge(u, v)) edges_.emplace_back(u, v);
    }

    int n_ = 0;
    std::vector<Mask> adj_;
    std::vector<std::pair<int, int>> edges_;
};

// Induced subgraph together with the relabeling maps, so downstream
// witnesses can be translated back to original labels.
struct DeletionResult {
    Graph graph;
    std::vector<int> old_to_new;  // -1 for deleted vertices
    std::vector<int> new_to_old;

    VertexSet to_old(VertexSet s) const {
        VertexSet out{0, (int)old_to_new.size()};
        for (int v = 0; v < graph.order(); ++v)
            if (s.contains(v)) out.bits |= Mask(1) << new_to_old[v];
        return out;
    }
};

inline DeletionResult Graph::delete_vertices(VertexSet s) const {
    if (s.bits & ~full_mask())
        throw std::invalid_argument("delete_vertices: set not within V(G)");
    DeletionResult res;
    res.old_to_new.assign(n_, -1);
    int m = 0;
    for (int v = 0; v < n_; ++v) {
        if (s.contains(v)) continue;
        res.old_to_new[v] = m++;
        res.new_to_old.push_back(v);
    }
    std::vector<std::pair<int, int>> pairs;
    for (auto [u, v] : edges_)
        if (!s.contains(u) && !s.contains(v))
            pairs.emplace_back(res.old_to_new[u], res.old_to_new[v]);
    res.graph = Graph::from_edge_list(m, pairs);
    return res;
}

// N_G(X): union of neighborhoods of members of X. May intersect X.
inline VertexSet neighborhood(const Graph& g, VertexSet x) {
    Mask nbr = 0;
    for (Mask m = x.bits; m;) {
        int v = std::countr_zero(m);
        m &= m - 1;
        nbr |= g.adjacency(v);
    }
    return {nbr, g.order()};
}

// e_G(A,B) for disjoint A, B.
inline int edges_between(const Graph& g, VertexSet a, VertexSet b) {
    if (a.bits & b.bits)
        throw std::invalid_argument("edges_between: sets overlap");
    int count = 0;
    for (Mask m = a.bits; m;) {
        int v = std::countr_zero(m);
        m &= m - 1;
        count += std::popcount(g.adjacency(v) & b.bits);
    }
    return count;
}

inline bool is_independent(const Graph& g, VertexSet x) {
    for (Mask m = x.bits; m;) {
        int v = std::countr_zero(m);
        m &= m - 1;
        if (g.adjacency(v) & x.bits) return false;
    }
    return true;
}

// Next mask with the same popcount (Gosper's hack).
inline Mask next_same_size(Mask m) {
    Mask c = m & -m;
    Mask r = m + c;
    return (((r ^ m) >> 2) / c) | r;
}

// Visits every independent set exactly once, ascending by size then by mask
// value, starting with the empty set. Stops early if fn returns false.
inline void for_each_independent_set(const Graph& g,
                                     const std::function<bool(VertexSet)>& fn) {
    int n = g.order();
    Mask full = g.full_mask();
    if (!fn({0, n})) return;
    for (int k = 1; k <= n; ++k) {
        Mask m = (Mask(1) << k) - 1;
        while (m <= full) {
            if (is_independent(g, {m, n}))
                if (!fn({m, n})) return;
            if (m == 0) break;
            Mask nxt = next_same_size(m);
            if (nxt <= m) break;  // overflow past the range
            m = nxt;
        }
    }
}

inline std::vector<VertexSet> independent_sets(const Graph& g) {
    std::vector<VertexSet> out;
    for_each_independent_set(g, [&](VertexSet s) {
        out.push_back(s);
        return true;
    });
    return out;
}

}  // namespace factorlab

#endif
