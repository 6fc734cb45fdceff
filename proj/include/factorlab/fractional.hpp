#ifndef FACTORLAB_FRACTIONAL_HPP
#define FACTORLAB_FRACTIONAL_HPP

#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "factorlab/graph.hpp"
#include "factorlab/rational.hpp"

namespace factorlab {

struct FactorBounds {
    int a = 1;
    int b = 1;

    FactorBounds() = default;
    FactorBounds(int a_, int b_) : a(a_), b(b_) {
        if (a < 0 || a > b) throw std::invalid_argument("FactorBounds: need 0 <= a <= b");
    }
};

// T = {x in V(G)\S : d_{G-S}(x) <= a}.
inline VertexSet tee_set(const Graph& g, VertexSet s, int a) {
    Mask t = 0;
    Mask rest = g.full_mask() & ~s.bits;
    for (Mask m = rest; m;) {
        int v = std::countr_zero(m);
        m &= m - 1;
        if (std::popcount(g.adjacency(v) & rest) <= a) t |= Mask(1) << v;
    }
    return {t, g.order()};
}

// epsilon(S): 2 if S spans an edge; 1 if S is independent and either some
// edge runs from S to a vertex of T at degree exactly a in G-S, or some edge
// runs from S to V \ (S u T); 0 otherwise.
inline int epsilon(const Graph& g, VertexSet s, int a) {
    if (!is_independent(g, s)) return 2;
    if (s.empty()) return 0;
    Mask rest = g.full_mask() & ~s.bits;
    Mask t = tee_set(g, s, a).bits;
    Mask outside = rest & ~t;
    for (Mask m = t; m;) {
        int v = std::countr_zero(m);
        m &= m - 1;
        if (std::popcount(g.adjacency(v) & rest) == a && (g.adjacency(v) & s.bits))
            return 1;
    }
    for (Mask m = s.bits; m;) {
        int v = std::countr_zero(m);
        m &= m - 1;
        if (g.adjacency(v) & outside) return 1;
    }
    return 0;
}

// delta_G(S,T) = b|S| - a|T| + d_{G-S}(T), with T computed from S.
inline std::int64_t delta_st(const Graph& g, VertexSet s, FactorBounds bounds) {
    Mask rest = g.full_mask() & ~s.bits;
    Mask t = tee_set(g, s, bounds.a).bits;
    std::int64_t degsum = 0;
    for (Mask m = t; m;) {
        int v = std::countr_zero(m);
        m &= m - 1;
        degsum += std::popcount(g.adjacency(v) & rest);
    }
    return (std::int64_t)bounds.b * std::popcount(s.bits) -
           (std::int64_t)bounds.a * std::popcount(t) + degsum;
}

struct CoveredWitness {
    VertexSet s;
    VertexSet t;
    int epsilon;
    std::int64_t delta;
};

struct CoveredVerdict {
    bool covered = true;
    std::optional<CoveredWitness> witness;
};

// Structural criterion: covered iff delta_G(S,T) >= epsilon(S) for every
// S subseteq V(G). Scans all 2^n subsets ascending by size then mask value
// and reports the first violation.
inline CoveredVerdict is_fractional_ab_covered(const Graph& g, FactorBounds bounds) {
    int n = g.order();
    Mask full = g.full_mask();
    for (int k = 0; k <= n; ++k) {
        Mask s = (Mask(1) << k) - 1;
        while (true) {
            VertexSet sv{s, n};
            int eps = epsilon(g, sv, bounds.a);
            std::int64_t delta = delta_st(g, sv, bounds);
            if (delta < eps)
                return {false, CoveredWitness{sv, tee_set(g, sv, bounds.a), eps, delta}};
            if (s == 0 || s == full) break;
            Mask nxt = next_same_size(s);
            if (nxt > full) break;
            s = nxt;
        }
        if (n == 0) break;
    }
    return {true, std::nullopt};
}

struct capacity_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Edge weights in {0, 1/2, 1}, parallel to Graph::edges().
struct FractionalAssignment {
    std::vector<Rational> weights;

    bool validates(const Graph& g, FactorBounds bounds) const {
        if (weights.size() != g.edges().size()) return false;
        std::vector<Rational> sums(g.order(), Rational(0));
        for (size_t i = 0; i < weights.size(); ++i) {
            if (weights[i] != Rational(0) && weights[i] != Rational(1, 2) &&
                weights[i] != Rational(1))
                return false;
            sums[g.edges()[i].first] = sums[g.edges()[i].first] + weights[i];
            sums[g.edges()[i].second] = sums[g.edges()[i].second] + weights[i];
        }
        for (int v = 0; v < g.order(); ++v)
            if (sums[v] < Rational(bounds.a) || sums[v] > Rational(bounds.b)) return false;
        return true;
    }
};

namespace detail {

// DFS over half-unit weights (0, 1, 2 per edge = twice the real weight) with
// forward bound checks per endpoint. sum2/rem2 are in half units.
struct FactorSearch {
    const Graph& g;
    FactorBounds bounds;
    std::vector<int> free_edges;  // indices into g.edges()
    std::vector<int> sum2;
    std::vector<int> rem2;
    std::vector<int> choice;  // half-units per free edge

    bool feasible_at(int v) const { return sum2[v] <= 2 * bounds.b && sum2[v] + rem2[v] >= 2 * bounds.a; }

    bool run(int i) {
        if (i == (int)free_edges.size()) {
            for (int v = 0; v < g.order(); ++v)
                if (sum2[v] < 2 * bounds.a) return false;
            return true;
        }
        auto [u, v] = g.edges()[free_edges[i]];
        rem2[u] -= 2;
        rem2[v] -= 2;
        for (int w = 0; w <= 2; ++w) {
            sum2[u] += w;
            sum2[v] += w;
            if (feasible_at(u) && feasible_at(v)) {
                choice[i] = w;
                if (run(i + 1)) return true;
            }
            sum2[u] -= w;
            sum2[v] -= w;
        }
        rem2[u] += 2;
        rem2[v] += 2;
        return false;
    }
};

}  // namespace detail

// Half-integral feasibility oracle. Searches {0, 1/2, 1} on every free edge
// with the forced edges pinned at 1; by half-integrality of the underlying
// polytope this decides the continuous problem exactly. Assignments are
// tried in lexicographic order over the canonical edge list, weight 0 first.
inline std::optional<FractionalAssignment> fractional_factor_exists(
    const Graph& g, FactorBounds bounds, const std::vector<int>& forced_edges = {},
    int free_edge_cap = 20) {
    int m = g.size();
    std::vector<bool> forced(m, false);
    for (int e : forced_edges) {
        if (e < 0 || e >= m)
            throw std::invalid_argument("fractional_factor_exists: forced edge not in E(G)");
        forced[e] = true;
    }
    int nfree = 0;
    for (int e = 0; e < m; ++e)
        if (!forced[e]) ++nfree;
    if (nfree > free_edge_cap)
        throw capacity_error("fractional_factor_exists: " + std::to_string(nfree) +
                             " free edges exceed cap " + std::to_string(free_edge_cap));

    detail::FactorSearch search{g, bounds, {}, std::vector<int>(g.order(), 0),
                                std::vector<int>(g.order(), 0), {}};
    for (int e = 0; e < m; ++e) {
        auto [u, v] = g.edges()[e];
        if (forced[e]) {
            search.sum2[u] += 2;
            search.sum2[v] += 2;
        } else {
            search.free_edges.push_back(e);
            search.rem2[u] += 2;
            search.rem2[v] += 2;
        }
    }
    for (int v = 0; v < g.order(); ++v)
        if (!search.feasible_at(v)) return std::nullopt;
    search.choice.assign(search.free_edges.size(), 0);
    if (!search.run(0)) return std::nullopt;

    FractionalAssignment out;
    out.weights.assign(m, Rational(0));
    for (int e = 0; e < m; ++e)
        if (forced[e]) out.weights[e] = Rational(1);
    for (size_t i = 0; i < search.free_edges.size(); ++i)
        out.weights[search.free_edges[i]] = Rational(search.choice[i], 2);
    return out;
}

struct OracleVerdict {
    bool covered = true;
    std::optional<std::pair<int, int>> failing_edge;
};

// Covered by definition: for every edge e there must be a fractional
// [a,b]-factor with h(e) = 1. Edgeless graphs are covered exactly when a
// factor exists at all (all-zero, so a = 0 or n = 0).
inline OracleVerdict covered_oracle(const Graph& g, FactorBounds bounds,
                                    int free_edge_cap = 20) {
    if (g.size() == 0)
        return {fractional_factor_exists(g, bounds, {}, free_edge_cap).has_value(),
                std::nullopt};
    for (int e = 0; e < g.size(); ++e)
        if (!fractional_factor_exists(g, bounds, {e}, free_edge_cap))
            return {false, g.edges()[e]};
    return {true, std::nullopt};
}

}  // namespace factorlab

#endif
