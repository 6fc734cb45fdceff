#ifndef FACTORLAB_BINDING_HPP
#define FACTORLAB_BINDING_HPP

#include <bit>
#include <stdexcept>

#include "factorlab/graph.hpp"
#include "factorlab/rational.hpp"

namespace factorlab {

// bind(G) = min |N(X)|/|X| over nonempty X with N(X) != V(G), with the
// minimizing X. Ties resolve to the smallest |X|, then the smallest mask.
struct BindingWitness {
    Rational value;
    VertexSet witness;
};

namespace detail {

// Candidate ratio nsize/xsize for set `mask`; true if it beats the incumbent
// under the tie-break order.
struct BindingBest {
    bool has = false;
    int nsize = 0, xsize = 1;
    Mask mask = 0;

    bool offer(int ns, int xs, Mask m) {
        if (has) {
            __int128 lhs = (__int128)ns * xsize;
            __int128 rhs = (__int128)nsize * xs;
            if (lhs > rhs) return false;
            if (lhs == rhs) {
                int c = std::popcount(m);
                int b = std::popcount(mask);
                if (c > b || (c == b && m >= mask)) return false;
            }
        }
        has = true;
        nsize = ns;
        xsize = xs;
        mask = m;
        return true;
    }
};

}  // namespace detail

// Exhaustive scan over all 2^n - 1 nonempty subsets.
inline BindingWitness binding_number(const Graph& g) {
    int n = g.order();
    if (n == 0) throw std::invalid_argument("binding_number: empty graph");
    Mask full = g.full_mask();
    detail::BindingBest best;
    for (Mask x = 1; x <= full; ++x) {
        Mask nbr = 0;
        for (Mask m = x; m;) {
            int v = std::countr_zero(m);
            m &= m - 1;
            nbr |= g.adjacency(v);
        }
        if (nbr == full) continue;
        best.offer(std::popcount(nbr), std::popcount(x), x);
    }
    // Singletons are always eligible: N({v}) omits v itself.
    return {Rational(best.nsize, best.xsize), {best.mask, n}};
}

namespace detail {

inline void binding_dfs(const Graph& g, int next, Mask x, Mask nbr, int xsize,
                        BindingBest& best) {
    int n = g.order();
    if (x != 0) {
        if (nbr == g.full_mask()) return;  // supersets are ineligible too
        best.offer(std::popcount(nbr), xsize, x);
    }
    int remaining = n - next;
    if (remaining == 0) return;
    if (best.has && x != 0) {
        // Any extension X' has |N(X')| >= |N(X)| and |X'| <= |X| + remaining,
        // so its ratio is at least |N(X)| / (|X| + remaining). Prune on strict
        // dominance only; an equal-value extension may still win a tie-break.
        __int128 lhs = (__int128)std::popcount(nbr) * best.xsize;
        __int128 rhs = (__int128)best.nsize * (xsize + remaining);
        if (lhs > rhs) return;
    }
    for (int v = next; v < n; ++v)
        binding_dfs(g, v + 1, x | (Mask(1) << v), nbr | g.adjacency(v), xsize + 1, best);
}

}  // namespace detail

// Branch-and-bound scan with the same output contract as binding_number.
// Kept as an independent implementation for cross-validation.
inline BindingWitness binding_number_pruned(const Graph& g) {
    if (g.order() == 0) throw std::invalid_argument("binding_number: empty graph");
    detail::BindingBest best;
    detail::binding_dfs(g, 0, 0, 0, 0, best);
    return {Rational(best.nsize, best.xsize), {best.mask, g.order()}};
}

// delta(G) >= n - (n-1)/bind(G). A `holds = false` result signals an
// implementation bug, not a property of the graph.
struct WoodallCheck {
    int min_degree;
    Rational bound;
    bool holds;
};

inline WoodallCheck woodall_bound(const Graph& g) {
    if (g.order() < 2) throw std::invalid_argument("woodall_bound: need n >= 2");
    Rational bind = binding_number(g).value;
    if (bind == Rational(0))
        throw std::domain_error("woodall_bound: bind(G) = 0, bound not evaluable");
    int delta = g.min_degree();
    Rational bound = Rational(g.order()) - Rational(g.order() - 1) / bind;
    return {delta, bound, Rational(delta) >= bound};
}

}  // namespace factorlab

#endif
