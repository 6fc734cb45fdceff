#ifndef FACTORLAB_ID_CRITICAL_HPP
#define FACTORLAB_ID_CRITICAL_HPP

#include <map>
#include <optional>
#include <utility>

#include "factorlab/fractional.hpp"
#include "factorlab/graph.hpp"

namespace factorlab {

// Verdict for the "G - I is fractional [a,b]-covered for every independent
// set I" property. Witnesses carry original vertex labels.
struct IdCriticalVerdict {
    bool holds = true;
    std::optional<VertexSet> failing_set;
    std::optional<CoveredVerdict> inner;  // for G - failing_set
};

// Iterates independent sets ascending by size (empty set first, unless
// include_empty is false) and returns the first I whose residual graph fails
// the structural covered criterion.
inline IdCriticalVerdict is_id_critical_covered(const Graph& g, FactorBounds bounds,
                                                bool include_empty = true) {
    IdCriticalVerdict verdict;
    for_each_independent_set(g, [&](VertexSet i) {
        if (i.empty() && !include_empty) return true;
        DeletionResult res = g.delete_vertices(i);
        CoveredVerdict inner = is_fractional_ab_covered(res.graph, bounds);
        if (inner.covered) return true;
        // Translate the witness back through the deletion relabeling.
        CoveredWitness w = *inner.witness;
        w.s = res.to_old(w.s);
        w.t = res.to_old(w.t);
        verdict.holds = false;
        verdict.failing_set = i;
        verdict.inner = CoveredVerdict{false, w};
        return false;
    });
    return verdict;
}

// Pass/fail counts of the residual covered check, grouped by |I|. Diagnostic
// only: coveredness is not monotone under vertex deletion, so no subset of
// sizes can decide the property.
struct IdCriticalProfile {
    std::map<int, std::pair<int, int>> by_size;  // |I| -> (pass, fail)

    int total_failures() const {
        int f = 0;
        for (auto& [sz, pf] : by_size) f += pf.second;
        return f;
    }
};

inline IdCriticalProfile id_critical_profile(const Graph& g, FactorBounds bounds) {
    IdCriticalProfile profile;
    for_each_independent_set(g, [&](VertexSet i) {
        bool ok = is_fractional_ab_covered(g.delete_vertices(i).graph, bounds).covered;
        auto& [pass, fail] = profile.by_size[i.count()];
        (ok ? pass : fail) += 1;
        return true;
    });
    return profile;
}

}  // namespace factorlab

#endif
