#ifndef FACTORLAB_THEOREMS_HPP
#define FACTORLAB_THEOREMS_HPP

#include <optional>
#include <stdexcept>
#include <string>

#include "factorlab/binding.hpp"
#include "factorlab/fractional.hpp"
#include "factorlab/id_critical.hpp"
#include "factorlab/rational.hpp"

namespace factorlab {

inline void require_theorem2_bounds(FactorBounds bounds) {
    if (bounds.a < 2)
        throw std::domain_error("theorem bounds: need 2 <= a <= b");
}

// (a+2b-1)(n-1) / (bn-(a+b)): the binding-number threshold for a graph of
// order n to be fractional ID-[a,b]-factor-critical covered.
inline Rational binding_threshold(int n, FactorBounds bounds) {
    require_theorem2_bounds(bounds);
    std::int64_t den = (std::int64_t)bounds.b * n - (bounds.a + bounds.b);
    if (den <= 0)
        throw std::domain_error("binding_threshold: bn - (a+b) <= 0 at n=" +
                                std::to_string(n));
    return Rational((std::int64_t)(bounds.a + 2 * bounds.b - 1) * (n - 1), den);
}

// ((a+2b)(a+b-2)+2)/b: a graph qualifies when n >= this value.
inline Rational order_threshold(FactorBounds bounds) {
    require_theorem2_bounds(bounds);
    return Rational((std::int64_t)(bounds.a + 2 * bounds.b) * (bounds.a + bounds.b - 2) + 2,
                    bounds.b);
}

// (3k-1)(n-1)/(kn-2k+2): the older non-covered criterion, kept for
// comparison tooling.
inline Rational theorem1_threshold(int n, int k) {
    if (k < 2) throw std::domain_error("theorem1_threshold: need k >= 2");
    std::int64_t den = (std::int64_t)k * n - 2 * k + 2;
    if (den <= 0) throw std::domain_error("theorem1_threshold: non-positive denominator");
    return Rational((std::int64_t)(3 * k - 1) * (n - 1), den);
}

enum class Theorem2Class {
    HypothesisFailedOrder,
    HypothesisFailedBinding,
    ConclusionHolds,
    Counterexample,
};

inline std::string to_string(Theorem2Class c) {
    switch (c) {
        case Theorem2Class::HypothesisFailedOrder: return "HYPOTHESIS_FAILED_ORDER";
        case Theorem2Class::HypothesisFailedBinding: return "HYPOTHESIS_FAILED_BINDING";
        case Theorem2Class::ConclusionHolds: return "CONCLUSION_HOLDS";
        case Theorem2Class::Counterexample: return "COUNTEREXAMPLE";
    }
    return "?";
}

struct Theorem2Verdict {
    bool order_ok = false;
    Rational binding_value;
    Rational threshold;
    bool hypothesis_ok = false;
    bool conclusion_checked = false;
    std::optional<bool> conclusion_ok;
    Theorem2Class classification = Theorem2Class::HypothesisFailedOrder;
    std::optional<IdCriticalVerdict> conclusion_witness;
};

struct Theorem2Options {
    bool strict = true;           // strict '>' for the theorem, '>=' for the conjecture
    bool always_check = false;    // evaluate the conclusion even when the hypothesis fails
    std::optional<Rational> threshold_override;  // mutation-testing hook
};

inline Theorem2Verdict verify_theorem2(const Graph& g, FactorBounds bounds,
                                       Theorem2Options opts = {}) {
    require_theorem2_bounds(bounds);
    Theorem2Verdict v;
    v.threshold = opts.threshold_override ? *opts.threshold_override
                                          : binding_threshold(g.order(), bounds);
    v.order_ok = Rational(g.order()) >= order_threshold(bounds);
    v.binding_value = binding_number(g).value;
    bool bind_ok = opts.strict ? v.binding_value > v.threshold
                               : v.binding_value >= v.threshold;
    v.hypothesis_ok = v.order_ok && bind_ok;

    if (v.hypothesis_ok || opts.always_check) {
        v.conclusion_checked = true;
        IdCriticalVerdict idv = is_id_critical_covered(g, bounds);
        v.conclusion_ok = idv.holds;
        v.conclusion_witness = std::move(idv);
    }

    if (!v.order_ok)
        v.classification = Theorem2Class::HypothesisFailedOrder;
    else if (!bind_ok)
        v.classification = Theorem2Class::HypothesisFailedBinding;
    else if (v.conclusion_ok.value())
        v.classification = Theorem2Class::ConclusionHolds;
    else
        v.classification = Theorem2Class::Counterexample;
    return v;
}

}  // namespace factorlab

#endif
