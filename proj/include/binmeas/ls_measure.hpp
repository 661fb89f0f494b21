#pragma once

#include "binmeas/interval_ring.hpp"
#include "binmeas/set_function.hpp"
#include "binmeas/step_function.hpp"

namespace binmeas {

/// The left Lebesgue-Stieltjes binary measure built from a left-continuous
/// step function: an interval [a, b) maps to f(a) xor f(b), extended to
/// canonical unions componentwise. f(-inf) is read as v0 and f(inf) as the
/// prolonged tail value.
struct LSMeasure {
    BinaryStepFunction f;
};

Bit ls_eval(const LSMeasure& m, const IntervalUnion& a);

/// The endpoint-XOR of a raw interval list read as an iterated symmetric
/// difference; equals ls_eval of its canonical form by additivity.
Bit ls_eval_raw_delta(const LSMeasure& m, const std::vector<IntervalUnion::Component>& raw);

/// The step function t -> m([[origin, t))), computed in closed form.
BinaryStepFunction ls_cdf(const LSMeasure& m, const ExtendedRational& origin);

Measure<IntervalUnion> as_measure(const LSMeasure& m);

/// Telescoping family [[t_n, t_{n+1})) with t_n increasing from a to b;
/// the certificate index is derived from the toggles of f.
DisjointFamilyGenerator<IntervalUnion> ls_telescope_family(const BinaryStepFunction& f,
                                                           const ExtendedRational& a,
                                                           const ExtendedRational& b);

/// Round-robin telescopes over the components of a canonical union.
DisjointFamilyGenerator<IntervalUnion> ls_chain_family(const BinaryStepFunction& f,
                                                       const IntervalUnion& a);

/// Delegates to the generic countable-additivity checker.
CountableFamilyReport ls_structured_countable_check(const LSMeasure& m,
                                                    const DisjointFamilyGenerator<IntervalUnion>& family,
                                                    std::size_t depth);

}  // namespace binmeas
