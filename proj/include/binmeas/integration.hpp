#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "binmeas/derivable.hpp"
#include "binmeas/interval_ring.hpp"
#include "binmeas/set_function.hpp"
#include "binmeas/set_ring.hpp"
#include "binmeas/step_function.hpp"

namespace binmeas {

/// Which ring of subsets of which carrier a measurable space uses.
enum class SpaceKind {
    FiniteRing,   // a finite universe with an explicit ring family
    RealsFinite,  // R with the ring of finite subsets
    RealsSym,     // R with the ring generated by the half-open intervals
    Boxes,        // R^n with the ring of bounded sets, queried through boxes
};

/// A carrier together with a ring of its subsets.
struct MeasurableSpace {
    SpaceKind kind = SpaceKind::RealsFinite;
    std::optional<SetRingFamily> finite_ring;  // FiniteRing only
    std::size_t dim = 1;                       // Boxes only

    static MeasurableSpace reals_finite() { return {SpaceKind::RealsFinite, std::nullopt, 1}; }
    static MeasurableSpace reals_sym() { return {SpaceKind::RealsSym, std::nullopt, 1}; }
    static MeasurableSpace finite(SetRingFamily ring) {
        return {SpaceKind::FiniteRing, std::move(ring), 1};
    }
    static MeasurableSpace boxes(std::size_t dim) {
        return {SpaceKind::Boxes, std::nullopt, dim};
    }
};

/// A binary function paired with a space; measurable iff its support belongs
/// to the space's ring, decided structurally.
struct MeasurableFunction {
    std::variant<SparsePointFunction, BinaryStepFunction, SubsetMask, LocallyFiniteSet> f;
    MeasurableSpace space;
};

Bit is_measurable(const MeasurableFunction& f);

/// Integral of f relative to mu: the measure of the support. The measure must
/// live on the matching carrier.
Bit integral(const MeasurableFunction& f, const Measure<SparsePointFunction>& mu);
Bit integral(const MeasurableFunction& f, const Measure<IntervalUnion>& mu);
Bit integral(const SubsetMask& f_support, const TabulatedSetFunction& mu);
/// Bounded-carrier variant: f must have a bounded (hence finite) support.
Bit integral(const MeasurableFunction& f, const DerivableMeasure& mu);

/// Integral on A: mu(A meet supp f); the intersection must be in the ring.
Bit integral_on(const IntervalUnion& a, const SparsePointFunction& f,
                const Measure<SparsePointFunction>& mu);
Bit integral_on(const SubsetMask& a, const SubsetMask& f_support,
                const TabulatedSetFunction& mu);

/// Almost-everywhere equality: the measure of the support difference is 0.
/// Checked against the equivalent support-value form.
Bit ae_equal(const SubsetMask& f_support, const SubsetMask& g_support,
             const TabulatedSetFunction& mu);
Bit ae_equal(const SparsePointFunction& f, const SparsePointFunction& g,
             const Measure<SparsePointFunction>& mu);

/// The measure A -> mu(A meet supp f); coincides with the restriction of mu
/// at the support.
Measure<SubsetMask> f_mu(const SubsetMask& f_support, const TabulatedSetFunction& mu);

enum class ConvergenceMode { Increasing, Decreasing, InMeasure };

struct ConvergenceReport {
    bool chain_ok = true;
    bool integrals_converge = false;
    Bit limit_integral = 0;
    Bit target_integral = 0;
    std::size_t violation_index = 0;
    bool pass() const { return chain_ok && integrals_converge && limit_integral == target_integral; }
};

/// Support chains and integral convergence for monotone families over any
/// carrier; in-measure checks only the integral sequence. The supports must
/// fold to the declared target under the mode's direction.
template <Carrier E>
ConvergenceReport convergence_check(const std::vector<E>& supports, ConvergenceMode mode,
                                    const E& target_support, const Measure<E>& mu) {
    using Ops = SetOpsFor<E>;
    ConvergenceReport report;
    if (supports.empty()) throw UsageError("convergence check needs a nonempty family");
    if (mode != ConvergenceMode::InMeasure) {
        for (std::size_t n = 1; n < supports.size(); ++n) {
            const E meet = Ops::intersect(supports[n - 1], supports[n]);
            const bool ok = mode == ConvergenceMode::Increasing
                                ? Ops::equal(meet, supports[n - 1])
                                : Ops::equal(meet, supports[n]);
            if (!ok) {
                report.chain_ok = false;
                report.violation_index = n;
                return report;
            }
        }
        E acc = supports.front();
        for (const E& s : supports)
            acc = mode == ConvergenceMode::Increasing ? Ops::unite(acc, s)
                                                      : Ops::intersect(acc, s);
        if (!Ops::equal(acc, target_support)) {
            report.chain_ok = false;
            report.violation_index = supports.size();
            return report;
        }
    }
    report.limit_integral = mu(supports.back());
    report.target_integral = mu(target_support);
    report.integrals_converge = report.limit_integral == report.target_integral;
    return report;
}

/// Finite-carrier convenience over a tabulated measure.
ConvergenceReport convergence_check(const std::vector<SubsetMask>& supports,
                                    ConvergenceMode mode, const SubsetMask& target_support,
                                    const TabulatedSetFunction& mu);

// -- Riemann integrals over R ------------------------------------------------

/// Integrability on A: the window meets the support in a finite set. Sparse
/// functions always qualify; step functions only when the intersection is
/// empty.
Bit riemann_integrable(const SparsePointFunction& f, const IntervalUnion& a);
Bit riemann_integrable(const BinaryStepFunction& f, const IntervalUnion& a);

/// Parity of |A meet supp f|: integration against the finite Boolean measure.
Bit riemann_integral(const SparsePointFunction& f, const IntervalUnion& a);

/// Step integrand variant: defined when the window meets the support in
/// finitely many points (the touch points of (lo, hi] pieces).
Bit riemann_integral(const BinaryStepFunction& f, const IntervalUnion& a);

/// Integral over [[a, b)).
Bit left_integral(const SparsePointFunction& f, const ExtendedRational& a,
                  const ExtendedRational& b);

/// Integral over the whole line; requires the finite-support class.
Bit full_integral(const SparsePointFunction& f);

/// F(t) = parity of the support points in [[a, t)): a step function with
/// v0 = 0 toggling at the support points at or above a (all of them when a
/// is -inf).
BinaryStepFunction left_primitive(const SparsePointFunction& f, const ExtendedRational& a);

/// The indefinite integral as a measure on interval unions; evaluation
/// requires finite endpoints (the subring generated by bounded intervals).
Measure<IntervalUnion> indefinite_integral(const SparsePointFunction& f);

/// XNOR over x in [[a, b)) of f(x), for a cofinite-support f given by its
/// zero set; requires finitely many zeros in the window (structural).
Bit dual_left_integral(const SparsePointFunction& zeros, const ExtendedRational& a,
                       const ExtendedRational& b);

}  // namespace binmeas
