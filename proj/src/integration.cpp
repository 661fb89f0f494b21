#include "binmeas/integration.hpp"

#include <algorithm>

#include "binmeas/errors.hpp"

namespace binmeas {

Bit is_measurable(const MeasurableFunction& f) {
    switch (f.space.kind) {
        case SpaceKind::RealsFinite:
            if (std::holds_alternative<SparsePointFunction>(f.f)) return 1;
            if (const auto* sf = std::get_if<BinaryStepFunction>(&f.f))
                // Support pieces have positive length, so finite means empty.
                return sf_support_pieces(*sf).empty() ? 1 : 0;
            return 0;
        case SpaceKind::RealsSym:
            // A nonempty sparse support is a finite point set, never a union
            // of half-open intervals; a left-continuous step support is a
            // union of (lo, hi] pieces, in the ring only when it degenerates
            // to the empty set or the whole line.
            if (const auto* sp = std::get_if<SparsePointFunction>(&f.f))
                return sp->is_zero() ? 1 : 0;
            if (const auto* sf = std::get_if<BinaryStepFunction>(&f.f))
                return sf_support_interval_union(*sf).has_value() ? 1 : 0;
            return 0;
        case SpaceKind::FiniteRing: {
            const auto* mask = std::get_if<SubsetMask>(&f.f);
            if (!mask) return 0;
            return f.space.finite_ring->contains(*mask) ? 1 : 0;
        }
        case SpaceKind::Boxes: {
            // The ring holds every bounded set; finite point sets qualify,
            // lattices are unbounded.
            if (const auto* h = std::get_if<LocallyFiniteSet>(&f.f))
                return (h->dim() == f.space.dim && h->is_finite()) ? 1 : 0;
            return 0;
        }
    }
    return 0;
}

Bit integral(const MeasurableFunction& f, const Measure<SparsePointFunction>& mu) {
    if (!is_measurable(f)) throw PreconditionError("integrand is not measurable");
    return mu(std::get<SparsePointFunction>(f.f));
}

Bit integral(const MeasurableFunction& f, const Measure<IntervalUnion>& mu) {
    if (!is_measurable(f)) throw PreconditionError("integrand is not measurable");
    return mu(*sf_support_interval_union(std::get<BinaryStepFunction>(f.f)));
}

Bit integral(const SubsetMask& f_support, const TabulatedSetFunction& mu) {
    if (!mu.ring().contains(f_support))
        throw PreconditionError("support is not a measurable set of the ring");
    return mu(f_support);
}

Bit integral(const MeasurableFunction& f, const DerivableMeasure& mu) {
    if (!is_measurable(f)) throw PreconditionError("integrand is not measurable");
    return integral_derivable(std::get<LocallyFiniteSet>(f.f), mu);
}

Bit integral_on(const IntervalUnion& a, const SparsePointFunction& f,
                const Measure<SparsePointFunction>& mu) {
    return mu(SparsePointFunction(sp_support_in(f, a)));
}

Bit integral_on(const SubsetMask& a, const SubsetMask& f_support,
                const TabulatedSetFunction& mu) {
    const SubsetMask cut{a.bits & f_support.bits};
    if (!mu.ring().contains(cut))
        throw PreconditionError("A meet supp f is not in the ring (integrability fails)");
    return mu(cut);
}

Bit ae_equal(const SubsetMask& f_support, const SubsetMask& g_support,
             const TabulatedSetFunction& mu) {
    const Bit result = mu(SubsetMask{f_support.bits ^ g_support.bits}) == 0 ? 1 : 0;
    if (result == 1 && mu(f_support) != mu(g_support))
        throw StructureError("a.e. equality holds but the support values differ");
    return result;
}

Bit ae_equal(const SparsePointFunction& f, const SparsePointFunction& g,
             const Measure<SparsePointFunction>& mu) {
    const Bit result = mu(sp_combine(Law::Xor, f, g)) == 0 ? 1 : 0;
    if (result == 1 && mu(f) != mu(g))
        throw StructureError("a.e. equality holds but the support values differ");
    return result;
}

Measure<SubsetMask> f_mu(const SubsetMask& f_support, const TabulatedSetFunction& mu) {
    return {"f-mu", [f_support, mu](const SubsetMask& a) {
                return mu(SubsetMask{a.bits & f_support.bits});
            }};
}

ConvergenceReport convergence_check(const std::vector<SubsetMask>& supports,
                                    ConvergenceMode mode, const SubsetMask& target_support,
                                    const TabulatedSetFunction& mu) {
    return convergence_check<SubsetMask>(supports, mode, target_support, as_measure(mu));
}

Bit riemann_integrable(const SparsePointFunction&, const IntervalUnion&) { return 1; }

namespace {

// Intersection shape of a support piece (p, q] with a window [c, d): an
// uncountable overlap when the open parts meet, a single point exactly when
// the window starts at the right-closed end of the piece.
struct PieceWindow {
    bool uncountable = false;
    std::optional<Rational> point;
};

PieceWindow piece_window(const std::pair<ExtendedRational, ExtendedRational>& piece,
                         const IntervalUnion::Component& window) {
    PieceWindow out;
    const ExtendedRational& p = piece.first;
    const ExtendedRational& q = piece.second;
    const ExtendedRational& c = window.first;
    const ExtendedRational& d = window.second;
    const ExtendedRational lo = p < c ? c : p;
    const ExtendedRational hi = q < d ? q : d;
    if (lo < hi) {
        out.uncountable = true;
        return out;
    }
    if (q == c && q.is_finite()) out.point = q.value();  // {q}: q <= b, c <= q < d
    return out;
}

}  // namespace

Bit riemann_integrable(const BinaryStepFunction& f, const IntervalUnion& a) {
    for (const auto& piece : sf_support_pieces(f))
        for (const auto& window : a.components())
            if (piece_window(piece, window).uncountable) return 0;
    return 1;
}

Bit riemann_integral(const BinaryStepFunction& f, const IntervalUnion& a) {
    std::size_t hits = 0;
    for (const auto& piece : sf_support_pieces(f)) {
        for (const auto& window : a.components()) {
            const PieceWindow pw = piece_window(piece, window);
            if (pw.uncountable)
                throw PreconditionError("the window meets the support in an interval");
            hits += pw.point.has_value() ? 1 : 0;
        }
    }
    return parity(hits);
}

Bit riemann_integral(const SparsePointFunction& f, const IntervalUnion& a) {
    return parity(sp_support_in(f, a).size());
}

Bit left_integral(const SparsePointFunction& f, const ExtendedRational& a,
                  const ExtendedRational& b) {
    return riemann_integral(f, interval(a, b));
}

Bit full_integral(const SparsePointFunction& f) { return parity(f.support().size()); }

BinaryStepFunction left_primitive(const SparsePointFunction& f, const ExtendedRational& a) {
    if (a.is_pos_inf()) throw UsageError("primitive origin must be finite or -inf");
    std::vector<Rational> toggles;
    for (const Rational& x : f.support())
        if (!(ExtendedRational(x) < a)) toggles.push_back(x);
    return BinaryStepFunction(0, std::move(toggles));
}

Measure<IntervalUnion> indefinite_integral(const SparsePointFunction& f) {
    return {"indefinite-integral", [f](const IntervalUnion& a) {
                for (const auto& [lo, hi] : a.components())
                    if (!lo.is_finite() || !hi.is_finite())
                        throw DomainError(
                            "indefinite integral lives on the subring with finite endpoints");
                return parity(sp_support_in(f, a).size());
            }};
}

Bit dual_left_integral(const SparsePointFunction& zeros, const ExtendedRational& a,
                       const ExtendedRational& b) {
    return bit_not(parity(sp_support_in(zeros, interval(a, b)).size()));
}

}  // namespace binmeas
