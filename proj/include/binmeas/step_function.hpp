#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "binmeas/bit.hpp"
#include "binmeas/carrier_ops.hpp"
#include "binmeas/interval_ring.hpp"
#include "binmeas/rational.hpp"

namespace binmeas {

/// Left-continuous R -> B2 function with finitely many value changes,
/// prolonged to infinity by left continuity. The value at t is
/// v0 xor parity(#toggles strictly below t), which has a left limit
/// everywhere and equals it.
class BinaryStepFunction {
  public:
    BinaryStepFunction() = default;
    BinaryStepFunction(Bit v0, std::vector<Rational> toggles);

    Bit v0() const { return v0_; }
    const std::vector<Rational>& toggles() const { return toggles_; }
    bool is_zero() const { return v0_ == 0 && toggles_.empty(); }

    friend bool operator==(const BinaryStepFunction&, const BinaryStepFunction&) = default;

  private:
    Bit v0_ = 0;
    std::vector<Rational> toggles_;
};

/// f(t); t may be an infinity: f(-inf) is v0, f(inf) the tail value.
Bit sf_eval(const BinaryStepFunction& f, const ExtendedRational& t);

/// f(t-0); equal to f(t) everywhere in this class, exposed because several
/// constructions are stated in terms of the left limit.
Bit sf_left_limit(const BinaryStepFunction& f, const ExtendedRational& t);

/// Builds a step function from an unsorted toggle multiset; equal toggles
/// cancel in pairs.
BinaryStepFunction sf_normalize(Bit v0, std::vector<Rational> raw_toggles);

/// Pointwise combination under a binary law.
BinaryStepFunction sf_combine(Law law, const BinaryStepFunction& f, const BinaryStepFunction& g);

/// The support of a left-continuous step function decomposes into pieces of
/// the shape (lo, hi]: value 1 holds on left-open, right-closed segments.
/// A neg_inf lo means the ray is unbounded below; a pos_inf hi means the
/// piece is (lo, inf).
std::vector<std::pair<ExtendedRational, ExtendedRational>> sf_support_pieces(
    const BinaryStepFunction& f);

/// The support as a half-open interval union, when it happens to be one:
/// only the empty support and the full line qualify in this class.
std::optional<IntervalUnion> sf_support_interval_union(const BinaryStepFunction& f);

/// R -> B2 function that is 1 exactly on a finite set of points.
class SparsePointFunction {
  public:
    SparsePointFunction() = default;
    explicit SparsePointFunction(std::vector<Rational> support);

    const std::vector<Rational>& support() const { return support_; }
    bool is_zero() const { return support_.empty(); }
    Bit at(const Rational& x) const;

    friend bool operator==(const SparsePointFunction&, const SparsePointFunction&) = default;

  private:
    std::vector<Rational> support_;  // sorted, distinct
};

SparsePointFunction sp_combine(Law law, const SparsePointFunction& f, const SparsePointFunction& g);

/// Support points lying in a canonical interval union.
std::vector<Rational> sp_support_in(const SparsePointFunction& f, const IntervalUnion& a);

/// Functions combine pointwise; disjointness means the product vanishes.
template <>
struct SetOpsFor<BinaryStepFunction> {
    static BinaryStepFunction intersect(const BinaryStepFunction& f,
                                        const BinaryStepFunction& g) {
        return sf_combine(Law::And, f, g);
    }
    static BinaryStepFunction unite(const BinaryStepFunction& f, const BinaryStepFunction& g) {
        return sf_combine(Law::Or, f, g);
    }
    static BinaryStepFunction empty() { return BinaryStepFunction(); }
    static bool is_empty(const BinaryStepFunction& f) { return f.is_zero(); }
    static bool equal(const BinaryStepFunction& f, const BinaryStepFunction& g) {
        return f == g;
    }
};

template <>
struct SetOpsFor<SparsePointFunction> {
    static SparsePointFunction intersect(const SparsePointFunction& f,
                                         const SparsePointFunction& g) {
        return sp_combine(Law::And, f, g);
    }
    static SparsePointFunction unite(const SparsePointFunction& f,
                                     const SparsePointFunction& g) {
        return sp_combine(Law::Or, f, g);
    }
    static SparsePointFunction empty() { return SparsePointFunction(); }
    static bool is_empty(const SparsePointFunction& f) { return f.is_zero(); }
    static bool equal(const SparsePointFunction& f, const SparsePointFunction& g) {
        return f == g;
    }
};

}  // namespace binmeas
