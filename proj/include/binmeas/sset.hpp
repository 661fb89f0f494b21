#pragma once

#include <vector>

#include "binmeas/bit.hpp"
#include "binmeas/carrier_ops.hpp"
#include "binmeas/rational.hpp"

namespace binmeas {

/// One maximal connected piece of an SSet: an interval with inclusion flags
/// on each end, or a single point (lo == hi, both flags set).
struct SComponent {
    Rational lo;
    Rational hi;
    bool left_closed = false;
    bool right_closed = false;

    bool is_point() const { return lo == hi; }
    friend bool operator==(const SComponent&, const SComponent&) = default;
};

/// An element of the ring generated by bounded open intervals and finite
/// point sets under symmetric difference: a finite union of flagged interval
/// components, kept maximal and sorted so the form is canonical.
class SSet {
  public:
    SSet() = default;
    /// Canonicalizes an arbitrary list of (possibly overlapping) pieces.
    explicit SSet(const std::vector<SComponent>& raw);

    static SSet empty() { return SSet(); }
    static SSet open(const Rational& a, const Rational& b);
    static SSet half_open(const Rational& a, const Rational& b);  // [a, b)
    static SSet point(const Rational& c);

    const std::vector<SComponent>& components() const { return comps_; }
    bool is_empty() const { return comps_.empty(); }
    Bit member(const Rational& x) const;

    friend bool operator==(const SSet&, const SSet&) = default;

  private:
    std::vector<SComponent> comps_;
};

SSet sset_op(Law law, const SSet& a, const SSet& b);  // and, or, xor pointwise

/// The parity measure of the ring S: the parity of (open intervals +
/// exceptional points) in any representation; computed on the canonical
/// components, where an open or closed interval counts 1, a half-open
/// interval 0, and an isolated point 1.
Bit sset_parity(const SSet& a);

template <>
struct SetOpsFor<SSet> {
    static SSet intersect(const SSet& a, const SSet& b) { return sset_op(Law::And, a, b); }
    static SSet unite(const SSet& a, const SSet& b) { return sset_op(Law::Or, a, b); }
    static SSet empty() { return SSet::empty(); }
    static bool is_empty(const SSet& a) { return a.is_empty(); }
    static bool equal(const SSet& a, const SSet& b) { return a == b; }
};

}  // namespace binmeas
