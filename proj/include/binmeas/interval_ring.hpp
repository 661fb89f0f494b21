#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "binmeas/bit.hpp"
#include "binmeas/carrier_ops.hpp"
#include "binmeas/rational.hpp"

namespace binmeas {

/// Canonical finite union of half-open intervals [a, b) over extended
/// rationals. Components are nonempty (a < b), sorted, and separated by
/// strict gaps (b_i < a_{i+1}), so equal point sets have equal representations.
class IntervalUnion {
  public:
    using Component = std::pair<ExtendedRational, ExtendedRational>;

    IntervalUnion() = default;

    static IntervalUnion empty() { return IntervalUnion(); }

    /// Canonicalizes a list of already disjoint, sorted, separated components.
    /// Use normalize() for arbitrary raw lists.
    static IntervalUnion from_canonical(std::vector<Component> comps);

    const std::vector<Component>& components() const { return comps_; }
    bool is_empty() const { return comps_.empty(); }

    friend bool operator==(const IntervalUnion& a, const IntervalUnion& b) {
        return a.comps_ == b.comps_;
    }

  private:
    std::vector<Component> comps_;
};

enum class NormalizeMode { UnionOf, DeltaOf };

/// Canonical form of the union (or iterated symmetric difference) of raw
/// [a, b) pairs. A pair with a >= b contributes the empty set.
IntervalUnion normalize(const std::vector<IntervalUnion::Component>& raw, NormalizeMode mode);

enum class IvOp { Delta, Cap, Cup, Minus };

/// Set operation on canonical unions, by a single sweep over the merged
/// endpoint list.
IntervalUnion iv_op(IvOp op, const IntervalUnion& a, const IntervalUnion& b);

/// One-pass union of operands known to be disjoint; nullopt on overlap.
std::optional<IntervalUnion> iv_disjoint_unite(const IntervalUnion& a, const IntervalUnion& b);

/// Point membership: 1 iff a_i <= x < b_i for some component.
Bit iv_member(const IntervalUnion& a, const Rational& x);

/// 1 iff the set is nonempty and unbounded above (last component ends at inf).
Bit sup_is_infinite(const IntervalUnion& a);

/// Sugar: the single interval [a, b), empty when a >= b.
IntervalUnion interval(const ExtendedRational& a, const ExtendedRational& b);

template <>
struct SetOpsFor<IntervalUnion> {
    static IntervalUnion intersect(const IntervalUnion& a, const IntervalUnion& b) {
        return iv_op(IvOp::Cap, a, b);
    }
    static IntervalUnion unite(const IntervalUnion& a, const IntervalUnion& b) {
        return iv_op(IvOp::Cup, a, b);
    }
    static std::optional<IntervalUnion> disjoint_unite(const IntervalUnion& a,
                                                       const IntervalUnion& b) {
        return iv_disjoint_unite(a, b);
    }
    static IntervalUnion empty() { return IntervalUnion::empty(); }
    static bool is_empty(const IntervalUnion& a) { return a.is_empty(); }
    static bool equal(const IntervalUnion& a, const IntervalUnion& b) { return a == b; }
};

}  // namespace binmeas
