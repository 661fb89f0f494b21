#pragma once

#include <utility>
#include <vector>

#include "binmeas/bit.hpp"
#include "binmeas/carrier_ops.hpp"
#include "binmeas/rational.hpp"

namespace binmeas {

/// A point of Q^n.
struct Point {
    std::vector<Rational> coords;
    friend bool operator==(const Point&, const Point&) = default;
    friend bool operator<(const Point& a, const Point& b) { return a.coords < b.coords; }
};

/// Half-open box: the product of [lo_i, hi_i) with lo_i < hi_i.
struct Box {
    std::vector<std::pair<Rational, Rational>> sides;
    std::size_t dim() const { return sides.size(); }
    friend bool operator==(const Box&, const Box&) = default;
    friend bool operator<(const Box& a, const Box& b) { return a.sides < b.sides; }
};

/// Finite union of bounded half-open boxes in R^n, kept as a sorted list of
/// pairwise disjoint boxes. Equality of point sets is decided through the
/// symmetric difference, not through the representation.
class BoxUnion {
  public:
    static constexpr std::size_t kDimensionCap = 3;

    explicit BoxUnion(std::size_t dim) : dim_(dim) {}
    /// Canonicalizes an arbitrary (possibly overlapping) raw list.
    BoxUnion(std::size_t dim, const std::vector<Box>& raw);

    std::size_t dim() const { return dim_; }
    const std::vector<Box>& boxes() const { return boxes_; }
    bool is_empty() const { return boxes_.empty(); }

  private:
    std::size_t dim_;
    std::vector<Box> boxes_;  // disjoint, sorted
};

enum class BxOp { Delta, Cap, Cup, Minus };

BoxUnion bx_op(BxOp op, const BoxUnion& a, const BoxUnion& b);
Bit bx_member(const BoxUnion& a, const Point& x);
bool bx_same_set(const BoxUnion& a, const BoxUnion& b);

/// Squared diameter: the supremum of the squared Euclidean distance over
/// pairs of points, attained at closure corners. Throws DomainError on the
/// empty set.
Rational bx_diameter_sq(const BoxUnion& a);

template <>
struct SetOpsFor<BoxUnion> {
    static BoxUnion intersect(const BoxUnion& a, const BoxUnion& b) {
        return bx_op(BxOp::Cap, a, b);
    }
    static BoxUnion unite(const BoxUnion& a, const BoxUnion& b) {
        return bx_op(BxOp::Cup, a, b);
    }
    static BoxUnion empty() { return BoxUnion(1); }
    static bool is_empty(const BoxUnion& a) { return a.is_empty(); }
    static bool equal(const BoxUnion& a, const BoxUnion& b) { return bx_same_set(a, b); }
};

}  // namespace binmeas
