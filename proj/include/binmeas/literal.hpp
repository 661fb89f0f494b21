#pragma once

#include <string>
#include <vector>

#include "binmeas/boxes.hpp"
#include "binmeas/catalog.hpp"
#include "binmeas/derivable.hpp"
#include "binmeas/interval_ring.hpp"
#include "binmeas/sequences.hpp"
#include "binmeas/set_function.hpp"
#include "binmeas/sset.hpp"
#include "binmeas/step_function.hpp"

namespace binmeas {

// Literal grammars. Rationals are `-inf | inf | <int> | <int>/<int>`.
//   interval   : `[a,b)` unions whitespace-separated, `{}` for the empty set
//   stepfn     : `init=<0|1>; toggles=<r1,r2,...>`
//   points     : `points=<r1,r2,...>` or `points=(x,y) (x,y)` in dimension 2+
//   box        : `[a1,b1)x[a2,b2)` unions whitespace-separated, `{}` empty
//   lattice    : `lattice scale=<q> offset=(o1,...)`
//   sequence   : `tail=<0|1>; flips=<n1,n2,...>`
//   sset       : components `(a,b) [a,b) (a,b] [a,b] {c}` whitespace-separated
//   cofinite   : `complement=<n1,n2,...>`
//   family     : first line `universe: a b c`, then one subset per line
//   tabfn      : family lines with a trailing ` = 0|1`

Rational parse_rational(const std::string& text);
ExtendedRational parse_extended_rational(const std::string& text);

IntervalUnion parse_interval(const std::string& text);
std::string print_interval(const IntervalUnion& u);

BinaryStepFunction parse_stepfn(const std::string& text);
std::string print_stepfn(const BinaryStepFunction& f);

SparsePointFunction parse_points(const std::string& text);
std::string print_points(const SparsePointFunction& f);

/// n-dimensional point list; dimension inferred from the first tuple.
std::vector<Point> parse_point_tuples(const std::string& text);

BoxUnion parse_box(const std::string& text);
std::string print_box(const BoxUnion& u);

LocallyFiniteSet parse_locfin(const std::string& text);
std::string print_locfin(const LocallyFiniteSet& h);

BinarySequence parse_sequence(const std::string& text);
std::string print_sequence(const BinarySequence& x);

SSet parse_sset(const std::string& text);
std::string print_sset(const SSet& s);

CofiniteSet parse_cofinite(const std::string& text);

struct ParsedFamily {
    FiniteUniverse universe;
    std::vector<SubsetMask> members;
};
ParsedFamily parse_family(const std::string& text);

struct ParsedTabFn {
    FiniteUniverse universe;
    std::vector<SubsetMask> members;
    std::vector<Bit> values;  // aligned with members, file order
};
ParsedTabFn parse_tabfn(const std::string& text);

}  // namespace binmeas
