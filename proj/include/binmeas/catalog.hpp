#pragma once

#include <set>
#include <string>
#include <vector>

#include "binmeas/derivable.hpp"
#include "binmeas/interval_ring.hpp"
#include "binmeas/ls_measure.hpp"
#include "binmeas/sequences.hpp"
#include "binmeas/set_function.hpp"
#include "binmeas/sset.hpp"
#include "binmeas/step_function.hpp"

namespace binmeas {

/// A set containing all but finitely many elements of an ambient total set,
/// named by the finite complement (integer labels).
struct CofiniteSet {
    std::set<long long> complement;
    friend bool operator==(const CofiniteSet&, const CofiniteSet&) = default;
};

/// Finite subsets of R, the carrier of the finite Boolean measure; identified
/// with their characteristic functions.
using FiniteRealSet = SparsePointFunction;

namespace catalog {

// -- Measures on finite real sets ------------------------------------------
Measure<FiniteRealSet> null_measure();
/// mu(A) = parity of |A|.
Measure<FiniteRealSet> finite_boolean();
/// mu(A) = [x0 in A]. Through the set/characteristic-function identification
/// this is also the point-evaluation measure f -> f(x0) on the function ring.
Measure<FiniteRealSet> dirac(const Rational& x0);
/// XOR of dirac over the points of a finite H.
Measure<FiniteRealSet> dirac_sum(const std::vector<Rational>& h);
/// mu(B) = base(A meet B).
Measure<FiniteRealSet> restriction(const Measure<FiniteRealSet>& base, const FiniteRealSet& a);
/// Parity of the points below the threshold; the inferiorly finite carrier.
Measure<FiniteRealSet> inferiorly_finite(const Rational& alpha);

// -- Measures on binary sequences ------------------------------------------
/// Projection on the k-th coordinate.
Measure<BinarySequence> coord(std::uint64_t k);
/// XOR of coordinate projections over a finite index set.
Measure<BinarySequence> coord_sum(const std::vector<std::uint64_t>& h);
/// The limit functional on convergent sequences; additive, not a measure.
Measure<BinarySequence> limit_functional();
/// Modulo-2 sum on sequences converging to 0.
Measure<BinarySequence> seq_sum();

// -- Measures on function carriers -----------------------------------------
/// mu(f) = f(t - 0) on step functions; t may be inf.
Measure<BinaryStepFunction> left_limit_eval(const ExtendedRational& t);
/// Parity of supp f within the window (the indicator integral); the window
/// [a, b) may reach the infinities, or be absent for the everywhere variant.
Measure<SparsePointFunction> indicator_integral(const IntervalUnion& window);
Measure<SparsePointFunction> indicator_integral_all();

// -- Measures on interval unions and S-sets --------------------------------
/// 1 iff sup A = inf.
Measure<IntervalUnion> sym_sup();
/// [x0 in A] on the interval carrier.
Measure<IntervalUnion> dirac_interval(const Rational& x0);
/// The parity measure of the ring S (open intervals against point sets).
Measure<SSet> step_ring_parity();

// -- The dual example -------------------------------------------------------
/// Measure* on cofinite sets: the complemented finite Boolean measure of the
/// complement.
Bit cofinite_star_eval(const CofiniteSet& h);

struct DivergenceReport {
    Bit union_value = 0;
    Bit xor_sum = 0;
    Bit countably_additive = 0;
    bool disjoint_ok = false;
};

enum class CounterexampleCase { Seq36, Interval313 };

/// Reproduces the two additive-but-not-countably-additive constructions:
/// the limit functional against the canonical base, and the parity measure
/// of S against the telescoping half-open intervals filling (0, 1).
DivergenceReport counterexample_divergence(CounterexampleCase which, std::size_t depth);

/// The canonical-base family whose union is the constant-1 sequence.
DisjointFamilyGenerator<BinarySequence> canonical_base_family();

/// The telescoping family [1/(n+2), 1/(n+1)) with union (0, 1).
DisjointFamilyGenerator<SSet> interval_313_family();

}  // namespace catalog

}  // namespace binmeas
