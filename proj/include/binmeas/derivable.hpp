#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "binmeas/boxes.hpp"
#include "binmeas/rng.hpp"
#include "binmeas/set_function.hpp"

namespace binmeas {

/// A set meeting every bounded set in finitely many points: either an
/// explicit finite point set or a scaled integer lattice with an offset.
class LocallyFiniteSet {
  public:
    static LocallyFiniteSet finite(std::size_t dim, std::vector<Point> points);
    static LocallyFiniteSet lattice(std::size_t dim, Rational scale, Point offset);

    std::size_t dim() const { return dim_; }
    bool is_finite() const { return !lattice_; }
    const std::vector<Point>& points() const { return points_; }
    const Rational& scale() const { return scale_; }
    const Point& offset() const { return offset_; }

    Bit member(const Point& x) const;

  private:
    LocallyFiniteSet() = default;
    std::size_t dim_ = 1;
    bool lattice_ = false;
    std::vector<Point> points_;  // finite variant, sorted
    Rational scale_ = 1;         // lattice variant
    Point offset_;
};

/// |A meet H|, exact; lattices are counted per axis with floor/ceil.
long long locfin_count(const LocallyFiniteSet& h, const BoxUnion& a);

/// The points of A meet H, enumerated.
std::vector<Point> locfin_points_in(const LocallyFiniteSet& h, const BoxUnion& a);

/// Squared distance from x to the nearest point of H other than x itself;
/// empty when H minus {x} is empty.
std::optional<Rational> locfin_nearest_other_sq(const LocallyFiniteSet& h, const Point& x);

/// A measure on bounded box unions together with what is structurally known
/// about its derivative.
struct DerivableMeasure {
    std::string name;
    std::size_t dim = 1;
    std::function<Bit(const BoxUnion&)> eval;
    /// Set where the derivative is 1, when structurally known (parity
    /// measures carry their carrier set here).
    std::optional<LocallyFiniteSet> derivative_set;

    Bit operator()(const BoxUnion& a) const { return eval(a); }
};

/// The parity measure of a locally finite set: A maps to the parity of
/// |A meet H|.
DerivableMeasure mu_locfin(const LocallyFiniteSet& h);

/// Derivative at a point: the measure of the singleton, read structurally
/// for measures with a declared derivative set.
Bit derivative_at(const DerivableMeasure& mu, const Point& x);

/// Probing fallback for measures without a declared derivative: samples
/// boxes below the tolerance and returns the common value; throws DomainError
/// with the two witness boxes when the values disagree.
Bit derivative_at_probed(const DerivableMeasure& mu, const Point& x, const Rational& eps_sq,
                         std::size_t samples, std::uint64_t seed);

struct ProbeReport {
    bool pass = false;
    std::vector<Bit> values;
    std::optional<std::pair<BoxUnion, BoxUnion>> witness;  // two boxes, different values
    Bit common_value = 0;
};

/// Samples boxes containing x with squared diameter below eps_sq and reports
/// whether the measure is constant on them. A sampler, not a decision
/// procedure.
ProbeReport derivability_probe(const std::function<Bit(const BoxUnion&)>& eval, std::size_t dim,
                               const Point& x, const Rational& eps_sq, std::size_t samples,
                               std::uint64_t seed);

inline ProbeReport derivability_probe(const DerivableMeasure& mu, const Point& x,
                                      const Rational& eps_sq, std::size_t samples,
                                      std::uint64_t seed) {
    return derivability_probe(mu.eval, mu.dim, x, eps_sq, samples, seed);
}

/// For a parity measure: a squared radius below which every probed box gives
/// the derivative value (a quarter of the squared distance to the nearest
/// other carrier point).
Rational analytic_epsilon_sq(const LocallyFiniteSet& h, const Point& x);

/// { x in A : derivative is 1 }, finite because A is bounded and the
/// derivative set locally finite.
std::vector<Point> derivative_support(const DerivableMeasure& mu, const BoxUnion& a);

/// The derivable measure defined by a locally finite support.
DerivableMeasure reconstruct_measure(const LocallyFiniteSet& g);

/// XOR over x of f(x) * dmu(x): the parity of |supp f meet supp dmu| when it
/// is finite; DomainError when both are full lattices with infinitely many
/// common points.
Bit integral_derivable(const LocallyFiniteSet& f, const DerivableMeasure& mu);

/// mu(A meet supp g), computed as the parity of the triple intersection.
Bit integral_on_derivable(const BoxUnion& a, const LocallyFiniteSet& g,
                          const DerivableMeasure& mu);

/// Measure view for the generic checkers.
Measure<BoxUnion> as_measure(const DerivableMeasure& mu);

}  // namespace binmeas
