#include "binmeas/derivable.hpp"

#include <algorithm>

#include "binmeas/errors.hpp"

namespace binmeas {

LocallyFiniteSet LocallyFiniteSet::finite(std::size_t dim, std::vector<Point> points) {
    LocallyFiniteSet h;
    h.dim_ = dim;
    h.lattice_ = false;
    for (const Point& p : points)
        if (p.coords.size() != dim) throw StructureError("point dimension mismatch");
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    h.points_ = std::move(points);
    return h;
}

LocallyFiniteSet LocallyFiniteSet::lattice(std::size_t dim, Rational scale, Point offset) {
    if (!(scale > 0)) throw UsageError("lattice scale must be positive");
    if (offset.coords.size() != dim) throw StructureError("offset dimension mismatch");
    LocallyFiniteSet h;
    h.dim_ = dim;
    h.lattice_ = true;
    h.scale_ = std::move(scale);
    h.offset_ = std::move(offset);
    return h;
}

Bit LocallyFiniteSet::member(const Point& x) const {
    if (x.coords.size() != dim_) throw StructureError("point dimension mismatch");
    if (!lattice_) return std::binary_search(points_.begin(), points_.end(), x) ? 1 : 0;
    for (std::size_t k = 0; k < dim_; ++k)
        if (!is_integer((x.coords[k] - offset_.coords[k]) / scale_)) return 0;
    return 1;
}

namespace {

// Integers k with lo <= offset + scale*k < hi, as an inclusive range.
std::pair<Int, Int> lattice_axis_range(const Rational& lo, const Rational& hi,
                                       const Rational& offset, const Rational& scale) {
    const Rational klo = (lo - offset) / scale;
    const Rational khi = (hi - offset) / scale;
    Int first = ceil_rational(klo);
    Int last = is_integer(khi) ? numerator(khi) - 1 : floor_rational(khi);
    return {first, last};
}

}  // namespace

long long locfin_count(const LocallyFiniteSet& h, const BoxUnion& a) {
    if (a.is_empty()) return 0;
    if (h.dim() != a.dim()) throw StructureError("dimension mismatch");
    long long total = 0;
    if (h.is_finite()) {
        for (const Point& p : h.points()) total += bx_member(a, p);
        return total;
    }
    for (const Box& b : a.boxes()) {  // boxes are pairwise disjoint
        long long cell = 1;
        for (std::size_t k = 0; k < a.dim() && cell > 0; ++k) {
            auto [first, last] = lattice_axis_range(b.sides[k].first, b.sides[k].second,
                                                    h.offset().coords[k], h.scale());
            cell = last < first ? 0 : cell * static_cast<long long>(Int(last - first + 1));
        }
        total += cell;
    }
    return total;
}

std::vector<Point> locfin_points_in(const LocallyFiniteSet& h, const BoxUnion& a) {
    std::vector<Point> out;
    if (a.is_empty()) return out;
    if (h.dim() != a.dim()) throw StructureError("dimension mismatch");
    if (h.is_finite()) {
        for (const Point& p : h.points())
            if (bx_member(a, p)) out.push_back(p);
        return out;
    }
    for (const Box& b : a.boxes()) {
        std::vector<std::pair<Int, Int>> ranges;
        bool empty = false;
        for (std::size_t k = 0; k < a.dim(); ++k) {
            auto r = lattice_axis_range(b.sides[k].first, b.sides[k].second,
                                        h.offset().coords[k], h.scale());
            if (r.second < r.first) empty = true;
            ranges.push_back(r);
        }
        if (empty) continue;
        Point cur;
        cur.coords.resize(a.dim());
        auto rec = [&](auto&& self, std::size_t axis) -> void {
            if (axis == a.dim()) {
                out.push_back(cur);
                return;
            }
            for (Int k = ranges[axis].first; k <= ranges[axis].second; ++k) {
                cur.coords[axis] = h.offset().coords[axis] + h.scale() * Rational(k);
                self(self, axis + 1);
            }
        };
        rec(rec, 0);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<Rational> locfin_nearest_other_sq(const LocallyFiniteSet& h, const Point& x) {
    if (x.coords.size() != h.dim()) throw StructureError("point dimension mismatch");
    std::optional<Rational> best;
    auto consider = [&](const Point& p) {
        if (p == x) return;
        Rational d = 0;
        for (std::size_t k = 0; k < h.dim(); ++k) {
            const Rational t = p.coords[k] - x.coords[k];
            d += t * t;
        }
        if (!best || d < *best) best = d;
    };
    if (h.is_finite()) {
        for (const Point& p : h.points()) consider(p);
        return best;
    }
    // Candidates: round each coordinate down and up to the lattice.
    std::vector<std::vector<Rational>> cand(h.dim());
    for (std::size_t k = 0; k < h.dim(); ++k) {
        const Rational rel = (x.coords[k] - h.offset().coords[k]) / h.scale();
        const Int lo = floor_rational(rel);
        for (Int d = -1; d <= 2; ++d)
            cand[k].push_back(h.offset().coords[k] + h.scale() * Rational(lo + d));
    }
    Point cur;
    cur.coords.resize(h.dim());
    auto rec = [&](auto&& self, std::size_t axis) -> void {
        if (axis == h.dim()) {
            consider(cur);
            return;
        }
        for (const Rational& v : cand[axis]) {
            cur.coords[axis] = v;
            self(self, axis + 1);
        }
    };
    rec(rec, 0);
    return best;
}

DerivableMeasure mu_locfin(const LocallyFiniteSet& h) {
    DerivableMeasure mu;
    mu.name = h.is_finite() ? "parity-of-finite-set" : "parity-of-lattice";
    mu.dim = h.dim();
    mu.eval = [h](const BoxUnion& a) { return parity(static_cast<std::size_t>(locfin_count(h, a))); };
    mu.derivative_set = h;
    return mu;
}

Bit derivative_at(const DerivableMeasure& mu, const Point& x) {
    if (mu.derivative_set) return mu.derivative_set->member(x);
    throw PreconditionError(
        "measure has no declared derivative; use derivative_at_probed with a tolerance");
}

Bit derivative_at_probed(const DerivableMeasure& mu, const Point& x, const Rational& eps_sq,
                         std::size_t samples, std::uint64_t seed) {
    if (mu.derivative_set) return mu.derivative_set->member(x);
    const ProbeReport report = derivability_probe(mu.eval, mu.dim, x, eps_sq, samples, seed);
    if (!report.pass)
        throw DomainError("measure is not derivable at the probed point: two boxes below the "
                          "tolerance evaluate differently");
    return report.common_value;
}

ProbeReport derivability_probe(const std::function<Bit(const BoxUnion&)>& eval, std::size_t dim,
                               const Point& x, const Rational& eps_sq, std::size_t samples,
                               std::uint64_t seed) {
    if (!(eps_sq > 0)) throw UsageError("probe tolerance must be positive");
    if (x.coords.size() != dim) throw StructureError("point dimension mismatch");
    Rng rng(seed);
    // Boxes [x - r*u, x + r*v) with u, v in (0, 1]; the squared diameter is
    // at most 4*dim*r^2, so pick r^2 = eps_sq / (8*dim) to stay strictly below.
    const Rational r_sq = eps_sq / Rational(8 * static_cast<long long>(dim));
    ProbeReport report;
    report.pass = true;
    std::optional<std::pair<BoxUnion, Bit>> first_seen;
    for (std::size_t i = 0; i < samples; ++i) {
        Box b;
        b.sides.resize(dim);
        for (std::size_t k = 0; k < dim; ++k) {
            // Scale factors in (0,1] with denominator 64; keeps r^2 bound.
            const Rational u(rng.range(1, 64), 64);
            const Rational v(rng.range(1, 64), 64);
            // side half-length sqrt(r_sq)*u is irrational in general; use
            // rational bound: half = u * bound where bound^2 <= r_sq.
            const Rational bound = rational_sqrt_lower(r_sq);
            b.sides[k] = {x.coords[k] - bound * u, x.coords[k] + bound * v};
        }
        BoxUnion probe(dim, {b});
        const Bit v = eval(probe);
        report.values.push_back(v);
        if (!first_seen) {
            first_seen = {probe, v};
            report.common_value = v;
        } else if (v != first_seen->second && !report.witness) {
            report.pass = false;
            report.witness = {first_seen->first, probe};
        }
    }
    return report;
}

Rational analytic_epsilon_sq(const LocallyFiniteSet& h, const Point& x) {
    const auto nearest = locfin_nearest_other_sq(h, x);
    if (!nearest) return 1;  // isolated carrier: any unit-scale box works
    return *nearest / 4;
}

std::vector<Point> derivative_support(const DerivableMeasure& mu, const BoxUnion& a) {
    if (a.is_empty()) return {};
    if (!mu.derivative_set)
        throw PreconditionError("derivative support requires a declared derivative set");
    return locfin_points_in(*mu.derivative_set, a);
}

DerivableMeasure reconstruct_measure(const LocallyFiniteSet& g) { return mu_locfin(g); }

namespace {

// Intersection of two locally finite sets when it is finite; DomainError when
// two lattices share an arithmetic progression on every axis.
std::vector<Point> intersect_locfin(const LocallyFiniteSet& f, const LocallyFiniteSet& s) {
    if (f.dim() != s.dim()) throw StructureError("dimension mismatch");
    if (f.is_finite() || s.is_finite()) {
        const LocallyFiniteSet& fin = f.is_finite() ? f : s;
        const LocallyFiniteSet& other = f.is_finite() ? s : f;
        std::vector<Point> out;
        for (const Point& p : fin.points())
            if (other.member(p)) out.push_back(p);
        return out;
    }
    // Two lattices: on each axis the common points are empty or an infinite
    // progression. Any empty axis empties the intersection.
    for (std::size_t k = 0; k < f.dim(); ++k) {
        const Rational q1 = f.scale(), q2 = s.scale();
        const Rational diff = s.offset().coords[k] - f.offset().coords[k];
        // q1*a - q2*b ranges over g*Z with g = gcd of the scaled numerators.
        const Int n1 = numerator(q1) * denominator(q2);
        const Int n2 = numerator(q2) * denominator(q1);
        const Int den = denominator(q1) * denominator(q2);
        const Rational g(boost::multiprecision::gcd(n1, n2), den);
        if (!is_integer(diff / g)) return {};
    }
    throw DomainError("intersection of two lattices is not finite");
}

}  // namespace

Bit integral_derivable(const LocallyFiniteSet& f, const DerivableMeasure& mu) {
    if (!mu.derivative_set)
        throw PreconditionError("integral requires a measure with a declared derivative");
    return parity(intersect_locfin(f, *mu.derivative_set).size());
}

Bit integral_on_derivable(const BoxUnion& a, const LocallyFiniteSet& g,
                          const DerivableMeasure& mu) {
    if (!mu.derivative_set)
        throw PreconditionError("integral requires a measure with a declared derivative");
    std::size_t count = 0;
    for (const Point& p : locfin_points_in(*mu.derivative_set, a)) count += g.member(p);
    return parity(count);
}

Measure<BoxUnion> as_measure(const DerivableMeasure& mu) {
    return {mu.name, mu.eval};
}

}  // namespace binmeas
