#include <doctest.h>

#include "binmeas/derivable.hpp"
#include "binmeas/rng.hpp"

using namespace binmeas;

namespace {

Point pt1(const Rational& x) { return Point{{x}}; }

Point pt2(const Rational& x, const Rational& y) { return Point{{x, y}}; }

BoxUnion window1(const Rational& lo, const Rational& hi) {
    return BoxUnion(1, {Box{{{lo, hi}}}});
}

LocallyFiniteSet unit_lattice1() {
    return LocallyFiniteSet::lattice(1, 1, pt1(0));
}

// Brute-force lattice counting oracle: scan a safe integer range.
long long lattice_count_oracle(const Rational& scale, const Rational& offset,
                               const Rational& lo, const Rational& hi) {
    long long count = 0;
    for (long long k = -400; k <= 400; ++k) {
        const Rational x = offset + scale * Rational(k);
        if (lo <= x && x < hi) ++count;
    }
    return count;
}

}  // namespace

TEST_CASE("lattice and finite counting") {
    CHECK(locfin_count(unit_lattice1(), window1(0, Rational(5, 2))) == 3);
    const LocallyFiniteSet h = LocallyFiniteSet::finite(2, {pt2(0, 0), pt2(1, 1)});
    CHECK(locfin_count(h, BoxUnion(2, {Box{{{Rational(0), Rational(1)},
                                            {Rational(0), Rational(1)}}}})) == 1);
    CHECK(locfin_count(h, BoxUnion(2)) == 0);
    // Oracle comparison over random windows and lattices.
    Rng rng(79);
    for (int t = 0; t < 200; ++t) {
        const Rational scale(1, rng.range(1, 3));
        const Rational offset = rng.rational(4, 2);
        const LocallyFiniteSet lat = LocallyFiniteSet::lattice(1, scale, pt1(offset));
        const Rational lo = rng.rational(8, 2);
        const Rational hi = lo + Rational(rng.range(1, 10), 2);
        CHECK(locfin_count(lat, window1(lo, hi)) ==
              lattice_count_oracle(scale, offset, lo, hi));
    }
}

TEST_CASE("parity measures of locally finite sets") {
    const DerivableMeasure mu = mu_locfin(unit_lattice1());
    CHECK(mu(window1(0, Rational(5, 2))) == 1);  // three points
    const DerivableMeasure empty_mu = mu_locfin(LocallyFiniteSet::finite(1, {}));
    CHECK(empty_mu(window1(-10, 10)) == 0);
    const DerivableMeasure two = mu_locfin(LocallyFiniteSet::finite(2, {pt2(0, 0), pt2(1, 1)}));
    CHECK(two(BoxUnion(2, {Box{{{Rational(0), Rational(2)}, {Rational(0), Rational(2)}}}})) == 0);
}

TEST_CASE("the derivative is membership in the carrier") {
    const DerivableMeasure mu = mu_locfin(unit_lattice1());
    CHECK(derivative_at(mu, pt1(0)) == 1);
    CHECK(derivative_at(mu, pt1(Rational(1, 2))) == 0);
    const DerivableMeasure null_mu = mu_locfin(LocallyFiniteSet::finite(1, {}));
    CHECK(derivative_at(null_mu, pt1(7)) == 0);
}

TEST_CASE("probing below the analytic radius is constant") {
    const DerivableMeasure mu = mu_locfin(unit_lattice1());
    const auto at0 = derivability_probe(mu.eval, 1, pt1(0), Rational(1, 4), 64, 5);
    CHECK(at0.pass);
    CHECK(at0.common_value == 1);
    const auto at_half = derivability_probe(mu.eval, 1, pt1(Rational(1, 2)), Rational(1, 16), 64, 5);
    CHECK(at_half.pass);
    CHECK(at_half.common_value == 0);
}

TEST_CASE("analytic epsilon is sound for random carriers") {
    Rng rng(83);
    for (int t = 0; t < 60; ++t) {
        const bool use_lattice = rng.coin();
        const std::size_t dim = 1 + rng.below(2);
        LocallyFiniteSet h = [&] {
            if (use_lattice) {
                Point off;
                for (std::size_t k = 0; k < dim; ++k) off.coords.push_back(rng.rational(3, 2));
                return LocallyFiniteSet::lattice(dim, Rational(1, rng.range(1, 2)), off);
            }
            std::vector<Point> pts;
            const std::size_t n = 1 + rng.below(6);
            for (std::size_t i = 0; i < n; ++i) {
                Point p;
                for (std::size_t k = 0; k < dim; ++k) p.coords.push_back(rng.rational(6, 2));
                pts.push_back(std::move(p));
            }
            return LocallyFiniteSet::finite(dim, std::move(pts));
        }();
        const DerivableMeasure mu = mu_locfin(h);
        Point x;
        if (!h.is_finite() || rng.coin() || h.points().empty()) {
            for (std::size_t k = 0; k < dim; ++k) x.coords.push_back(rng.rational(6, 2));
        } else {
            x = h.points()[rng.below(h.points().size())];
        }
        const Rational eps_sq = analytic_epsilon_sq(h, x);
        const auto probe = derivability_probe(mu.eval, dim, x, eps_sq, 48, 7 + t);
        CHECK(probe.pass);
        CHECK(probe.common_value == derivative_at(mu, x));
    }
}

TEST_CASE("a value oscillating at every scale fails the probe with witnesses") {
    // Contrived fixture: for boxes containing 0, the value is the parity of
    // the scale band of the right endpoint; it never settles.
    auto scale_band = [](const BoxUnion& b) -> Bit {
        if (b.is_empty() || bx_member(b, Point{{0}}) == 0) return 0;
        Rational hi = b.boxes().back().sides[0].second;
        int band = 0;
        Rational probe(1);
        while (probe > hi) {
            probe /= 2;
            ++band;
        }
        return parity(static_cast<std::size_t>(band));
    };
    const auto report = derivability_probe(scale_band, 1, Point{{0}}, Rational(1, 64), 64, 11);
    CHECK(!report.pass);
    CHECK(report.witness.has_value());
    CHECK(scale_band(report.witness->first) != scale_band(report.witness->second));

    // The probing derivative errors out on the same fixture, and reads the
    // constant region of a well-behaved undeclared measure.
    DerivableMeasure bad{"oscillating", 1, scale_band, std::nullopt};
    CHECK_THROWS_AS(derivative_at(bad, Point{{0}}), PreconditionError);
    CHECK_THROWS_AS(derivative_at_probed(bad, Point{{0}}, Rational(1, 64), 64, 11), DomainError);
    const LocallyFiniteSet h = unit_lattice1();
    DerivableMeasure undeclared{"parity-undeclared", 1, mu_locfin(h).eval, std::nullopt};
    CHECK(derivative_at_probed(undeclared, pt1(0), Rational(1, 4), 48, 13) == 1);
    CHECK(derivative_at_probed(undeclared, pt1(Rational(1, 2)), Rational(1, 16), 48, 13) == 0);
}

TEST_CASE("derivative support enumerates the carrier inside the query") {
    const DerivableMeasure mu = mu_locfin(unit_lattice1());
    const auto pts = derivative_support(mu, window1(0, Rational(5, 2)));
    CHECK(pts == std::vector<Point>{pt1(0), pt1(1), pt1(2)});
    CHECK(derivative_support(mu, BoxUnion(1)).empty());
    const DerivableMeasure single = mu_locfin(LocallyFiniteSet::finite(2, {pt2(0, 0)}));
    const auto one = derivative_support(
        single, BoxUnion(2, {Box{{{Rational(0), Rational(1)}, {Rational(0), Rational(1)}}}}));
    CHECK(one == std::vector<Point>{pt2(0, 0)});
}

TEST_CASE("reconstruction and the integrals") {
    const LocallyFiniteSet g = LocallyFiniteSet::finite(1, {pt1(1), pt1(2)});
    const DerivableMeasure mu = reconstruct_measure(g);
    CHECK(mu(window1(0, 3)) == 0);  // two points
    CHECK(integral_derivable(LocallyFiniteSet::finite(1, {pt1(0)}), mu_locfin(unit_lattice1())) ==
          1);
    // Disjoint supports integrate to zero.
    CHECK(integral_derivable(LocallyFiniteSet::finite(1, {pt1(Rational(1, 2))}),
                             mu_locfin(unit_lattice1())) == 0);
    // A window cuts the triple intersection.
    CHECK(integral_on_derivable(window1(0, 3), g, mu_locfin(unit_lattice1())) == 0);
    CHECK(integral_on_derivable(window1(0, 2), g, mu_locfin(unit_lattice1())) == 1);
}

TEST_CASE("two commensurable lattices have no finite common support") {
    const LocallyFiniteSet a = LocallyFiniteSet::lattice(1, 1, pt1(0));
    const LocallyFiniteSet b = LocallyFiniteSet::lattice(1, Rational(1, 2), pt1(0));
    CHECK_THROWS_AS(integral_derivable(a, mu_locfin(b)), DomainError);
    // Incompatible offsets empty the intersection instead.
    const LocallyFiniteSet c = LocallyFiniteSet::lattice(1, 1, pt1(Rational(1, 3)));
    CHECK(integral_derivable(a, mu_locfin(c)) == 0);
}

TEST_CASE("partition additivity of parity measures") {
    Rng rng(89);
    const LocallyFiniteSet h = LocallyFiniteSet::finite(
        1, {pt1(0), pt1(Rational(1, 2)), pt1(1), pt1(Rational(7, 3))});
    const DerivableMeasure mu = mu_locfin(h);
    for (int t = 0; t < 100; ++t) {
        const Rational lo = rng.rational(4, 2);
        const Rational hi = lo + Rational(rng.range(1, 8), 2);
        const BoxUnion a = window1(lo, hi);
        // Split [lo, hi) at interior cuts into parts, assigned round-robin.
        const std::size_t cuts = rng.below(4);
        std::vector<Rational> edges{lo};
        for (std::size_t i = 0; i < cuts; ++i)
            edges.push_back(lo + (hi - lo) * Rational(rng.range(1, 7), 8));
        std::sort(edges.begin(), edges.end());
        edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
        edges.push_back(hi);
        Bit acc = 0;
        for (std::size_t i = 0; i + 1 < edges.size(); ++i)
            acc = bit_xor(acc, mu(window1(edges[i], edges[i + 1])));
        CHECK(acc == mu(a));
    }
}
