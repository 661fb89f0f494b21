#include <doctest.h>

#include "binmeas/interval_ring.hpp"
#include "binmeas/rng.hpp"

using namespace binmeas;

namespace {

ExtendedRational er(long long n, long long d = 1) { return ExtendedRational(Rational(n, d)); }

IntervalUnion iv(std::vector<std::pair<ExtendedRational, ExtendedRational>> raw) {
    return normalize(raw, NormalizeMode::UnionOf);
}

std::vector<IntervalUnion::Component> random_raw(Rng& rng, std::size_t max_pairs) {
    std::vector<IntervalUnion::Component> raw;
    const std::size_t k = 1 + rng.below(max_pairs);
    for (std::size_t i = 0; i < k; ++i) {
        ExtendedRational a = rng.below(8) == 0 ? ExtendedRational::neg_inf()
                                               : ExtendedRational(rng.rational(12, 4));
        ExtendedRational b = rng.below(8) == 0 ? ExtendedRational::pos_inf()
                                               : ExtendedRational(rng.rational(12, 4));
        raw.emplace_back(a, b);
    }
    return raw;
}

// Membership oracle for a raw list under either normalization mode.
Bit raw_member(const std::vector<IntervalUnion::Component>& raw, NormalizeMode mode,
               const Rational& x) {
    std::size_t hits = 0;
    const ExtendedRational p(x);
    for (const auto& [a, b] : raw)
        if (a <= p && p < b) ++hits;
    if (mode == NormalizeMode::DeltaOf) return parity(hits);
    return hits > 0 ? 1 : 0;
}

// Probe points: all finite endpoints, their midpoints, and outliers.
std::vector<Rational> probes(const std::vector<IntervalUnion::Component>& raw) {
    std::vector<Rational> xs{-100, 100};
    for (const auto& [a, b] : raw) {
        for (const ExtendedRational& e : {a, b}) {
            if (!e.is_finite()) continue;
            xs.push_back(e.value());
            xs.push_back(e.value() - Rational(1, 7));
            xs.push_back(e.value() + Rational(1, 7));
        }
    }
    return xs;
}

}  // namespace

TEST_CASE("normalization collapses adjacency and empties") {
    CHECK(iv({{er(0), er(1)}, {er(1), er(2)}}) == iv({{er(0), er(2)}}));
    CHECK(normalize({{er(5), er(5)}}, NormalizeMode::UnionOf).is_empty());
    CHECK(normalize({{er(5), er(3)}}, NormalizeMode::UnionOf).is_empty());
    const IntervalUnion d = normalize({{er(0), er(2)}, {er(1), er(3)}}, NormalizeMode::DeltaOf);
    CHECK(d == iv({{er(0), er(1)}, {er(2), er(3)}}));
}

TEST_CASE("iv_op matches the examples") {
    const IntervalUnion a = iv({{ExtendedRational::neg_inf(), er(0)}});
    const IntervalUnion b = iv({{ExtendedRational::neg_inf(), er(1)}});
    CHECK(iv_op(IvOp::Delta, a, b) == iv({{er(0), er(1)}}));
    CHECK(iv_op(IvOp::Cap, iv({{er(0), er(3)}}), iv({{er(1), er(2)}})) ==
          iv({{er(1), er(2)}}));
    const IntervalUnion any = iv({{er(2), er(4)}});
    CHECK(iv_op(IvOp::Cup, IntervalUnion::empty(), any) == any);
    CHECK(iv_op(IvOp::Delta, IntervalUnion::empty(), any) == any);
}

TEST_CASE("membership respects the half-open convention") {
    const IntervalUnion a = iv({{er(0), er(1)}});
    CHECK(iv_member(a, 0) == 1);
    CHECK(iv_member(a, 1) == 0);
    const IntervalUnion rays =
        iv({{ExtendedRational::neg_inf(), er(0)}, {er(2), ExtendedRational::pos_inf()}});
    CHECK(iv_member(rays, 3) == 1);
    CHECK(iv_member(rays, 1) == 0);
}

TEST_CASE("the unbounded-above predicate") {
    CHECK(sup_is_infinite(iv({{er(0), ExtendedRational::pos_inf()}})) == 1);
    CHECK(sup_is_infinite(iv({{er(0), er(5)}})) == 0);
    CHECK(sup_is_infinite(IntervalUnion::empty()) == 0);
}

TEST_CASE("canonical form is stable under reordering and renormalization") {
    Rng rng(11);
    for (int t = 0; t < 10000; ++t) {
        auto raw = random_raw(rng, 4);
        const IntervalUnion u = normalize(raw, NormalizeMode::UnionOf);
        CHECK(normalize(u.components(), NormalizeMode::UnionOf) == u);
        auto shuffled = raw;
        rng.shuffle(shuffled);
        CHECK(normalize(shuffled, NormalizeMode::UnionOf) == u);
        // Membership of the canonical form equals the raw oracle everywhere.
        for (const Rational& x : probes(raw))
            CHECK(iv_member(u, x) == raw_member(raw, NormalizeMode::UnionOf, x));
        const IntervalUnion d = normalize(raw, NormalizeMode::DeltaOf);
        for (const Rational& x : probes(raw))
            CHECK(iv_member(d, x) == raw_member(raw, NormalizeMode::DeltaOf, x));
    }
}

TEST_CASE("ring laws on random triples") {
    Rng rng(13);
    for (int t = 0; t < 1000; ++t) {
        const IntervalUnion a = normalize(random_raw(rng, 3), NormalizeMode::UnionOf);
        const IntervalUnion b = normalize(random_raw(rng, 3), NormalizeMode::UnionOf);
        const IntervalUnion c = normalize(random_raw(rng, 3), NormalizeMode::UnionOf);
        // Associativity and commutativity of the symmetric difference.
        CHECK(iv_op(IvOp::Delta, iv_op(IvOp::Delta, a, b), c) ==
              iv_op(IvOp::Delta, a, iv_op(IvOp::Delta, b, c)));
        CHECK(iv_op(IvOp::Delta, a, b) == iv_op(IvOp::Delta, b, a));
        CHECK(iv_op(IvOp::Delta, a, IntervalUnion::empty()) == a);
        // Intersection distributes over the symmetric difference.
        CHECK(iv_op(IvOp::Cap, a, iv_op(IvOp::Delta, b, c)) ==
              iv_op(IvOp::Delta, iv_op(IvOp::Cap, a, b), iv_op(IvOp::Cap, a, c)));
    }
}

TEST_CASE("pointwise xor law of the symmetric difference") {
    Rng rng(17);
    for (int t = 0; t < 300; ++t) {
        const auto raw_a = random_raw(rng, 3);
        const auto raw_b = random_raw(rng, 3);
        const IntervalUnion a = normalize(raw_a, NormalizeMode::UnionOf);
        const IntervalUnion b = normalize(raw_b, NormalizeMode::UnionOf);
        const IntervalUnion d = iv_op(IvOp::Delta, a, b);
        for (int i = 0; i < 20; ++i) {
            const Rational x = rng.rational(16, 5);
            CHECK(iv_member(d, x) == bit_xor(iv_member(a, x), iv_member(b, x)));
        }
    }
}

TEST_CASE("disjoint parts reach infinity at most once") {
    Rng rng(19);
    for (int t = 0; t < 500; ++t) {
        const IntervalUnion u = normalize(random_raw(rng, 4), NormalizeMode::UnionOf);
        if (u.is_empty()) continue;
        // Split the components into two disjoint parts.
        std::vector<IntervalUnion::Component> left, right;
        for (const auto& comp : u.components())
            (rng.coin() ? left : right).push_back(comp);
        const IntervalUnion a = IntervalUnion::from_canonical(left);
        const IntervalUnion b = IntervalUnion::from_canonical(right);
        CHECK(sup_is_infinite(u) == bit_xor(sup_is_infinite(a), sup_is_infinite(b)));
    }
}

TEST_CASE("the fused disjoint union agrees with the two-step path") {
    Rng rng(23);
    for (int t = 0; t < 1000; ++t) {
        const IntervalUnion u = normalize(random_raw(rng, 4), NormalizeMode::UnionOf);
        std::vector<IntervalUnion::Component> left, right;
        for (const auto& comp : u.components())
            (rng.coin() ? left : right).push_back(comp);
        const IntervalUnion a = IntervalUnion::from_canonical(left);
        const IntervalUnion b = IntervalUnion::from_canonical(right);
        const auto fused = iv_disjoint_unite(a, b);
        REQUIRE(fused.has_value());
        CHECK(*fused == iv_op(IvOp::Cup, a, b));
        const IntervalUnion c = normalize(random_raw(rng, 2), NormalizeMode::UnionOf);
        const auto maybe = iv_disjoint_unite(u, c);
        if (iv_op(IvOp::Cap, u, c).is_empty())
            CHECK(maybe.has_value());
        else
            CHECK(!maybe.has_value());
    }
}
