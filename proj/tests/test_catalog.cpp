#include <doctest.h>

#include "binmeas/catalog.hpp"
#include "binmeas/rng.hpp"

using namespace binmeas;
using namespace binmeas::catalog;

namespace {

SparsePointFunction pts(std::vector<Rational> xs) { return SparsePointFunction(std::move(xs)); }

// Random disjoint pair of finite real sets.
std::pair<FiniteRealSet, FiniteRealSet> random_disjoint_sets(Rng& rng) {
    std::vector<Rational> a, b;
    for (int i = -8; i <= 8; ++i) {
        const auto pick = rng.below(3);
        if (pick == 0) a.push_back(Rational(i, 2));
        if (pick == 1) b.push_back(Rational(i, 2));
    }
    return {pts(a), pts(b)};
}

}  // namespace

TEST_CASE("sequences normalize away redundant overrides") {
    const BinarySequence x({{3, 0}, {5, 1}}, 0);
    CHECK(x.overrides().size() == 1);
    CHECK(x.at(3) == 0);
    CHECK(x.at(5) == 1);
    CHECK(x.at(1000) == 0);
    CHECK(BinarySequence::unit(4).support_size() == 1);
    CHECK_THROWS_AS(BinarySequence::constant(1).support_size(), DomainError);
}

TEST_CASE("limit functional reads the tail") {
    CHECK(limit_measure_eval(BinarySequence::constant(1)) == 1);
    CHECK(limit_measure_eval(BinarySequence::unit(7)) == 0);
    CHECK(limit_measure_eval(BinarySequence({{0, 1}, {5, 1}}, 0)) == 0);
}

TEST_CASE("modulo-2 sum requires convergence to zero") {
    CHECK(seq_sum_eval(BinarySequence({{0, 1}, {5, 1}}, 0)) == 0);
    CHECK(seq_sum_eval(BinarySequence::unit(3)) == 1);
    CHECK_THROWS_AS(seq_sum_eval(BinarySequence::constant(1)), DomainError);
}

TEST_CASE("catalog evaluation examples") {
    CHECK(finite_boolean()(pts({1, 2, 3})) == 1);
    CHECK(sym_sup()(interval(ExtendedRational(Rational(0)), ExtendedRational::pos_inf())) == 1);
    CHECK(sym_sup()(interval(ExtendedRational(Rational(0)), ExtendedRational(Rational(5)))) == 0);
    CHECK(inferiorly_finite(0)(pts({-3, -1, 7})) == 0);  // two points below
    CHECK(dirac(1)(pts({1, 3})) == 1);
    CHECK(dirac(2)(pts({1, 3})) == 0);
    CHECK(null_measure()(pts({1, 2, 3, 4})) == 0);
    CHECK(coord(3)(BinarySequence::unit(3)) == 1);
    CHECK(coord(2)(BinarySequence::unit(3)) == 0);
    CHECK(left_limit_eval(ExtendedRational(Rational(1)))(sf_normalize(0, {0, 1})) == 1);
    CHECK(step_ring_parity()(SSet::open(0, 1)) == 1);
    CHECK(step_ring_parity()(SSet::half_open(0, 1)) == 0);
}

TEST_CASE("counterexamples reproduce the published divergences") {
    for (auto which : {CounterexampleCase::Seq36, CounterexampleCase::Interval313}) {
        const DivergenceReport r = counterexample_divergence(which, 64);
        CHECK(r.union_value == 1);
        CHECK(r.xor_sum == 0);
        CHECK(r.countably_additive == 0);
        CHECK(r.disjoint_ok);
        // Depth robustness: the divergence is visible at depth 1 already.
        const DivergenceReport shallow = counterexample_divergence(which, 1);
        CHECK(shallow.countably_additive == 0);
    }
    // Disjointness oracle: members meet pairwise in the empty set.
    const auto base = canonical_base_family();
    for (std::size_t i = 0; i < 64; ++i)
        for (std::size_t j = i + 1; j < 64; ++j)
            CHECK(seq_combine(Law::And, base.produce(i), base.produce(j)).is_zero());
    const auto tele = interval_313_family();
    for (std::size_t i = 0; i < 64; ++i)
        for (std::size_t j = i + 1; j < 64; ++j)
            CHECK(sset_op(Law::And, tele.produce(i), tele.produce(j)).is_empty());
}

TEST_CASE("measure-claimed catalog entries pass sampled additivity") {
    Rng rng(97);
    const std::function<std::pair<FiniteRealSet, FiniteRealSet>(Rng&)> source =
        random_disjoint_sets;
    for (const auto& mu : {null_measure(), finite_boolean(), dirac(Rational(1, 2)),
                           dirac_sum({0, 1, 2}), inferiorly_finite(Rational(3, 2)),
                           restriction(finite_boolean(), pts({0, 1, 2, 3}))})
        CHECK(is_additive_sampled(mu, source, rng, 300) == 1);

    const std::function<std::pair<BinarySequence, BinarySequence>(Rng&)> seq_source =
        [](Rng& r) -> std::pair<BinarySequence, BinarySequence> {
        std::map<std::uint64_t, Bit> a, b;
        for (std::uint64_t i = 0; i < 10; ++i) {
            const auto pick = r.below(3);
            if (pick == 0) a[i] = 1;
            if (pick == 1) b[i] = 1;
        }
        return {BinarySequence(std::move(a), 0), BinarySequence(std::move(b), 0)};
    };
    for (const auto& mu : {coord(2), coord_sum({0, 3}), limit_functional(), seq_sum()})
        CHECK(is_additive_sampled(mu, seq_source, rng, 300) == 1);

    // Function carriers: disjoint means the pointwise product vanishes.
    const std::function<std::pair<BinaryStepFunction, BinaryStepFunction>(Rng&)> step_source =
        [](Rng& r) -> std::pair<BinaryStepFunction, BinaryStepFunction> {
        // Indicators of interleaved unit slots never overlap.
        std::vector<Rational> ta, tb;
        for (int slot = -4; slot < 4; ++slot) {
            const auto pick = r.below(3);
            if (pick == 0) {
                ta.push_back(Rational(2 * slot));
                ta.push_back(Rational(2 * slot + 1));
            } else if (pick == 1) {
                tb.push_back(Rational(2 * slot));
                tb.push_back(Rational(2 * slot + 1));
            }
        }
        return {sf_normalize(0, ta), sf_normalize(0, tb)};
    };
    for (const auto& mu : {left_limit_eval(ExtendedRational(Rational(1, 2))),
                           left_limit_eval(ExtendedRational::pos_inf())})
        CHECK(is_additive_sampled(mu, step_source, rng, 300) == 1);

    const std::function<std::pair<SparsePointFunction, SparsePointFunction>(Rng&)>
        sparse_source = [](Rng& r) -> std::pair<SparsePointFunction, SparsePointFunction> {
        std::vector<Rational> a, b;
        for (int i = -8; i <= 8; ++i) {
            const auto pick = r.below(3);
            if (pick == 0) a.push_back(Rational(i, 2));
            if (pick == 1) b.push_back(Rational(i, 2));
        }
        return {SparsePointFunction(a), SparsePointFunction(b)};
    };
    const IntervalUnion window =
        interval(ExtendedRational(Rational(-2)), ExtendedRational(Rational(2)));
    for (const auto& mu : {indicator_integral(window), indicator_integral_all()})
        CHECK(is_additive_sampled(mu, sparse_source, rng, 300) == 1);

    const std::function<std::pair<SSet, SSet>(Rng&)> sset_source =
        [](Rng& r) -> std::pair<SSet, SSet> {
        // Components drawn from separated unit slots keep the pair disjoint.
        std::vector<SComponent> a, b;
        for (int slot = -4; slot < 4; ++slot) {
            const Rational lo(slot * 2);
            const auto pick = r.below(4);
            SComponent c{lo, lo + 1, r.coin(), r.coin()};
            if (c.lo == c.hi) continue;
            if (pick == 0) a.push_back(c);
            if (pick == 1) b.push_back(c);
            if (pick == 2) {
                SComponent point{lo, lo, true, true};
                (r.coin() ? a : b).push_back(point);
            }
        }
        return {SSet(a), SSet(b)};
    };
    CHECK(is_additive_sampled(step_ring_parity(), sset_source, rng, 300) == 1);
}

TEST_CASE("structured families certify the countable claims") {
    // Singleton families for the point-based measures.
    auto singleton_family = [](std::size_t count) {
        DisjointFamilyGenerator<FiniteRealSet> fam;
        fam.produce = [count](std::size_t n) {
            return n < count ? pts({Rational(static_cast<long long>(n))}) : pts({});
        };
        std::vector<Rational> all;
        for (std::size_t i = 0; i < count; ++i) all.push_back(Rational(static_cast<long long>(i)));
        fam.union_set = pts(all);
        fam.tail_index = count;
        fam.tail_reason = TailReason::AllEmptyAfter;
        return fam;
    };
    for (const auto& mu : {null_measure(), finite_boolean(), dirac(2), dirac_sum({0, 1, 2}),
                           inferiorly_finite(Rational(3, 2))}) {
        const auto report = check_countable_family(mu, singleton_family(5), 16);
        CHECK(report.pass());
    }
    // The spec example: parity over singletons {1},{2},{3}.
    DisjointFamilyGenerator<FiniteRealSet> three;
    three.produce = [](std::size_t n) {
        return n < 3 ? pts({Rational(static_cast<long long>(n) + 1)}) : pts({});
    };
    three.union_set = pts({1, 2, 3});
    three.tail_index = 3;
    const auto r3 = check_countable_family(finite_boolean(), three, 16);
    CHECK(r3.xor_sum == 1);
    CHECK(r3.union_value == 1);
    CHECK(r3.pass());

    // Coordinate measures against the canonical base; the certificate index
    // is measure-relative (values vanish beyond the named coordinates).
    auto base = canonical_base_family();
    base.tail_index = 6;
    CHECK(check_countable_family(coord(5), base, 64).pass());
    CHECK(check_countable_family(coord_sum({1, 4}), base, 64).pass());
    // The limit functional against the same family fails, by the sequence
    // counterexample.
    CHECK(check_countable_family(limit_functional(), base, 64).xor_equality == 0);

    // Truncated base stays inside the tail-zero algebra, where the limit is
    // a measure (identically zero there).
    DisjointFamilyGenerator<BinarySequence> truncated;
    truncated.produce = [](std::size_t n) {
        return n < 6 ? BinarySequence::unit(n) : BinarySequence::constant(0);
    };
    std::map<std::uint64_t, Bit> six;
    for (std::uint64_t i = 0; i < 6; ++i) six[i] = 1;
    truncated.union_set = BinarySequence(std::move(six), 0);
    truncated.tail_index = 6;
    CHECK(check_countable_family(limit_functional(), truncated, 32).pass());
    CHECK(check_countable_family(seq_sum(), truncated, 32).pass());

    // Interval splits for the sup-at-infinity measure.
    DisjointFamilyGenerator<IntervalUnion> split;
    split.produce = [](std::size_t n) {
        if (n == 0)
            return interval(ExtendedRational(Rational(10)), ExtendedRational::pos_inf());
        if (n <= 4) {
            const long long i = static_cast<long long>(n) - 1;
            return interval(ExtendedRational(Rational(2 * i)),
                            ExtendedRational(Rational(2 * i + 1)));
        }
        return IntervalUnion::empty();
    };
    split.union_set = normalize({{ExtendedRational(Rational(0)), ExtendedRational(Rational(1))},
                                 {ExtendedRational(Rational(2)), ExtendedRational(Rational(3))},
                                 {ExtendedRational(Rational(4)), ExtendedRational(Rational(5))},
                                 {ExtendedRational(Rational(6)), ExtendedRational(Rational(7))},
                                 {ExtendedRational(Rational(10)), ExtendedRational::pos_inf()}},
                                NormalizeMode::UnionOf);
    split.tail_index = 5;
    const auto sup_report = check_countable_family(sym_sup(), split, 32);
    CHECK(sup_report.pass());
    CHECK(sup_report.xor_sum == 1);

    // Half-open splits keep the ring-S parity countably consistent; the
    // telescoping family of 3.13 is exactly where it fails.
    DisjointFamilyGenerator<SSet> halves;
    halves.produce = [](std::size_t n) {
        if (n == 0) return SSet::half_open(0, Rational(1, 2));
        if (n == 1) return SSet::half_open(Rational(1, 2), 1);
        return SSet::empty();
    };
    halves.union_set = SSet::half_open(0, 1);
    halves.tail_index = 2;
    CHECK(check_countable_family(step_ring_parity(), halves, 16).pass());

    // Left-limit evaluation against slot-indicator step functions; the value
    // at t reads exactly one member.
    DisjointFamilyGenerator<BinaryStepFunction> slots;
    slots.produce = [](std::size_t n) {
        if (n >= 5) return BinaryStepFunction();
        const long long i = static_cast<long long>(n);
        return sf_normalize(0, {Rational(i), Rational(i + 1)});
    };
    std::vector<Rational> all_toggles{0, 5};
    slots.union_set = sf_normalize(0, all_toggles);
    slots.tail_index = 5;
    const auto ll = check_countable_family(left_limit_eval(ExtendedRational(Rational(1, 2))),
                                           slots, 16);
    CHECK(ll.pass());
    CHECK(ll.xor_sum == 1);

    // Windowed indicator integrals against disjoint sparse functions.
    DisjointFamilyGenerator<SparsePointFunction> sparse_fam;
    sparse_fam.produce = [](std::size_t n) {
        if (n >= 4) return SparsePointFunction();
        return SparsePointFunction({Rational(static_cast<long long>(n))});
    };
    sparse_fam.union_set = SparsePointFunction({0, 1, 2, 3});
    sparse_fam.tail_index = 4;
    const IntervalUnion w02 = interval(ExtendedRational(Rational(0)),
                                       ExtendedRational(Rational(2)));
    const auto ii = check_countable_family(indicator_integral(w02), sparse_fam, 16);
    CHECK(ii.pass());
    CHECK(ii.xor_sum == 0);  // two support points inside the window
}

TEST_CASE("restriction agrees with the base below the restriction set") {
    Rng rng(101);
    const FiniteRealSet a = pts({0, 1, 2, 3, 4});
    const auto mu = finite_boolean();
    const auto res = restriction(mu, a);
    for (int t = 0; t < 300; ++t) {
        std::vector<Rational> sub;
        for (const Rational& x : a.support())
            if (rng.coin()) sub.push_back(x);
        const FiniteRealSet b = pts(sub);
        CHECK(res(b) == mu(b));
    }
    // Off the restriction set the measure only sees the intersection.
    CHECK(res(pts({0, 7})) == 1);
    CHECK(res(pts({7})) == 0);
}

TEST_CASE("a dirac sum is the xor of its diracs") {
    Rng rng(103);
    const std::vector<Rational> carrier{0, Rational(1, 2), 3, 5};
    const auto sum = dirac_sum(carrier);
    for (int t = 0; t < 1000; ++t) {
        std::vector<Rational> sample;
        for (int i = -6; i <= 6; ++i)
            if (rng.coin()) sample.push_back(Rational(i, 2));
        const FiniteRealSet a = pts(sample);
        Bit expect = 0;
        for (const Rational& x : carrier) expect = bit_xor(expect, dirac(x)(a));
        CHECK(sum(a) == expect);
    }
}

TEST_CASE("the cofinite example is the complemented finite Boolean measure") {
    CHECK(cofinite_star_eval(CofiniteSet{}) == 1);
    CHECK(cofinite_star_eval(CofiniteSet{{4}}) == 0);
    CHECK(cofinite_star_eval(CofiniteSet{{1, 2}}) == 1);
    Rng rng(107);
    for (int t = 0; t < 500; ++t) {
        CofiniteSet h;
        std::vector<Rational> complement;
        for (long long i = -6; i <= 6; ++i) {
            if (rng.coin()) {
                h.complement.insert(i);
                complement.push_back(Rational(i));
            }
        }
        CHECK(cofinite_star_eval(h) ==
              bit_not(finite_boolean()(SparsePointFunction(complement))));
    }
}

TEST_CASE("disjoint* cofinite families fold with the coincidence law") {
    // Complements {0},{1},...,{k-1}: pairwise disjoint* (unions cover X) with
    // meet equal to the cofinite set missing all k labels.
    for (std::size_t k = 1; k <= 6; ++k) {
        Bit fold = 1;
        CofiniteSet meet;
        for (std::size_t n = 0; n < k; ++n) {
            CofiniteSet a{{static_cast<long long>(n)}};
            fold = bit_xnor(fold, cofinite_star_eval(a));
            meet.complement.insert(static_cast<long long>(n));
        }
        // xnor-fold of k zeros, seeded with the neutral 1.
        CHECK(cofinite_star_eval(meet) == fold);
    }
}

TEST_CASE("sset canonicalization merges touching pieces") {
    const SSet merged = sset_op(
        Law::Or, sset_op(Law::Or, SSet::open(0, 1), SSet::point(1)), SSet::open(1, 2));
    CHECK(merged == SSet::open(0, 2));
    CHECK(sset_parity(merged) == 1);
    // A closed interval counts like an open one, half-open like nothing.
    CHECK(sset_parity(SSet({SComponent{0, 1, true, true}})) == 1);
    CHECK(sset_parity(SSet::point(5)) == 1);
    const SSet hollow = sset_op(Law::Xor, SSet::open(0, 2), SSet::point(1));
    CHECK(hollow.components().size() == 2);  // the point is carved out
    CHECK(sset_parity(hollow) == 0);         // (0,1) and (1,2): two opens
    CHECK(hollow.member(1) == 0);
    CHECK(hollow.member(Rational(1, 2)) == 1);
}

TEST_CASE("sset operations agree with pointwise membership") {
    Rng rng(109);
    for (int t = 0; t < 300; ++t) {
        auto make = [&] {
            std::vector<SComponent> raw;
            const std::size_t k = 1 + rng.below(3);
            for (std::size_t i = 0; i < k; ++i) {
                const Rational lo = rng.rational(6, 2);
                if (rng.below(4) == 0) {
                    raw.push_back(SComponent{lo, lo, true, true});
                } else {
                    const Rational hi = lo + Rational(rng.range(1, 6), 2);
                    raw.push_back(SComponent{lo, hi, rng.coin(), rng.coin()});
                }
            }
            return SSet(raw);
        };
        const SSet a = make();
        const SSet b = make();
        for (Law law : {Law::And, Law::Or, Law::Xor}) {
            const SSet c = sset_op(law, a, b);
            for (int i = -28; i <= 28; ++i) {
                const Rational x(i, 4);
                CHECK(c.member(x) == b2_law(law, a.member(x), b.member(x)));
            }
        }
    }
}
