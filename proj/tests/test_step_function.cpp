#include <doctest.h>

#include "binmeas/rng.hpp"
#include "binmeas/step_function.hpp"

using namespace binmeas;

namespace {

BinaryStepFunction indicator_01() { return sf_normalize(0, {0, 1}); }  // 1 on (0, 1]

BinaryStepFunction random_fn(Rng& rng) {
    std::vector<Rational> raw;
    const std::size_t k = rng.below(7);
    for (std::size_t i = 0; i < k; ++i) raw.push_back(rng.rational(12, 4));
    return sf_normalize(rng.coin() ? 1 : 0, std::move(raw));
}

// Direct toggle-parity oracle for evaluation at a finite point.
Bit eval_oracle(const BinaryStepFunction& f, const Rational& t) {
    std::size_t below = 0;
    for (const Rational& s : f.toggles())
        if (s < t) ++below;
    return bit_xor(f.v0(), parity(below));
}

}  // namespace

TEST_CASE("evaluation of the unit indicator") {
    const BinaryStepFunction f = indicator_01();
    CHECK(sf_eval(f, ExtendedRational(Rational(1, 2))) == 1);
    CHECK(sf_eval(f, ExtendedRational(Rational(0))) == 0);  // left continuity at the toggle
    CHECK(sf_eval(f, ExtendedRational(Rational(1))) == 1);
    CHECK(sf_eval(f, ExtendedRational::pos_inf()) == 0);
    CHECK(sf_eval(f, ExtendedRational::neg_inf()) == 0);
}

TEST_CASE("left limits coincide with values in this class") {
    const BinaryStepFunction f = indicator_01();
    for (const auto& t : {ExtendedRational(Rational(1)), ExtendedRational(Rational(0)),
                          ExtendedRational::pos_inf()})
        CHECK(sf_left_limit(f, t) == sf_eval(f, t));
}

TEST_CASE("normalization cancels toggles in pairs and sorts") {
    CHECK(sf_normalize(0, {1, 1}) == BinaryStepFunction(0, {}));
    CHECK(sf_normalize(1, {3, 2}) == BinaryStepFunction(1, {2, 3}));
    const BinaryStepFunction f = sf_normalize(0, {0, 1, 1, 2});
    CHECK(f == BinaryStepFunction(0, {0, 2}));
    // Pointwise agreement with the raw-multiset semantics on a grid.
    for (int num = -8; num <= 8; ++num) {
        const Rational t(num, 2);
        std::size_t below = 0;
        for (const Rational& s : std::vector<Rational>{0, 1, 1, 2})
            if (s < t) ++below;
        CHECK(sf_eval(f, ExtendedRational(t)) == parity(below));
    }
}

TEST_CASE("strictly increasing toggles are required by the raw constructor") {
    CHECK_THROWS_AS(BinaryStepFunction(0, {1, 1}), StructureError);
}

TEST_CASE("pointwise combinations") {
    const BinaryStepFunction f = indicator_01();
    const BinaryStepFunction g = sf_normalize(0, {0, 2});  // 1 on (0, 2]
    CHECK(sf_combine(Law::Xor, f, f).is_zero());
    CHECK(sf_combine(Law::And, f, g) == f);
    const BinaryStepFunction h = sf_normalize(0, {1, 2});  // 1 on (1, 2]
    CHECK(sf_combine(Law::Xor, f, h) == g);
    CHECK_THROWS_AS(sf_combine(Law::Not, f, g), UsageError);
}

TEST_CASE("left continuity at every toggle for random functions") {
    Rng rng(29);
    for (int t = 0; t < 1000; ++t) {
        const BinaryStepFunction f = random_fn(rng);
        const auto& tg = f.toggles();
        for (std::size_t i = 0; i < tg.size(); ++i) {
            const Rational prev = i == 0 ? tg[i] - 1 : tg[i - 1];
            const Rational below = prev + (tg[i] - prev) / 2;
            CHECK(sf_eval(f, ExtendedRational(tg[i])) == sf_eval(f, ExtendedRational(below)));
        }
    }
}

TEST_CASE("combinations commute with evaluation everywhere") {
    Rng rng(31);
    for (int t = 0; t < 200; ++t) {
        const BinaryStepFunction f = random_fn(rng);
        const BinaryStepFunction g = random_fn(rng);
        for (Law law : {Law::Xor, Law::And, Law::Or, Law::Xnor}) {
            const BinaryStepFunction c = sf_combine(law, f, g);
            for (int i = 0; i < 25; ++i) {
                const ExtendedRational at =
                    i == 0 ? ExtendedRational::pos_inf() : ExtendedRational(rng.rational(16, 4));
                CHECK(sf_eval(c, at) == b2_law(law, sf_eval(f, at), sf_eval(g, at)));
            }
        }
    }
}

TEST_CASE("the prolonged value is the eventual constant") {
    Rng rng(37);
    for (int t = 0; t < 300; ++t) {
        const BinaryStepFunction f = random_fn(rng);
        Rational beyond = 1;
        for (const Rational& s : f.toggles())
            if (s >= beyond) beyond = s + 1;
        CHECK(sf_eval(f, ExtendedRational::pos_inf()) == sf_eval(f, ExtendedRational(beyond)));
        CHECK(sf_eval(f, ExtendedRational(beyond)) == eval_oracle(f, beyond));
    }
}

TEST_CASE("support pieces are left-open and right-closed where the function is 1") {
    Rng rng(41);
    auto piece_member = [](const std::vector<std::pair<ExtendedRational, ExtendedRational>>& ps,
                           const Rational& x) -> Bit {
        const ExtendedRational p(x);
        for (const auto& [lo, hi] : ps)
            if (lo < p && (p < hi || p == hi)) return 1;
        return 0;
    };
    for (int t = 0; t < 300; ++t) {
        const BinaryStepFunction f = random_fn(rng);
        const auto pieces = sf_support_pieces(f);
        for (int i = 0; i < 20; ++i) {
            const Rational x = rng.rational(16, 4);
            CHECK(piece_member(pieces, x) == sf_eval(f, ExtendedRational(x)));
        }
        // The toggle points themselves are the critical cases.
        for (const Rational& s : f.toggles())
            CHECK(piece_member(pieces, s) == sf_eval(f, ExtendedRational(s)));
    }
    // The unit indicator supports exactly (0, 1].
    const auto unit = sf_support_pieces(indicator_01());
    REQUIRE(unit.size() == 1);
    CHECK(unit[0].first == ExtendedRational(Rational(0)));
    CHECK(unit[0].second == ExtendedRational(Rational(1)));
    // Only the empty and full supports are half-open interval unions.
    CHECK(sf_support_interval_union(BinaryStepFunction()).has_value());
    CHECK(sf_support_interval_union(BinaryStepFunction(1, {})).has_value());
    CHECK(!sf_support_interval_union(indicator_01()).has_value());
}

TEST_CASE("sparse point functions reject duplicates and filter by windows") {
    CHECK_THROWS_AS(SparsePointFunction({1, 1}), UsageError);
    const SparsePointFunction f({0, Rational(1, 2), 3});
    CHECK(f.at(Rational(1, 2)) == 1);
    CHECK(f.at(Rational(1, 3)) == 0);
    const auto in = sp_support_in(f, interval(ExtendedRational(Rational(0)),
                                              ExtendedRational(Rational(2))));
    CHECK(in == std::vector<Rational>{0, Rational(1, 2)});
    CHECK(sp_combine(Law::Xor, f, f).is_zero());
}
