#include "binmeas/ls_measure.hpp"

#include <algorithm>

#include "binmeas/errors.hpp"

namespace binmeas {

Bit ls_eval(const LSMeasure& m, const IntervalUnion& a) {
    Bit acc = 0;
    for (const auto& [lo, hi] : a.components())
        acc = bit_xor(acc, bit_xor(sf_eval(m.f, lo), sf_eval(m.f, hi)));
    return acc;
}

Bit ls_eval_raw_delta(const LSMeasure& m, const std::vector<IntervalUnion::Component>& raw) {
    Bit acc = 0;
    for (const auto& [lo, hi] : raw) {
        if (!(lo < hi)) continue;  // empty interval contributes nothing
        acc = bit_xor(acc, bit_xor(sf_eval(m.f, lo), sf_eval(m.f, hi)));
    }
    return acc;
}

BinaryStepFunction ls_cdf(const LSMeasure& m, const ExtendedRational& origin) {
    if (origin.is_pos_inf()) return BinaryStepFunction();  // [[inf, t)) is empty
    auto g = [&](const Rational& t) -> Bit {
        const ExtendedRational et(t);
        if (!(origin < et)) return 0;
        return bit_xor(sf_eval(m.f, origin), sf_eval(m.f, et));
    };
    // Candidate change points: the origin and every toggle above it.
    std::vector<Rational> candidates;
    if (origin.is_finite()) candidates.push_back(origin.value());
    for (const Rational& t : m.f.toggles())
        if (origin < ExtendedRational(t)) candidates.push_back(t);
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    if (candidates.empty()) {
        // No change points: constant function. Its value is g anywhere.
        const Bit c = origin.is_finite() ? 0 : bit_xor(sf_eval(m.f, origin), m.f.v0());
        return BinaryStepFunction(c, {});
    }
    // Left continuity puts the value on (prev, c] at g(c); a toggle sits at c
    // exactly when g(c) differs from the value just after c.
    std::vector<Bit> vals;
    for (const Rational& c : candidates) vals.push_back(g(c));
    const Bit beyond = g(candidates.back() + 1);
    const Bit v0 = vals.front();
    std::vector<Rational> toggles;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        const Bit after = i + 1 < candidates.size() ? vals[i + 1] : beyond;
        if (vals[i] != after) toggles.push_back(candidates[i]);
    }
    return BinaryStepFunction(v0, std::move(toggles));
}

Measure<IntervalUnion> as_measure(const LSMeasure& m) {
    return {"lebesgue-stieltjes", [m](const IntervalUnion& a) { return ls_eval(m, a); }};
}

namespace {

// First index n from which [[t_n, t_{n+1})) contains no toggle of f, for the
// telescope below; gives the measure-zero tail certificate.
std::size_t telescope_tail(const BinaryStepFunction& f, const ExtendedRational& a,
                           const ExtendedRational& b) {
    // Largest toggle strictly below b and at or above a.
    std::optional<Rational> tmax;
    for (const Rational& t : f.toggles()) {
        const ExtendedRational et(t);
        if (a < et && et < b) tmax = t;  // toggles sorted: the last one sticks
    }
    if (!tmax) return 1;
    if (b.is_pos_inf()) {
        // t_n = a + n crosses tmax at n > tmax - a.
        const Int n = ceil_rational(*tmax - a.value()) + 1;
        return static_cast<std::size_t>(std::max<long long>(1, n.convert_to<long long>()));
    }
    // t_n = b - (b - a)/(n + 1) > tmax when n + 1 > (b - a)/(b - tmax).
    const Rational ratio = (b.value() - a.value()) / (b.value() - *tmax);
    const Int n = ceil_rational(ratio) + 1;
    return static_cast<std::size_t>(std::max<long long>(1, n.convert_to<long long>()));
}

}  // namespace

DisjointFamilyGenerator<IntervalUnion> ls_telescope_family(const BinaryStepFunction& f,
                                                           const ExtendedRational& a,
                                                           const ExtendedRational& b) {
    if (!a.is_finite()) throw UsageError("telescope origin must be finite");
    if (!(a < b)) throw UsageError("telescope needs a < b");
    const Rational a0 = a.value();
    DisjointFamilyGenerator<IntervalUnion> fam;
    auto point = [a0, b](std::size_t n) -> ExtendedRational {
        if (b.is_pos_inf()) return ExtendedRational(a0 + Rational(static_cast<long long>(n)));
        const Rational width = b.value() - a0;
        return ExtendedRational(b.value() - width / Rational(static_cast<long long>(n) + 1));
    };
    fam.produce = [point](std::size_t n) { return interval(point(n), point(n + 1)); };
    fam.union_set = interval(a, b);
    fam.tail_index = telescope_tail(f, a, b);
    fam.tail_reason = TailReason::MeasureZeroAfter;
    return fam;
}

DisjointFamilyGenerator<IntervalUnion> ls_chain_family(const BinaryStepFunction& f,
                                                       const IntervalUnion& a) {
    if (a.is_empty()) {
        DisjointFamilyGenerator<IntervalUnion> fam;
        fam.produce = [](std::size_t) { return IntervalUnion::empty(); };
        fam.union_set = IntervalUnion::empty();
        return fam;
    }
    const auto& comps = a.components();
    std::vector<DisjointFamilyGenerator<IntervalUnion>> parts;
    std::size_t worst_tail = 0;
    for (const auto& [lo, hi] : comps) {
        if (!lo.is_finite())
            throw UsageError("chain families need finite left endpoints");
        parts.push_back(ls_telescope_family(f, lo, hi));
        worst_tail = std::max(worst_tail, parts.back().tail_index);
    }
    const std::size_t k = parts.size();
    DisjointFamilyGenerator<IntervalUnion> fam;
    fam.produce = [parts, k](std::size_t n) { return parts[n % k].produce(n / k); };
    fam.union_set = a;
    fam.tail_index = k * (worst_tail + 1);
    fam.tail_reason = TailReason::MeasureZeroAfter;
    return fam;
}

CountableFamilyReport ls_structured_countable_check(
    const LSMeasure& m, const DisjointFamilyGenerator<IntervalUnion>& family,
    std::size_t depth) {
    return check_countable_family(as_measure(m), family, depth);
}

}  // namespace binmeas
