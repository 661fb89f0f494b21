#include "binmeas/catalog.hpp"

#include <algorithm>

#include "binmeas/errors.hpp"

namespace binmeas::catalog {

Measure<FiniteRealSet> null_measure() {
    return {"null", [](const FiniteRealSet&) { return 0; }};
}

Measure<FiniteRealSet> finite_boolean() {
    return {"finite-boolean", [](const FiniteRealSet& a) { return parity(a.support().size()); }};
}

Measure<FiniteRealSet> dirac(const Rational& x0) {
    return {"dirac(" + x0.str() + ")", [x0](const FiniteRealSet& a) { return a.at(x0); }};
}

Measure<FiniteRealSet> dirac_sum(const std::vector<Rational>& h) {
    SparsePointFunction hs{h};
    return {"dirac-sum", [hs](const FiniteRealSet& a) {
                std::size_t hits = 0;
                for (const Rational& x : hs.support()) hits += a.at(x);
                return parity(hits);
            }};
}

Measure<FiniteRealSet> restriction(const Measure<FiniteRealSet>& base, const FiniteRealSet& a) {
    return {"restriction(" + base.name + ")", [base, a](const FiniteRealSet& b) {
                return base(sp_combine(Law::And, a, b));
            }};
}

Measure<FiniteRealSet> inferiorly_finite(const Rational& alpha) {
    return {"inferiorly-finite(" + alpha.str() + ")", [alpha](const FiniteRealSet& a) {
                std::size_t below = 0;
                for (const Rational& x : a.support()) below += (x < alpha) ? 1 : 0;
                return parity(below);
            }};
}

Measure<BinarySequence> coord(std::uint64_t k) {
    return {"coord(" + std::to_string(k) + ")",
            [k](const BinarySequence& x) { return x.at(k); }};
}

Measure<BinarySequence> coord_sum(const std::vector<std::uint64_t>& h) {
    return {"coord-sum", [h](const BinarySequence& x) {
                Bit acc = 0;
                for (std::uint64_t k : h) acc = bit_xor(acc, x.at(k));
                return acc;
            }};
}

Measure<BinarySequence> limit_functional() {
    return {"limit", [](const BinarySequence& x) { return limit_measure_eval(x); }};
}

Measure<BinarySequence> seq_sum() {
    return {"seq-sum", [](const BinarySequence& x) { return seq_sum_eval(x); }};
}

Measure<BinaryStepFunction> left_limit_eval(const ExtendedRational& t) {
    return {"left-limit(" + t.str() + ")",
            [t](const BinaryStepFunction& f) { return sf_left_limit(f, t); }};
}

Measure<SparsePointFunction> indicator_integral(const IntervalUnion& window) {
    return {"indicator-integral", [window](const SparsePointFunction& f) {
                return parity(sp_support_in(f, window).size());
            }};
}

Measure<SparsePointFunction> indicator_integral_all() {
    return {"indicator-integral-all",
            [](const SparsePointFunction& f) { return parity(f.support().size()); }};
}

Measure<IntervalUnion> sym_sup() {
    return {"sym-sup", [](const IntervalUnion& a) { return sup_is_infinite(a); }};
}

Measure<IntervalUnion> dirac_interval(const Rational& x0) {
    return {"dirac-interval(" + x0.str() + ")",
            [x0](const IntervalUnion& a) { return iv_member(a, x0); }};
}

Measure<SSet> step_ring_parity() {
    return {"step-ring-parity", [](const SSet& a) { return sset_parity(a); }};
}

Bit cofinite_star_eval(const CofiniteSet& h) { return bit_not(parity(h.complement.size())); }

DisjointFamilyGenerator<BinarySequence> canonical_base_family() {
    DisjointFamilyGenerator<BinarySequence> fam;
    fam.produce = [](std::size_t n) { return BinarySequence::unit(n); };
    fam.union_set = BinarySequence::constant(1);
    fam.tail_index = 0;
    fam.tail_reason = TailReason::MeasureZeroAfter;  // the limit of each base element is 0
    return fam;
}

DisjointFamilyGenerator<SSet> interval_313_family() {
    DisjointFamilyGenerator<SSet> fam;
    fam.produce = [](std::size_t n) {
        const long long m = static_cast<long long>(n);
        return SSet::half_open(Rational(1, m + 2), Rational(1, m + 1));
    };
    fam.union_set = SSet::open(0, 1);
    fam.tail_index = 0;
    fam.tail_reason = TailReason::MeasureZeroAfter;  // every member is half-open
    return fam;
}

DivergenceReport counterexample_divergence(CounterexampleCase which, std::size_t depth) {
    DivergenceReport report;
    if (which == CounterexampleCase::Seq36) {
        const auto mu = limit_functional();
        const auto fam = canonical_base_family();
        const auto r = check_countable_family(mu, fam, depth);
        report.union_value = r.union_value;
        report.xor_sum = r.xor_sum;
        report.countably_additive = r.xor_equality;
        report.disjoint_ok = true;  // check_countable_family would have thrown
    } else {
        const auto mu = step_ring_parity();
        const auto fam = interval_313_family();
        const auto r = check_countable_family(mu, fam, depth);
        report.union_value = r.union_value;
        report.xor_sum = r.xor_sum;
        report.countably_additive = r.xor_equality;
        report.disjoint_ok = true;
    }
    return report;
}

}  // namespace binmeas::catalog
