#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "binmeas/bit.hpp"
#include "binmeas/carrier_ops.hpp"
#include "binmeas/errors.hpp"
#include "binmeas/rng.hpp"
#include "binmeas/set_ring.hpp"

namespace binmeas {

/// Binary set function tabulated over every member of a finite ring.
class TabulatedSetFunction {
  public:
    TabulatedSetFunction(SetRingFamily ring, std::vector<Bit> values);

    const SetRingFamily& ring() const { return ring_; }
    const std::vector<Bit>& values() const { return values_; }
    Bit operator()(SubsetMask m) const { return values_[ring_.index_of(m)]; }

  private:
    SetRingFamily ring_;
    std::vector<Bit> values_;
};

/// The dual function A -> not mu(complement A) on the dual family, swapping
/// the law pair. Transports additive to additive* and back.
TabulatedSetFunction dual_transport(const TabulatedSetFunction& mu);

struct AdditivityReport {
    Bit verdict = 0;
    Bit verdict_disjoint_form = 0;   // condition over disjoint pairs only
    Bit verdict_all_pairs_form = 0;  // condition over all pairs
    std::optional<std::pair<SubsetMask, SubsetMask>> witness;
    bool forms_agree() const { return verdict_disjoint_form == verdict_all_pairs_form; }
};

/// Additivity on a delta-cap ring. Evaluates both equivalent forms (disjoint
/// reunions, and symmetric differences over all pairs) and requires them to
/// agree.
AdditivityReport check_additive(const TabulatedSetFunction& mu);
Bit is_additive(const TabulatedSetFunction& mu);

/// The dual notion on a theta-cup ring (coincidence law, reunions covering X).
AdditivityReport check_additive_star(const TabulatedSetFunction& mu);
Bit is_additive_star(const TabulatedSetFunction& mu);

struct PropertyItem {
    std::string id;
    bool pass = false;
    std::string witness;
};

struct PropertiesReport {
    std::vector<PropertyItem> items;
    bool all_pass() const {
        for (const auto& it : items)
            if (!it.pass) return false;
        return true;
    }
};

/// Identities every additive function satisfies: value at the empty set,
/// the difference identity, and the three-term reunion/intersection/
/// symmetric-difference relation; dual items for additive* inputs. The input
/// must pass the corresponding additivity check.
PropertiesReport additive_properties_report(const TabulatedSetFunction& mu);

/// Type-erased binary measure over a carrier.
template <class E>
struct Measure {
    std::string name;
    std::function<Bit(const E&)> eval;
    Bit operator()(const E& e) const { return eval(e); }
};

enum class TailReason { AllEmptyAfter, MeasureZeroAfter };

/// Pairwise disjoint family with a declared union and a certificate that no
/// further 1-values occur past tail_index.
template <class E>
struct DisjointFamilyGenerator {
    std::function<E(std::size_t)> produce;
    E union_set = SetOpsFor<E>::empty();
    std::size_t tail_index = 0;
    TailReason tail_reason = TailReason::AllEmptyAfter;
};

struct CountableFamilyReport {
    Bit finitely_many_ones = 0;
    Bit xor_equality = 0;
    Bit union_value = 0;
    Bit xor_sum = 0;
    std::vector<Bit> observed;
    bool pass() const { return finitely_many_ones == 1 && xor_equality == 1; }
};

/// Evaluates the family to `depth`, checking pairwise disjointness
/// incrementally, and compares the XOR of the observed values with the value
/// of the declared union. Throws StructureError naming the offending pair on
/// a disjointness violation.
template <Carrier E>
CountableFamilyReport check_countable_family(const Measure<E>& mu,
                                             const DisjointFamilyGenerator<E>& fam,
                                             std::size_t depth) {
    using Ops = SetOpsFor<E>;
    if (depth < fam.tail_index)
        throw PreconditionError("depth must reach the family's tail certificate");
    CountableFamilyReport report;
    E running = Ops::empty();
    Bit acc = 0;
    for (std::size_t n = 0; n <= depth; ++n) {
        E a = fam.produce(n);
        bool overlap = false;
        if constexpr (requires { Ops::disjoint_unite(running, a); }) {
            auto merged = Ops::disjoint_unite(running, a);
            if (merged)
                running = std::move(*merged);
            else
                overlap = true;
        } else {
            if (Ops::is_empty(Ops::intersect(running, a)))
                running = Ops::unite(running, a);
            else
                overlap = true;
        }
        if (overlap) {
            // Locate the exact pair for the diagnostic.
            for (std::size_t j = 0; j < n; ++j)
                if (!Ops::is_empty(Ops::intersect(fam.produce(j), a)))
                    throw StructureError("family members " + std::to_string(j) + " and " +
                                         std::to_string(n) + " are not disjoint");
            throw StructureError("family member " + std::to_string(n) +
                                 " overlaps earlier members");
        }
        if (n > fam.tail_index && fam.tail_reason == TailReason::AllEmptyAfter &&
            !Ops::is_empty(a))
            throw StructureError("tail certificate claims emptiness but member " +
                                 std::to_string(n) + " is nonempty");
        const Bit v = mu(a);
        if (n > fam.tail_index && fam.tail_reason == TailReason::MeasureZeroAfter && v != 0)
            throw StructureError("tail certificate claims measure 0 but member " +
                                 std::to_string(n) + " has value 1");
        report.observed.push_back(v);
        acc = bit_xor(acc, v);
    }
    if (!Ops::equal(Ops::intersect(running, fam.union_set), running))
        throw StructureError("family members are not contained in the declared union");
    report.finitely_many_ones = 1;  // observed ones are finite; certificate covers the tail
    report.xor_sum = acc;
    report.union_value = mu(fam.union_set);
    report.xor_equality = (report.union_value == acc) ? 1 : 0;
    return report;
}

/// Monotone family with a declared limit set and a certificate index past
/// which the measure values stay constant.
template <class E>
struct MonotoneFamily {
    std::function<E(std::size_t)> produce;
    E limit_set = SetOpsFor<E>::empty();
    std::size_t stable_after = 0;
};

struct MonotoneReport {
    bool chain_ok = true;
    bool converged = false;
    bool limit_matches = false;
    Bit limit_value = 0;
    Bit limit_set_value = 0;
    std::size_t violation_index = 0;
    bool pass() const { return chain_ok && converged && limit_matches; }
};

namespace detail {

template <Carrier E>
MonotoneReport check_monotone(const Measure<E>& mu, const MonotoneFamily<E>& fam,
                              std::size_t depth, bool ascending) {
    using Ops = SetOpsFor<E>;
    if (depth < fam.stable_after)
        throw PreconditionError("depth must reach the family's stability certificate");
    MonotoneReport report;
    std::vector<Bit> seen;
    E prev = fam.produce(0);
    seen.push_back(mu(prev));
    for (std::size_t n = 1; n <= depth; ++n) {
        E cur = fam.produce(n);
        const E meet = Ops::intersect(prev, cur);
        const bool ok = ascending ? Ops::equal(meet, prev) : Ops::equal(meet, cur);
        if (!ok) {
            report.chain_ok = false;
            report.violation_index = n;
            return report;
        }
        seen.push_back(mu(cur));
        prev = std::move(cur);
    }
    report.converged = true;
    for (std::size_t n = fam.stable_after; n < seen.size(); ++n)
        if (seen[n] != seen[fam.stable_after]) report.converged = false;
    report.limit_value = seen.back();
    report.limit_set_value = mu(fam.limit_set);
    report.limit_matches = report.converged && report.limit_value == report.limit_set_value;
    return report;
}

}  // namespace detail

/// Ascending-sequence continuity: the value sequence must become constant and
/// its limit must equal the measure of the declared union.
template <Carrier E>
MonotoneReport check_ascending_continuity(const Measure<E>& mu, const MonotoneFamily<E>& fam,
                                          std::size_t depth) {
    return detail::check_monotone(mu, fam, depth, true);
}

/// Descending mirror, with the declared intersection as the limit set.
template <Carrier E>
MonotoneReport check_descending_continuity(const Measure<E>& mu, const MonotoneFamily<E>& fam,
                                           std::size_t depth) {
    return detail::check_monotone(mu, fam, depth, false);
}

enum class MonotoneStrategy { Ascending, Descending };

/// Suite-relative certificate: 1 iff every family in the suite passes the
/// continuity check. Not a proof; the quantifier over all sequences is not
/// decidable.
template <Carrier E>
Bit certify_measure_via_monotone(const Measure<E>& mu, MonotoneStrategy strategy,
                                 const std::vector<MonotoneFamily<E>>& suite,
                                 std::size_t depth) {
    for (const auto& fam : suite) {
        const MonotoneReport r = strategy == MonotoneStrategy::Ascending
                                     ? check_ascending_continuity(mu, fam, depth)
                                     : check_descending_continuity(mu, fam, depth);
        if (!r.pass()) return 0;
    }
    return 1;
}

/// Sampled additivity for infinite carriers: the pair source must yield
/// disjoint pairs.
template <Carrier E>
Bit is_additive_sampled(const Measure<E>& mu,
                        const std::function<std::pair<E, E>(Rng&)>& disjoint_pairs, Rng& rng,
                        std::size_t samples) {
    using Ops = SetOpsFor<E>;
    for (std::size_t i = 0; i < samples; ++i) {
        auto [a, b] = disjoint_pairs(rng);
        if (!Ops::is_empty(Ops::intersect(a, b)))
            throw StructureError("pair source produced a non-disjoint pair");
        if (mu(Ops::unite(a, b)) != bit_xor(mu(a), mu(b))) return 0;
    }
    return 1;
}

template <>
struct SetOpsFor<SubsetMask> {
    static SubsetMask intersect(SubsetMask a, SubsetMask b) { return {a.bits & b.bits}; }
    static SubsetMask unite(SubsetMask a, SubsetMask b) { return {a.bits | b.bits}; }
    static SubsetMask empty() { return {}; }
    static bool is_empty(SubsetMask a) { return a.bits == 0; }
    static bool equal(SubsetMask a, SubsetMask b) { return a == b; }
};

/// A tabulated set function viewed as a Measure over masks.
Measure<SubsetMask> as_measure(const TabulatedSetFunction& mu);

}  // namespace binmeas
