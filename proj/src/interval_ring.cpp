#include "binmeas/interval_ring.hpp"

#include <algorithm>

#include "binmeas/errors.hpp"

namespace binmeas {

IntervalUnion IntervalUnion::from_canonical(std::vector<Component> comps) {
    IntervalUnion u;
    for (std::size_t i = 0; i < comps.size(); ++i) {
        if (!(comps[i].first < comps[i].second))
            throw StructureError("canonical component must satisfy a < b");
        if (i > 0 && !(comps[i - 1].second < comps[i].first))
            throw StructureError("canonical components must be separated by strict gaps");
    }
    u.comps_ = std::move(comps);
    return u;
}

namespace {

// Sweep over the sorted endpoint multiset. Each raw interval opens at a and
// closes at b; a point is in the union iff coverage > 0, and in the iterated
// symmetric difference iff coverage is odd.
IntervalUnion sweep_coverage(std::vector<IntervalUnion::Component> raw, bool odd_rule) {
    std::vector<std::pair<ExtendedRational, int>> events;
    for (auto& [a, b] : raw) {
        if (!(a < b)) continue;  // empty contribution
        events.emplace_back(a, +1);
        events.emplace_back(b, -1);
    }
    std::sort(events.begin(), events.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });

    std::vector<IntervalUnion::Component> out;
    int coverage = 0;
    bool inside = false;
    ExtendedRational start;
    std::size_t i = 0;
    while (i < events.size()) {
        const ExtendedRational at = events[i].first;
        while (i < events.size() && events[i].first == at) coverage += events[i++].second;
        const bool now = odd_rule ? (coverage % 2 != 0) : (coverage > 0);
        if (now && !inside) {
            start = at;
            inside = true;
        } else if (!now && inside) {
            // Merge with the previous component when they touch.
            if (!out.empty() && out.back().second == start)
                out.back().second = at;
            else
                out.emplace_back(start, at);
            inside = false;
        }
    }
    return IntervalUnion::from_canonical(std::move(out));
}

}  // namespace

IntervalUnion normalize(const std::vector<IntervalUnion::Component>& raw, NormalizeMode mode) {
    return sweep_coverage(raw, mode == NormalizeMode::DeltaOf);
}

IntervalUnion iv_op(IvOp op, const IntervalUnion& a, const IntervalUnion& b) {
    // Linear two-pointer merge over the boundary events of both canonical
    // operands. Membership flips at each boundary; the result opens and
    // closes where the combined membership changes, which yields the
    // canonical form directly.
    const auto& ca = a.components();
    const auto& cb = b.components();
    std::size_t i = 0, j = 0;  // boundary indices: 2 per component
    bool in_a = false, in_b = false, keep = false;
    ExtendedRational start;
    std::vector<IntervalUnion::Component> out;

    auto boundary = [](const std::vector<IntervalUnion::Component>& c,
                       std::size_t k) -> const ExtendedRational& {
        return (k & 1u) ? c[k / 2].second : c[k / 2].first;
    };
    const std::size_t na = 2 * ca.size(), nb = 2 * cb.size();
    while (i < na || j < nb) {
        const ExtendedRational at = (j >= nb || (i < na && boundary(ca, i) < boundary(cb, j)))
                                        ? boundary(ca, i)
                                        : boundary(cb, j);
        while (i < na && boundary(ca, i) == at) {
            in_a = !in_a;
            ++i;
        }
        while (j < nb && boundary(cb, j) == at) {
            in_b = !in_b;
            ++j;
        }
        bool now = false;
        switch (op) {
            case IvOp::Delta: now = in_a != in_b; break;
            case IvOp::Cap: now = in_a && in_b; break;
            case IvOp::Cup: now = in_a || in_b; break;
            case IvOp::Minus: now = in_a && !in_b; break;
        }
        if (now && !keep) {
            start = at;
            keep = true;
        } else if (!now && keep) {
            out.emplace_back(start, at);
            keep = false;
        }
    }
    return IntervalUnion::from_canonical(std::move(out));
}

std::optional<IntervalUnion> iv_disjoint_unite(const IntervalUnion& a, const IntervalUnion& b) {
    // One merge pass: nullopt on overlap, otherwise the canonical union with
    // touching components coalesced.
    const auto& ca = a.components();
    const auto& cb = b.components();
    std::vector<IntervalUnion::Component> out;
    out.reserve(ca.size() + cb.size());
    std::size_t i = 0, j = 0;
    while (i < ca.size() || j < cb.size()) {
        const IntervalUnion::Component* next;
        if (j >= cb.size() || (i < ca.size() && ca[i].first < cb[j].first))
            next = &ca[i++];
        else
            next = &cb[j++];
        if (!out.empty()) {
            if (next->first < out.back().second) return std::nullopt;  // overlap
            if (next->first == out.back().second) {
                out.back().second = next->second;  // touching: coalesce
                continue;
            }
        }
        out.push_back(*next);
    }
    return IntervalUnion::from_canonical(std::move(out));
}

Bit iv_member(const IntervalUnion& a, const Rational& x) {
    const ExtendedRational p(x);
    for (const auto& [lo, hi] : a.components())
        if (lo <= p && p < hi) return 1;
    return 0;
}

Bit sup_is_infinite(const IntervalUnion& a) {
    return !a.is_empty() && a.components().back().second.is_pos_inf() ? 1 : 0;
}

IntervalUnion interval(const ExtendedRational& a, const ExtendedRational& b) {
    if (!(a < b)) return IntervalUnion::empty();
    return IntervalUnion::from_canonical({{a, b}});
}

}  // namespace binmeas
