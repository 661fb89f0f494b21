#include "binmeas/sset.hpp"

#include <algorithm>

#include "binmeas/errors.hpp"

namespace binmeas {

namespace {

Bit raw_member(const std::vector<SComponent>& comps, const Rational& x) {
    for (const auto& c : comps) {
        if (x == c.lo && c.left_closed) return 1;
        if (x == c.hi && c.right_closed) return 1;
        if (c.lo < x && x < c.hi) return 1;
    }
    return 0;
}

// Rebuilds canonical components from point values at the breakpoints and
// constant values on the open gaps between them. Rays carry 0: the class is
// bounded.
std::vector<SComponent> rebuild(const std::vector<Rational>& cuts,
                                const std::vector<Bit>& at_cut,
                                const std::vector<Bit>& gap_after) {
    std::vector<SComponent> out;
    const std::size_t m = cuts.size();
    bool inside = false;
    SComponent cur;
    for (std::size_t i = 0; i < m; ++i) {
        // Point cuts[i].
        if (at_cut[i] && !inside) {
            cur = SComponent{cuts[i], cuts[i], true, true};
            inside = true;
        } else if (!at_cut[i] && inside) {
            cur.hi = cuts[i];
            cur.right_closed = false;
            out.push_back(cur);
            inside = false;
        }
        // Gap (cuts[i], cuts[i+1]); the last "gap" is the unbounded ray, 0.
        const Bit gap = i + 1 < m ? gap_after[i] : 0;
        if (gap && !inside) {
            cur = SComponent{cuts[i], cuts[i], false, false};  // opens just after cuts[i]
            inside = true;
        } else if (!gap && inside) {
            // The run ends at the point cuts[i] itself.
            cur.hi = cuts[i];
            cur.right_closed = at_cut[i];
            out.push_back(cur);
            inside = false;
        } else if (gap && inside) {
            cur.hi = cuts[i + 1];  // provisional; may extend further
        }
    }
    if (inside) throw StructureError("sset runs must be bounded");
    return out;
}

}  // namespace

SSet::SSet(const std::vector<SComponent>& raw) {
    std::vector<Rational> cuts;
    for (const auto& c : raw) {
        if (c.lo > c.hi) throw StructureError("sset component needs lo <= hi");
        if (c.lo == c.hi && !(c.left_closed && c.right_closed))
            throw StructureError("degenerate sset component must be a closed point");
        cuts.push_back(c.lo);
        cuts.push_back(c.hi);
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    if (cuts.empty()) return;
    std::vector<Bit> at_cut(cuts.size()), gap_after(cuts.size());
    for (std::size_t i = 0; i < cuts.size(); ++i) {
        at_cut[i] = raw_member(raw, cuts[i]);
        if (i + 1 < cuts.size())
            gap_after[i] = raw_member(raw, (cuts[i] + cuts[i + 1]) / 2);
    }
    comps_ = rebuild(cuts, at_cut, gap_after);
}

SSet SSet::open(const Rational& a, const Rational& b) {
    if (!(a < b)) return SSet();
    return SSet({SComponent{a, b, false, false}});
}

SSet SSet::half_open(const Rational& a, const Rational& b) {
    if (!(a < b)) return SSet();
    return SSet({SComponent{a, b, true, false}});
}

SSet SSet::point(const Rational& c) { return SSet({SComponent{c, c, true, true}}); }

Bit SSet::member(const Rational& x) const { return raw_member(comps_, x); }

SSet sset_op(Law law, const SSet& a, const SSet& b) {
    if (law != Law::And && law != Law::Or && law != Law::Xor)
        throw UsageError("sset_op supports and, or, xor");
    std::vector<Rational> cuts;
    for (const auto& c : a.components()) {
        cuts.push_back(c.lo);
        cuts.push_back(c.hi);
    }
    for (const auto& c : b.components()) {
        cuts.push_back(c.lo);
        cuts.push_back(c.hi);
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    if (cuts.empty()) return SSet();
    std::vector<SComponent> kept;
    for (std::size_t i = 0; i < cuts.size(); ++i) {
        if (b2_law(law, a.member(cuts[i]), b.member(cuts[i])))
            kept.push_back(SComponent{cuts[i], cuts[i], true, true});
        if (i + 1 < cuts.size()) {
            const Rational mid = (cuts[i] + cuts[i + 1]) / 2;
            if (b2_law(law, a.member(mid), b.member(mid)))
                kept.push_back(SComponent{cuts[i], cuts[i + 1], false, false});
        }
    }
    return SSet(kept);
}

Bit sset_parity(const SSet& a) {
    std::size_t count = 0;
    for (const auto& c : a.components()) {
        if (c.is_point())
            count += 1;
        else
            count += 1 + (c.left_closed ? 1 : 0) + (c.right_closed ? 1 : 0);
    }
    return parity(count);
}

}  // namespace binmeas
