#include "binmeas/step_function.hpp"

#include <algorithm>

#include "binmeas/errors.hpp"

namespace binmeas {

BinaryStepFunction::BinaryStepFunction(Bit v0, std::vector<Rational> toggles)
    : v0_(v0), toggles_(std::move(toggles)) {
    for (std::size_t i = 1; i < toggles_.size(); ++i)
        if (!(toggles_[i - 1] < toggles_[i]))
            throw StructureError("toggles must be strictly increasing; use sf_normalize");
}

Bit sf_eval(const BinaryStepFunction& f, const ExtendedRational& t) {
    if (t.is_neg_inf()) return f.v0();
    if (t.is_pos_inf()) return bit_xor(f.v0(), parity(f.toggles().size()));
    const auto& tg = f.toggles();
    auto it = std::lower_bound(tg.begin(), tg.end(), t.value());  // first toggle >= t
    return bit_xor(f.v0(), parity(static_cast<std::size_t>(it - tg.begin())));
}

Bit sf_left_limit(const BinaryStepFunction& f, const ExtendedRational& t) {
    return sf_eval(f, t);
}

BinaryStepFunction sf_normalize(Bit v0, std::vector<Rational> raw_toggles) {
    std::sort(raw_toggles.begin(), raw_toggles.end());
    std::vector<Rational> kept;
    for (std::size_t i = 0; i < raw_toggles.size();) {
        std::size_t j = i;
        while (j < raw_toggles.size() && raw_toggles[j] == raw_toggles[i]) ++j;
        if ((j - i) % 2 != 0) kept.push_back(raw_toggles[i]);
        i = j;
    }
    return BinaryStepFunction(v0, std::move(kept));
}

BinaryStepFunction sf_combine(Law law, const BinaryStepFunction& f, const BinaryStepFunction& g) {
    if (law == Law::Xor) {
        std::vector<Rational> raw = f.toggles();
        raw.insert(raw.end(), g.toggles().begin(), g.toggles().end());
        return sf_normalize(bit_xor(f.v0(), g.v0()), std::move(raw));
    }
    if (law == Law::Not)
        throw UsageError("sf_combine takes a binary law");
    // Walk the merged breakpoints; the result toggles where the combined
    // value changes.
    std::vector<Rational> cuts = f.toggles();
    cuts.insert(cuts.end(), g.toggles().begin(), g.toggles().end());
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    Bit vf = f.v0(), vg = g.v0();
    Bit value = b2_law(law, vf, vg);
    const Bit v0 = value;
    std::vector<Rational> toggles;
    for (const Rational& c : cuts) {
        if (std::binary_search(f.toggles().begin(), f.toggles().end(), c)) vf = bit_not(vf);
        if (std::binary_search(g.toggles().begin(), g.toggles().end(), c)) vg = bit_not(vg);
        const Bit next = b2_law(law, vf, vg);
        if (next != value) {
            toggles.push_back(c);
            value = next;
        }
    }
    return BinaryStepFunction(v0, std::move(toggles));
}

std::vector<std::pair<ExtendedRational, ExtendedRational>> sf_support_pieces(
    const BinaryStepFunction& f) {
    std::vector<std::pair<ExtendedRational, ExtendedRational>> pieces;
    Bit value = f.v0();
    ExtendedRational start = ExtendedRational::neg_inf();
    for (const Rational& t : f.toggles()) {
        if (value) pieces.emplace_back(start, ExtendedRational(t));
        start = ExtendedRational(t);
        value = bit_not(value);
    }
    if (value) pieces.emplace_back(start, ExtendedRational::pos_inf());
    return pieces;
}

std::optional<IntervalUnion> sf_support_interval_union(const BinaryStepFunction& f) {
    const auto pieces = sf_support_pieces(f);
    if (pieces.empty()) return IntervalUnion::empty();
    if (pieces.size() == 1 && pieces.front().first.is_neg_inf() &&
        pieces.front().second.is_pos_inf())
        return interval(ExtendedRational::neg_inf(), ExtendedRational::pos_inf());
    return std::nullopt;  // a (lo, hi] piece is not a union of [a, b)
}

SparsePointFunction::SparsePointFunction(std::vector<Rational> support)
    : support_(std::move(support)) {
    std::sort(support_.begin(), support_.end());
    if (std::adjacent_find(support_.begin(), support_.end()) != support_.end())
        throw UsageError("duplicate support point");
}

Bit SparsePointFunction::at(const Rational& x) const {
    return std::binary_search(support_.begin(), support_.end(), x) ? 1 : 0;
}

SparsePointFunction sp_combine(Law law, const SparsePointFunction& f,
                               const SparsePointFunction& g) {
    if (law == Law::Not || law == Law::Xnor)
        throw UsageError("combination would not have finite support");
    std::vector<Rational> merged = f.support();
    merged.insert(merged.end(), g.support().begin(), g.support().end());
    std::sort(merged.begin(), merged.end());
    merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
    std::vector<Rational> out;
    for (const Rational& x : merged)
        if (b2_law(law, f.at(x), g.at(x))) out.push_back(x);
    return SparsePointFunction(std::move(out));
}

std::vector<Rational> sp_support_in(const SparsePointFunction& f, const IntervalUnion& a) {
    std::vector<Rational> out;
    for (const Rational& x : f.support())
        if (iv_member(a, x)) out.push_back(x);
    return out;
}

}  // namespace binmeas
