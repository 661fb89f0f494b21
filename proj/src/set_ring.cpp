#include "binmeas/set_ring.hpp"

#include <algorithm>
#include <set>

namespace binmeas {

FiniteUniverse::FiniteUniverse(std::vector<std::string> labels, std::size_t cap)
    : labels_(std::move(labels)) {
    if (labels_.size() > cap)
        throw UsageError("universe exceeds the configured cap of " + std::to_string(cap));
    std::set<std::string> seen;
    for (const auto& l : labels_)
        if (!seen.insert(l).second) throw UsageError("duplicate universe label: " + l);
}

std::size_t FiniteUniverse::index_of(const std::string& label) const {
    for (std::size_t i = 0; i < labels_.size(); ++i)
        if (labels_[i] == label) return i;
    throw UsageError("label not in universe: " + label);
}

SetOp set_op_from_name(const std::string& name) {
    if (name == "delta") return SetOp::Delta;
    if (name == "cap") return SetOp::Cap;
    if (name == "cup") return SetOp::Cup;
    if (name == "theta") return SetOp::Theta;
    if (name == "minus") return SetOp::Minus;
    if (name == "complement") return SetOp::Complement;
    throw UsageError("unknown set operation: " + name);
}

SubsetMask set_op(const FiniteUniverse& u, SetOp op, SubsetMask a, SubsetMask b) {
    const std::uint32_t full = u.full_mask();
    if ((a.bits & ~full) || (b.bits & ~full))
        throw StructureError("mask uses positions outside the universe");
    switch (op) {
        case SetOp::Delta: return {a.bits ^ b.bits};
        case SetOp::Cap: return {a.bits & b.bits};
        case SetOp::Cup: return {a.bits | b.bits};
        case SetOp::Theta: return {full & ~(a.bits ^ b.bits)};
        case SetOp::Minus: return {a.bits & ~b.bits};
        case SetOp::Complement: return {full & ~a.bits};
    }
    throw UsageError("unknown set operation");
}

SetRingFamily::SetRingFamily(FiniteUniverse universe, std::vector<SubsetMask> members, LawPair laws)
    : universe_(std::move(universe)), members_(std::move(members)), laws_(laws) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    if (!is_set_ring(universe_, members_, laws_))
        throw PreconditionError("family is not closed under the declared law pair");
}

bool SetRingFamily::contains(SubsetMask m) const {
    return std::binary_search(members_.begin(), members_.end(), m);
}

std::size_t SetRingFamily::index_of(SubsetMask m) const {
    auto it = std::lower_bound(members_.begin(), members_.end(), m);
    if (it == members_.end() || *it != m) throw StructureError("subset not in the family");
    return static_cast<std::size_t>(it - members_.begin());
}

namespace {

bool family_has(const std::vector<SubsetMask>& sorted, SubsetMask m) {
    return std::binary_search(sorted.begin(), sorted.end(), m);
}

}  // namespace

Bit is_set_ring(const FiniteUniverse& u, const std::vector<SubsetMask>& members, LawPair laws) {
    if (members.empty()) throw PreconditionError("a set ring must be a non-empty family");
    std::vector<SubsetMask> sorted = members;
    std::sort(sorted.begin(), sorted.end());

    bool first = true, second = true;
    for (SubsetMask a : sorted) {
        for (SubsetMask b : sorted) {
            if (laws == LawPair::DeltaCap) {
                // Condition a): closure under reunion and difference.
                first = first && family_has(sorted, set_op(u, SetOp::Cup, a, b)) &&
                        family_has(sorted, set_op(u, SetOp::Minus, a, b));
                // Condition b): closure under symmetric difference and intersection.
                second = second && family_has(sorted, set_op(u, SetOp::Delta, a, b)) &&
                         family_has(sorted, set_op(u, SetOp::Cap, a, b));
            } else {
                // Condition c): closure under intersection and complemented difference.
                first = first && family_has(sorted, set_op(u, SetOp::Cap, a, b)) &&
                        family_has(sorted, set_op(u, SetOp::Complement,
                                                  set_op(u, SetOp::Minus, b, a)));
                // Condition d): closure under coincidence and reunion.
                second = second && family_has(sorted, set_op(u, SetOp::Theta, a, b)) &&
                         family_has(sorted, set_op(u, SetOp::Cup, a, b));
            }
        }
    }
    if (first != second)
        throw StructureError("ring recognizer: the two equivalent closure conditions disagree");
    return second ? 1 : 0;
}

Bit is_set_algebra(const FiniteUniverse& u, const std::vector<SubsetMask>& members, LawPair laws) {
    if (!is_set_ring(u, members, laws))
        throw PreconditionError("is_set_algebra requires a set ring");
    std::vector<SubsetMask> sorted = members;
    std::sort(sorted.begin(), sorted.end());
    const SubsetMask unit =
        laws == LawPair::DeltaCap ? SubsetMask{u.full_mask()} : SubsetMask{0};
    if (!family_has(sorted, unit)) return 0;
    // The unit of the ring is the reunion (resp. intersection) of all members.
    std::uint32_t acc = laws == LawPair::DeltaCap ? 0u : u.full_mask();
    for (SubsetMask m : sorted)
        acc = laws == LawPair::DeltaCap ? (acc | m.bits) : (acc & m.bits);
    if (acc != unit.bits)
        throw StructureError("algebra unit does not match the fold of the members");
    return 1;
}

SetRingFamily generate_ring(const FiniteUniverse& u, const std::vector<SubsetMask>& generators,
                            LawPair laws) {
    if (generators.empty()) throw UsageError("generate_ring requires at least one generator");
    std::set<std::uint32_t> closed;
    for (SubsetMask g : generators) {
        if (g.bits & ~u.full_mask()) throw StructureError("generator outside the universe");
        closed.insert(g.bits);
    }
    // Fixpoint under the declared pair; the dual pair's closure then follows.
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<std::uint32_t> snapshot(closed.begin(), closed.end());
        for (std::uint32_t a : snapshot) {
            for (std::uint32_t b : snapshot) {
                std::uint32_t x, y;
                if (laws == LawPair::DeltaCap) {
                    x = a ^ b;
                    y = a & b;
                } else {
                    x = u.full_mask() & ~(a ^ b);
                    y = a | b;
                }
                grew |= closed.insert(x).second;
                grew |= closed.insert(y).second;
            }
        }
    }
    std::vector<SubsetMask> members;
    members.reserve(closed.size());
    for (std::uint32_t m : closed) members.push_back({m});
    return SetRingFamily(u, std::move(members), laws);
}

std::vector<Bit> char_function(const FiniteUniverse& u, SubsetMask a) {
    std::vector<Bit> values(u.size(), 0);
    for (std::size_t i = 0; i < u.size(); ++i) values[i] = char_function_at(a, i);
    return values;
}

Bit char_function_at(SubsetMask a, std::size_t index) {
    return (a.bits >> index) & 1u ? 1 : 0;
}

SubsetMask support(const FiniteUniverse& u, const std::vector<Bit>& values) {
    if (values.size() != u.size())
        throw StructureError("tabulated function does not match the universe size");
    SubsetMask m{};
    for (std::size_t i = 0; i < values.size(); ++i)
        if (values[i]) m.bits |= (1u << i);
    return m;
}

}  // namespace binmeas
