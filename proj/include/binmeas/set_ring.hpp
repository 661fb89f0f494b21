#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "binmeas/bit.hpp"
#include "binmeas/errors.hpp"

namespace binmeas {

/// Ordered universe of distinct labels; the order fixes the bitmask encoding.
class FiniteUniverse {
  public:
    static constexpr std::size_t kDefaultCap = 24;

    FiniteUniverse() = default;
    explicit FiniteUniverse(std::vector<std::string> labels, std::size_t cap = kDefaultCap);

    std::size_t size() const { return labels_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(std::size_t i) const { return labels_.at(i); }
    std::size_t index_of(const std::string& label) const;

    std::uint32_t full_mask() const {
        return size() == 32 ? ~0u : ((1u << size()) - 1u);
    }

    friend bool operator==(const FiniteUniverse& a, const FiniteUniverse& b) {
        return a.labels_ == b.labels_;
    }

  private:
    std::vector<std::string> labels_;
};

/// A subset of a FiniteUniverse as a bitmask over its label order.
struct SubsetMask {
    std::uint32_t bits = 0;
    friend auto operator<=>(const SubsetMask&, const SubsetMask&) = default;
};

enum class LawPair { DeltaCap, ThetaCup };

inline const char* law_pair_name(LawPair p) {
    return p == LawPair::DeltaCap ? "delta-cap" : "theta-cup";
}

enum class SetOp { Delta, Cap, Cup, Theta, Minus, Complement };

SetOp set_op_from_name(const std::string& name);

/// The six set laws on masks over `u`. Complement and Theta are relative to
/// the total set; `Minus` is A without B. Binary ops require B.
SubsetMask set_op(const FiniteUniverse& u, SetOp op, SubsetMask a, SubsetMask b = {});

/// A family of subsets together with the law pair it is declared to be closed
/// under. Members are kept sorted by bitmask value so equality is structural.
class SetRingFamily {
  public:
    SetRingFamily(FiniteUniverse universe, std::vector<SubsetMask> members, LawPair laws);

    const FiniteUniverse& universe() const { return universe_; }
    const std::vector<SubsetMask>& members() const { return members_; }
    LawPair laws() const { return laws_; }
    bool contains(SubsetMask m) const;
    std::size_t index_of(SubsetMask m) const;  // throws if absent

    friend bool operator==(const SetRingFamily& a, const SetRingFamily& b) {
        return a.universe_ == b.universe_ && a.members_ == b.members_ && a.laws_ == b.laws_;
    }

  private:
    FiniteUniverse universe_;
    std::vector<SubsetMask> members_;
    LawPair laws_;
};

/// Ring recognizer. Evaluates both equivalent closure conditions for the
/// declared law pair (reunion/difference vs symmetric difference/intersection,
/// and their duals) and insists that the verdicts agree.
Bit is_set_ring(const FiniteUniverse& u, const std::vector<SubsetMask>& members, LawPair laws);

/// Algebra recognizer: a ring that contains the total set (delta-cap) or the
/// empty set (theta-cup). Also confirms the ring unit is the one the algebra
/// structure implies. Throws PreconditionError when not a ring.
Bit is_set_algebra(const FiniteUniverse& u, const std::vector<SubsetMask>& members, LawPair laws);

/// Least family containing the generators and closed under the law pair.
SetRingFamily generate_ring(const FiniteUniverse& u, const std::vector<SubsetMask>& generators,
                            LawPair laws);

/// Characteristic function of A, tabulated over the universe.
std::vector<Bit> char_function(const FiniteUniverse& u, SubsetMask a);
Bit char_function_at(SubsetMask a, std::size_t index);

/// Support of a tabulated binary function on the universe.
SubsetMask support(const FiniteUniverse& u, const std::vector<Bit>& values);

}  // namespace binmeas
