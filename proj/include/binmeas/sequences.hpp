#pragma once

#include <cstdint>
#include <map>

#include "binmeas/bit.hpp"
#include "binmeas/carrier_ops.hpp"

namespace binmeas {

/// Eventually constant binary sequence: a finite override map plus the tail
/// value taken beyond it. Convergence is decidable on this fragment and
/// every sequence converges to its tail.
class BinarySequence {
  public:
    BinarySequence() = default;
    BinarySequence(std::map<std::uint64_t, Bit> overrides, Bit tail);

    static BinarySequence constant(Bit v) { return BinarySequence({}, v); }
    /// Canonical base element: a single 1 at position n.
    static BinarySequence unit(std::uint64_t n) { return BinarySequence({{n, 1}}, 0); }

    Bit at(std::uint64_t n) const;
    Bit tail() const { return tail_; }
    const std::map<std::uint64_t, Bit>& overrides() const { return overrides_; }
    bool is_zero() const { return tail_ == 0 && overrides_.empty(); }
    /// Number of indices where the value is 1; requires tail 0.
    std::size_t support_size() const;

    friend bool operator==(const BinarySequence&, const BinarySequence&) = default;

  private:
    std::map<std::uint64_t, Bit> overrides_;  // values differing from tail only
    Bit tail_ = 0;
};

BinarySequence seq_combine(Law law, const BinarySequence& x, const BinarySequence& y);

/// The limit of the sequence; total because the representation converges.
Bit limit_measure_eval(const BinarySequence& x);

/// Modulo-2 sum over all indices; defined only for tail-0 sequences, where
/// the support is finite.
Bit seq_sum_eval(const BinarySequence& x);

template <>
struct SetOpsFor<BinarySequence> {
    static BinarySequence intersect(const BinarySequence& a, const BinarySequence& b) {
        return seq_combine(Law::And, a, b);
    }
    static BinarySequence unite(const BinarySequence& a, const BinarySequence& b) {
        return seq_combine(Law::Or, a, b);
    }
    static BinarySequence empty() { return BinarySequence::constant(0); }
    static bool is_empty(const BinarySequence& a) { return a.is_zero(); }
    static bool equal(const BinarySequence& a, const BinarySequence& b) { return a == b; }
};

}  // namespace binmeas
