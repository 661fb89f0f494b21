#include "binmeas/sequences.hpp"

#include "binmeas/errors.hpp"

namespace binmeas {

BinarySequence::BinarySequence(std::map<std::uint64_t, Bit> overrides, Bit tail) : tail_(tail) {
    for (auto it = overrides.begin(); it != overrides.end();) {
        if (it->second != 0 && it->second != 1) throw StructureError("sequence values must be bits");
        it = it->second == tail ? overrides.erase(it) : std::next(it);
    }
    overrides_ = std::move(overrides);
}

Bit BinarySequence::at(std::uint64_t n) const {
    auto it = overrides_.find(n);
    return it == overrides_.end() ? tail_ : it->second;
}

std::size_t BinarySequence::support_size() const {
    if (tail_ != 0) throw DomainError("support of a tail-1 sequence is not finite");
    return overrides_.size();
}

BinarySequence seq_combine(Law law, const BinarySequence& x, const BinarySequence& y) {
    if (law == Law::Not) throw UsageError("seq_combine takes a binary law");
    std::map<std::uint64_t, Bit> overrides;
    for (const auto& [n, _] : x.overrides()) overrides[n] = b2_law(law, x.at(n), y.at(n));
    for (const auto& [n, _] : y.overrides()) overrides[n] = b2_law(law, x.at(n), y.at(n));
    return BinarySequence(std::move(overrides), b2_law(law, x.tail(), y.tail()));
}

Bit limit_measure_eval(const BinarySequence& x) { return x.tail(); }

Bit seq_sum_eval(const BinarySequence& x) {
    if (x.tail() != 0)
        throw DomainError("modulo-2 sum of a tail-1 sequence refers to a divergent series");
    return parity(x.overrides().size());
}

}  // namespace binmeas
