#pragma once

#include <cstddef>
#include <cstdint>
#include <set>
#include <string>

#include "binmeas/errors.hpp"

namespace binmeas {

/// An element of the two-element Boole algebra: always 0 or 1.
/// Kept as an int so all five laws share one integer signature.
using Bit = int;

inline Bit bit_not(Bit a) { return a ? 0 : 1; }
inline Bit bit_or(Bit a, Bit b) { return (a || b) ? 1 : 0; }
inline Bit bit_and(Bit a, Bit b) { return (a && b) ? 1 : 0; }
inline Bit bit_xor(Bit a, Bit b) { return (a != b) ? 1 : 0; }
inline Bit bit_xnor(Bit a, Bit b) { return (a == b) ? 1 : 0; }

/// Parity of a count: 1 iff n is odd.
inline Bit parity(std::size_t n) { return static_cast<Bit>(n & 1u); }

enum class Law { Not, Or, And, Xor, Xnor };

inline Law law_from_name(const std::string& name) {
    if (name == "not") return Law::Not;
    if (name == "or") return Law::Or;
    if (name == "and") return Law::And;
    if (name == "xor") return Law::Xor;
    if (name == "xnor") return Law::Xnor;
    throw UsageError("unknown law name: " + name);
}

inline const char* law_name(Law law) {
    switch (law) {
        case Law::Not: return "not";
        case Law::Or: return "or";
        case Law::And: return "and";
        case Law::Xor: return "xor";
        case Law::Xnor: return "xnor";
    }
    return "?";
}

/// Dispatch on a named law. `not` ignores b.
inline Bit b2_law(Law law, Bit a, Bit b = 0) {
    switch (law) {
        case Law::Not: return bit_not(a);
        case Law::Or: return bit_or(a, b);
        case Law::And: return bit_and(a, b);
        case Law::Xor: return bit_xor(a, b);
        case Law::Xnor: return bit_xnor(a, b);
    }
    throw UsageError("unknown law");
}

/// A binary family (a_n) with finitely many ones, given by its support.
/// Infinite supports are unrepresentable: the modulo-2 sum is total here.
struct FinitelySupportedBits {
    std::set<std::uint64_t> ones;
};

/// The dual: finitely many zeros, all other indices are 1.
struct CofinitelySupportedBits {
    std::set<std::uint64_t> zeros;
};

/// Modulo-2 sum of the family: 1 iff the support is odd. Empty support sums
/// to 0 (the empty set has an even number of elements).
inline Bit xor_fold(const FinitelySupportedBits& a) { return parity(a.ones.size()); }

/// Coincidence fold over a cofinitely supported family: the algebraic dual of
/// xor_fold obtained by swapping 0 with 1. 0 iff the zero set is odd.
inline Bit xnor_fold(const CofinitelySupportedBits& a) { return bit_not(parity(a.zeros.size())); }

}  // namespace binmeas
