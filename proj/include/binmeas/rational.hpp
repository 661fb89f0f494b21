#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "binmeas/errors.hpp"

namespace binmeas {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const Rational& r) { return r.str(); }

/// Largest integer <= r.
inline Int floor_rational(const Rational& r) {
    Int q = numerator(r) / denominator(r);
    if (numerator(r) < 0 && q * denominator(r) != numerator(r)) --q;
    return q;
}

/// Smallest integer >= r.
inline Int ceil_rational(const Rational& r) {
    Int q = numerator(r) / denominator(r);
    if (numerator(r) > 0 && q * denominator(r) != numerator(r)) ++q;
    return q;
}

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

/// A nonnegative rational b with b*b <= r, close to sqrt(r) from below.
inline Rational rational_sqrt_lower(const Rational& r) {
    if (r < 0) throw DomainError("square root of a negative rational");
    const Int s = boost::multiprecision::sqrt(Int(numerator(r) * denominator(r)));
    return Rational(s, denominator(r));
}

/// A rational extended with the two infinities; totally ordered.
class ExtendedRational {
  public:
    enum class Kind { NegInf, Finite, PosInf };

    ExtendedRational() : kind_(Kind::Finite), value_(0) {}
    ExtendedRational(const Rational& v) : kind_(Kind::Finite), value_(v) {}  // NOLINT: implicit by design
    ExtendedRational(long long v) : kind_(Kind::Finite), value_(v) {}        // NOLINT

    static ExtendedRational neg_inf() { return ExtendedRational(Kind::NegInf); }
    static ExtendedRational pos_inf() { return ExtendedRational(Kind::PosInf); }

    bool is_finite() const { return kind_ == Kind::Finite; }
    bool is_neg_inf() const { return kind_ == Kind::NegInf; }
    bool is_pos_inf() const { return kind_ == Kind::PosInf; }

    /// Finite value; throws on the infinities.
    const Rational& value() const {
        if (!is_finite()) throw DomainError("infinite endpoint has no rational value");
        return value_;
    }

    friend bool operator==(const ExtendedRational& a, const ExtendedRational& b) {
        if (a.kind_ != b.kind_) return false;
        return a.kind_ != Kind::Finite || a.value_ == b.value_;
    }
    friend bool operator<(const ExtendedRational& a, const ExtendedRational& b) {
        if (a.kind_ == b.kind_) return a.kind_ == Kind::Finite && a.value_ < b.value_;
        if (a.kind_ == Kind::NegInf) return true;
        if (b.kind_ == Kind::NegInf) return false;
        return b.kind_ == Kind::PosInf;
    }
    friend bool operator!=(const ExtendedRational& a, const ExtendedRational& b) { return !(a == b); }
    friend bool operator>(const ExtendedRational& a, const ExtendedRational& b) { return b < a; }
    friend bool operator<=(const ExtendedRational& a, const ExtendedRational& b) { return !(b < a); }
    friend bool operator>=(const ExtendedRational& a, const ExtendedRational& b) { return !(a < b); }

    std::string str() const {
        switch (kind_) {
            case Kind::NegInf: return "-inf";
            case Kind::PosInf: return "inf";
            case Kind::Finite: return value_.str();
        }
        return "?";
    }

  private:
    explicit ExtendedRational(Kind k) : kind_(k), value_(0) {}
    Kind kind_;
    Rational value_;
};

}  // namespace binmeas
