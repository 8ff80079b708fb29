#pragma once

#include <compare>
#include <ostream>

#include "cfcong/common.hpp"

namespace cfcong {

/// Exact reduced rational with 128-bit numerator and denominator.
///
/// Invariants: gcd(|num|, den) = 1, den >= 1, zero is (0, 1).
/// All arithmetic reduces eagerly and throws overflow_error when an
/// intermediate would exceed the 128-bit budget, never wraps.
class Rational {
public:
    Rational() : num_(0), den_(1) {}

    Rational(i128 num, i128 den) {
        if (den == 0) throw domain_error("Rational: zero denominator");
        if (den < 0) {
            num = checked_sub(0, num);
            den = checked_sub(0, den);
        }
        i128 g = gcd128(num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
        if (num == 0) den = 1;
        num_ = num;
        den_ = den;
    }

    static Rational integer(i128 n) { return Rational(n, 1); }

    i128 num() const { return num_; }
    i128 den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }

    Rational operator+(const Rational& o) const {
        return Rational(checked_add(checked_mul(num_, o.den_), checked_mul(o.num_, den_)),
                        checked_mul(den_, o.den_));
    }
    Rational operator-(const Rational& o) const {
        return Rational(checked_sub(checked_mul(num_, o.den_), checked_mul(o.num_, den_)),
                        checked_mul(den_, o.den_));
    }
    Rational operator*(const Rational& o) const {
        return Rational(checked_mul(num_, o.num_), checked_mul(den_, o.den_));
    }
    Rational operator/(const Rational& o) const {
        if (o.num_ == 0) throw domain_error("Rational: division by zero");
        return Rational(checked_mul(num_, o.den_), checked_mul(den_, o.num_));
    }
    Rational operator-() const { return Rational(-num_, den_); }

    // Structural equality is exact equality because both sides are reduced.
    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rational& o) const { return !(*this == o); }

    std::strong_ordering operator<=>(const Rational& o) const {
        i128 lhs = checked_mul(num_, o.den_);
        i128 rhs = checked_mul(o.num_, den_);
        if (lhs < rhs) return std::strong_ordering::less;
        if (lhs > rhs) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    std::string str() const {
        if (den_ == 1) return to_string(num_);
        return to_string(num_) + "/" + to_string(den_);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.str();
    }

private:
    i128 num_;
    i128 den_;
};

} // namespace cfcong
