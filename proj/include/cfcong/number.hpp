#pragma once

#include <numeric>

#include "cfcong/common.hpp"

namespace cfcong {

// Public operations accept denominators up to 2^31.
inline constexpr i64 kMaxDenominator = i64(1) << 31;

struct ExtGcd {
    i64 g;
    i64 u;
    i64 v; // g = u*x + v*y
};

/// Extended Euclid on non-negative x, y (not both zero).
inline ExtGcd ext_gcd(i64 x, i64 y) {
    if (x < 0 || y < 0) throw domain_error("ext_gcd: negative argument");
    if (x == 0 && y == 0) throw domain_error("ext_gcd: both arguments zero");
    // Invariant: r0 = u0*x + v0*y, r1 = u1*x + v1*y.
    i64 r0 = x, r1 = y;
    i64 u0 = 1, u1 = 0;
    i64 v0 = 0, v1 = 1;
    while (r1 != 0) {
        i64 q = r0 / r1;
        i64 r2 = r0 - q * r1;
        i64 u2 = u0 - q * u1;
        i64 v2 = v0 - q * v1;
        r0 = r1; r1 = r2;
        u0 = u1; u1 = u2;
        v0 = v1; v1 = v2;
    }
    return {r0, u0, v0};
}

/// A coprime pair (a, b) with 0 < a < b <= 2^31. Construction rejects
/// anything else; there is no silent reduction.
class Fraction {
public:
    Fraction(i64 a, i64 b) : a_(a), b_(b) {
        if (b > kMaxDenominator)
            throw domain_error("Fraction: denominator exceeds 2^31 budget");
        if (a <= 0 || a >= b)
            throw domain_error("Fraction: requires 0 < a < b");
        if (std::gcd(a, b) != 1)
            throw domain_error("Fraction: a and b are not coprime");
    }

    i64 a() const { return a_; }
    i64 b() const { return b_; }

    bool operator==(const Fraction& o) const = default;

private:
    i64 a_;
    i64 b_;
};

/// (a*, k) with a * a_star = 1 + k * b, 0 < a_star < b, k >= 0.
struct InverseData {
    i64 a_star;
    i64 k;
};

/// Multiplicative inverse of a mod b together with the cofactor k.
inline InverseData mod_inverse(const Fraction& f) {
    ExtGcd e = ext_gcd(f.a(), f.b());
    // e.u * a = 1 (mod b); normalize into (0, b).
    i64 a_star = e.u % f.b();
    if (a_star < 0) a_star += f.b();
    i128 prod = i128(f.a()) * a_star;
    i64 k = static_cast<i64>((prod - 1) / f.b());
    return {a_star, k};
}

/// The mirror pair (a*, b) as a Fraction.
inline Fraction inverse_fraction(const Fraction& f) {
    return Fraction(mod_inverse(f).a_star, f.b());
}

} // namespace cfcong
