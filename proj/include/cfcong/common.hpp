#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cfcong {

using i64 = std::int64_t;
using u64 = std::uint64_t;
using i128 = __int128;

// Raised when an intermediate would exceed the 128-bit signed budget.
class overflow_error : public std::runtime_error {
public:
    explicit overflow_error(const std::string& what) : std::runtime_error(what) {}
};

// Invalid input (non-coprime pair, zero denominator, out-of-range operand).
class domain_error : public std::domain_error {
public:
    explicit domain_error(const std::string& what) : std::domain_error(what) {}
};

// An internal identity failed to hold; indicates corrupted inputs or a bug.
class inconsistency_error : public std::logic_error {
public:
    explicit inconsistency_error(const std::string& what) : std::logic_error(what) {}
};

inline i128 checked_add(i128 x, i128 y) {
    i128 r;
    if (__builtin_add_overflow(x, y, &r))
        throw overflow_error("128-bit addition overflow");
    return r;
}

inline i128 checked_sub(i128 x, i128 y) {
    i128 r;
    if (__builtin_sub_overflow(x, y, &r))
        throw overflow_error("128-bit subtraction overflow");
    return r;
}

inline i128 checked_mul(i128 x, i128 y) {
    i128 r;
    if (__builtin_mul_overflow(x, y, &r))
        throw overflow_error("128-bit multiplication overflow");
    return r;
}

inline i128 abs128(i128 x) { return x < 0 ? -x : x; }

inline i128 gcd128(i128 x, i128 y) {
    x = abs128(x);
    y = abs128(y);
    while (y != 0) {
        i128 t = x % y;
        x = y;
        y = t;
    }
    return x;
}

// Least non-negative residue of x mod m, m > 0.
inline i128 mod_norm(i128 x, i128 m) {
    i128 r = x % m;
    return r < 0 ? r + m : r;
}

inline std::string to_string(i128 x) {
    if (x == 0) return "0";
    bool neg = x < 0;
    unsigned __int128 u = neg ? -static_cast<unsigned __int128>(x)
                              : static_cast<unsigned __int128>(x);
    std::string digits;
    while (u != 0) {
        digits.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
        u /= 10;
    }
    if (neg) digits.push_back('-');
    return std::string(digits.rbegin(), digits.rend());
}

} // namespace cfcong
