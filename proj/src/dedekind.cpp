#include "cfcong/dedekind.hpp"

#include <vector>

namespace cfcong {

namespace {

// Classical integrality: 6*b*s is an integer, i.e. den(s) divides 6b.
void check_integrality(const Rational& s, i64 b, const char* who) {
    if (checked_mul(i128(6), b) % s.den() != 0)
        throw inconsistency_error(std::string(who) + ": 6*b*s is not an integer");
}

} // namespace

Rational sawtooth(i64 p, i64 q) {
    if (q < 1) throw domain_error("sawtooth: q must be positive");
    i64 r = p % q;
    if (r < 0) r += q;
    if (r == 0) return Rational();
    // ((p/q)) = r/q - 1/2 = (2r - q) / (2q)
    return Rational(2 * i128(r) - q, 2 * i128(q));
}

Rational dedekind_naive(const Fraction& f) {
    const i64 a = f.a(), b = f.b();
    // Term j is ((j/b))((aj/b)) = (2j-b)(2r-b)/(4b^2) with r = aj mod b;
    // r != 0 for 0 < j < b since gcd(a,b) = 1, and the j = b term is 0.
    i128 acc = 0;
    i64 r = 0;
    for (i64 j = 1; j < b; ++j) {
        r += a;
        if (r >= b) r -= b;
        acc += i128(2 * j - b) * i128(2 * r - b);
    }
    Rational s(acc, checked_mul(checked_mul(i128(4), b), b));
    check_integrality(s, b, "dedekind_naive");
    return s;
}

Rational dedekind_fast(const Fraction& f) {
    // Euclid chain (a_i, b_i): a_{i+1} = b_i mod a_i, b_{i+1} = a_i.
    // s(a,b) = t(a,b) - s(b mod a, a) with
    // t(a,b) = -1/4 + (a^2 + b^2 + 1)/(12ab), base s(0,1) = 0.
    std::vector<std::pair<i64, i64>> chain;
    i64 a = f.a(), b = f.b();
    while (a != 0) {
        chain.emplace_back(a, b);
        i64 r = b % a;
        b = a;
        a = r;
    }
    // Fold backward so every partial value is a genuine s(a_i, b_i),
    // keeping denominators no larger than 6*b_i along the way.
    Rational s;
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
        auto [ai, bi] = *it;
        i128 n = checked_add(checked_add(checked_mul(i128(ai), ai), checked_mul(i128(bi), bi)), 1);
        Rational t = Rational(-1, 4) + Rational(n, checked_mul(checked_mul(i128(12), ai), bi));
        s = t - s;
    }
    check_integrality(s, f.b(), "dedekind_fast");
    return s;
}

i64 bhk_t_from_s(const Fraction& f, const Rational& s, const InverseData& inv) {
    Rational t = s * Rational::integer(12)
               - Rational(checked_add(f.a(), inv.a_star), f.b())
               + Rational::integer(3);
    if (!t.is_integer())
        throw inconsistency_error("bhk_t_from_s: 12s - (a+a*)/b + 3 is not an integer");
    return static_cast<i64>(t.num());
}

} // namespace cfcong
