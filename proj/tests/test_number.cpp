#include <doctest.h>

#include <numeric>
#include <random>

#include "cfcong/number.hpp"
#include "cfcong/rational.hpp"

using namespace cfcong;

TEST_CASE("ext_gcd basics") {
    auto e = ext_gcd(7, 11);
    CHECK(e.g == 1);
    CHECK(e.u * 7 + e.v * 11 == 1);

    e = ext_gcd(1, 42);
    CHECK(e.g == 1);
    CHECK(e.u * 1 + e.v * 42 == 1);

    CHECK(ext_gcd(6, 4).g == 2);
    CHECK(ext_gcd(0, 5).g == 5);
    CHECK_THROWS_AS(ext_gcd(0, 0), domain_error);
    CHECK_THROWS_AS(ext_gcd(-1, 2), domain_error);
}

TEST_CASE("ext_gcd Bezout identity on random inputs") {
    std::mt19937_64 rng(1);
    std::uniform_int_distribution<i64> d(0, 1'000'000'000);
    for (int i = 0; i < 1000; ++i) {
        i64 x = d(rng), y = d(rng);
        if (x == 0 && y == 0) continue;
        auto e = ext_gcd(x, y);
        CHECK(e.g == std::gcd(x, y));
        CHECK(i128(e.u) * x + i128(e.v) * y == e.g);
    }
}

TEST_CASE("Fraction construction rejects bad input") {
    CHECK_NOTHROW(Fraction(1, 2));
    CHECK_THROWS_AS(Fraction(4, 6), domain_error);  // not coprime
    CHECK_THROWS_AS(Fraction(5, 5), domain_error);  // a == b
    CHECK_THROWS_AS(Fraction(7, 5), domain_error);  // a > b
    CHECK_THROWS_AS(Fraction(0, 5), domain_error);
    CHECK_THROWS_AS(Fraction(-1, 5), domain_error);
    CHECK_THROWS_AS(Fraction(1, (i64(1) << 31) + 2), domain_error);
}

TEST_CASE("mod_inverse examples") {
    auto inv = mod_inverse(Fraction(7, 11));
    CHECK(inv.a_star == 8);
    CHECK(inv.k == 5); // 7*8 = 56 = 1 + 5*11

    inv = mod_inverse(Fraction(1, 9));
    CHECK(inv.a_star == 1);
    CHECK(inv.k == 0);

    inv = mod_inverse(Fraction(2, 5));
    CHECK(inv.a_star == 3);
    CHECK(inv.k == 1);
}

TEST_CASE("mod_inverse invariants exhaustively for b <= 120") {
    for (i64 b = 2; b <= 120; ++b) {
        for (i64 a = 1; a < b; ++a) {
            if (std::gcd(a, b) != 1) continue;
            Fraction f(a, b);
            auto inv = mod_inverse(f);
            CHECK(inv.a_star > 0);
            CHECK(inv.a_star < b);
            CHECK(i128(a) * inv.a_star == 1 + i128(inv.k) * b);
            CHECK(inv.k >= 0);
            CHECK(inv.k < a); // a* < b implies a*a* < a*b
            // Involution: (a*)* = a.
            CHECK(mod_inverse(Fraction(inv.a_star, b)).a_star == a);
        }
    }
}

TEST_CASE("Rational reduction and canonical forms") {
    CHECK(Rational(2, 36) == Rational(1, 18));
    CHECK(Rational(-4, -8) == Rational(1, 2));
    Rational z(0, 7);
    CHECK(z.num() == 0);
    CHECK(z.den() == 1);
    CHECK(Rational(3, -6) == Rational(-1, 2));
    CHECK_THROWS_AS(Rational(1, 0), domain_error);
}

TEST_CASE("Rational arithmetic is exact") {
    std::mt19937_64 rng(2);
    std::uniform_int_distribution<i64> d(-1000, 1000);
    for (int i = 0; i < 500; ++i) {
        i64 p = d(rng), q = d(rng), r = d(rng), s = d(rng);
        if (q == 0 || s == 0) continue;
        Rational x(p, q), y(r, s);
        // (p/q + r/s) * s * q = p*s + r*q
        Rational lhs = (x + y) * Rational::integer(s) * Rational::integer(q);
        i128 expect = i128(p) * s + i128(r) * q;
        CHECK(lhs == Rational(expect, 1));
        CHECK((x * y) == Rational(i128(p) * r, i128(q) * s));
        if (!y.is_zero()) CHECK((x / y) * y == x);
        CHECK(x - x == Rational());
    }
}

TEST_CASE("Rational comparison and integer predicate") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(0, 1));
    CHECK(Rational(6, 3).is_integer());
    CHECK(!Rational(5, 3).is_integer());
    CHECK(Rational(7, 1).str() == "7");
    CHECK(Rational(-1, 18).str() == "-1/18");
}

TEST_CASE("checked arithmetic reports overflow instead of wrapping") {
    i128 big = i128(1) << 126;
    CHECK_THROWS_AS(checked_add(big, big), overflow_error);
    CHECK_THROWS_AS(checked_mul(big, 4), overflow_error);
    CHECK(checked_mul(big, 1) == big);
}

TEST_CASE("to_string on 128-bit values") {
    CHECK(to_string(i128(0)) == "0");
    CHECK(to_string(i128(-42)) == "-42");
    i128 x = i128(1) << 100;
    CHECK(to_string(x) == "1267650600228229401496703205376");
}
