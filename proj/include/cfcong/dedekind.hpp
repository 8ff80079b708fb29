#pragma once

#include "cfcong/number.hpp"
#include "cfcong/rational.hpp"

namespace cfcong {

/// Sawtooth ((p/q)): p/q - floor(p/q) - 1/2 off integers, 0 on integers.
Rational sawtooth(i64 p, i64 q);

/// Dedekind sum s(a,b) by the defining O(b) sum over j = 1..b.
Rational dedekind_naive(const Fraction& f);

/// Same value in O(log b) steps via the reciprocity law
/// s(a,b) + s(b,a) = -1/4 + (a/b + b/a + 1/(ab))/12 and s(a mod b, b) = s(a,b).
Rational dedekind_fast(const Fraction& f);

/// Barkan-Hickerson-Knuth bridge: T(a,b) = 12*s - (a + a*)/b + 3.
/// Asserts the result is an exact integer.
i64 bhk_t_from_s(const Fraction& f, const Rational& s, const InverseData& inv);

} // namespace cfcong
