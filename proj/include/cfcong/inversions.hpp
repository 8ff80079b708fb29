#pragma once

#include "cfcong/number.hpp"
#include "cfcong/rational.hpp"

namespace cfcong {

struct InversionReport {
    i64 i_direct;
    i64 i_meyer;
    bool salie_holds;
};

/// Inversions of the permutation j -> a*j mod b on {1,...,b-1},
/// counted by merge sort in O(b log b).
i64 inversion_count_direct(const Fraction& f);

/// O(b^2) pairwise counter, kept as a small-b reference.
i64 inversion_count_reference(const Fraction& f);

/// Back-solve Meyer's formula 12*b*s = -4*I + (b-1)(b-2) for I,
/// asserting the division is exact.
i64 inversion_from_meyer(const Fraction& f, const Rational& s);

/// Salie congruence: 4*a*I = (a-1)(b-1)(a+b-1) mod 4b.
bool salie_check(const Fraction& f, i64 i);

/// Convenience bundle: direct count, Meyer back-solve from the fast
/// Dedekind sum, and the Salie verdict.
InversionReport inversion_report(const Fraction& f);

} // namespace cfcong
