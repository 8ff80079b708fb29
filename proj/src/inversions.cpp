#include "cfcong/inversions.hpp"

#include <vector>

#include "cfcong/dedekind.hpp"

namespace cfcong {

namespace {

// Counts inversions while merge-sorting values[lo, hi) with scratch buffer.
u64 merge_count(std::vector<u64>& values, std::vector<u64>& scratch,
                std::size_t lo, std::size_t hi) {
    if (hi - lo < 2) return 0;
    std::size_t mid = lo + (hi - lo) / 2;
    u64 count = merge_count(values, scratch, lo, mid) +
                merge_count(values, scratch, mid, hi);
    std::size_t i = lo, j = mid, out = lo;
    while (i < mid && j < hi) {
        if (values[i] <= values[j]) {
            scratch[out++] = values[i++];
        } else {
            scratch[out++] = values[j++];
            count += mid - i;
        }
    }
    while (i < mid) scratch[out++] = values[i++];
    while (j < hi) scratch[out++] = values[j++];
    std::copy(scratch.begin() + lo, scratch.begin() + hi, values.begin() + lo);
    return count;
}

} // namespace

i64 inversion_count_direct(const Fraction& f) {
    const i64 a = f.a(), b = f.b();
    std::vector<u64> values;
    values.reserve(b - 1);
    u64 r = 0;
    for (i64 j = 1; j < b; ++j) {
        r += static_cast<u64>(a);
        if (r >= static_cast<u64>(b)) r -= static_cast<u64>(b);
        values.push_back(r);
    }
    std::vector<u64> scratch(values.size());
    return static_cast<i64>(merge_count(values, scratch, 0, values.size()));
}

i64 inversion_count_reference(const Fraction& f) {
    const i64 a = f.a(), b = f.b();
    i64 count = 0;
    for (i64 i = 1; i < b; ++i)
        for (i64 j = i + 1; j < b; ++j)
            if ((i128(a) * i) % b > (i128(a) * j) % b) ++count;
    return count;
}

i64 inversion_from_meyer(const Fraction& f, const Rational& s) {
    const i64 b = f.b();
    Rational i = (Rational(checked_mul(i128(b) - 1, i128(b) - 2), 1)
                  - s * Rational::integer(12) * Rational::integer(b))
                 / Rational::integer(4);
    if (!i.is_integer())
        throw inconsistency_error("inversion_from_meyer: ((b-1)(b-2) - 12bs)/4 is not an integer");
    return static_cast<i64>(i.num());
}

bool salie_check(const Fraction& f, i64 i) {
    const i64 a = f.a(), b = f.b();
    i128 lhs = checked_mul(checked_mul(i128(4), a), i);
    i128 rhs = checked_mul(checked_mul(i128(a) - 1, i128(b) - 1), i128(a) + b - 1);
    i128 m = checked_mul(i128(4), b);
    return mod_norm(lhs, m) == mod_norm(rhs, m);
}

InversionReport inversion_report(const Fraction& f) {
    i64 direct = inversion_count_direct(f);
    i64 meyer = inversion_from_meyer(f, dedekind_fast(f));
    return {direct, meyer, salie_check(f, direct)};
}

} // namespace cfcong
