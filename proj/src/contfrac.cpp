#include "cfcong/contfrac.hpp"

#include <sstream>

namespace cfcong {

std::string CFExpansion::str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < q_.size(); ++i) {
        if (i) os << ',';
        os << q_[i];
    }
    return os.str();
}

CFExpansion cf_expand(const Fraction& f) {
    std::vector<i64> q;
    i64 num = f.b(), den = f.a(); // a/b = [0; b/a quotients...]
    while (den != 0) {
        q.push_back(num / den);
        i64 r = num % den;
        num = den;
        den = r;
    }
    return CFExpansion(std::move(q));
}

CFExpansion cf_normalize_odd(const CFExpansion& cf) {
    if (cf.odd_length()) return cf;
    std::vector<i64> q = cf.quotients();
    if (q.back() >= 2) {
        q.back() -= 1;
        q.push_back(1);
    } else {
        q.pop_back();
        q.back() += 1;
    }
    return CFExpansion(std::move(q));
}

Fraction cf_eval(const CFExpansion& cf) {
    // Back-substitute: value of [a_j; a_{j+1}, ...] as num/den, from the tail.
    i128 num = 1, den = 0;
    for (auto it = cf.quotients().rbegin(); it != cf.quotients().rend(); ++it) {
        // new value = a_j + den/num = (a_j*num + den) / num
        i128 t = checked_add(checked_mul(*it, num), den);
        den = num;
        num = t;
    }
    // [0; ...] = den/num
    if (num > kMaxDenominator)
        throw overflow_error("cf_eval: denominator exceeds 2^31 budget");
    return Fraction(static_cast<i64>(den), static_cast<i64>(num));
}

i64 alternating_sum(const CFExpansion& cf) {
    i64 s = 0;
    i64 sign = 1;
    for (i64 q : cf.quotients()) {
        s += sign * q;
        sign = -sign;
    }
    return s;
}

i64 digit_sum(const CFExpansion& cf) {
    i64 s = 0;
    for (i64 q : cf.quotients()) s += q;
    return s;
}

CFStats cf_stats(const Fraction& f) {
    CFExpansion canonical = cf_expand(f);
    CFExpansion odd = cf_normalize_odd(canonical);
    return {alternating_sum(odd), alternating_sum(canonical), digit_sum(odd)};
}

} // namespace cfcong
