#pragma once

#include <string>
#include <vector>

#include "cfcong/number.hpp"

namespace cfcong {

/// Partial quotients a_1..a_n of [0; a_1,...,a_n]; the leading 0 is
/// implicit. Every quotient is >= 1 and the value lies strictly in (0, 1),
/// which excludes the single expansion [1].
class CFExpansion {
public:
    explicit CFExpansion(std::vector<i64> quotients) : q_(std::move(quotients)) {
        if (q_.empty()) throw domain_error("CFExpansion: empty quotient list");
        for (i64 q : q_)
            if (q < 1) throw domain_error("CFExpansion: quotient < 1");
        if (q_.size() == 1 && q_[0] == 1)
            throw domain_error("CFExpansion: [1] evaluates to 1, outside (0,1)");
    }

    const std::vector<i64>& quotients() const { return q_; }
    std::size_t length() const { return q_.size(); }
    bool odd_length() const { return q_.size() % 2 == 1; }

    bool operator==(const CFExpansion& o) const = default;

    /// Quotients joined by commas, e.g. "1,1,1,3".
    std::string str() const;

private:
    std::vector<i64> q_;
};

struct CFStats {
    i64 T;       // alternating sum over the odd-normalized expansion
    i64 T_prime; // alternating sum over the canonical expansion
    i64 D;       // digit sum over the odd-normalized expansion
};

/// Canonical Euclidean expansion of a/b: last quotient >= 2 whenever n >= 2.
CFExpansion cf_expand(const Fraction& f);

/// Rewrite to odd length preserving the value: split a trailing quotient
/// >= 2 into (q-1, 1), or merge a trailing 1 into its predecessor.
CFExpansion cf_normalize_odd(const CFExpansion& cf);

/// Exact value of [0; a_1,...,a_n] by back-substitution.
Fraction cf_eval(const CFExpansion& cf);

/// T on the odd-normalized expansion, T' on the canonical one, D on the
/// odd-normalized one.
CFStats cf_stats(const Fraction& f);

i64 alternating_sum(const CFExpansion& cf);
i64 digit_sum(const CFExpansion& cf);

} // namespace cfcong
