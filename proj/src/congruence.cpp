#include "cfcong/congruence.hpp"

namespace cfcong {

const char* case_name(CaseId id) {
    switch (id) {
        case CaseId::Thm1_1: return "THM1_1";
        case CaseId::Thm1_2: return "THM1_2";
        case CaseId::Thm1_3: return "THM1_3";
        case CaseId::Cor2:   return "COR2";
        case CaseId::Conj1:  return "CONJ1";
        case CaseId::Conj2:  return "CONJ2";
        case CaseId::Conj3:  return "CONJ3";
        case CaseId::Remark: return "REMARK";
    }
    return "?";
}

bool is_theorem_case(CaseId id) {
    return id == CaseId::Thm1_1 || id == CaseId::Thm1_2 ||
           id == CaseId::Thm1_3 || id == CaseId::Cor2;
}

bool is_conjecture_case(CaseId id) {
    return id == CaseId::Conj1 || id == CaseId::Conj2 || id == CaseId::Conj3;
}

namespace {

Trigger trigger_of(bool via_a, bool via_a_star) {
    if (via_a && via_a_star) return Trigger::Both;
    return via_a ? Trigger::A : Trigger::AStar;
}

} // namespace

std::vector<ResidueCase> classify(const Fraction& f, const InverseData& inv) {
    const i64 a4 = f.a() % 4;
    const i64 s4 = inv.a_star % 4;
    std::vector<ResidueCase> out;

    if (a4 == 1 || s4 == 1)
        out.push_back({CaseId::Thm1_1, trigger_of(a4 == 1, s4 == 1)});
    if (a4 == 3 || s4 == 3)
        out.push_back({CaseId::Thm1_2, trigger_of(a4 == 3, s4 == 3)});
    if (a4 == 2 || s4 == 2)
        out.push_back({CaseId::Thm1_3, trigger_of(a4 == 2, s4 == 2)});
    if (a4 % 2 == 1 || s4 % 2 == 1)
        out.push_back({CaseId::Cor2, trigger_of(a4 % 2 == 1, s4 % 2 == 1)});

    if (a4 % 2 == 0 && s4 % 2 == 0) {
        if (a4 == 2 || s4 == 2)
            out.push_back({CaseId::Conj1, trigger_of(a4 == 2, s4 == 2)});
        if (a4 == 0 && s4 == 0) {
            out.push_back({CaseId::Conj2, Trigger::Both});
            out.push_back({CaseId::Conj3, Trigger::Both});
        }
    }

    out.push_back({CaseId::Remark, Trigger::Both});
    return out;
}

Prediction predicted_residue(CaseId id, i64 b, i64 k) {
    auto halved = [&](i64 diff) {
        if (diff % 2 != 0)
            throw inconsistency_error("predicted_residue: parity precondition violated");
        return diff / 2;
    };
    switch (id) {
        case CaseId::Thm1_1:
            return {Statistic::TMod4, static_cast<int>(mod_norm(b - k, 4))};
        case CaseId::Thm1_2:
            return {Statistic::TMod4, static_cast<int>(mod_norm(2 + k - b, 4))};
        case CaseId::Thm1_3:
            return {Statistic::DMod2, static_cast<int>(mod_norm(halved(b - k), 2))};
        case CaseId::Cor2:
            return {Statistic::DMod2, static_cast<int>(mod_norm(b - k, 2))};
        case CaseId::Conj1:
            return {Statistic::TMod4, static_cast<int>(mod_norm(halved(b - k), 4))};
        case CaseId::Conj2:
            return {Statistic::TMod4, static_cast<int>(mod_norm(halved(k - b), 4))};
        case CaseId::Conj3:
            return {Statistic::DMod2, 1}; // D(a,b) is odd
        case CaseId::Remark:
            break;
    }
    throw domain_error("predicted_residue: Remark is an identity, not a residue case");
}

bool proof_chain_check(const Fraction& f) {
    const i64 a = f.a(), b = f.b();
    const InverseData inv = mod_inverse(f);
    const i64 t = cf_stats(f).T;

    // a*b*T = -a^2*b + 3ab - 2b + b^2 - kb (mod 4b)
    i128 lhs = checked_mul(checked_mul(i128(a), b), t);
    i128 rhs = checked_sub(
        checked_add(
            checked_sub(checked_mul(checked_mul(i128(3), a), b),
                        checked_mul(checked_mul(i128(a), a), b)),
            checked_sub(checked_mul(i128(b), b), checked_mul(i128(2), b))),
        checked_mul(i128(inv.k), b));
    i128 m = checked_mul(i128(4), b);
    if (mod_norm(lhs, m) != mod_norm(rhs, m)) return false;

    // a*T = -a^2 + 3a - 2 + b - k (mod 4)
    i128 lhs2 = checked_mul(i128(a), t);
    i128 rhs2 = i128(3) * a - i128(a) * a - 2 + b - inv.k;
    return mod_norm(lhs2, 4) == mod_norm(rhs2, 4);
}

CheckRecord check_pair(const Fraction& f, const CheckOptions& opts) {
    const InverseData inv = mod_inverse(f);
    CFExpansion canonical = cf_expand(f);
    CFExpansion odd = cf_normalize_odd(canonical);
    CFStats stats{alternating_sum(odd), alternating_sum(canonical), digit_sum(odd)};
    Rational s = dedekind_fast(f);

    CheckRecord rec{f, inv, std::move(canonical), std::move(odd), stats, s,
                    std::nullopt, {}, false, false,
                    std::nullopt, std::nullopt, std::nullopt, std::nullopt, std::nullopt};

    for (const ResidueCase& rc : classify(f, inv)) {
        if (rc.id == CaseId::Remark) continue;
        Prediction p = predicted_residue(rc.id, f.b(), inv.k);
        int actual = p.stat == Statistic::TMod4
                         ? static_cast<int>(mod_norm(stats.T, 4))
                         : static_cast<int>(mod_norm(stats.D, 2));
        rec.verdicts.push_back({rc, p, actual, actual == p.value});
    }

    // Remark: T = T' + 2 when the canonical length is even, T = T' otherwise.
    rec.remark_ok = rec.cf_canonical.odd_length()
                        ? stats.T == stats.T_prime
                        : stats.T == stats.T_prime + 2;

    rec.bhk_ok = bhk_t_from_s(f, s, inv) == stats.T;

    if (opts.naive_compare)
        rec.naive_fast_ok = dedekind_naive(f) == s;

    if (opts.inversions) {
        i64 direct = inversion_count_direct(f);
        rec.inversions = direct;
        rec.meyer_ok = inversion_from_meyer(f, s) == direct;
        rec.salie_ok = salie_check(f, direct);
    }

    if (opts.inverse_symmetry) {
        Fraction mirror = inverse_fraction(f);
        rec.inverse_sym_ok = dedekind_fast(mirror) == s &&
                             cf_stats(mirror).T == stats.T;
    }

    if (opts.proof_chain)
        rec.proof_chain_ok = proof_chain_check(f);

    return rec;
}

bool CheckRecord::theorem_ok() const {
    for (const CaseVerdict& v : verdicts)
        if (is_theorem_case(v.rc.id) && !v.holds) return false;
    return remark_ok;
}

bool CheckRecord::identities_ok() const {
    auto ok = [](const std::optional<bool>& o) { return !o.has_value() || *o; };
    return bhk_ok && remark_ok && ok(naive_fast_ok) && ok(meyer_ok) &&
           ok(salie_ok) && ok(inverse_sym_ok) && ok(proof_chain_ok);
}

ConjecturesStatus CheckRecord::conjectures_status() const {
    bool any = false, all_hold = true;
    for (const CaseVerdict& v : verdicts) {
        if (!is_conjecture_case(v.rc.id)) continue;
        any = true;
        all_hold = all_hold && v.holds;
    }
    if (!any) return ConjecturesStatus::NotApplicable;
    return all_hold ? ConjecturesStatus::Holds : ConjecturesStatus::Fails;
}

std::vector<CaseId> CheckRecord::failed_conjectures() const {
    std::vector<CaseId> out;
    for (const CaseVerdict& v : verdicts)
        if (is_conjecture_case(v.rc.id) && !v.holds) out.push_back(v.rc.id);
    return out;
}

} // namespace cfcong
