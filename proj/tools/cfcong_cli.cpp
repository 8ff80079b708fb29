// cfcong: continued-fraction statistics, Dedekind sums, inversion counts,
// and exhaustive congruence verification over coprime pairs.
//
// Exit codes: 0 clean, 1 usage error, 2 violation or conjecture
// counterexample, 3 overflow.

#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cfcong/sweep.hpp"

namespace {

using namespace cfcong;

constexpr int kExitUsage = 1;
constexpr int kExitViolation = 2;
constexpr int kExitOverflow = 3;

Fraction parse_pair(i64 a, i64 b) {
    try {
        return Fraction(a, b);
    } catch (const domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        std::exit(kExitUsage);
    }
}

int cmd_cf(i64 a, i64 b) {
    Fraction f = parse_pair(a, b);
    CFExpansion canonical = cf_expand(f);
    CFExpansion odd = cf_normalize_odd(canonical);
    CFStats stats = cf_stats(f);
    std::cout << a << "/" << b << "\n"
              << "  canonical: [0;" << canonical.str() << "]\n"
              << "  odd form:  [0;" << odd.str() << "]\n"
              << "  T  = " << stats.T << "\n"
              << "  T' = " << stats.T_prime << "\n"
              << "  D  = " << stats.D << "\n";
    return 0;
}

int cmd_dedekind(i64 a, i64 b, const std::string& mode) {
    Fraction f = parse_pair(a, b);
    Rational s;
    if (mode == "naive") {
        s = dedekind_naive(f);
    } else if (mode == "fast") {
        s = dedekind_fast(f);
    } else {
        s = dedekind_fast(f);
        if (dedekind_naive(f) != s) {
            std::cerr << "error: naive/fast Dedekind disagreement for ("
                      << a << "," << b << ")\n";
            return kExitViolation;
        }
    }
    Rational twelve_bs = s * Rational::integer(12) * Rational::integer(b);
    std::cout << "s(" << a << "," << b << ") = " << s << "\n"
              << "12*b*s = " << twelve_bs << "\n";
    return 0;
}

int cmd_inversions(i64 a, i64 b) {
    Fraction f = parse_pair(a, b);
    InversionReport rep = inversion_report(f);
    std::cout << "I(" << a << "," << b << ")\n"
              << "  direct (merge count): " << rep.i_direct << "\n"
              << "  via Meyer's formula:  " << rep.i_meyer << "\n"
              << "  Salie congruence:     " << (rep.salie_holds ? "holds" : "FAILS") << "\n";
    if (rep.i_direct != rep.i_meyer) {
        std::cerr << "error: direct and Meyer inversion counts disagree\n";
        return kExitViolation;
    }
    return rep.salie_holds ? 0 : kExitViolation;
}

const char* trigger_str(Trigger t) {
    switch (t) {
        case Trigger::A: return "a";
        case Trigger::AStar: return "a*";
        case Trigger::Both: return "a,a*";
    }
    return "?";
}

int cmd_classify(i64 a, i64 b) {
    Fraction f = parse_pair(a, b);
    CheckRecord rec = check_pair(f);
    std::cout << "(" << a << "," << b << "): a* = " << rec.inv.a_star
              << ", k = " << rec.inv.k << "\n";
    for (const CaseVerdict& v : rec.verdicts) {
        const char* stat = v.predicted.stat == Statistic::TMod4 ? "T mod 4" : "D mod 2";
        std::cout << "  " << case_name(v.rc.id) << " (via " << trigger_str(v.rc.trigger)
                  << "): predicted " << stat << " = " << v.predicted.value
                  << ", actual " << v.actual << " -> "
                  << (v.holds ? "holds" : "FAILS") << "\n";
    }
    std::cout << "  REMARK: T = " << rec.stats.T << ", T' = " << rec.stats.T_prime
              << " -> " << (rec.remark_ok ? "holds" : "FAILS") << "\n";
    return 0;
}

unsigned parse_checks(const std::vector<std::string>& names) {
    static const std::map<std::string, unsigned> table{
        {"theorem", checks::kTheorem},
        {"conjectures", checks::kConjectures},
        {"identities", checks::kIdentities},
        {"proof-chain", checks::kProofChain},
        {"all", checks::kAll},
    };
    unsigned sel = 0;
    for (const std::string& n : names) {
        auto it = table.find(n);
        if (it == table.end()) {
            std::cerr << "error: unknown check '" << n << "'\n";
            std::exit(kExitUsage);
        }
        sel |= it->second;
    }
    return sel ? sel : checks::kAll;
}

int cmd_verify(const SweepConfig& cfg) {
    SweepSummary sum = run_sweep(cfg);

    std::cout << "pairs checked: " << sum.pairs_checked << "\n";
    std::cout << "case        applicable    violations\n";
    for (int c = 0; c < kCaseCount; ++c) {
        std::string name = case_name(static_cast<CaseId>(c));
        std::cout << "  " << name << std::string(12 - name.size(), ' ')
                  << sum.cases[c].applicable << "\t" << sum.cases[c].violations << "\n";
    }
    if (cfg.selected & checks::kIdentities)
        std::cout << "identity violations: " << sum.identity_violations << "\n";
    if (cfg.selected & checks::kProofChain)
        std::cout << "proof-chain violations: " << sum.proof_chain_violations << "\n";
    if (sum.spot_checks_run)
        std::cout << "large-b spot checks: " << sum.spot_checks_run << " run, "
                  << sum.spot_check_failures << " failed\n";
    std::cout << "elapsed: " << sum.elapsed_seconds << " s\n";

    for (auto [a, b] : sum.conjecture_counterexamples)
        std::cerr << "CONJECTURE-COUNTEREXAMPLE: (" << a << "," << b << ")\n";
    for (auto [a, b] : sum.violating_pairs)
        std::cerr << "VIOLATION: (" << a << "," << b << ")\n";

    return sum.clean() ? 0 : kExitViolation;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Continued-fraction congruence lab"};
    app.require_subcommand(1);

    i64 a = 0, b = 0;
    std::string mode = "both";

    auto* cf = app.add_subcommand("cf", "Continued-fraction expansion and T, T', D");
    cf->add_option("a", a)->required();
    cf->add_option("b", b)->required();

    auto* ded = app.add_subcommand("dedekind", "Dedekind sum s(a,b)");
    ded->add_option("a", a)->required();
    ded->add_option("b", b)->required();
    ded->add_option("mode", mode)->check(CLI::IsMember({"naive", "fast", "both"}));

    auto* inv = app.add_subcommand("inversions", "Inversion count I(a,b)");
    inv->add_option("a", a)->required();
    inv->add_option("b", b)->required();

    auto* cls = app.add_subcommand("classify", "Theorem/conjecture cases and verdicts");
    cls->add_option("a", a)->required();
    cls->add_option("b", b)->required();

    SweepConfig cfg;
    std::vector<std::string> check_names;
    auto* ver = app.add_subcommand("verify", "Exhaustive sweep over coprime pairs");
    ver->add_option("--max-b", cfg.max_b, "Largest denominator")->required()
       ->check(CLI::Range(i64(2), kMaxDenominator));
    ver->add_option("--check", check_names,
                    "theorem|conjectures|identities|proof-chain|all (repeatable)");
    ver->add_option("--jobs", cfg.workers, "Worker threads")->check(CLI::PositiveNumber);
    ver->add_option("--csv", cfg.csv_path, "Write per-pair CSV report");
    u64 seed = 0;
    auto* seed_opt = ver->add_option("--seed", seed, "Enable seeded large-b identity spot checks");
    ver->add_option("--naive-bound", cfg.naive_bound,
                    "Compare naive/fast Dedekind sums for b below this bound");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    try {
        if (cf->parsed()) return cmd_cf(a, b);
        if (ded->parsed()) return cmd_dedekind(a, b, mode);
        if (inv->parsed()) return cmd_inversions(a, b);
        if (cls->parsed()) return cmd_classify(a, b);
        cfg.selected = parse_checks(check_names);
        if (seed_opt->count()) cfg.seed = seed;
        return cmd_verify(cfg);
    } catch (const overflow_error& e) {
        std::cerr << "overflow: " << e.what() << '\n';
        return kExitOverflow;
    } catch (const domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitViolation;
    }
}
