#include "cfcong/sweep.hpp"

#include <chrono>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>
#include <thread>

namespace cfcong {

std::string csv_header() {
    return "b,a,a_star,k,cf_canonical,cf_odd,T,T_prime,D,s_num,s_den,"
           "inversions,cases,theorem_ok,conjectures_status";
}

namespace {

std::string conjectures_cell(const CheckRecord& rec) {
    switch (rec.conjectures_status()) {
        case ConjecturesStatus::NotApplicable: return "n/a";
        case ConjecturesStatus::Holds: return "holds";
        case ConjecturesStatus::Fails: break;
    }
    std::string out = "fails:";
    bool first = true;
    for (CaseId id : rec.failed_conjectures()) {
        if (!first) out += ';';
        out += case_name(id);
        first = false;
    }
    return out;
}

} // namespace

std::string csv_row(const CheckRecord& rec) {
    std::ostringstream os;
    os << rec.pair.b() << ',' << rec.pair.a() << ','
       << rec.inv.a_star << ',' << rec.inv.k << ','
       << '"' << rec.cf_canonical.str() << "\",\"" << rec.cf_odd.str() << "\","
       << rec.stats.T << ',' << rec.stats.T_prime << ',' << rec.stats.D << ','
       << to_string(rec.s.num()) << ',' << to_string(rec.s.den()) << ',';
    // The direct count when it ran, otherwise the Meyer back-solve.
    i64 inv_count = rec.inversions ? *rec.inversions
                                   : inversion_from_meyer(rec.pair, rec.s);
    os << inv_count << ',' << '"';
    bool first = true;
    for (const ResidueCase& rc : classify(rec.pair, rec.inv)) {
        if (!first) os << ';';
        os << case_name(rc.id);
        first = false;
    }
    os << "\"," << (rec.theorem_ok() ? 1 : 0) << ',' << conjectures_cell(rec);
    return os.str();
}

namespace {

struct StripeResult {
    SweepSummary partial;
    std::string csv;
};

void sweep_stripe(const SweepConfig& cfg, i64 b_lo, i64 b_hi, bool want_csv,
                  StripeResult& out) {
    CheckOptions opts;
    const bool identities = cfg.selected & checks::kIdentities;
    opts.inversions = identities;
    opts.inverse_symmetry = identities;
    opts.proof_chain = cfg.selected & checks::kProofChain;

    std::ostringstream csv;
    SweepSummary& sum = out.partial;

    for (i64 b = b_lo; b < b_hi; ++b) {
        for (i64 a = 1; a < b; ++a) {
            if (std::gcd(a, b) != 1) continue;
            Fraction f(a, b);
            opts.naive_compare = identities && b <= cfg.naive_bound;
            CheckRecord rec = check_pair(f, opts);
            ++sum.pairs_checked;

            bool violated = false;
            for (const CaseVerdict& v : rec.verdicts) {
                CaseTally& tally = sum.cases[static_cast<int>(v.rc.id)];
                ++tally.applicable;
                if (v.holds) continue;
                ++tally.violations;
                if (is_theorem_case(v.rc.id) && (cfg.selected & checks::kTheorem))
                    violated = true;
            }
            CaseTally& remark = sum.cases[static_cast<int>(CaseId::Remark)];
            ++remark.applicable;
            if (!rec.remark_ok) {
                ++remark.violations;
                if (cfg.selected & checks::kTheorem) violated = true;
            }

            // Overlapping theorem clauses must agree on the predicted residue.
            std::optional<int> t_pred;
            for (const CaseVerdict& v : rec.verdicts) {
                if (!is_theorem_case(v.rc.id) || v.predicted.stat != Statistic::TMod4)
                    continue;
                if (t_pred && *t_pred != v.predicted.value) violated = true;
                t_pred = v.predicted.value;
            }

            if (identities && !rec.identities_ok()) {
                ++sum.identity_violations;
                violated = true;
            }
            if (opts.proof_chain && !*rec.proof_chain_ok) {
                ++sum.proof_chain_violations;
                violated = true;
            }
            if (violated) sum.violating_pairs.emplace_back(a, b);

            if ((cfg.selected & checks::kConjectures) &&
                rec.conjectures_status() == ConjecturesStatus::Fails)
                sum.conjecture_counterexamples.emplace_back(a, b);

            if (want_csv) csv << csv_row(rec) << '\n';
        }
    }
    out.csv = csv.str();
}

// Seeded large-b spot checks: naive/fast agreement and BHK closure.
void run_spot_checks(const SweepConfig& cfg, SweepSummary& sum) {
    std::mt19937_64 rng(*cfg.seed);
    std::uniform_int_distribution<i64> b_dist(2, cfg.spot_check_max_b);
    for (i64 n = 0; n < cfg.spot_check_count; ++n) {
        i64 b = b_dist(rng);
        i64 a = std::uniform_int_distribution<i64>(1, b - 1)(rng);
        while (std::gcd(a, b) != 1) a = a % (b - 1) + 1;
        Fraction f(a, b);
        Rational fast = dedekind_fast(f);
        bool ok = dedekind_naive(f) == fast &&
                  bhk_t_from_s(f, fast, mod_inverse(f)) == cf_stats(f).T;
        ++sum.spot_checks_run;
        if (!ok) {
            ++sum.spot_check_failures;
            sum.violating_pairs.emplace_back(a, b);
        }
    }
}

} // namespace

SweepSummary run_sweep(const SweepConfig& cfg) {
    if (cfg.max_b < 2) throw domain_error("run_sweep: max_b must be >= 2");
    if (cfg.workers < 1) throw domain_error("run_sweep: workers must be >= 1");
    auto start = std::chrono::steady_clock::now();

    const bool want_csv = !cfg.csv_path.empty();
    const int workers = static_cast<int>(
        std::min<i64>(cfg.workers, std::max<i64>(1, cfg.max_b - 1)));

    // Contiguous b-stripes with roughly equal candidate-pair load.
    std::vector<i64> bounds{2};
    u64 total_load = 0;
    for (i64 b = 2; b <= cfg.max_b; ++b) total_load += static_cast<u64>(b - 1);
    u64 acc = 0;
    int stripe = 1;
    for (i64 b = 2; b <= cfg.max_b && stripe < workers; ++b) {
        acc += static_cast<u64>(b - 1);
        if (acc * static_cast<u64>(workers) >= total_load * static_cast<u64>(stripe)) {
            bounds.push_back(b + 1);
            ++stripe;
        }
    }
    while (static_cast<int>(bounds.size()) < workers) bounds.push_back(cfg.max_b + 1);
    bounds.push_back(cfg.max_b + 1);

    std::vector<StripeResult> results(workers);
    if (workers == 1) {
        sweep_stripe(cfg, bounds[0], bounds[1], want_csv, results[0]);
    } else {
        std::vector<std::thread> threads;
        threads.reserve(workers);
        for (int w = 0; w < workers; ++w)
            threads.emplace_back(sweep_stripe, std::cref(cfg), bounds[w],
                                 bounds[w + 1], want_csv, std::ref(results[w]));
        for (std::thread& t : threads) t.join();
    }

    // Deterministic merge: stripes are already in ascending (b, a) order.
    SweepSummary sum;
    for (const StripeResult& r : results) {
        const SweepSummary& p = r.partial;
        sum.pairs_checked += p.pairs_checked;
        for (int c = 0; c < kCaseCount; ++c) {
            sum.cases[c].applicable += p.cases[c].applicable;
            sum.cases[c].violations += p.cases[c].violations;
        }
        sum.identity_violations += p.identity_violations;
        sum.proof_chain_violations += p.proof_chain_violations;
        sum.violating_pairs.insert(sum.violating_pairs.end(),
                                   p.violating_pairs.begin(), p.violating_pairs.end());
        sum.conjecture_counterexamples.insert(sum.conjecture_counterexamples.end(),
                                              p.conjecture_counterexamples.begin(),
                                              p.conjecture_counterexamples.end());
    }

    if (cfg.seed && (cfg.selected & checks::kIdentities)) run_spot_checks(cfg, sum);

    if (want_csv) {
        std::ofstream out(cfg.csv_path, std::ios::binary);
        if (!out) throw domain_error("run_sweep: cannot open CSV path " + cfg.csv_path);
        out << csv_header() << '\n';
        for (const StripeResult& r : results) out << r.csv;
    }

    sum.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return sum;
}

} // namespace cfcong
