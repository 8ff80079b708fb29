#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <numeric>
#include <sstream>

#include "cfcong/sweep.hpp"

using namespace cfcong;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

u64 coprime_pair_count(i64 max_b) {
    u64 n = 0;
    for (i64 b = 2; b <= max_b; ++b)
        for (i64 a = 1; a < b; ++a)
            if (std::gcd(a, b) == 1) ++n;
    return n;
}

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& name) : path("/tmp/cfcong_test_" + name) {}
    ~TempFile() { std::remove(path.c_str()); }
};

} // namespace

TEST_CASE("sweep counts every coprime pair") {
    SweepConfig cfg;
    cfg.max_b = 100;
    SweepSummary sum = run_sweep(cfg);
    CHECK(sum.pairs_checked == 3043); // sum of phi(b), 2 <= b <= 100
    CHECK(sum.pairs_checked == coprime_pair_count(100));
    CHECK(sum.clean());
    CHECK(sum.violating_pairs.empty());
    CHECK(sum.conjecture_counterexamples.empty());
}

TEST_CASE("trivial sweep") {
    SweepConfig cfg;
    cfg.max_b = 2;
    cfg.selected = checks::kTheorem;
    SweepSummary sum = run_sweep(cfg);
    CHECK(sum.pairs_checked == 1);
    CHECK(sum.clean());
    CHECK_THROWS_AS(run_sweep(SweepConfig{1}), domain_error);
}

TEST_CASE("applicable-pair tallies are non-vacuous at max_b = 15") {
    SweepConfig cfg;
    cfg.max_b = 15;
    SweepSummary sum = run_sweep(cfg);
    for (CaseId id : {CaseId::Thm1_1, CaseId::Thm1_2, CaseId::Thm1_3, CaseId::Cor2,
                      CaseId::Conj1, CaseId::Conj2, CaseId::Conj3, CaseId::Remark})
        CHECK(sum.cases[static_cast<int>(id)].applicable > 0);
    CHECK(sum.cases[static_cast<int>(CaseId::Remark)].applicable == sum.pairs_checked);
}

TEST_CASE("CSV row count equals the coprime-pair count") {
    TempFile csv("rows.csv");
    SweepConfig cfg;
    cfg.max_b = 60;
    cfg.csv_path = csv.path;
    SweepSummary sum = run_sweep(cfg);

    std::string text = slurp(csv.path);
    u64 lines = 0;
    for (char c : text)
        if (c == '\n') ++lines;
    CHECK(lines == sum.pairs_checked + 1); // header + one row per pair
    CHECK(text.substr(0, text.find('\n')) == csv_header());
}

TEST_CASE("CSV bytes are identical for 1 and 8 workers") {
    TempFile one("w1.csv"), eight("w8.csv");
    SweepConfig cfg;
    cfg.max_b = 120;
    cfg.csv_path = one.path;
    cfg.workers = 1;
    SweepSummary s1 = run_sweep(cfg);
    cfg.csv_path = eight.path;
    cfg.workers = 8;
    SweepSummary s8 = run_sweep(cfg);

    CHECK(slurp(one.path) == slurp(eight.path));
    CHECK(s1.pairs_checked == s8.pairs_checked);
    for (int c = 0; c < kCaseCount; ++c) {
        CHECK(s1.cases[c].applicable == s8.cases[c].applicable);
        CHECK(s1.cases[c].violations == s8.cases[c].violations);
    }
}

TEST_CASE("csv_row format for a known pair") {
    CheckRecord rec = check_pair(Fraction(7, 11));
    CHECK(csv_row(rec) ==
          "11,7,8,5,\"1,1,1,3\",\"1,1,1,2,1\",0,-2,6,-3,22,27,"
          "\"THM1_2;COR2;REMARK\",1,n/a");
}

TEST_CASE("seeded spot checks run and pass") {
    SweepConfig cfg;
    cfg.max_b = 10;
    cfg.seed = 42;
    cfg.spot_check_count = 20;
    cfg.spot_check_max_b = 50000;
    SweepSummary sum = run_sweep(cfg);
    CHECK(sum.spot_checks_run == 20);
    CHECK(sum.spot_check_failures == 0);
}

TEST_CASE("worker count does not change the summary even without CSV") {
    SweepConfig cfg;
    cfg.max_b = 80;
    cfg.selected = checks::kTheorem | checks::kConjectures;
    cfg.workers = 3;
    SweepSummary s3 = run_sweep(cfg);
    cfg.workers = 1;
    SweepSummary s1 = run_sweep(cfg);
    CHECK(s1.pairs_checked == s3.pairs_checked);
    CHECK(s1.violating_pairs == s3.violating_pairs);
}
