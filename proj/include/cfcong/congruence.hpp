#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cfcong/contfrac.hpp"
#include "cfcong/dedekind.hpp"
#include "cfcong/inversions.hpp"

namespace cfcong {

enum class CaseId { Thm1_1, Thm1_2, Thm1_3, Cor2, Conj1, Conj2, Conj3, Remark };

inline constexpr int kCaseCount = 8;

const char* case_name(CaseId id);
bool is_theorem_case(CaseId id);   // Thm1_* and Cor2
bool is_conjecture_case(CaseId id);

/// Which residue of the pair fired the condition.
enum class Trigger { A, AStar, Both };

struct ResidueCase {
    CaseId id;
    Trigger trigger;
};

enum class Statistic { TMod4, DMod2 };

struct Prediction {
    Statistic stat;
    int value; // normalized to [0, modulus)
};

/// All applicable cases for the pair, overlaps included. Remark is always
/// applicable. Conjecture cases require a and a* both even.
std::vector<ResidueCase> classify(const Fraction& f, const InverseData& inv);

/// The residue predicted by a theorem/conjecture clause. Remark is an
/// identity, not a residue statement, and is rejected here. Halved cases
/// assert their parity precondition, which is provably satisfied.
Prediction predicted_residue(CaseId id, i64 b, i64 k);

struct CaseVerdict {
    ResidueCase rc;
    Prediction predicted;
    int actual;
    bool holds;
};

enum class ConjecturesStatus { NotApplicable, Holds, Fails };

/// Everything the sweep records about one pair. `inversions` and the
/// optional verdicts are only present when the corresponding checks ran.
struct CheckRecord {
    Fraction pair;
    InverseData inv;
    CFExpansion cf_canonical;
    CFExpansion cf_odd;
    CFStats stats;
    Rational s; // fast path
    std::optional<i64> inversions;

    std::vector<CaseVerdict> verdicts; // residue cases only
    bool remark_ok;
    bool bhk_ok;
    std::optional<bool> naive_fast_ok;
    std::optional<bool> meyer_ok;
    std::optional<bool> salie_ok;
    std::optional<bool> inverse_sym_ok; // s(a,b)=s(a*,b) and T(a,b)=T(a*,b)
    std::optional<bool> proof_chain_ok;

    bool theorem_ok() const;      // all Thm1_*/Cor2 verdicts plus Remark
    bool identities_ok() const;   // BHK plus every optional identity that ran
    ConjecturesStatus conjectures_status() const;
    std::vector<CaseId> failed_conjectures() const;
};

struct CheckOptions {
    bool naive_compare = false; // dedekind_naive vs dedekind_fast
    bool inversions = false;    // direct count, Meyer, Salie
    bool inverse_symmetry = false;
    bool proof_chain = false;

    static CheckOptions all() { return {true, true, true, true}; }
};

/// Full verdict bundle for one pair. The default options run every check.
CheckRecord check_pair(const Fraction& f, const CheckOptions& opts = CheckOptions::all());

/// White-box regression on the proof chain:
/// a*b*T = -a^2*b + 3ab - 2b + b^2 - kb (mod 4b) and
/// a*T = -a^2 + 3a - 2 + b - k (mod 4).
bool proof_chain_check(const Fraction& f);

} // namespace cfcong
