#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "flagdiv/flag_type.hpp"
#include "flagdiv/permutation.hpp"
#include "flagdiv/polynomial.hpp"

namespace flagdiv {

struct McConfig {
    int trials = 8;
    long long seed = 0;
    long long sample_bound = 1000000;  // coordinates drawn uniformly from [-sample_bound, sample_bound]
};

enum class Outcome { Pass, Fail, Suspect, NotApplicable };

const char* outcome_name(Outcome o);  // PASS / FAIL / SUSPECT / NA

struct VerdictInfo {
    Outcome outcome = Outcome::NotApplicable;
    int trials_run = 0;
    long long seed = 0;
    // Per-trial false-PASS probability bound (Schwartz-Zippel), as an exact
    // fraction; trials_run independent trials multiply it.
    long long bound_num = 0;
    long long bound_den = 1;
    std::string witness;  // structural evidence backing a FAIL

    std::string error_bound() const;  // "num/den", or "0" for exact verdicts
    bool passed() const { return outcome == Outcome::Pass; }
};

std::uint64_t fnv1a64(const std::string& text);

// Square-freeness of f by univariate restriction to random integer lines.
// FAIL requires a structural witness (an exact square root or a repeated
// variable factor); a non-square-free restriction without one is SUSPECT.
VerdictInfo squarefree_mc(const Polynomial& f, const McConfig& cfg,
                          const std::string& verdict_id = "squarefree");

// Coprimality of f and g by gcds of their restrictions to common random
// lines.  Deterministic short-circuits run first: degree-0 inputs and
// disjoint variable supports certify coprimality without sampling.
VerdictInfo coprime_mc(const Polynomial& f, const Polynomial& g, const McConfig& cfg,
                       const std::string& verdict_id = "coprime");

struct IrrIndexReport {
    int a = 0;
    bool homogeneous = false;
    VerdictInfo squarefree_top;
    VerdictInfo snd_nonzero;       // exact; NA when f^(a) is homogeneous
    VerdictInfo top_snd_coprime;   // NA when f^(a) is homogeneous
    bool factor_match = false;     // trimmed-submatrix block factorization agrees
};

struct IrrReport {
    FlagType flag;
    McConfig cfg;
    std::vector<IrrIndexReport> per_index;
    std::map<std::pair<int, int>, VerdictInfo> pairwise;  // (a,b), a < b -> tops coprime

    IrrReport(FlagType f, McConfig c) : flag(std::move(f)), cfg(c) {}

    bool all_pass() const;
    std::string json_str() const;
    std::string table() const;
};

// For each a in [n-1]: top(f^(a)) square-free; when f^(a) is inhomogeneous,
// snd(f^(a)) != 0 exactly and coprime to the top; tops pairwise coprime; and
// the block factorization of the trimmed leading submatrix reproduces f^(a)
// and its top.  Deterministic given (flag, cfg).
IrrReport check_components(const FlagType& flag, const McConfig& cfg);

int pi1_prediction(const FlagType& flag);

struct Pi1Row {
    Permutation v;
    std::set<int> gamma_set;
    int rank = 0;
};

// One row per v in S_n with gamma(v) and the predicted rank |gamma(v)|,
// sorted by (length, window).
std::vector<Pi1Row> pi1_table(int n);

}  // namespace flagdiv
