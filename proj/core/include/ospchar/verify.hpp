#pragma once

#include <map>
#include <string>

#include <nlohmann/json.hpp>

#include "ospchar/character_sum.hpp"

namespace ospchar {

enum class VerifyStatus { Pass, Fail, EvidencePass };

std::string status_name(VerifyStatus status);

struct VerificationReport {
    std::string identity;
    std::map<std::string, int> params;
    VerifyStatus status = VerifyStatus::Pass;
    nlohmann::json witness; // null unless the check failed
    double ms = 0.0;
    bool passed() const { return status != VerifyStatus::Fail; }
};

// Identity "theorem": the strip-class Schur sum for so(2k) equals the Weyl
// character of [0,...,0,r,p-r], compared term by term after aligning shifts.
VerificationReport verify_so_even_character(int k, int p, int r);

// Identity "e28": the so(2k+1) rectangle character equals the sum of the
// so(2k) characters over r = 0..p, and the rectangle labels are exactly the
// strip classes joined over r.
VerificationReport verify_so_branching(int k, int p);

// Identity "union": the strip classes for r = 0..p partition the k x p
// rectangle (disjoint and exhaustive).
VerificationReport verify_union_property(int k, int p);

// The four superdimension series reductions.  `base` is n except in BMoreY
// where it is m; k is the rank excess and is ignored for BEqual.
enum class SuperdimCase {
    BEqual, // osp(2n+1|2n): series is identically 1          (identity "case1")
    BMoreX, // osp(2(n+k)+1|2n): reduces to so(2k+1)          (identity "case2")
    BMoreY, // osp(2m+1|2(m+k)): reduces to osp(1|2k) at -t   (identity "case3")
    DCase,  // osp(2(n+k)|2n): doubled-label rectangle series (identity "caseD")
};
VerificationReport verify_superdim_case(SuperdimCase kase, int base, int k, int p, int degree);

// Identity "dimsdim": the closed-form gl(m|n) superdimension equals the
// super Schur expansion evaluated at x = 1, y = -1, for every partition of
// weight up to max_weight.
VerificationReport verify_superdimension_law(int m, int n, int max_weight);

// Identity "conjecture": structural evidence for the strip-class form of the
// osp(2m|2n) character.  Checks the n = 0 reduction, the disjoint-union
// decomposition of the hook labels, and (for m >= n) the superdimension
// series.  A clean run reports evidence-pass, never pass.
VerificationReport verify_conjecture_evidence(int m, int n, int p, int degree);

} // namespace ospchar
