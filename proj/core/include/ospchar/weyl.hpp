#pragma once

#include <vector>

#include "ospchar/monomial.hpp"

namespace ospchar {

// B = so(2k+1), D = so(2k).
enum class WeylKind { B, D };

// Weight in the orthogonal epsilon-basis, stored with doubled coordinates so
// that spinor weights (all coordinates half-odd) remain integral.  All
// coordinates must share one parity.
struct HalfWeight {
    std::vector<int> doubled;
    explicit HalfWeight(std::vector<int> doubled_);
    int rank() const { return static_cast<int>(doubled.size()); }
};

// Signed permutation e_i -> signs[i] * e_{perm[i]}.
struct SignedPermutation {
    std::vector<int> perm;
    std::vector<int> signs;
    int det = 1;
};

// Full hyperoctahedral group for B, the even-sign-change subgroup for D.
// Cached per (kind, rank); the reference stays valid for the process.
const std::vector<SignedPermutation>& weyl_group(WeylKind kind, int k);

std::vector<int> rho_doubled(WeylKind kind, int k);
bool is_dominant(WeylKind kind, const HalfWeight& hw);

// Alternating orbit sums of x^(hw + rho) and x^rho, as Laurent expansions in
// k variables with doubled exponents.
MonomialExpansion weyl_numerator(WeylKind kind, int k, const HalfWeight& hw);
MonomialExpansion weyl_denominator(WeylKind kind, int k);

// Exact division of Laurent expansions by leading-term elimination.  Throws
// DivisionError when the division does not terminate or does not come out
// exact.
MonomialExpansion laurent_quotient(const MonomialExpansion& numerator,
                                   const MonomialExpansion& denominator);

// A character whose true (possibly half-integral) exponents have been shifted
// up uniformly: character = expansion * (x_1...x_k)^(-shift2/2).  Stored
// exponents are non-negative integers and shift2 is minimal for that.
struct ShiftedCharacter {
    MonomialExpansion expansion;
    int shift2 = 0;
    // Re-expresses the character with a larger uniform shift; the increment
    // must be non-negative and even so exponents stay integral.
    ShiftedCharacter rebased(int new_shift2) const;
};

// Irreducible character by the Weyl character formula, for dominant hw.  The
// quotient is re-verified by multiplication before returning.
ShiftedCharacter weyl_character(WeylKind kind, int k, const HalfWeight& hw);

// Product over positive roots of <hw + rho, alpha> / <rho, alpha>.
Integer weyl_dimension(WeylKind kind, int k, const HalfWeight& hw);

} // namespace ospchar
