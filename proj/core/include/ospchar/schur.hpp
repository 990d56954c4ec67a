#pragma once

#include "ospchar/monomial.hpp"
#include "ospchar/partition.hpp"

namespace ospchar {

// Schur polynomial s_lambda(x_1..x_n) as a monomial expansion with n
// x-variables.  Zero when lambda has more than n rows.
MonomialExpansion schur_expansion(const Partition& lambda, int n);

// Skew Schur polynomial s_{outer/inner}(x_1..x_n).
MonomialExpansion skew_schur_expansion(const SkewShape& shape, int n);

// Supersymmetric Schur polynomial s_lambda(x_1..x_m | y_1..y_n).  Zero
// exactly when lambda leaves the (m,n)-hook.
MonomialExpansion super_schur_expansion(const Partition& lambda, int m, int n);

// Dimension of the irreducible gl(n) module with highest weight lambda;
// zero when lambda has more than n rows.
Integer gl_dimension(const Partition& lambda, int n);

// Superdimension of the covariant gl(m|n) module with highest weight lambda:
// the value of super_schur_expansion at x_i = 1, y_j = -1, in closed form.
Integer gl_superdimension(const Partition& lambda, int m, int n);

} // namespace ospchar
