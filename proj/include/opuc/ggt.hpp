#pragma once

// GGT matrices: Hessenberg realizations of compressed multiplication
// operators (contractions) and of their rank one unitary dilations, the
// characteristic polynomial identities, the head-flip transform and the
// inversion of an arbitrary defect-one contraction back to its word.

#include "opuc/common.hpp"
#include "opuc/linalg.hpp"
#include "opuc/poly.hpp"
#include "opuc/szego.hpp"

namespace opuc {

enum class GgtKind { contraction, unitary };

struct GGTMatrix {
  int n = 0;
  GgtKind kind = GgtKind::contraction;
  CMat entries;
};

// Entries per the explicit Hessenberg formula with alpha_{-1} = -1:
//   G_{k,l} = -conj(alpha_l) alpha_{k-1} rho_k...rho_{l-1}   (k <= l)
//   G_{l+1,l} = rho_l,  zero below the subdiagonal.
// A terminal coefficient turns the result into the (m+1)x(m+1) unitary.
GGTMatrix ggt_build(const VerblunskyWord& word);

// det(z - G) by the Hessenberg principal-minor recurrence: Phi_n for
// contractions, the paraorthogonal Phi_{n+1}(.; lambda) for unitaries.
MonicPoly char_poly(const GGTMatrix& g);

// Word of the same unitary seen from the reversed basis:
//   beta_j = -alpha_{m} conj(alpha_{m-1-j}),  terminal unchanged.
// Verifies J G(alpha)^T J == G(beta) entrywise to 1e-12.
VerblunskyWord head_flip(const VerblunskyWord& word);

// Unique interior word whose GGT contraction is unitarily equivalent to A.
// Requires ||A|| <= 1, rank(1 - A^*A) == 1 and no eigenvalue within tol of
// the unit circle.  Route: defect vector and polar unitary from the SVD,
// spectral moments, moment Gram-Schmidt, head flip, last-coefficient scaling;
// verified against det(z - A) on sample points.
VerblunskyWord contraction_to_verblunsky(const CMat& a, double tol = 1e-8);

}  // namespace opuc
