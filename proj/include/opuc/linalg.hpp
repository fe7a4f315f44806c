#pragma once

// Small dense complex linear algebra used across the library: LU solves and
// determinants, a cyclic Jacobi Hermitian eigensolver, a one-sided Jacobi SVD
// and Householder Hessenberg reduction.  Workloads are n <= ~32, so
// everything favors determinism over speed.

#include <vector>

#include "opuc/common.hpp"
#include "opuc/poly.hpp"

namespace opuc {

struct CMat {
  int rows = 0;
  int cols = 0;
  std::vector<cx> a;

  CMat() = default;
  CMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, cx(0.0)) {}

  cx& operator()(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  cx operator()(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

  static CMat identity(int n);
};

CMat matmul(const CMat& x, const CMat& y);
CMat adjoint(const CMat& x);
CMat transpose(const CMat& x);
CMat matsub(const CMat& x, const CMat& y);
std::vector<cx> matvec(const CMat& x, const std::vector<cx>& v);
double fro_norm(const CMat& x);
double max_abs(const CMat& x);

struct LuFactors {
  CMat lu;
  std::vector<int> perm;
  int sign = 1;
  bool singular = false;
};

LuFactors lu_factor(CMat m);
std::vector<cx> lu_solve(const LuFactors& f, std::vector<cx> b);
cx lu_det(const CMat& m);

// Eigenvalues ascending; eigenvectors are the matching columns of `vectors`.
struct HermEig {
  std::vector<double> values;
  CMat vectors;
};

// Cyclic Jacobi sweeps; stops when the off-diagonal Frobenius norm drops
// below off_tol * max(1, fro(H)).  Throws ConvergenceError past max_sweeps.
HermEig jacobi_hermitian(CMat h, int max_sweeps = 40, double off_tol = 1e-13);

// A = U diag(sigma) V^*, sigma descending.  One-sided Jacobi on columns.
struct Svd {
  CMat u;
  std::vector<double> sigma;
  CMat v;
};

Svd jacobi_svd(CMat m, int max_sweeps = 60);

// Unitary similarity to upper Hessenberg form (Householder reflectors).
CMat hessenberg_form(CMat m);

// Monic char poly det(z - H) of an upper Hessenberg matrix via the leading
// principal minor recurrence, O(n^2) polynomial updates.
MonicPoly hessenberg_char_poly(const CMat& h);

// det(z - A) for dense A, evaluated through Hessenberg reduction.
MonicPoly dense_char_poly(const CMat& m);

// Eigenvector for a known eigenvalue via inverse iteration on the shifted LU.
std::vector<cx> eigenvector_for(const CMat& m, cx eigenvalue);

}  // namespace opuc
