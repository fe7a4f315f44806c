#include <doctest.h>

#include "opuc/errors.hpp"
#include "opuc/linalg.hpp"
#include "test_util.hpp"

using namespace opuc;
using testutil::Rng;

namespace {

CMat random_matrix(Rng& rng, int n, double scale = 1.0) {
  CMat m(n, n);
  for (cx& c : m.a) c = scale * rng.disk(1.0);
  return m;
}

CMat random_unitary(Rng& rng, int n) {
  Svd svd = jacobi_svd(random_matrix(rng, n));
  return svd.u;
}

}  // namespace

TEST_CASE("lu solve and determinant") {
  Rng rng(7);
  for (int n : {1, 2, 5, 9}) {
    CMat m = random_matrix(rng, n);
    for (int i = 0; i < n; ++i) m(i, i) += cx(2.0);  // keep it well conditioned
    std::vector<cx> x_true(static_cast<size_t>(n));
    for (cx& c : x_true) c = rng.disk(1.0);
    std::vector<cx> b = matvec(m, x_true);
    std::vector<cx> x = lu_solve(lu_factor(m), b);
    for (int i = 0; i < n; ++i) CHECK(std::abs(x[static_cast<size_t>(i)] - x_true[static_cast<size_t>(i)]) < 1e-11);
  }

  CMat d(2, 2);
  d(0, 0) = cx(3.0);
  d(1, 1) = cx(0.5, 0.5);
  CHECK(std::abs(lu_det(d) - cx(1.5, 1.5)) < 1e-14);
}

TEST_CASE("jacobi_hermitian diagonalizes") {
  Rng rng(17);
  for (int n : {2, 4, 7}) {
    CMat g = random_matrix(rng, n);
    CMat h(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) h(i, j) = 0.5 * (g(i, j) + std::conj(g(j, i)));
    HermEig eig = jacobi_hermitian(h);
    // residual H v = lambda v per column
    for (int k = 0; k < n; ++k) {
      std::vector<cx> v(static_cast<size_t>(n));
      for (int i = 0; i < n; ++i) v[static_cast<size_t>(i)] = eig.vectors(i, k);
      std::vector<cx> hv = matvec(h, v);
      for (int i = 0; i < n; ++i)
        CHECK(std::abs(hv[static_cast<size_t>(i)] - eig.values[static_cast<size_t>(k)] * v[static_cast<size_t>(i)]) < 1e-11);
    }
    for (int k = 1; k < n; ++k) CHECK(eig.values[static_cast<size_t>(k)] >= eig.values[static_cast<size_t>(k - 1)]);
  }

  // known 2x2: [[3, 1+i], [1-i, 2]] has eigenvalues (5 +/- sqrt(9))/2 = {1, 4}
  CMat h(2, 2);
  h(0, 0) = cx(3.0);
  h(0, 1) = cx(1.0, 1.0);
  h(1, 0) = cx(1.0, -1.0);
  h(1, 1) = cx(2.0);
  HermEig eig = jacobi_hermitian(h);
  CHECK(std::abs(eig.values[0] - 1.0) < 1e-13);
  CHECK(std::abs(eig.values[1] - 4.0) < 1e-13);
}

TEST_CASE("jacobi_svd reconstructs and is unitary") {
  Rng rng(27);
  for (int n : {1, 3, 6}) {
    CMat m = random_matrix(rng, n);
    Svd svd = jacobi_svd(m);
    CHECK(max_abs(matsub(matmul(adjoint(svd.u), svd.u), CMat::identity(n))) < 1e-12);
    CHECK(max_abs(matsub(matmul(adjoint(svd.v), svd.v), CMat::identity(n))) < 1e-12);
    CMat s(n, n);
    for (int i = 0; i < n; ++i) s(i, i) = cx(svd.sigma[static_cast<size_t>(i)]);
    CHECK(max_abs(matsub(matmul(matmul(svd.u, s), adjoint(svd.v)), m)) < 1e-12);
    for (int i = 1; i < n; ++i) CHECK(svd.sigma[static_cast<size_t>(i)] <= svd.sigma[static_cast<size_t>(i - 1)]);
  }

  // rank-deficient input exercises the U completion
  CMat m(2, 2);
  m(0, 0) = cx(1.0);
  Svd svd = jacobi_svd(m);
  CHECK(std::abs(svd.sigma[0] - 1.0) < 1e-14);
  CHECK(std::abs(svd.sigma[1]) < 1e-14);
  CHECK(max_abs(matsub(matmul(adjoint(svd.u), svd.u), CMat::identity(2))) < 1e-12);
}

TEST_CASE("dense char poly via hessenberg reduction") {
  Rng rng(37);
  for (int n : {2, 4, 6}) {
    CMat m = random_matrix(rng, n);
    MonicPoly cp = dense_char_poly(m);
    // det(z - M) at sample points against LU
    for (int k = 0; k < 6; ++k) {
      cx z = 2.0 * unit(kTwoPi * k / 6 + 0.1);
      CMat zm = CMat::identity(n);
      for (cx& c : zm.a) c *= z;
      zm = matsub(zm, m);
      cx expect = lu_det(zm);
      CHECK(std::abs(cp(z) - expect) < 1e-9 * std::max(1.0, std::abs(expect)));
    }
  }
}

TEST_CASE("eigenvector_for recovers eigenvectors of a unitary") {
  Rng rng(47);
  CMat u = random_unitary(rng, 5);
  std::vector<cx> evs = roots(dense_char_poly(u).coeffs());
  for (cx ev : evs) {
    std::vector<cx> v = eigenvector_for(u, ev);
    std::vector<cx> uv = matvec(u, v);
    for (int i = 0; i < 5; ++i)
      CHECK(std::abs(uv[static_cast<size_t>(i)] - ev * v[static_cast<size_t>(i)]) < 1e-9);
  }
}
