#include <doctest.h>

#include "opuc/errors.hpp"
#include "opuc/ggt.hpp"
#include "opuc/szego.hpp"
#include "test_util.hpp"

using namespace opuc;
using testutil::coeff_distance;
using testutil::Rng;

namespace {

CMat random_unitary(Rng& rng, int n) {
  CMat m(n, n);
  for (cx& c : m.a) c = rng.disk(1.0);
  return jacobi_svd(m).u;
}

cx det_at(const CMat& a, cx z) {
  CMat zm = CMat::identity(a.rows);
  for (cx& c : zm.a) c *= z;
  return lu_det(matsub(zm, a));
}

}  // namespace

TEST_CASE("ggt_build small cases") {
  GGTMatrix g1 = ggt_build(VerblunskyWord::interior({cx(0.5)}));
  CHECK(g1.n == 1);
  CHECK(g1.kind == GgtKind::contraction);
  CHECK(std::abs(g1.entries(0, 0) - cx(0.5)) == 0.0);

  GGTMatrix g2 = ggt_build(VerblunskyWord::interior({cx(0.0), cx(0.0)}));
  CHECK(std::abs(g2.entries(0, 0)) == 0.0);
  CHECK(std::abs(g2.entries(0, 1)) == 0.0);
  CHECK(std::abs(g2.entries(1, 0) - cx(1.0)) == 0.0);
  CHECK(std::abs(g2.entries(1, 1)) == 0.0);

  // 2x2 unitary dilation of a single coefficient
  cx a0(0.3, -0.2), lam = unit(0.77);
  double rho0 = std::sqrt(1.0 - std::norm(a0));
  GGTMatrix gu = ggt_build(VerblunskyWord::with_terminal({a0}, lam));
  CHECK(gu.kind == GgtKind::unitary);
  CHECK(std::abs(gu.entries(0, 0) - std::conj(a0)) < 1e-15);
  CHECK(std::abs(gu.entries(0, 1) - std::conj(lam) * rho0) < 1e-15);
  CHECK(std::abs(gu.entries(1, 0) - rho0) < 1e-15);
  CHECK(std::abs(gu.entries(1, 1) + std::conj(lam) * a0) < 1e-15);
  cx det = gu.entries(0, 0) * gu.entries(1, 1) - gu.entries(0, 1) * gu.entries(1, 0);
  CHECK(std::abs(det + std::conj(lam)) < 1e-14);  // (-1)^1 conj(lambda)
}

TEST_CASE("char_poly equals the Szego polynomials") {
  CHECK(coeff_distance(char_poly(ggt_build(VerblunskyWord::interior({cx(0.0), cx(0.0)}))).coeffs(),
                       Poly{cx(0.0), cx(0.0), cx(1.0)}) == 0.0);
  CHECK(coeff_distance(char_poly(ggt_build(VerblunskyWord::with_terminal({cx(0.0), cx(0.0)}, cx(1.0)))).coeffs(),
                       Poly{cx(-1.0), cx(0.0), cx(0.0), cx(1.0)}) < 1e-15);

  Rng rng(301);
  for (int trial = 0; trial < 10; ++trial) {
    VerblunskyWord w = rng.word(5);
    GGTMatrix g = ggt_build(w);
    MonicPoly cp = char_poly(g);
    MonicPoly phi = szego_forward(w).top();
    CHECK(coeff_distance(cp.coeffs(), phi.coeffs()) < 1e-10);
    // dense determinant oracle at sample points
    for (int k = 0; k < 8; ++k) {
      cx z = 2.0 * unit(kTwoPi * k / 8 + 0.13);
      cx expect = det_at(g.entries, z);
      CHECK(std::abs(cp(z) - expect) < 1e-9 * std::max(1.0, std::abs(expect)));
    }
  }
}

TEST_CASE("determinant identities") {
  Rng rng(311);
  for (int trial = 0; trial < 8; ++trial) {
    int m = 1 + rng.index(6);
    VerblunskyWord w = rng.word(m);
    cx detc = lu_det(ggt_build(w).entries);
    cx expect = ((m + 1) % 2 == 0 ? 1.0 : -1.0) * std::conj(w.alphas().back());
    CHECK(std::abs(detc - expect) < 1e-12);

    cx lam = rng.circle();
    cx detu = lu_det(ggt_build(VerblunskyWord::with_terminal(w.alphas(), lam)).entries);
    cx expectu = (m % 2 == 0 ? 1.0 : -1.0) * std::conj(lam);
    CHECK(std::abs(detu - expectu) < 1e-12);
  }
}

TEST_CASE("dropping the dilation row and column recovers the contraction") {
  Rng rng(321);
  for (int trial = 0; trial < 6; ++trial) {
    int m = 1 + rng.index(6);
    VerblunskyWord w = rng.word(m);
    GGTMatrix big = ggt_build(VerblunskyWord::with_terminal(w.alphas(), rng.circle()));
    GGTMatrix small = ggt_build(w);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) CHECK(big.entries(i, j) == small.entries(i, j));
  }
}

TEST_CASE("spectra: contraction inside the disk, unitary on the circle") {
  Rng rng(331);
  VerblunskyWord w = rng.word(6);
  for (cx r : roots(char_poly(ggt_build(w)).coeffs())) CHECK(std::abs(r) < 1.0);
  GGTMatrix gu = ggt_build(VerblunskyWord::with_terminal(w.alphas(), rng.circle()));
  for (cx r : roots(char_poly(gu).coeffs())) CHECK(std::abs(std::abs(r) - 1.0) < 1e-10);
}

TEST_CASE("head_flip: fixed points and conjugation") {
  VerblunskyWord real_word = VerblunskyWord::with_terminal({cx(0.5)}, cx(-1.0));
  VerblunskyWord f1 = head_flip(real_word);
  CHECK(std::abs(f1.alphas()[0] - cx(0.5)) < 1e-15);
  CHECK(std::abs(*f1.terminal() + cx(1.0)) < 1e-15);

  VerblunskyWord imag_word = VerblunskyWord::with_terminal({cx(0.0, 1.0 / 3.0)}, cx(-1.0));
  VerblunskyWord f2 = head_flip(imag_word);
  CHECK(std::abs(f2.alphas()[0] - cx(0.0, -1.0 / 3.0)) < 1e-15);
}

TEST_CASE("head_flip preserves the characteristic polynomial") {
  Rng rng(341);
  for (int trial = 0; trial < 10; ++trial) {
    int m = 1 + rng.index(6);
    VerblunskyWord w = VerblunskyWord::with_terminal(rng.disk_points(m), rng.circle());
    VerblunskyWord flipped = head_flip(w);
    CHECK(coeff_distance(char_poly(ggt_build(w)).coeffs(),
                         char_poly(ggt_build(flipped)).coeffs()) < 1e-10);
  }
}

TEST_CASE("contraction_to_verblunsky: canonical cases") {
  CMat shift(2, 2);
  shift(1, 0) = cx(1.0);
  VerblunskyWord w = contraction_to_verblunsky(shift);
  REQUIRE(w.interior_size() == 2);
  CHECK(std::abs(w.alphas()[0]) < 1e-9);
  CHECK(std::abs(w.alphas()[1]) < 1e-9);

  CMat diag10(2, 2);
  diag10(0, 0) = cx(1.0);
  CHECK_THROWS_AS(contraction_to_verblunsky(diag10), NotCompletelyNonUnitaryError);

  CMat big(2, 2);
  big(0, 0) = cx(2.0);
  CHECK_THROWS_AS(contraction_to_verblunsky(big), NotContractionError);

  CMat defect2(2, 2);
  defect2(0, 0) = cx(0.5);
  defect2(1, 1) = cx(0.3);
  CHECK_THROWS_AS(contraction_to_verblunsky(defect2), NotDefectOneError);
}

TEST_CASE("contraction_to_verblunsky round-trips conjugated GGT matrices") {
  Rng rng(351);
  for (int trial = 0; trial < 8; ++trial) {
    int m = 1 + rng.index(6);
    VerblunskyWord w = rng.word(m);
    CMat g = ggt_build(w).entries;
    CMat u = random_unitary(rng, m);
    CMat a = matmul(matmul(u, g), adjoint(u));
    VerblunskyWord back = contraction_to_verblunsky(a);
    REQUIRE(back.interior_size() == m);
    for (int j = 0; j < m; ++j)
      CHECK(std::abs(back.alphas()[static_cast<size_t>(j)] - w.alphas()[static_cast<size_t>(j)]) < 1e-7);
  }
}
