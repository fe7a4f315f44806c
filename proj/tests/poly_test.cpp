#include <doctest.h>

#include <algorithm>
#include <complex>

#include "opuc/errors.hpp"
#include "opuc/poly.hpp"
#include "test_util.hpp"

using namespace opuc;
using testutil::coeff_distance;
using testutil::Rng;

namespace {

// Match two root multisets up to permutation.
double root_set_distance(std::vector<cx> a, std::vector<cx> b) {
  REQUIRE(a.size() == b.size());
  double worst = 0.0;
  for (cx r : a) {
    auto it = std::min_element(b.begin(), b.end(),
                               [&](cx x, cx y) { return std::abs(x - r) < std::abs(y - r); });
    worst = std::max(worst, std::abs(*it - r));
    b.erase(it);
  }
  return worst;
}

}  // namespace

TEST_CASE("star reverses and conjugates coefficients") {
  // z - 1/2 -> 1 - z/2
  Poly p{cx(-0.5), cx(1.0)};
  Poly s = pstar(p, 1);
  CHECK(coeff_distance(s, Poly{cx(1.0), cx(-0.5)}) == 0.0);

  // z^2 -> 1
  CHECK(coeff_distance(pstar(Poly{cx(0.0), cx(0.0), cx(1.0)}, 2), Poly{cx(1.0), cx(0.0), cx(0.0)}) == 0.0);

  // z^3 - 1 is a lambda = 1 paraorthogonal polynomial: tau_3 negates it.
  Poly popuc{cx(-1.0), cx(0.0), cx(0.0), cx(1.0)};
  CHECK(coeff_distance(pstar(popuc, 3), pscale(popuc, cx(-1.0))) == 0.0);

  CHECK_THROWS_AS(pstar(popuc, 2), DegreeError);
}

TEST_CASE("star handles padding and complex conjugation") {
  Poly p{cx(1.0, 2.0), cx(0.0, -1.0)};
  Poly s = pstar(p, 3);  // degree 1 into order 3
  CHECK(s.size() == 4);
  CHECK(s[2] == std::conj(p[1]));
  CHECK(s[3] == std::conj(p[0]));
  CHECK(s[0] == cx(0.0));
}

TEST_CASE("eval and deriv basics") {
  Poly p{cx(-1.0), cx(0.0), cx(1.0)};  // z^2 - 1
  CHECK(std::abs(peval(p, cx(2.0)) - cx(3.0)) == 0.0);
  Poly d = pderiv(Poly{cx(-1.0), cx(0.0), cx(0.0), cx(1.0)});
  CHECK(coeff_distance(d, Poly{cx(0.0), cx(0.0), cx(3.0)}) == 0.0);
}

TEST_CASE("derivative roots match the equal-mass M-function numerator") {
  Rng rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<cx> zs = rng.disk_points(3, 1.5);
    Poly p = from_roots(zs);
    // Clearing denominators in (1/3) sum 1/(z - z_j) gives
    // (1/3) sum_j prod_{k != j} (z - z_k), which is P'/3.
    Poly m{cx(0.0)};
    for (int j = 0; j < 3; ++j) {
      Poly term{cx(1.0)};
      for (int k = 0; k < 3; ++k)
        if (k != j) term = pmul(term, Poly{-zs[static_cast<size_t>(k)], cx(1.0)});
      m = padd(m, term);
    }
    m = pscale(m, cx(1.0 / 3.0));
    CHECK(coeff_distance(m, pscale(pderiv(p), cx(1.0 / 3.0))) < 1e-14);
  }
}

TEST_CASE("roots: simple cases") {
  std::vector<cx> r = roots(Poly{cx(-1.0), cx(0.0), cx(1.0)});
  CHECK(root_set_distance(r, {cx(1.0), cx(-1.0)}) < 1e-12);

  // z^3: triple root at 0, bit-exact via deflation, multiplicity hint 3
  std::vector<cx> r0 = roots(Poly{cx(0.0), cx(0.0), cx(0.0), cx(1.0)});
  CHECK(root_set_distance(r0, {cx(0.0), cx(0.0), cx(0.0)}) == 0.0);
  std::vector<int> mult = cluster_multiplicity(r0);
  CHECK(mult == std::vector<int>{3, 3, 3});
}

TEST_CASE("roots of Phi_2 against the quadratic formula") {
  // Phi_2 for alphas (1/2, i/3)
  Poly p{cx(0.0, 1.0 / 3.0), -cx(0.5, 1.0 / 6.0), cx(1.0)};
  std::vector<cx> r = roots(p);
  cx b = p[1], c = p[0];
  cx disc = std::sqrt(b * b - 4.0 * c);
  std::vector<cx> expect{(-b + disc) / 2.0, (-b - disc) / 2.0};
  CHECK(root_set_distance(r, expect) < 1e-12);
  for (cx z : r) CHECK(std::abs(z) < 1.0);
}

TEST_CASE("tau_n is an involution") {
  Rng rng(21);
  for (int trial = 0; trial < 20; ++trial) {
    int n = 1 + rng.index(9);
    Poly p(static_cast<size_t>(rng.index(n + 1)) + 1);
    for (cx& cc : p) cc = rng.disk(2.0);
    CHECK(coeff_distance(pstar(pstar(p, n), n), p) == 0.0);
  }
}

TEST_CASE("star of a disk-rooted monic has no roots in the closed disk") {
  Rng rng(31);
  for (int trial = 0; trial < 10; ++trial) {
    int n = 1 + rng.index(6);
    Poly p = from_roots(rng.disk_points(n, 0.9));
    std::vector<cx> rs = roots(pstar(p, n));
    for (cx r : rs) CHECK(std::abs(r) > 1.0);
  }
}

TEST_CASE("roots then re-expansion reproduces coefficients") {
  Rng rng(41);
  for (int trial = 0; trial < 25; ++trial) {
    int n = 1 + rng.index(12);
    std::vector<cx> zs = rng.disk_points(n, 2.0);
    Poly p = from_roots(zs);
    Poly back = from_roots(roots(p));
    double scale = 0.0;
    for (cx c : p) scale = std::max(scale, std::abs(c));
    CHECK(coeff_distance(back, p) < 1e-9 * scale);
  }
}

TEST_CASE("roots input validation") {
  CHECK_THROWS_AS(roots(Poly{cx(1.0)}), ValidationError);
  CHECK_THROWS_AS(roots(Poly{cx(0.0), cx(std::nan(""), 0.0)}), ValidationError);
}

TEST_CASE("unreachable tolerance reports residuals") {
  Poly p = from_roots({cx(0.3, 0.4), cx(-0.7), cx(0.1, -0.9)});
  try {
    roots(p, 1e-40);
    FAIL("expected ConvergenceError");
  } catch (const ConvergenceError& e) {
    CHECK(e.residuals().size() == 3);
    for (double r : e.residuals()) CHECK(r < 1e-12);
  }
}

TEST_CASE("MonicPoly normalizes and pins the leading coefficient") {
  MonicPoly m(Poly{cx(2.0), cx(4.0)});
  CHECK(m.degree() == 1);
  CHECK(m.at(1) == cx(1.0));
  CHECK(m.at(0) == cx(0.5));
  CHECK_THROWS_AS(MonicPoly(Poly{cx(0.0)}), ValidationError);
}

TEST_CASE("deflate removes a linear factor") {
  std::vector<cx> zs{cx(0.3, 0.1), cx(-0.2, 0.5), cx(0.7)};
  Poly p = from_roots(zs);
  Poly q = deflate(p, zs[1]);
  CHECK(coeff_distance(q, from_roots({zs[0], zs[2]})) < 1e-14);
}
