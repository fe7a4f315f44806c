#pragma once

// Complex polynomial arithmetic, the coefficient-reversal map tau_n and a
// deterministic simultaneous-iteration root finder.  Coefficients are stored
// ascending: c[k] multiplies z^k.

#include <vector>

#include "opuc/common.hpp"

namespace opuc {

using Poly = std::vector<cx>;

// Degree = largest index with a coefficient that is not exactly zero.
// Returns -1 for the zero polynomial.
int pdegree(const Poly& p);

cx peval(const Poly& p, cx z);
Poly pderiv(const Poly& p);
Poly padd(const Poly& a, const Poly& b);
Poly psub(const Poly& a, const Poly& b);
Poly pscale(const Poly& a, cx s);
Poly pmul(const Poly& a, const Poly& b);
Poly pshift_up(const Poly& a);  // multiply by z

// Drop leading coefficients whose magnitude is below rel_tol * max |c_k|.
Poly ptrim(const Poly& a, double rel_tol = 0.0);

// Monic product of (z - r) over the given roots.
Poly from_roots(const std::vector<cx>& roots);

// Divide by (z - r), discarding the remainder (synthetic division).
Poly deflate(const Poly& p, cx r);

// tau_n: coefficient k of the result is conj(coefficient n-k of p).
// Throws DegreeError if pdegree(p) > n.
Poly pstar(const Poly& p, int n);

class MonicPoly {
 public:
  // Normalizes by the leading coefficient and pins it to exactly 1.0.
  // Throws ValidationError for the zero polynomial or non-finite input.
  explicit MonicPoly(Poly coeffs);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const Poly& coeffs() const { return c_; }
  cx at(int k) const { return c_[static_cast<size_t>(k)]; }
  cx operator()(cx z) const { return peval(c_, z); }
  Poly star() const { return pstar(c_, degree()); }

  friend bool operator==(const MonicPoly&, const MonicPoly&) = default;

 private:
  Poly c_;
};

// All roots with multiplicity, via Aberth's simultaneous iteration from a
// deterministic start (scaled roots of unity rotated by a fixed irrational
// angle) followed by a Newton polish.  Each returned root r satisfies
// |p(r)| <= tol * max|c_k| * max(1,|r|)^deg.  tol < 0 selects the default
// 1e-12.  Throws ConvergenceError (carrying residuals) past the iteration cap.
std::vector<cx> roots(const Poly& p, double tol = -1.0);

// Multiplicity hints: roots closer than `radius` are reported as one cluster.
// Result[i] = size of the cluster containing roots[i].
std::vector<int> cluster_multiplicity(const std::vector<cx>& roots,
                                      double radius = 1e-6);

}  // namespace opuc
