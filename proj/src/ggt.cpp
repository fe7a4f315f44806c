#include "opuc/ggt.hpp"

#include <algorithm>
#include <cmath>

#include "opuc/errors.hpp"

namespace opuc {

namespace {

// Full coefficient list (interior plus terminal if present) and its rhos.
struct FullWord {
  std::vector<cx> alpha;
  std::vector<double> rho;
};

FullWord flatten(const VerblunskyWord& word) {
  FullWord f;
  f.alpha = word.alphas();
  if (word.terminal()) f.alpha.push_back(*word.terminal());
  f.rho.resize(f.alpha.size());
  for (size_t j = 0; j < f.alpha.size(); ++j) f.rho[j] = std::sqrt(std::max(0.0, 1.0 - std::norm(f.alpha[j])));
  return f;
}

}  // namespace

GGTMatrix ggt_build(const VerblunskyWord& word) {
  FullWord f = flatten(word);
  int n = static_cast<int>(f.alpha.size());
  GGTMatrix g;
  g.n = n;
  g.kind = word.terminal() ? GgtKind::unitary : GgtKind::contraction;
  g.entries = CMat(n, n);
  for (int l = 0; l < n; ++l) {
    for (int k = 0; k <= l; ++k) {
      cx prev = (k == 0) ? cx(-1.0) : f.alpha[static_cast<size_t>(k - 1)];
      double rhos = 1.0;
      for (int j = k; j < l; ++j) rhos *= f.rho[static_cast<size_t>(j)];
      g.entries(k, l) = -std::conj(f.alpha[static_cast<size_t>(l)]) * prev * rhos;
    }
    if (l + 1 < n) g.entries(l + 1, l) = cx(f.rho[static_cast<size_t>(l)]);
  }
  if (g.kind == GgtKind::unitary) {
    CMat res = matsub(matmul(adjoint(g.entries), g.entries), CMat::identity(n));
    if (max_abs(res) > 1e-11) throw InternalConsistencyError("ggt_build: unitary check failed");
  }
  return g;
}

MonicPoly char_poly(const GGTMatrix& g) { return hessenberg_char_poly(g.entries); }

VerblunskyWord head_flip(const VerblunskyWord& word) {
  if (!word.terminal()) throw ValidationError("head_flip: terminal coefficient required");
  cx lam = *word.terminal();
  int m = word.interior_size();
  std::vector<cx> beta(static_cast<size_t>(m));
  for (int j = 0; j < m; ++j) beta[static_cast<size_t>(j)] = -lam * std::conj(word.alphas()[static_cast<size_t>(m - 1 - j)]);
  VerblunskyWord flipped = VerblunskyWord::with_terminal(std::move(beta), lam);

  // Matrix content of the flip: reflect about the anti-diagonal.
  CMat ga = ggt_build(word).entries;
  CMat gb = ggt_build(flipped).entries;
  int n = m + 1;
  double worst = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      worst = std::max(worst, std::abs(ga(n - 1 - j, n - 1 - i) - gb(i, j)));
  if (worst > 1e-12) throw InternalConsistencyError("head_flip: transpose-reversal identity failed");
  return flipped;
}

VerblunskyWord contraction_to_verblunsky(const CMat& a, double tol) {
  int n = a.rows;
  if (n < 1 || a.cols != n) throw ValidationError("contraction_to_verblunsky: square matrix required");

  Svd svd = jacobi_svd(a);
  if (svd.sigma[0] > 1.0 + tol) throw NotContractionError("contraction_to_verblunsky: norm above 1");
  // Defect: singular values are (1,...,1,sigma_min) exactly when 1 - A^*A has
  // rank one.
  double second_smallest = (n >= 2) ? svd.sigma[static_cast<size_t>(n - 2)] : 1.0;
  if (n >= 2 && 1.0 - second_smallest * second_smallest > tol)
    throw NotDefectOneError("contraction_to_verblunsky: defect rank is not one");
  double sigma = std::min(1.0, svd.sigma[static_cast<size_t>(n - 1)]);
  if (1.0 - sigma * sigma <= tol)
    throw NotDefectOneError("contraction_to_verblunsky: defect rank is zero (unitary input)");

  for (cx ev : roots(dense_char_poly(a).coeffs())) {
    if (std::abs(std::abs(ev) - 1.0) < tol)
      throw NotCompletelyNonUnitaryError("contraction_to_verblunsky: eigenvalue on the circle");
  }

  // Polar unitary V = U W^* and defect direction x = last right singular
  // vector; A = V |A| with |A| acting as sigma on x and as identity on its
  // complement.
  CMat v = matmul(svd.u, adjoint(svd.v));
  std::vector<cx> x(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) x[static_cast<size_t>(i)] = svd.v(i, n - 1);

  // Spectral moments of (V, x); c_k = conj(<x, V^k x>) in the module moment
  // convention.
  std::vector<cx> c(static_cast<size_t>(n) + 1);
  std::vector<cx> cur = x;
  for (int k = 0; k <= n; ++k) {
    cx dot(0.0);
    for (int i = 0; i < n; ++i) dot += std::conj(x[static_cast<size_t>(i)]) * cur[static_cast<size_t>(i)];
    c[static_cast<size_t>(k)] = std::conj(dot);
    if (k < n) cur = matvec(v, cur);
  }

  VerblunskyWord head = VerblunskyWord::interior(std::vector<cx>{});
  try {
    head = verblunsky_word_from_moments(c, n);
  } catch (const DegenerateMeasureError&) {
    throw NotCompletelyNonUnitaryError("contraction_to_verblunsky: defect vector not cyclic");
  }

  // Flip so x sits at the last basis slot, then absorb |A| into the last
  // coefficient.
  VerblunskyWord flipped = head_flip(head);
  std::vector<cx> gamma = flipped.alphas();
  gamma.push_back(sigma * *flipped.terminal());
  VerblunskyWord result = VerblunskyWord::interior(std::move(gamma));

  // Same characteristic polynomial == unitarily equivalent; sample both dets.
  MonicPoly cp = char_poly(ggt_build(result));
  for (int i = 0; i < 2 * n + 4; ++i) {
    cx z = 2.0 * unit(kTwoPi * i / (2 * n + 4) + 0.37);
    CMat zma = CMat::identity(n);
    for (auto& e : zma.a) e *= z;
    zma = matsub(zma, a);
    cx lhs = cp(z);
    cx rhs = lu_det(zma);
    if (std::abs(lhs - rhs) > 1e-8 * std::max(1.0, std::abs(rhs)))
      throw InternalConsistencyError("contraction_to_verblunsky: characteristic polynomial mismatch");
  }
  return result;
}

}  // namespace opuc
