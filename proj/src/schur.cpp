#include "opuc/schur.hpp"

#include <algorithm>
#include <cmath>

#include "opuc/errors.hpp"

namespace opuc {

namespace {

constexpr int kDegreeCap = 64;
constexpr double kUnimodularStop = 1e-10;

double poly_scale(const Poly& p) {
  double m = 0.0;
  for (cx c : p) m = std::max(m, std::abs(c));
  return m;
}

// Strip common roots of num and den at tolerance 1e-10.  Degrees telescope
// down for Blaschke inputs on their own; this only fires when rounding noise
// has inflated them.
void strip_common_roots(Poly& num, Poly& den) {
  int dn = pdegree(num), dd = pdegree(den);
  if (dn < 1 || dd < 1) return;
  std::vector<cx> nroots;
  try {
    nroots = roots(num);
  } catch (const ConvergenceError&) {
    return;
  }
  double dscale = poly_scale(den);
  for (cx r : nroots) {
    if (pdegree(den) < 1) break;
    if (std::abs(peval(den, r)) <= 1e-10 * dscale * std::pow(std::max(1.0, std::abs(r)), pdegree(den))) {
      den = deflate(den, r);
      num = deflate(num, r);
    }
  }
}

}  // namespace

RationalSchurFn::RationalSchurFn(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (pdegree(den_) < 0) throw ValidationError("RationalSchurFn: zero denominator");
  if (pdegree(den_) >= 1) {
    for (cx r : roots(den_)) {
      if (std::abs(r) <= 1.0 + 1e-12)
        throw NotSchurError("RationalSchurFn: denominator root inside the closed disk");
    }
  }
  for (int i = 0; i < 512; ++i) {
    cx z = unit(kTwoPi * i / 512);
    if (std::abs((*this)(z)) > 1.0 + 1e-10)
      throw NotSchurError("RationalSchurFn: modulus above 1 on the circle");
  }
}

RationalSchurFn RationalSchurFn::blaschke(const VerblunskyWord& word, cx scale) {
  OpucSequence seq = szego_forward(VerblunskyWord::interior(word.alphas()));
  return RationalSchurFn(pscale(seq.top().coeffs(), scale), seq.stars.back());
}

std::vector<cx> schur_algorithm(const RationalSchurFn& f, int steps) {
  Poly num = f.num();
  Poly den = f.den();
  std::vector<cx> gammas;
  for (int k = 0; k < steps; ++k) {
    double nscale = poly_scale(num);
    double dscale = poly_scale(den);
    if (nscale <= 1e-280) {  // identically zero iterate
      gammas.push_back(cx(0.0));
      num = Poly{cx(0.0)};
      den = Poly{cx(1.0)};
      continue;
    }
    cx gamma = peval(num, cx(0.0)) / peval(den, cx(0.0));
    if (std::abs(gamma) > 1.0 + 1e-8) throw NotSchurError("schur_algorithm: parameter outside the closed disk");
    gammas.push_back(gamma);
    if (std::abs(std::abs(gamma) - 1.0) <= kUnimodularStop) break;  // process terminates

    Poly top = psub(num, pscale(den, gamma));
    // top(0) = 0 by construction of gamma; cancel the factor z exactly.
    if (std::abs(top.empty() ? cx(0.0) : top[0]) > 1e-9 * std::max(nscale, dscale))
      throw SolverError("schur_algorithm: removable factor did not cancel");
    Poly shifted(top.size() > 1 ? top.size() - 1 : 0, cx(0.0));
    for (size_t j = 1; j < top.size(); ++j) shifted[j - 1] = top[j];
    Poly bottom = psub(den, pscale(num, std::conj(gamma)));

    num = ptrim(shifted, 1e-13);
    den = ptrim(bottom, 1e-13);
    if (pdegree(den) < 0) throw SolverError("schur_algorithm: denominator collapsed");
    strip_common_roots(num, den);
    if (pdegree(num) > kDegreeCap || pdegree(den) > kDegreeCap)
      throw SolverError("schur_algorithm: iterate degree above cap");
  }
  return gammas;
}

std::vector<cx> schur_params_closed_form(const VerblunskyWord& word) {
  if (!word.terminal()) throw ValidationError("schur_params_closed_form: terminal coefficient required");
  cx lam = *word.terminal();
  int m = word.interior_size();
  std::vector<cx> out;
  out.reserve(static_cast<size_t>(m) + 1);
  for (int j = 0; j < m; ++j) out.push_back(-lam * std::conj(word.alphas()[static_cast<size_t>(m - 1 - j)]));
  out.push_back(lam);
  return out;
}

cx caratheodory(const RationalSchurFn& f, cx z) {
  cx zf = z * f(z);
  cx den = cx(1.0) - zf;
  if (std::abs(den) < 1e-14) throw PoleError("caratheodory: pole");
  return (cx(1.0) + zf) / den;
}

cx caratheodory(const UnitCircleMeasure& mu, cx z) {
  cx acc(0.0);
  for (int j = 0; j < mu.size(); ++j) {
    cx nj = mu.nodes()[static_cast<size_t>(j)];
    cx den = nj - z;
    if (std::abs(den) < 1e-12) throw PoleError("caratheodory: z at a node");
    acc += mu.weights()[static_cast<size_t>(j)] * (nj + z) / den;
  }
  return acc;
}

cx caratheodory_Fn(const VerblunskyWord& word, cx z) {
  VerblunskyWord interior = VerblunskyWord::interior(word.alphas());
  OpucSequence phi = szego_forward(interior);
  OpucSequence psi = second_kind(interior);
  return peval(psi.stars.back(), z) / peval(phi.stars.back(), z);
}

}  // namespace opuc
