#include "opuc/wendroff.hpp"

#include <algorithm>
#include <cmath>

#include "opuc/errors.hpp"
#include "opuc/linalg.hpp"
#include "opuc/popuc.hpp"

namespace opuc {

namespace {

std::vector<cx> sorted_unimodular(std::vector<cx> pts, const char* what) {
  if (pts.empty()) throw ValidationError(std::string(what) + ": empty point list");
  for (cx& z : pts) {
    if (!is_finite(z)) throw ValidationError(std::string(what) + ": non-finite point");
    double mod = std::abs(z);
    if (std::abs(mod - 1.0) > 1e-11) throw ValidationError(std::string(what) + ": point off the circle");
    z /= mod;
  }
  std::sort(pts.begin(), pts.end(), [](cx a, cx b) { return arg2pi(a) < arg2pi(b); });
  for (size_t j = 0; j < pts.size(); ++j) {
    cx next = pts[(j + 1) % pts.size()];
    if (std::abs(next - pts[j]) <= 1e-10 && pts.size() > 1)
      throw ValidationError(std::string(what) + ": coincident points");
  }
  return pts;
}

cx lambda_from_zeros(const std::vector<cx>& zeros) {
  // lambda = -prod(-conj(w_j)); the paraorthogonal constant-term identity.
  cx prod(1.0);
  for (cx w : zeros) prod *= -std::conj(w);
  return -prod;
}

}  // namespace

CircularConfiguration::CircularConfiguration(std::vector<cx> first, std::vector<cx> second) {
  first_ = sorted_unimodular(std::move(first), "CircularConfiguration.first");
  second_ = sorted_unimodular(std::move(second), "CircularConfiguration.second");
  if (first_.size() != second_.size())
    throw ValidationError("CircularConfiguration: lists must have equal length");
}

bool interlace_check(const CircularConfiguration& cfg) {
  int n = cfg.size();
  if (n < 1) return false;
  // Merge by argument; strict alternation required, borderline gaps rejected.
  struct Tagged {
    double arg;
    int tag;
  };
  std::vector<Tagged> merged;
  merged.reserve(static_cast<size_t>(2 * n));
  for (cx z : cfg.first()) merged.push_back({arg2pi(z), 0});
  for (cx z : cfg.second()) merged.push_back({arg2pi(z), 1});
  std::sort(merged.begin(), merged.end(), [](const Tagged& a, const Tagged& b) { return a.arg < b.arg; });
  for (size_t i = 0; i < merged.size(); ++i) {
    const Tagged& cur = merged[i];
    const Tagged& next = merged[(i + 1) % merged.size()];
    double gap = next.arg - cur.arg;
    if (gap < 0.0) gap += kTwoPi;
    if (gap <= 1e-9) return false;
    if (next.tag == cur.tag) return false;
  }
  return true;
}

TwoPopucResult reconstruct_from_two_popuc(const CircularConfiguration& cfg) {
  int count = cfg.size();  // n+1 zeros each
  int n = count - 1;
  Poly q = from_roots(cfg.first());
  Poly r = from_roots(cfg.second());
  cx lambda = lambda_from_zeros(cfg.first());
  cx mu = lambda_from_zeros(cfg.second());
  if (std::abs(lambda - mu) < 1e-10)
    throw DegenerateParametersError("reconstruct_from_two_popuc: lambda == mu");

  // P_n = (lambda Q - mu R)/((lambda - mu) z); the constant term cancels
  // because Q(0) = -conj(lambda), R(0) = -conj(mu).
  Poly num = psub(pscale(q, lambda), pscale(r, mu));
  if (std::abs(num[0]) > 1e-10)
    throw InternalConsistencyError("reconstruct_from_two_popuc: constant term did not cancel");
  Poly pn(static_cast<size_t>(count), cx(0.0));
  for (int j = 1; j <= count; ++j) pn[static_cast<size_t>(j - 1)] = num[static_cast<size_t>(j)] / (lambda - mu);
  MonicPoly phi(pn);

  if (n >= 1) {
    for (cx root : roots(phi.coeffs())) {
      if (std::abs(root) >= 1.0 - 1e-10)
        throw NotRealizableError("reconstruct_from_two_popuc: reconstructed polynomial has a root outside the disk");
    }
  }
  VerblunskyWord word = verblunsky_from_phi(phi);

  // Round trip both parameters back to the input zero sets.
  const std::vector<cx>* expected[2] = {&cfg.first(), &cfg.second()};
  cx params[2] = {lambda, mu};
  for (int s = 0; s < 2; ++s) {
    PonceletFrame f = popuc_zeros(word, params[s]);
    for (int j = 0; j < count; ++j) {
      if (std::abs(f.zeros[static_cast<size_t>(j)] - (*expected[s])[static_cast<size_t>(j)]) > 1e-8)
        throw InternalConsistencyError("reconstruct_from_two_popuc: round trip mismatch");
    }
  }
  return {word, lambda, mu};
}

SecondKindResult reconstruct_second_kind(const CircularConfiguration& cfg) {
  int count = cfg.size();
  const std::vector<cx>& w = cfg.first();
  const std::vector<cx>& y = cfg.second();

  cx pw(1.0), py(1.0);
  for (cx z : w) pw *= z;
  for (cx z : y) py *= z;
  if (std::abs(py + pw) > 1e-9 * (1.0 + std::abs(pw)))
    throw ProductConditionError("reconstruct_second_kind: prod y != -prod w");

  // f(z) = prod(1 - conj(y_j) z)/prod(1 - conj(w_j) z) is quasi-Caratheodory;
  // expand over the (w_j + z)/(w_j - z) basis by a linear solve at interior
  // sample points, then check the fit away from them.
  std::vector<cx> ynodes(y.size()), wnodes(w.size());
  for (size_t j = 0; j < y.size(); ++j) ynodes[j] = -std::conj(y[j]);
  for (size_t j = 0; j < w.size(); ++j) wnodes[j] = -std::conj(w[j]);
  Poly fnum{cx(1.0)}, fden{cx(1.0)};
  for (cx v : ynodes) fnum = pmul(fnum, Poly{cx(1.0), v});
  for (cx v : wnodes) fden = pmul(fden, Poly{cx(1.0), v});
  auto feval = [&](cx z) { return peval(fnum, z) / peval(fden, z); };

  CMat sys(count, count);
  std::vector<cx> rhs(static_cast<size_t>(count));
  for (int i = 0; i < count; ++i) {
    cx zi = 0.4 * unit(kTwoPi * i / count + 0.3);
    for (int j = 0; j < count; ++j)
      sys(i, j) = (w[static_cast<size_t>(j)] + zi) / (w[static_cast<size_t>(j)] - zi);
    rhs[static_cast<size_t>(i)] = feval(zi);
  }
  std::vector<cx> coef = lu_solve(lu_factor(sys), rhs);

  double fit = 0.0;
  for (int i = 0; i < 2 * count; ++i) {
    cx zi = 0.55 * unit(kTwoPi * i / (2 * count) + 0.11);
    cx acc(0.0);
    for (int j = 0; j < count; ++j)
      acc += coef[static_cast<size_t>(j)] * (w[static_cast<size_t>(j)] + zi) / (w[static_cast<size_t>(j)] - zi);
    fit = std::max(fit, std::abs(acc - feval(zi)));
  }
  if (fit > 1e-10)
    throw SolverError("reconstruct_second_kind: quasi-Caratheodory fit residual too large");

  double csum = 0.0;
  std::vector<double> weights(static_cast<size_t>(count));
  for (int j = 0; j < count; ++j) {
    cx cj = coef[static_cast<size_t>(j)];
    if (std::abs(cj.imag()) > 1e-9)
      throw SolverError("reconstruct_second_kind: residue not real");
    if (cj.real() <= 0.0)
      throw NotRealizableError("reconstruct_second_kind: nonpositive residue (zeros do not interlace)");
    weights[static_cast<size_t>(j)] = cj.real();
    csum += cj.real();
  }
  if (std::abs(csum - 1.0) > 1e-9)
    throw SolverError("reconstruct_second_kind: residues do not sum to 1");
  for (double& x : weights) x /= csum;

  VerblunskyWord full = verblunsky_from_measure(UnitCircleMeasure(w, weights));
  cx lambda = *full.terminal();
  VerblunskyWord interior = VerblunskyWord::interior(full.alphas());

  // Second kind zeros of the result must be the y's.
  PonceletFrame psi = popuc_zeros(interior.sign_flipped(), -lambda);
  for (int j = 0; j < count; ++j) {
    if (std::abs(psi.zeros[static_cast<size_t>(j)] - y[static_cast<size_t>(j)]) > 1e-8)
      throw InternalConsistencyError("reconstruct_second_kind: second kind zeros mismatch");
  }
  return {interior, lambda};
}

}  // namespace opuc
