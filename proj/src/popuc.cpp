#include "opuc/popuc.hpp"

#include <algorithm>
#include <cmath>

#include "opuc/errors.hpp"
#include "opuc/ggt.hpp"
#include "opuc/linalg.hpp"

namespace opuc {

namespace {

struct PhaseTracker {
  const Poly* phi;
  const Poly* star;
  Poly dphi;
  Poly dstar;

  cx value(double theta) const {
    cx z = unit(theta);
    return z * peval(*phi, z) / peval(*star, z);
  }

  // d/dtheta arg(z Phi/Phi^*) on the circle; strictly positive.
  double derivative(double theta) const {
    cx z = unit(theta);
    cx h = cx(1.0) + z * peval(dphi, z) / peval(*phi, z) - z * peval(dstar, z) / peval(*star, z);
    return h.real();
  }
};

double principal(double x) {
  while (x > kPi) x -= kTwoPi;
  while (x <= -kPi) x += kTwoPi;
  return x;
}

}  // namespace

PonceletFrame popuc_zeros(const VerblunskyWord& word, cx lambda) {
  if (!is_finite(lambda) || std::abs(std::abs(lambda) - 1.0) > 1e-12)
    throw ValidationError("popuc_zeros: lambda must be unimodular");
  lambda /= std::abs(lambda);
  VerblunskyWord interior = VerblunskyWord::interior(word.alphas());
  OpucSequence seq = szego_forward(interior);
  int m = interior.interior_size();
  int count = m + 1;

  PhaseTracker tracker;
  const Poly& phi = seq.phis.back().coeffs();
  tracker.phi = &phi;
  tracker.star = &seq.stars.back();
  tracker.dphi = pderiv(phi);
  tracker.dstar = pderiv(*tracker.star);

  double target = arg2pi(std::conj(lambda));

  // Adaptive grid: double until the winding count is exact, so no crossing
  // of the target phase can hide inside one cell.  The phase is monotone, so
  // mod-2pi unwrapping can only lose whole turns; an exact winding count
  // certifies that no cell gained 2pi or more.
  int grid = 64 * count;
  std::vector<double> theta, acc;
  bool winding_ok = false;
  for (int attempt = 0; attempt < 12 && !winding_ok; ++attempt, grid *= 2) {
    theta.assign(static_cast<size_t>(grid) + 1, 0.0);
    acc.assign(static_cast<size_t>(grid) + 1, 0.0);
    double prev_arg = std::arg(tracker.value(0.0));
    acc[0] = prev_arg;
    double max_step = 0.0;
    for (int i = 1; i <= grid; ++i) {
      theta[static_cast<size_t>(i)] = kTwoPi * i / grid;
      double cur = std::arg(tracker.value(theta[static_cast<size_t>(i)]));
      double step = cur - prev_arg;
      while (step < 0.0) step += kTwoPi;  // monotone increase
      acc[static_cast<size_t>(i)] = acc[static_cast<size_t>(i - 1)] + step;
      max_step = std::max(max_step, step);
      prev_arg = cur;
    }
    double winding = acc[static_cast<size_t>(grid)] - acc[0];
    winding_ok = std::abs(winding - kTwoPi * count) < 1e-8 && max_step < 5.5;
  }
  if (!winding_ok) throw SolverError("popuc_zeros: winding count mismatch after refinement");

  // Crossing levels: values congruent to target inside the swept range.
  double lo = acc[0];
  double first = target + kTwoPi * std::ceil((lo - target) / kTwoPi - 1e-13);
  if (first < lo - 1e-9) first += kTwoPi;

  std::vector<cx> zeros;
  zeros.reserve(static_cast<size_t>(count));
  int cell = 0;
  for (int k = 0; k < count; ++k) {
    double level = first + kTwoPi * k;
    while (cell < grid && acc[static_cast<size_t>(cell + 1)] < level) ++cell;
    double tlo = theta[static_cast<size_t>(cell)];
    double thi = theta[static_cast<size_t>(cell + 1)];
    // Bisection against the phase unwrapped from the cell start; the cell
    // increment stays below 2 pi, so arg2pi of the ratio cannot wrap.
    const cx base = tracker.value(tlo);
    const double abase = acc[static_cast<size_t>(cell)];
    for (int it = 0; it < 40 && thi - tlo > 1e-6; ++it) {
      double tmid = 0.5 * (tlo + thi);
      double amid = abase + arg2pi(tracker.value(tmid) / base);
      if (amid < level)
        tlo = tmid;
      else
        thi = tmid;
    }
    // Newton polish in theta keeps iterates exactly unimodular.
    double t = 0.5 * (tlo + thi);
    for (int it = 0; it < 30; ++it) {
      double resid = principal(std::arg(tracker.value(t)) - target);
      double deriv = tracker.derivative(t);
      double step = resid / deriv;
      t -= step;
      if (std::abs(step) < 1e-15) break;
    }
    zeros.push_back(unit(t));
  }

  std::sort(zeros.begin(), zeros.end(), [](cx a, cx b) { return arg2pi(a) < arg2pi(b); });

  // Frame validation: simple zeros, mass normalization, lambda recovery.
  for (int j = 0; j < count && count > 1; ++j) {
    double gap = arg2pi(zeros[static_cast<size_t>((j + 1) % count)] / zeros[static_cast<size_t>(j)]);
    if (!(gap > 1e-12)) throw SolverError("popuc_zeros: zeros collided");
  }
  cx prod(1.0);
  for (cx w : zeros) prod *= std::conj(w);
  cx lam_back = (m % 2 == 0) ? prod : -prod;
  if (std::abs(lam_back - lambda) > 1e-10)
    throw SolverError("popuc_zeros: lambda recovery failed");

  PonceletFrame frame;
  frame.lambda = lambda;
  frame.zeros = std::move(zeros);
  auto [q, mw] = christoffel_weights(interior, lambda, frame.zeros);
  frame.christoffel = std::move(q);
  frame.weights = std::move(mw);
  double mass = 0.0;
  for (double w : frame.weights) mass += w;
  if (std::abs(mass - 1.0) > 1e-11) throw InternalConsistencyError("popuc_zeros: masses do not sum to 1");
  return frame;
}

std::pair<std::vector<double>, std::vector<double>> christoffel_weights(
    const VerblunskyWord& word, cx lambda, const std::vector<cx>& zeros) {
  VerblunskyWord interior = VerblunskyWord::interior(word.alphas());
  OpucSequence seq = szego_forward(interior);
  int m = interior.interior_size();
  int count = static_cast<int>(zeros.size());

  std::vector<double> q(static_cast<size_t>(count)), mw(static_cast<size_t>(count));
  for (int j = 0; j < count; ++j) {
    cx w = zeros[static_cast<size_t>(j)];
    double total = 0.0;
    double last = 0.0;
    for (int k = 0; k <= m; ++k) {
      cx val = seq.phis[static_cast<size_t>(k)](w) / seq.norms[static_cast<size_t>(k)];
      last = std::norm(val);
      total += last;
    }
    q[static_cast<size_t>(j)] = 1.0 / total;
    mw[static_cast<size_t>(j)] = last / total;
  }

  // Independent route: |last component|^2 of the normalized eigenvectors of
  // the GGT unitary (and |first|^2 recovers q_j).
  GGTMatrix g = ggt_build(VerblunskyWord::with_terminal(word.alphas(), lambda));
  for (int j = 0; j < count; ++j) {
    std::vector<cx> v = eigenvector_for(g.entries, zeros[static_cast<size_t>(j)]);
    double m_ev = std::norm(v[static_cast<size_t>(m)]);
    double q_ev = std::norm(v[0]);
    if (std::abs(m_ev - mw[static_cast<size_t>(j)]) > 1e-9 || std::abs(q_ev - q[static_cast<size_t>(j)]) > 1e-9)
      throw InternalConsistencyError("christoffel_weights: eigenvector cross-check failed");
  }
  return {q, mw};
}

UnitCircleMeasure spectral_measure(const PonceletFrame& frame) {
  std::vector<double> w = frame.weights;
  double mass = 0.0;
  for (double x : w) mass += x;
  for (double& x : w) x /= mass;
  return UnitCircleMeasure(frame.zeros, w);
}

cx m_function(const UnitCircleMeasure& mu, cx z) {
  cx acc(0.0);
  for (int j = 0; j < mu.size(); ++j) {
    cx den = z - mu.nodes()[static_cast<size_t>(j)];
    if (std::abs(den) < 1e-12) throw PoleError("m_function: z at a node");
    acc += mu.weights()[static_cast<size_t>(j)] / den;
  }
  return acc;
}

cx m_function(const VerblunskyWord& word, const PonceletFrame& frame, cx z) {
  cx partial(0.0);
  for (int j = 0; j < frame.size(); ++j) {
    cx den = z - frame.zeros[static_cast<size_t>(j)];
    if (std::abs(den) < 1e-12) throw PoleError("m_function: z at a zero");
    partial += frame.weights[static_cast<size_t>(j)] / den;
  }
  OpucSequence seq = szego_forward(VerblunskyWord::with_terminal(word.alphas(), frame.lambda));
  cx rational = seq.top()(z) / (*seq.popuc)(z);
  if (std::abs(partial - rational) > 1e-9 * (1.0 + std::abs(partial)))
    throw InternalConsistencyError("m_function: partial fraction vs rational form mismatch");
  return partial;
}

VerblunskyWord nu_verblunsky(const VerblunskyWord& word, const PonceletFrame& frame) {
  VerblunskyWord measured = verblunsky_from_measure(spectral_measure(frame));
  int m = word.interior_size();
  std::vector<cx> expect(static_cast<size_t>(m));
  for (int j = 0; j < m; ++j)
    expect[static_cast<size_t>(j)] = -frame.lambda * std::conj(word.alphas()[static_cast<size_t>(m - 1 - j)]);
  for (int j = 0; j < m; ++j) {
    if (std::abs(measured.alphas()[static_cast<size_t>(j)] - expect[static_cast<size_t>(j)]) > 1e-8)
      throw InternalConsistencyError("nu_verblunsky: reversal identity failed");
  }
  if (std::abs(*measured.terminal() - frame.lambda) > 1e-8)
    throw InternalConsistencyError("nu_verblunsky: terminal mismatch");
  return VerblunskyWord::with_terminal(std::move(expect), frame.lambda);
}

}  // namespace opuc
