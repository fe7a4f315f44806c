#include "opuc/numrange.hpp"

#include <algorithm>
#include <cmath>

#include "opuc/errors.hpp"
#include "opuc/ggt.hpp"
#include "opuc/popuc.hpp"

namespace opuc {

std::vector<cx> tangent_points(const VerblunskyWord& word, cx lambda) {
  PonceletFrame f = popuc_zeros(word, lambda);
  int count = f.size();
  std::vector<cx> pts(static_cast<size_t>(count));
  for (int j = 0; j < count; ++j) {
    int jn = (j + 1) % count;
    double mj = f.weights[static_cast<size_t>(j)];
    double mn = f.weights[static_cast<size_t>(jn)];
    pts[static_cast<size_t>(j)] =
        (mj * f.zeros[static_cast<size_t>(jn)] + mn * f.zeros[static_cast<size_t>(j)]) / (mj + mn);
  }
  return pts;
}

BoundaryCurve boundary_sweep(const VerblunskyWord& word, int num_lambda) {
  if (num_lambda < 8) throw ValidationError("boundary_sweep: need at least 8 lambda samples");
  BoundaryCurve curve;
  for (int k = 0; k < num_lambda; ++k) {
    cx lambda = unit(kTwoPi * k / num_lambda);
    PonceletFrame f = popuc_zeros(word, lambda);
    int count = f.size();
    for (int j = 0; j < count; ++j) {
      int jn = (j + 1) % count;
      double mj = f.weights[static_cast<size_t>(j)];
      double mn = f.weights[static_cast<size_t>(jn)];
      cx wj = f.zeros[static_cast<size_t>(j)];
      cx wn = f.zeros[static_cast<size_t>(jn)];
      Provenance p;
      p.lambda = lambda;
      p.edge = j;
      // The polygon edge supports the range; record its outward normal angle
      // (vertices run counterclockwise, interior on the left of the edge).
      p.support_angle = std::arg(cx(0.0, -1.0) * (wn - wj));
      curve.samples.push_back((mj * wn + mn * wj) / (mj + mn));
      curve.provenance.push_back(p);
    }
  }
  cx centroid(0.0);
  for (cx s : curve.samples) centroid += s;
  centroid /= static_cast<double>(curve.samples.size());

  std::vector<size_t> order(curve.samples.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    return arg2pi(curve.samples[a] - centroid) < arg2pi(curve.samples[b] - centroid);
  });
  BoundaryCurve sorted;
  sorted.samples.reserve(order.size());
  sorted.provenance.reserve(order.size());
  for (size_t i : order) {
    sorted.samples.push_back(curve.samples[i]);
    sorted.provenance.push_back(curve.provenance[i]);
  }

  // Convexity: consecutive edge cross products must keep one sign.  A length
  // one word gives a single point; skip the check for degenerate diameters.
  size_t n = sorted.samples.size();
  double diam = 0.0;
  for (cx s : sorted.samples) diam = std::max(diam, std::abs(s - centroid));
  if (diam > 1e-12) {
    for (size_t i = 0; i < n; ++i) {
      cx a = sorted.samples[i];
      cx b = sorted.samples[(i + 1) % n];
      cx c = sorted.samples[(i + 2) % n];
      cx e1 = b - a, e2 = c - b;
      double cross = e1.real() * e2.imag() - e1.imag() * e2.real();
      if (cross < -1e-9 * diam * diam)
        throw SolverError("boundary_sweep: convexity violation");
    }
  }
  return sorted;
}

double support_height(const CMat& a, double angle) {
  int n = a.rows;
  cx ph = unit(-angle);
  CMat h(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) h(i, j) = 0.5 * (ph * a(i, j) + std::conj(ph * a(j, i)));
  HermEig eig = jacobi_hermitian(h);
  return eig.values.back();
}

BoundaryCurve support_oracle(const CMat& a, const std::vector<double>& angles) {
  int n = a.rows;
  BoundaryCurve curve;
  for (double angle : angles) {
    cx ph = unit(-angle);
    CMat h(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) h(i, j) = 0.5 * (ph * a(i, j) + std::conj(ph * a(j, i)));
    HermEig eig = jacobi_hermitian(h);
    // top eigenvector -> boundary point <v, A v>
    std::vector<cx> v(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<size_t>(i)] = eig.vectors(i, n - 1);
    std::vector<cx> av = matvec(a, v);
    cx pt(0.0);
    for (int i = 0; i < n; ++i) pt += std::conj(v[static_cast<size_t>(i)]) * av[static_cast<size_t>(i)];
    Provenance p;
    p.support_angle = angle;
    curve.samples.push_back(pt);
    curve.provenance.push_back(p);
  }
  return curve;
}

bool contains(const CMat& a, cx point, double slack) {
  for (int k = 0; k < 128; ++k) {
    double angle = kTwoPi * k / 128;
    double proj = (unit(-angle) * point).real();
    if (proj > support_height(a, angle) + slack) return false;
  }
  return true;
}

bool contains(const VerblunskyWord& word, cx point, double slack) {
  return contains(ggt_build(VerblunskyWord::interior(word.alphas())).entries, point, slack);
}

std::vector<Chord> kippenhahn_chords(const VerblunskyWord& word, int num_lambda) {
  std::vector<Chord> chords;
  for (int k = 0; k < num_lambda; ++k) {
    cx lambda = unit(kTwoPi * k / num_lambda);
    PonceletFrame f = popuc_zeros(word, lambda);
    int count = f.size();
    for (int i = 0; i < count; ++i)
      for (int j = i + 1; j < count; ++j) {
        Chord c;
        c.lambda = lambda;
        c.i = i;
        c.j = j;
        c.from = f.zeros[static_cast<size_t>(i)];
        c.to = f.zeros[static_cast<size_t>(j)];
        chords.push_back(c);
      }
  }
  return chords;
}

double polyline_support(const BoundaryCurve& curve, double angle) {
  cx ph = unit(-angle);
  double best = -1e300;
  for (cx s : curve.samples) best = std::max(best, (ph * s).real());
  return best;
}

SupportTable::SupportTable(const BoundaryCurve& curve) : points_(curve.samples) {
  std::vector<std::pair<double, double>> data;
  for (size_t i = 0; i < curve.samples.size() && i < curve.provenance.size(); ++i) {
    if (!curve.provenance[i].support_angle) continue;
    double phi = *curve.provenance[i].support_angle;
    phi -= kTwoPi * std::floor(phi / kTwoPi);
    data.emplace_back(phi, (unit(-phi) * curve.samples[i]).real());
  }
  std::sort(data.begin(), data.end());
  for (const auto& [phi, h] : data) {
    if (!angles_.empty() && phi - angles_.back() < 1e-9) continue;
    angles_.push_back(phi);
    heights_.push_back(h);
  }
  if (angles_.size() < 8) {
    angles_.clear();
    heights_.clear();
  }
}

double SupportTable::operator()(double angle) const {
  if (angles_.empty()) {
    cx ph = unit(-angle);
    double best = -1e300;
    for (cx s : points_) best = std::max(best, (ph * s).real());
    return best;
  }
  double phi = angle - kTwoPi * std::floor(angle / kTwoPi);
  size_t n = angles_.size();
  size_t hi = static_cast<size_t>(std::lower_bound(angles_.begin(), angles_.end(), phi) - angles_.begin());
  // Cubic Lagrange through the four nearest tangent samples (wrapping).
  double x[4], y[4];
  for (int k = 0; k < 4; ++k) {
    long idx = static_cast<long>(hi) + k - 2;
    double shift = 0.0;
    while (idx < 0) {
      idx += static_cast<long>(n);
      shift -= kTwoPi;
    }
    while (idx >= static_cast<long>(n)) {
      idx -= static_cast<long>(n);
      shift += kTwoPi;
    }
    x[k] = angles_[static_cast<size_t>(idx)] + shift;
    y[k] = heights_[static_cast<size_t>(idx)];
  }
  double acc = 0.0;
  for (int k = 0; k < 4; ++k) {
    double term = y[k];
    for (int j = 0; j < 4; ++j) {
      if (j == k) continue;
      term *= (phi - x[j]) / (x[k] - x[j]);
    }
    acc += term;
  }
  return acc;
}

double point_to_polyline(const BoundaryCurve& curve, cx p) {
  size_t n = curve.samples.size();
  double best = 1e300;
  for (size_t i = 0; i < n; ++i) {
    cx a = curve.samples[i];
    cx b = curve.samples[(i + 1) % n];
    cx ab = b - a;
    double len2 = std::norm(ab);
    double t = 0.0;
    if (len2 > 0.0) {
      t = ((p - a).real() * ab.real() + (p - a).imag() * ab.imag()) / len2;
      t = std::clamp(t, 0.0, 1.0);
    }
    best = std::min(best, std::abs(p - (a + t * ab)));
  }
  return best;
}

namespace {

// Signed distance of p to the oracle body: max over directions of
// projection minus support height, maximized by scan plus golden refinement.
double signed_support_distance(const CMat& a, cx p) {
  const int coarse = 256;
  double best = -1e300;
  double best_angle = 0.0;
  for (int k = 0; k < coarse; ++k) {
    double angle = kTwoPi * k / coarse;
    double v = (unit(-angle) * p).real() - support_height(a, angle);
    if (v > best) {
      best = v;
      best_angle = angle;
    }
  }
  double lo = best_angle - kTwoPi / coarse;
  double hi = best_angle + kTwoPi / coarse;
  const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
  double x1 = hi - gr * (hi - lo), x2 = lo + gr * (hi - lo);
  double f1 = (unit(-x1) * p).real() - support_height(a, x1);
  double f2 = (unit(-x2) * p).real() - support_height(a, x2);
  for (int it = 0; it < 40; ++it) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + gr * (hi - lo);
      f2 = (unit(-x2) * p).real() - support_height(a, x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - gr * (hi - lo);
      f1 = (unit(-x1) * p).real() - support_height(a, x1);
    }
  }
  return std::max(best, std::max(f1, f2));
}

}  // namespace

double curve_distance(const BoundaryCurve& sweep, const CMat& a, const BoundaryCurve& oracle) {
  // Hausdorff distance of convex bodies is the sup-distance of their support
  // functions.  The sweep carries exact tangent normals, so its support
  // values at those angles have no discretization bias; the oracle support
  // comes from the eigensolver at the same angles.
  double worst = 0.0;
  std::vector<std::pair<double, double>> sweep_lines;  // (angle, exact support)
  for (size_t i = 0; i < sweep.samples.size(); ++i) {
    if (i < sweep.provenance.size() && sweep.provenance[i].support_angle) {
      double phi = *sweep.provenance[i].support_angle;
      double hs = (unit(-phi) * sweep.samples[i]).real();
      sweep_lines.emplace_back(phi, hs);
      worst = std::max(worst, std::abs(hs - support_height(a, phi)));
    } else {
      worst = std::max(worst, std::abs(signed_support_distance(a, sweep.samples[i])));
    }
  }
  // One-sided check in the other direction: every oracle boundary point must
  // respect the sweep's tangent half-planes (the body is their intersection).
  for (cx p : oracle.samples) {
    for (const auto& [phi, hs] : sweep_lines) {
      worst = std::max(worst, (unit(-phi) * p).real() - hs);
    }
  }
  return worst;
}

}  // namespace opuc
