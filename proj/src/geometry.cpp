#include "opuc/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "opuc/errors.hpp"
#include "opuc/numrange.hpp"

namespace opuc {

Ellipse::Ellipse(cx f1, cx f2, double a) : focus1(f1), focus2(f2), semimajor(a) {
  if (!is_finite(f1) || !is_finite(f2) || !std::isfinite(a))
    throw ValidationError("Ellipse: non-finite parameters");
  if (!(a > 0.0) || a < focal_half() - 1e-15)
    throw ValidationError("Ellipse: semimajor axis shorter than the focal half-distance");
}

double Ellipse::semiminor() const {
  double c = focal_half();
  return std::sqrt(std::max(0.0, semimajor * semimajor - c * c));
}

double Ellipse::axis_angle() const {
  cx d = focus2 - focus1;
  if (std::abs(d) == 0.0) return 0.0;
  return std::arg(d);
}

double Ellipse::support(double angle) const {
  double psi = angle - axis_angle();
  double a = semimajor, b = semiminor();
  double quad = std::sqrt(a * a * std::cos(psi) * std::cos(psi) + b * b * std::sin(psi) * std::sin(psi));
  return (unit(-angle) * center()).real() + quad;
}

cx Ellipse::boundary_point(double t) const {
  cx dir = unit(axis_angle());
  return center() + dir * cx(semimajor * std::cos(t), semiminor() * std::sin(t));
}

std::pair<cx, cx> steiner_foci(cx z1, cx z2, cx z3) {
  cx e1 = z2 - z1, e2 = z3 - z1;
  double cross = e1.real() * e2.imag() - e1.imag() * e2.real();
  double scale = std::max({std::abs(e1), std::abs(e2), 1e-30});
  if (std::abs(cross) < 1e-12 * scale * scale)
    throw DegenerateTriangleError("steiner_foci: collinear vertices");
  cx centroid = (z1 + z2 + z3) / 3.0;
  cx pairsum = z1 * z2 + z1 * z3 + z2 * z3;
  cx rad = std::sqrt(centroid * centroid - pairsum / 3.0);
  return {centroid + rad, centroid - rad};
}

MidpointWordResult midpoint_word(const std::vector<cx>& vertices) {
  int count = static_cast<int>(vertices.size());
  if (count < 2) throw ValidationError("midpoint_word: need at least two vertices");
  std::vector<cx> vs = vertices;
  for (cx& v : vs) {
    double mod = std::abs(v);
    if (std::abs(mod - 1.0) > 1e-11) throw ValidationError("midpoint_word: vertex off the circle");
    v /= mod;
  }
  std::sort(vs.begin(), vs.end(), [](cx a, cx b) { return arg2pi(a) < arg2pi(b); });

  Poly p = from_roots(vs);
  Poly dp = pderiv(p);
  MonicPoly phi(pscale(dp, 1.0 / count));
  for (cx r : roots(phi.coeffs())) {
    if (std::abs(r) >= 1.0 - 1e-12)
      throw InternalConsistencyError("midpoint_word: derivative root not inside the disk");
  }
  VerblunskyWord word = verblunsky_from_phi(phi);

  cx prod(1.0);
  for (cx v : vs) prod *= std::conj(v);
  cx lambda = (count % 2 == 1) ? prod : -prod;  // (-1)^n with n = count-1

  std::vector<cx> tp = tangent_points(word, lambda);
  for (int j = 0; j < count; ++j) {
    cx mid = 0.5 * (vs[static_cast<size_t>(j)] + vs[static_cast<size_t>((j + 1) % count)]);
    if (std::abs(tp[static_cast<size_t>(j)] - mid) > 1e-8)
      throw InternalConsistencyError("midpoint_word: tangent points are not the edge midpoints");
  }
  return {word, lambda};
}

namespace {

std::vector<cx> elementary_symmetric(const std::vector<cx>& a) {
  std::vector<cx> s(a.size() + 1, cx(0.0));
  s[0] = cx(1.0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t k = std::min(i + 1, a.size()); k >= 1; --k) s[k] += a[i] * s[k - 1];
  return s;
}

}  // namespace

CriticalReport critical_feasibility(const std::vector<cx>& points) {
  int n = static_cast<int>(points.size());
  if (n < 1) throw ValidationError("critical_feasibility: empty point list");
  for (cx a : points) {
    if (!is_finite(a) || std::abs(a) >= 1.0) throw ValidationError("critical_feasibility: point not inside the disk");
  }
  std::vector<cx> s = elementary_symmetric(points);

  // Residual of equation j at a given lambda:
  //   (n-j) s_{n-j} + (-1)^{n-1} conj(lambda) (j+1) conj(s_{j+1})
  auto residuals_at = [&](cx lambda) {
    std::vector<cx> r(static_cast<size_t>(n));
    double sign = (n % 2 == 1) ? 1.0 : -1.0;
    for (int j = 0; j < n; ++j) {
      cx a = static_cast<double>(n - j) * s[static_cast<size_t>(n - j)];
      cx b = sign * static_cast<double>(j + 1) * std::conj(s[static_cast<size_t>(j + 1)]);
      r[static_cast<size_t>(j)] = a + std::conj(lambda) * b;
    }
    return r;
  };
  auto max_abs_of = [](const std::vector<cx>& v) {
    double m = 0.0;
    for (cx z : v) m = std::max(m, std::abs(z));
    return m;
  };

  cx lambda(1.0);
  bool have_closed_form = false;
  if (n % 2 == 1) {
    // Middle equation (j = k, n = 2k+1) decouples:
    //   s_{k+1} + conj(lambda) conj(s_{k+1}) = 0.
    cx mid = s[static_cast<size_t>((n + 1) / 2)];
    if (std::abs(mid) > 1e-14) {
      lambda = -std::conj(mid) / mid;
      have_closed_form = true;
    }
  }
  if (!have_closed_form) {
    double best = 1e300;
    for (int k = 0; k < 4096; ++k) {
      cx cand = unit(kTwoPi * k / 4096);
      double v = max_abs_of(residuals_at(cand));
      if (v < best) {
        best = v;
        lambda = cand;
      }
    }
    // Newton on the squared-residual phase profile: F(theta) = K + 2
    // Re(e^{-i theta} C) for a constant C, so a couple of steps suffice.
    cx csum(0.0);
    double sign = (n % 2 == 1) ? 1.0 : -1.0;
    for (int j = 0; j < n; ++j) {
      cx a = static_cast<double>(n - j) * s[static_cast<size_t>(n - j)];
      cx b = sign * static_cast<double>(j + 1) * std::conj(s[static_cast<size_t>(j + 1)]);
      csum += b * std::conj(a);
    }
    if (std::abs(csum) > 1e-300) {
      double theta = arg2pi(lambda);
      for (int it = 0; it < 8; ++it) {
        cx e = unit(-theta) * csum;
        double f1 = 2.0 * e.imag();
        double f2 = -2.0 * e.real();
        if (f2 <= 0.0) break;
        theta -= f1 / f2;
      }
      lambda = unit(theta);
    }
  }

  CriticalReport rep;
  rep.lambda = lambda;
  rep.residuals = residuals_at(lambda);
  rep.max_residual = max_abs_of(rep.residuals);
  rep.sym.assign(s.begin() + 1, s.end());
  rep.feasible = rep.max_residual < 1e-8;
  if (rep.feasible) {
    // Witness: P = z Phi_n - conj(lambda) Phi_n^*, whose derivative is
    // (n+1) Phi_n by the equations just verified.
    Poly phin = from_roots(points);
    Poly witness = psub(pshift_up(phin), pscale(pstar(phin, n), std::conj(lambda)));
    rep.witness = MonicPoly(witness);
  }
  return rep;
}

namespace {

using SupportFn = std::function<double(double)>;

// The tangent line of the body at support angle phi meets the circle at
// e^{i(phi -+ acos h(phi))}.  The trailing endpoint phi - acos(h) is strictly
// increasing in phi (h^2 + h'^2 < 1 strictly inside the disk), so the step is
// a clean bisection: find phi whose trailing endpoint is the current vertex,
// land on the leading one.
double half_chord(const SupportFn& support, double phi) {
  double h = support(phi);
  if (h >= 1.0 - 1e-9) throw GeometryError("billiard_step: body touches the circle");
  return std::acos(std::max(-1.0 + 1e-15, h));
}

cx billiard_step(const SupportFn& support, cx w) {
  double thetaw = std::arg(w);
  double lo = thetaw;
  double hi = thetaw + kTwoPi;
  if (!((lo - half_chord(support, lo)) < thetaw) || !((hi - half_chord(support, hi)) > thetaw))
    throw GeometryError("billiard_step: trailing endpoint bracket failed");
  for (int it = 0; it < 64; ++it) {
    double mid = 0.5 * (lo + hi);
    if (mid - half_chord(support, mid) < thetaw)
      lo = mid;
    else
      hi = mid;
  }
  double phi = 0.5 * (lo + hi);
  return unit(phi + half_chord(support, phi));
}

ClosureReport run_billiard(const SupportFn& support, double body_max, cx w0, int steps) {
  if (body_max >= 1.0 - 1e-9) throw GeometryError("billiard: body not strictly inside the disk");
  if (!is_finite(w0) || std::abs(std::abs(w0) - 1.0) > 1e-9)
    throw ValidationError("billiard: start point must be unimodular");
  ClosureReport rep;
  cx w = w0 / std::abs(w0);
  rep.vertices.push_back(w);
  for (int k = 0; k < steps; ++k) {
    cx next = billiard_step(support, w);
    double darg = arg2pi(next / w);
    rep.argsum += darg;
    w = next;
    rep.vertices.push_back(w);
  }
  rep.defect = std::abs(w - w0 / std::abs(w0));
  return rep;
}

// max over angles, 256-point seed plus golden-section refinement; eccentric
// bodies need the refinement because plain sampling misses the true reach.
double refine_max(const std::function<double(double)>& f) {
  double best = -1e300, best_t = 0.0;
  for (int k = 0; k < 256; ++k) {
    double t = kTwoPi * k / 256;
    double v = f(t);
    if (v > best) {
      best = v;
      best_t = t;
    }
  }
  double lo = best_t - kTwoPi / 256, hi = best_t + kTwoPi / 256;
  const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
  double x1 = hi - gr * (hi - lo), x2 = lo + gr * (hi - lo);
  double f1 = f(x1), f2 = f(x2);
  for (int it = 0; it < 50; ++it) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + gr * (hi - lo);
      f2 = f(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - gr * (hi - lo);
      f1 = f(x1);
    }
  }
  return std::max(best, std::max(f1, f2));
}

double body_reach(const SupportFn& support) {
  return refine_max([&](double t) { return support(t); });
}

}  // namespace

ClosureReport billiard_closure(const Ellipse& body, cx w0, int steps) {
  SupportFn s = [&body](double angle) { return body.support(angle); };
  return run_billiard(s, body_reach(s), w0, steps);
}

ClosureReport billiard_closure(const BoundaryCurve& body, cx w0, int steps) {
  SupportTable table(body);
  SupportFn s = [table](double angle) { return table(angle); };
  return run_billiard(s, body_reach(s), w0, steps);
}

Ellipse closure_eccentricity(cx focus1, cx focus2, int ngon) {
  if (ngon < 3) throw ValidationError("closure_eccentricity: need at least a triangle");
  double c = 0.5 * std::abs(focus2 - focus1);

  auto argsum_at = [&](double a) {
    Ellipse e(focus1, focus2, a);
    return billiard_closure(e, cx(1.0), ngon).argsum;
  };

  // Upper end of the bracket: largest axis keeping the ellipse inside.
  double lo = c + 1e-9;
  double hi_cap = 2.0;
  auto inside = [&](double a) {
    Ellipse e(focus1, focus2, a);
    double reach = refine_max([&e](double t) { return std::abs(e.boundary_point(t)); });
    return reach < 1.0 - 1e-7;
  };
  if (!inside(lo)) throw GeometryError("closure_eccentricity: foci too close to the circle");
  double hi = lo;
  double step = 0.1;
  while (step > 1e-12) {
    if (hi + step < hi_cap && inside(hi + step))
      hi += step;
    else
      step *= 0.5;
  }

  double flo = argsum_at(lo) - kTwoPi;
  double fhi = argsum_at(hi) - kTwoPi;
  if (!(flo > 0.0) || !(fhi < 0.0))
    throw GeometryError("closure_eccentricity: no admissible axis range");
  for (int it = 0; it < 60; ++it) {
    if (!(flo > fhi)) throw SolverError("closure_eccentricity: argsum not monotone on the bracket");
    double mid = 0.5 * (lo + hi);
    double fm = argsum_at(mid) - kTwoPi;
    if (fm > 0.0) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
      fhi = fm;
    }
  }
  Ellipse result(focus1, focus2, 0.5 * (lo + hi));
  // Poncelet: closure must hold regardless of the start point.
  for (int k = 0; k < 5; ++k) {
    cx start = unit(0.9 * k + 0.2);
    ClosureReport rep = billiard_closure(result, start, ngon);
    if (rep.defect > 1e-6)
      throw SolverError("closure_eccentricity: closure failed from an alternate start");
  }
  return result;
}

}  // namespace opuc
