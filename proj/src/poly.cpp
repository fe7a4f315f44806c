#include "opuc/poly.hpp"

#include <algorithm>
#include <cmath>

#include "opuc/errors.hpp"

namespace opuc {

namespace {

double max_coeff(const Poly& p) {
  double m = 0.0;
  for (cx c : p) m = std::max(m, std::abs(c));
  return m;
}

void check_finite(const Poly& p, const char* what) {
  for (cx c : p) {
    if (!is_finite(c)) throw ValidationError(std::string(what) + ": non-finite coefficient");
  }
}

}  // namespace

int pdegree(const Poly& p) {
  for (int k = static_cast<int>(p.size()) - 1; k >= 0; --k) {
    if (p[static_cast<size_t>(k)] != cx(0.0, 0.0)) return k;
  }
  return -1;
}

cx peval(const Poly& p, cx z) {
  cx acc(0.0, 0.0);
  for (size_t k = p.size(); k-- > 0;) acc = acc * z + p[k];
  return acc;
}

Poly pderiv(const Poly& p) {
  if (p.size() <= 1) return Poly{};
  Poly d(p.size() - 1);
  for (size_t k = 1; k < p.size(); ++k) d[k - 1] = static_cast<double>(k) * p[k];
  return d;
}

Poly padd(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), cx(0.0));
  for (size_t k = 0; k < a.size(); ++k) r[k] += a[k];
  for (size_t k = 0; k < b.size(); ++k) r[k] += b[k];
  return r;
}

Poly psub(const Poly& a, const Poly& b) { return padd(a, pscale(b, cx(-1.0))); }

Poly pscale(const Poly& a, cx s) {
  Poly r(a);
  for (cx& c : r) c *= s;
  return r;
}

Poly pmul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return Poly{};
  Poly r(a.size() + b.size() - 1, cx(0.0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

Poly pshift_up(const Poly& a) {
  Poly r(a.size() + 1, cx(0.0));
  for (size_t k = 0; k < a.size(); ++k) r[k + 1] = a[k];
  return r;
}

Poly ptrim(const Poly& a, double rel_tol) {
  double cut = rel_tol * max_coeff(a);
  size_t n = a.size();
  while (n > 0 && std::abs(a[n - 1]) <= cut) --n;
  return Poly(a.begin(), a.begin() + static_cast<long>(n));
}

Poly from_roots(const std::vector<cx>& rts) {
  Poly p{cx(1.0)};
  for (cx r : rts) p = pmul(p, Poly{-r, cx(1.0)});
  return p;
}

Poly deflate(const Poly& p, cx r) {
  int n = pdegree(p);
  if (n < 1) throw DegreeError("deflate: degree must be at least 1");
  Poly q(static_cast<size_t>(n), cx(0.0));
  cx carry = p[static_cast<size_t>(n)];
  for (int k = n - 1; k >= 0; --k) {
    q[static_cast<size_t>(k)] = carry;
    carry = p[static_cast<size_t>(k)] + carry * r;
  }
  return q;
}

Poly pstar(const Poly& p, int n) {
  if (pdegree(p) > n) throw DegreeError("pstar: degree exceeds reversal order");
  Poly r(static_cast<size_t>(n) + 1, cx(0.0));
  for (int k = 0; k <= n; ++k) {
    size_t src = static_cast<size_t>(n - k);
    if (src < p.size()) r[static_cast<size_t>(k)] = std::conj(p[src]);
  }
  return r;
}

MonicPoly::MonicPoly(Poly coeffs) {
  check_finite(coeffs, "MonicPoly");
  int deg = pdegree(coeffs);
  if (deg < 0) throw ValidationError("MonicPoly: zero polynomial");
  coeffs.resize(static_cast<size_t>(deg) + 1);
  cx lead = coeffs.back();
  if (lead != cx(1.0)) {
    for (cx& c : coeffs) c /= lead;
  }
  coeffs.back() = cx(1.0);  // exact by contract
  c_ = std::move(coeffs);
}

std::vector<cx> roots(const Poly& p_in, double tol) {
  check_finite(p_in, "roots");
  Poly p = p_in;
  int deg = pdegree(p);
  if (deg < 1) throw ValidationError("roots: degree must be at least 1");
  p.resize(static_cast<size_t>(deg) + 1);
  if (tol < 0.0) tol = 1e-12;
  const double scale = max_coeff(p_in);

  std::vector<cx> out;
  // Exact zero constant terms are roots at the origin; peel them off so
  // multiple roots at 0 come out bit-exact.
  while (p.size() > 1 && p[0] == cx(0.0)) {
    out.push_back(cx(0.0));
    p.erase(p.begin());
  }
  int n = static_cast<int>(p.size()) - 1;
  if (n >= 1) {
    Poly m(p);
    for (cx& c : m) c /= p.back();
    Poly md = pderiv(m);

    // Cauchy bound for the start radius; fixed irrational rotation keeps the
    // start asymmetric so conjugate-symmetric inputs cannot stall.
    double radius = 0.0;
    for (int k = 0; k < n; ++k) radius = std::max(radius, std::abs(m[static_cast<size_t>(k)]));
    radius = 1.0 + radius;
    const double rot = std::sqrt(0.5);
    std::vector<cx> z(static_cast<size_t>(n));
    for (int k = 0; k < n; ++k)
      z[static_cast<size_t>(k)] = radius * unit(kTwoPi * k / n + rot);

    const int max_iter = 600;
    for (int it = 0; it < max_iter; ++it) {
      double worst = 0.0;
      for (int i = 0; i < n; ++i) {
        cx zi = z[static_cast<size_t>(i)];
        cx pv = peval(m, zi);
        cx dv = peval(md, zi);
        if (std::abs(dv) == 0.0) {
          z[static_cast<size_t>(i)] = zi + 1e-8 * radius * unit(0.3 + i);
          worst = 1.0;
          continue;
        }
        cx nw = pv / dv;
        cx s(0.0);
        for (int j = 0; j < n; ++j) {
          if (j == i) continue;
          cx d = zi - z[static_cast<size_t>(j)];
          if (std::abs(d) == 0.0) d = cx(1e-14);
          s += cx(1.0) / d;
        }
        cx denom = cx(1.0) - nw * s;
        cx corr = (std::abs(denom) > 1e-300) ? nw / denom : nw;
        z[static_cast<size_t>(i)] = zi - corr;
        worst = std::max(worst, std::abs(corr) / (1.0 + std::abs(zi)));
      }
      if (worst < 1e-15) break;
    }
    for (int i = 0; i < n; ++i) {
      cx zi = z[static_cast<size_t>(i)];
      for (int it = 0; it < 4; ++it) {
        cx dv = peval(md, zi);
        if (std::abs(dv) == 0.0) break;
        cx step = peval(m, zi) / dv;
        if (!is_finite(step)) break;
        zi -= step;
      }
      z[static_cast<size_t>(i)] = zi;
    }
    out.insert(out.end(), z.begin(), z.end());
  }

  std::vector<double> residuals;
  bool ok = true;
  for (cx r : out) {
    double res = std::abs(peval(p_in, r));
    double cap = tol * scale * std::pow(std::max(1.0, std::abs(r)), deg);
    residuals.push_back(res);
    if (!(res <= cap) || !is_finite(r)) ok = false;
  }
  if (!ok) throw ConvergenceError("roots: residual above tolerance", residuals);

  std::sort(out.begin(), out.end(), [](cx a, cx b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  return out;
}

std::vector<int> cluster_multiplicity(const std::vector<cx>& rts, double radius) {
  std::vector<int> mult(rts.size(), 1);
  for (size_t i = 0; i < rts.size(); ++i) {
    int count = 0;
    for (size_t j = 0; j < rts.size(); ++j) {
      if (std::abs(rts[i] - rts[j]) <= radius) ++count;
    }
    mult[i] = count;
  }
  return mult;
}

}  // namespace opuc
