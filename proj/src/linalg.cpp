#include "opuc/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "opuc/errors.hpp"

namespace opuc {

CMat CMat::identity(int n) {
  CMat m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = cx(1.0);
  return m;
}

CMat matmul(const CMat& x, const CMat& y) {
  CMat r(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      cx xik = x(i, k);
      if (xik == cx(0.0)) continue;
      for (int j = 0; j < y.cols; ++j) r(i, j) += xik * y(k, j);
    }
  return r;
}

CMat adjoint(const CMat& x) {
  CMat r(x.cols, x.rows);
  for (int i = 0; i < x.rows; ++i)
    for (int j = 0; j < x.cols; ++j) r(j, i) = std::conj(x(i, j));
  return r;
}

CMat transpose(const CMat& x) {
  CMat r(x.cols, x.rows);
  for (int i = 0; i < x.rows; ++i)
    for (int j = 0; j < x.cols; ++j) r(j, i) = x(i, j);
  return r;
}

CMat matsub(const CMat& x, const CMat& y) {
  CMat r = x;
  for (size_t k = 0; k < r.a.size(); ++k) r.a[k] -= y.a[k];
  return r;
}

std::vector<cx> matvec(const CMat& x, const std::vector<cx>& v) {
  std::vector<cx> r(static_cast<size_t>(x.rows), cx(0.0));
  for (int i = 0; i < x.rows; ++i) {
    cx acc(0.0);
    for (int j = 0; j < x.cols; ++j) acc += x(i, j) * v[static_cast<size_t>(j)];
    r[static_cast<size_t>(i)] = acc;
  }
  return r;
}

double fro_norm(const CMat& x) {
  double s = 0.0;
  for (cx c : x.a) s += std::norm(c);
  return std::sqrt(s);
}

double max_abs(const CMat& x) {
  double m = 0.0;
  for (cx c : x.a) m = std::max(m, std::abs(c));
  return m;
}

LuFactors lu_factor(CMat m) {
  int n = m.rows;
  LuFactors f;
  f.perm.resize(static_cast<size_t>(n));
  std::iota(f.perm.begin(), f.perm.end(), 0);
  double scale = std::max(1.0, max_abs(m));
  for (int k = 0; k < n; ++k) {
    int piv = k;
    double best = std::abs(m(k, k));
    for (int i = k + 1; i < n; ++i) {
      double v = std::abs(m(i, k));
      if (v > best) {
        best = v;
        piv = i;
      }
    }
    if (piv != k) {
      for (int j = 0; j < n; ++j) std::swap(m(k, j), m(piv, j));
      std::swap(f.perm[static_cast<size_t>(k)], f.perm[static_cast<size_t>(piv)]);
      f.sign = -f.sign;
    }
    if (best <= 1e-300 * scale) {
      f.singular = true;
      // Regularize the pivot so triangular solves stay finite; inverse
      // iteration relies on this blow-up direction.
      m(k, k) = cx(1e-200 * scale);
    }
    for (int i = k + 1; i < n; ++i) {
      cx l = m(i, k) / m(k, k);
      m(i, k) = l;
      if (l == cx(0.0)) continue;
      for (int j = k + 1; j < n; ++j) m(i, j) -= l * m(k, j);
    }
  }
  f.lu = std::move(m);
  return f;
}

std::vector<cx> lu_solve(const LuFactors& f, std::vector<cx> b) {
  int n = f.lu.rows;
  std::vector<cx> x(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) x[static_cast<size_t>(i)] = b[static_cast<size_t>(f.perm[static_cast<size_t>(i)])];
  for (int i = 1; i < n; ++i)
    for (int j = 0; j < i; ++j) x[static_cast<size_t>(i)] -= f.lu(i, j) * x[static_cast<size_t>(j)];
  for (int i = n - 1; i >= 0; --i) {
    for (int j = i + 1; j < n; ++j) x[static_cast<size_t>(i)] -= f.lu(i, j) * x[static_cast<size_t>(j)];
    x[static_cast<size_t>(i)] /= f.lu(i, i);
  }
  return x;
}

cx lu_det(const CMat& m) {
  LuFactors f = lu_factor(m);
  if (f.singular) return cx(0.0);
  cx d(static_cast<double>(f.sign));
  for (int i = 0; i < m.rows; ++i) d *= f.lu(i, i);
  return d;
}

namespace {

// Unitary 2x2 that diagonalizes the Hermitian block [[app, apq], [conj(apq),
// aqq]]: columns mix as  new_p = c*p - conj(s)*q,  new_q = s*p + c*q.
struct Rot {
  double c = 1.0;
  cx s = cx(0.0);
};

Rot hermitian_rot(double app, double aqq, cx apq) {
  Rot r;
  double mag = std::abs(apq);
  if (mag == 0.0) return r;
  cx phase = apq / mag;
  // offdiagonal vanishes for t solving t^2 - 2 tau t - 1 = 0; smaller root.
  double tau = (app - aqq) / (2.0 * mag);
  double t = (tau >= 0.0) ? -1.0 / (tau + std::sqrt(1.0 + tau * tau))
                          : 1.0 / (-tau + std::sqrt(1.0 + tau * tau));
  r.c = 1.0 / std::sqrt(1.0 + t * t);
  r.s = t * r.c * phase;
  return r;
}

double offdiag_fro(const CMat& h) {
  double s = 0.0;
  for (int i = 0; i < h.rows; ++i)
    for (int j = 0; j < h.cols; ++j)
      if (i != j) s += std::norm(h(i, j));
  return std::sqrt(s);
}

}  // namespace

HermEig jacobi_hermitian(CMat h, int max_sweeps, double off_tol) {
  int n = h.rows;
  CMat v = CMat::identity(n);
  double threshold = off_tol * std::max(1.0, fro_norm(h));
  bool converged = offdiag_fro(h) <= threshold;
  for (int sweep = 0; sweep < max_sweeps && !converged; ++sweep) {
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        cx apq = h(p, q);
        if (std::abs(apq) == 0.0) continue;
        Rot r = hermitian_rot(h(p, p).real(), h(q, q).real(), apq);
        // H <- J^* H J with J acting on columns p, q.
        for (int i = 0; i < n; ++i) {
          cx hip = h(i, p), hiq = h(i, q);
          h(i, p) = r.c * hip - std::conj(r.s) * hiq;
          h(i, q) = r.s * hip + r.c * hiq;
        }
        for (int j = 0; j < n; ++j) {
          cx hpj = h(p, j), hqj = h(q, j);
          h(p, j) = r.c * hpj - r.s * hqj;
          h(q, j) = std::conj(r.s) * hpj + r.c * hqj;
        }
        for (int i = 0; i < n; ++i) {
          cx vip = v(i, p), viq = v(i, q);
          v(i, p) = r.c * vip - std::conj(r.s) * viq;
          v(i, q) = r.s * vip + r.c * viq;
        }
      }
    }
    converged = offdiag_fro(h) <= threshold;
  }
  if (!converged) throw ConvergenceError("jacobi_hermitian: no convergence", {offdiag_fro(h)});

  HermEig out;
  out.values.resize(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) out.values[static_cast<size_t>(i)] = h(i, i).real();
  std::vector<int> order(static_cast<size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return out.values[static_cast<size_t>(a)] < out.values[static_cast<size_t>(b)]; });
  HermEig sorted;
  sorted.values.resize(static_cast<size_t>(n));
  sorted.vectors = CMat(n, n);
  for (int j = 0; j < n; ++j) {
    int src = order[static_cast<size_t>(j)];
    sorted.values[static_cast<size_t>(j)] = out.values[static_cast<size_t>(src)];
    for (int i = 0; i < n; ++i) sorted.vectors(i, j) = v(i, src);
  }
  return sorted;
}

Svd jacobi_svd(CMat m, int max_sweeps) {
  int rows = m.rows, n = m.cols;
  CMat v = CMat::identity(n);
  const double tol = 1e-15;
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    double worst = 0.0;
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        cx gpq(0.0);
        double gpp = 0.0, gqq = 0.0;
        for (int i = 0; i < rows; ++i) {
          gpq += std::conj(m(i, p)) * m(i, q);
          gpp += std::norm(m(i, p));
          gqq += std::norm(m(i, q));
        }
        double denom = std::sqrt(gpp * gqq);
        if (denom == 0.0) continue;
        worst = std::max(worst, std::abs(gpq) / denom);
        if (std::abs(gpq) <= tol * denom) continue;
        Rot r = hermitian_rot(gpp, gqq, gpq);
        for (int i = 0; i < rows; ++i) {
          cx mp = m(i, p), mq = m(i, q);
          m(i, p) = r.c * mp - std::conj(r.s) * mq;
          m(i, q) = r.s * mp + r.c * mq;
        }
        for (int i = 0; i < n; ++i) {
          cx vp = v(i, p), vq = v(i, q);
          v(i, p) = r.c * vp - std::conj(r.s) * vq;
          v(i, q) = r.s * vp + r.c * vq;
        }
      }
    }
    if (worst < 1e-14) break;
    if (sweep + 1 == max_sweeps) throw ConvergenceError("jacobi_svd: no convergence", {worst});
  }

  Svd out;
  out.sigma.resize(static_cast<size_t>(n));
  out.u = CMat(rows, n);
  std::vector<int> order(static_cast<size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::vector<double> sig(static_cast<size_t>(n));
  for (int j = 0; j < n; ++j) {
    double s = 0.0;
    for (int i = 0; i < rows; ++i) s += std::norm(m(i, j));
    sig[static_cast<size_t>(j)] = std::sqrt(s);
  }
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return sig[static_cast<size_t>(a)] > sig[static_cast<size_t>(b)]; });
  CMat vperm(n, n);
  for (int j = 0; j < n; ++j) {
    int src = order[static_cast<size_t>(j)];
    out.sigma[static_cast<size_t>(j)] = sig[static_cast<size_t>(src)];
    for (int i = 0; i < n; ++i) vperm(i, j) = v(i, src);
    if (sig[static_cast<size_t>(src)] > 1e-14) {
      for (int i = 0; i < rows; ++i) out.u(i, j) = m(i, src) / sig[static_cast<size_t>(src)];
    }
  }
  // Complete any zero-sigma columns of U against the ones already present.
  for (int j = 0; j < n; ++j) {
    double colnorm = 0.0;
    for (int i = 0; i < rows; ++i) colnorm += std::norm(out.u(i, j));
    if (colnorm > 0.5) continue;
    for (int seed = 0; seed < rows; ++seed) {
      std::vector<cx> cand(static_cast<size_t>(rows), cx(0.0));
      cand[static_cast<size_t>(seed)] = cx(1.0);
      for (int pass = 0; pass < 2; ++pass) {
        for (int k = 0; k < n; ++k) {
          if (k == j) continue;
          cx proj(0.0);
          for (int i = 0; i < rows; ++i) proj += std::conj(out.u(i, k)) * cand[static_cast<size_t>(i)];
          for (int i = 0; i < rows; ++i) cand[static_cast<size_t>(i)] -= proj * out.u(i, k);
        }
      }
      double norm = 0.0;
      for (cx c : cand) norm += std::norm(c);
      norm = std::sqrt(norm);
      if (norm > 1e-3) {
        for (int i = 0; i < rows; ++i) out.u(i, j) = cand[static_cast<size_t>(i)] / norm;
        break;
      }
    }
  }
  out.v = std::move(vperm);
  return out;
}

CMat hessenberg_form(CMat m) {
  int n = m.rows;
  for (int k = 0; k < n - 2; ++k) {
    double xnorm = 0.0;
    for (int i = k + 1; i < n; ++i) xnorm += std::norm(m(i, k));
    xnorm = std::sqrt(xnorm);
    if (xnorm <= 1e-300) continue;
    cx x0 = m(k + 1, k);
    cx phase = (std::abs(x0) > 0.0) ? x0 / std::abs(x0) : cx(1.0);
    std::vector<cx> vvec(static_cast<size_t>(n), cx(0.0));
    for (int i = k + 1; i < n; ++i) vvec[static_cast<size_t>(i)] = m(i, k);
    vvec[static_cast<size_t>(k + 1)] += phase * xnorm;
    double vnorm2 = 0.0;
    for (cx c : vvec) vnorm2 += std::norm(c);
    if (vnorm2 <= 1e-300) continue;
    // m <- P m P with P = I - 2 v v^* / |v|^2
    for (int j = 0; j < n; ++j) {
      cx dot(0.0);
      for (int i = k + 1; i < n; ++i) dot += std::conj(vvec[static_cast<size_t>(i)]) * m(i, j);
      dot *= 2.0 / vnorm2;
      for (int i = k + 1; i < n; ++i) m(i, j) -= dot * vvec[static_cast<size_t>(i)];
    }
    for (int i = 0; i < n; ++i) {
      cx dot(0.0);
      for (int j = k + 1; j < n; ++j) dot += m(i, j) * vvec[static_cast<size_t>(j)];
      dot *= 2.0 / vnorm2;
      for (int j = k + 1; j < n; ++j) m(i, j) -= dot * std::conj(vvec[static_cast<size_t>(j)]);
    }
    for (int i = k + 2; i < n; ++i) m(i, k) = cx(0.0);
  }
  return m;
}

MonicPoly hessenberg_char_poly(const CMat& h) {
  int n = h.rows;
  std::vector<Poly> p(static_cast<size_t>(n) + 1);
  p[0] = Poly{cx(1.0)};
  for (int k = 1; k <= n; ++k) {
    Poly acc = pmul(Poly{-h(k - 1, k - 1), cx(1.0)}, p[static_cast<size_t>(k - 1)]);
    cx subprod(1.0);
    for (int i = k - 2; i >= 0; --i) {
      subprod *= h(i + 1, i);
      acc = psub(acc, pscale(p[static_cast<size_t>(i)], h(i, k - 1) * subprod));
    }
    p[static_cast<size_t>(k)] = std::move(acc);
  }
  return MonicPoly(p[static_cast<size_t>(n)]);
}

MonicPoly dense_char_poly(const CMat& m) { return hessenberg_char_poly(hessenberg_form(m)); }

std::vector<cx> eigenvector_for(const CMat& m, cx eigenvalue) {
  int n = m.rows;
  CMat shifted = m;
  for (int i = 0; i < n; ++i) shifted(i, i) -= eigenvalue;
  LuFactors f = lu_factor(shifted);
  std::vector<cx> v(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<size_t>(i)] = cx(1.0 / std::sqrt(static_cast<double>(n)));
  for (int it = 0; it < 3; ++it) {
    v = lu_solve(f, v);
    // Exactly singular shifts blow the solution up along the null direction;
    // rescale by the max entry before the Euclidean normalization.
    double peak = 0.0;
    for (cx c : v) peak = std::max(peak, std::max(std::abs(c.real()), std::abs(c.imag())));
    if (!(peak > 0.0) || !std::isfinite(peak)) throw SolverError("eigenvector_for: inverse iteration broke down");
    for (cx& c : v) c /= peak;
    double norm = 0.0;
    for (cx c : v) norm += std::norm(c);
    norm = std::sqrt(norm);
    for (cx& c : v) c /= norm;
  }
  return v;
}

}  // namespace opuc
