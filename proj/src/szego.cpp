#include "opuc/szego.hpp"

#include <algorithm>
#include <cmath>

#include "opuc/errors.hpp"

namespace opuc {

namespace {

constexpr double kInteriorMargin = 1e-14;
constexpr double kUnimodularTol = 1e-12;

void check_finite_list(const std::vector<cx>& v, const char* what) {
  for (cx z : v) {
    if (!is_finite(z)) throw ValidationError(std::string(what) + ": non-finite value");
  }
}

}  // namespace

VerblunskyWord VerblunskyWord::interior(std::vector<cx> alphas) {
  check_finite_list(alphas, "VerblunskyWord");
  for (cx a : alphas) {
    if (std::abs(a) >= 1.0 - kInteriorMargin)
      throw ValidationError("VerblunskyWord: interior coefficient not strictly inside the disk");
  }
  VerblunskyWord w;
  w.alphas_ = std::move(alphas);
  return w;
}

VerblunskyWord VerblunskyWord::with_terminal(std::vector<cx> alphas, cx lambda) {
  VerblunskyWord w = interior(std::move(alphas));
  if (!is_finite(lambda)) throw ValidationError("VerblunskyWord: non-finite terminal");
  double mod = std::abs(lambda);
  if (std::abs(mod - 1.0) > kUnimodularTol)
    throw ValidationError("VerblunskyWord: terminal coefficient not unimodular");
  w.terminal_ = lambda / mod;  // exact unit modulus downstream
  return w;
}

double VerblunskyWord::rho(int j) const {
  return std::sqrt(1.0 - std::norm(alphas_[static_cast<size_t>(j)]));
}

VerblunskyWord VerblunskyWord::sign_flipped() const {
  std::vector<cx> flipped(alphas_);
  for (cx& a : flipped) a = -a;
  if (terminal_) return with_terminal(std::move(flipped), -*terminal_);
  return interior(std::move(flipped));
}

UnitCircleMeasure::UnitCircleMeasure(std::vector<cx> nodes, std::vector<double> weights) {
  if (nodes.size() != weights.size() || nodes.empty())
    throw ValidationError("UnitCircleMeasure: nodes/weights size mismatch or empty");
  check_finite_list(nodes, "UnitCircleMeasure");
  double total = 0.0;
  for (double w : weights) {
    if (!(w > 0.0) || !std::isfinite(w)) throw ValidationError("UnitCircleMeasure: weights must be positive");
    total += w;
  }
  if (std::abs(total - 1.0) > 1e-12) throw ValidationError("UnitCircleMeasure: weights must sum to 1");
  for (cx z : nodes) {
    if (std::abs(std::abs(z) - 1.0) > 1e-12) throw ValidationError("UnitCircleMeasure: node off the circle");
  }
  for (size_t i = 0; i < nodes.size(); ++i)
    for (size_t j = i + 1; j < nodes.size(); ++j)
      if (std::abs(nodes[i] - nodes[j]) <= 1e-10)
        throw DegenerateMeasureError("UnitCircleMeasure: coincident nodes");
  nodes_ = std::move(nodes);
  weights_ = std::move(weights);
}

std::vector<cx> UnitCircleMeasure::moments(int kmax) const {
  std::vector<cx> c(static_cast<size_t>(kmax) + 1, cx(0.0));
  for (size_t j = 0; j < nodes_.size(); ++j) {
    cx zbar = std::conj(nodes_[j]);
    cx pw(1.0);
    for (int k = 0; k <= kmax; ++k) {
      c[static_cast<size_t>(k)] += weights_[j] * pw;
      pw *= zbar;
    }
  }
  return c;
}

OpucSequence szego_forward(const VerblunskyWord& word) {
  int m = word.interior_size();
  OpucSequence seq;
  seq.phis.reserve(static_cast<size_t>(m) + 1);
  seq.stars.reserve(static_cast<size_t>(m) + 1);
  seq.norms.reserve(static_cast<size_t>(m) + 1);
  Poly phi{cx(1.0)};
  Poly star{cx(1.0)};
  double norm = 1.0;
  seq.phis.emplace_back(phi);
  seq.stars.push_back(star);
  seq.norms.push_back(norm);
  for (int k = 0; k < m; ++k) {
    cx a = word.alphas()[static_cast<size_t>(k)];
    Poly next = psub(pshift_up(phi), pscale(star, std::conj(a)));
    star = psub(star, pscale(pshift_up(phi), a));  // tau_{k+1} applied to the recursion
    phi = std::move(next);
    norm *= word.rho(k);
    seq.phis.emplace_back(phi);
    seq.stars.push_back(star);
    seq.norms.push_back(norm);
  }
  if (word.terminal()) {
    cx lam = *word.terminal();
    seq.lambda = lam;
    seq.popuc = MonicPoly(psub(pshift_up(phi), pscale(star, std::conj(lam))));
  }
  return seq;
}

OpucSequence second_kind(const VerblunskyWord& word) { return szego_forward(word.sign_flipped()); }

VerblunskyWord verblunsky_from_phi(const MonicPoly& phi) {
  int n = phi.degree();
  if (n > 0) {
    std::vector<cx> rts = roots(phi.coeffs());
    for (cx r : rts) {
      if (std::abs(r) >= 1.0 - 1e-10)
        throw NotSchurStableError("verblunsky_from_phi: root not strictly inside the disk");
    }
  }
  std::vector<cx> alphas(static_cast<size_t>(n));
  Poly cur = phi.coeffs();
  for (int k = n; k >= 1; --k) {
    cx a = -std::conj(cur[0]);
    double rho2 = 1.0 - std::norm(a);
    if (!(rho2 > 0.0)) throw InversionError("verblunsky_from_phi: extracted coefficient left the disk");
    alphas[static_cast<size_t>(k - 1)] = a;
    // Phi_{k-1} = (Phi_k + conj(a) Phi_k^*) / (rho^2 z); the constant term
    // cancels exactly because conj(a) = -Phi_k(0).
    Poly combo = padd(cur, pscale(pstar(cur, k), std::conj(a)));
    Poly down(static_cast<size_t>(k), cx(0.0));
    for (int j = 1; j <= k; ++j) down[static_cast<size_t>(j - 1)] = combo[static_cast<size_t>(j)] / rho2;
    cur = std::move(down);
  }
  return VerblunskyWord::interior(std::move(alphas));
}

namespace {

// Monic orthogonal polynomials under <z^r, z^s> = c_{r-s}, as coefficient
// vectors, by modified Gram-Schmidt with one re-orthogonalization pass.
struct MomentGS {
  std::vector<Poly> phi;
  std::vector<double> norm2;
};

cx moment_at(const std::vector<cx>& c, int k) {
  if (k >= 0) return c[static_cast<size_t>(k)];
  return std::conj(c[static_cast<size_t>(-k)]);
}

cx moment_inner(const std::vector<cx>& c, const Poly& p, const Poly& q) {
  cx acc(0.0);
  for (size_t r = 0; r < p.size(); ++r) {
    if (p[r] == cx(0.0)) continue;
    for (size_t s = 0; s < q.size(); ++s) {
      if (q[s] == cx(0.0)) continue;
      acc += std::conj(p[r]) * q[s] * moment_at(c, static_cast<int>(r) - static_cast<int>(s));
    }
  }
  return acc;
}

MomentGS moment_gram_schmidt(const std::vector<cx>& c, int count) {
  MomentGS gs;
  double c0 = c[0].real();
  for (int k = 0; k < count; ++k) {
    Poly v(static_cast<size_t>(k) + 1, cx(0.0));
    v[static_cast<size_t>(k)] = cx(1.0);
    for (int pass = 0; pass < 2; ++pass) {
      for (int i = 0; i < k; ++i) {
        cx proj = moment_inner(c, gs.phi[static_cast<size_t>(i)], v) / gs.norm2[static_cast<size_t>(i)];
        v = psub(v, pscale(gs.phi[static_cast<size_t>(i)], proj));
      }
      v.resize(static_cast<size_t>(k) + 1);
      v[static_cast<size_t>(k)] = cx(1.0);  // keep monic exactly
    }
    double n2 = moment_inner(c, v, v).real();
    if (!(n2 > 1e-14 * c0))
      throw DegenerateMeasureError("moment Gram-Schmidt: rank deficient moment matrix");
    gs.phi.push_back(std::move(v));
    gs.norm2.push_back(n2);
  }
  return gs;
}

}  // namespace

std::vector<cx> verblunsky_from_moments(const std::vector<cx>& c, int count) {
  check_finite_list(c, "verblunsky_from_moments");
  if (static_cast<int>(c.size()) < count + 1)
    throw ValidationError("verblunsky_from_moments: not enough moments");
  MomentGS gs = moment_gram_schmidt(c, count + 1);
  std::vector<cx> alphas(static_cast<size_t>(count));
  for (int k = 1; k <= count; ++k)
    alphas[static_cast<size_t>(k - 1)] = -std::conj(gs.phi[static_cast<size_t>(k)][0]);
  for (cx a : alphas) {
    if (std::abs(a) >= 1.0)
      throw InversionError("verblunsky_from_moments: extracted coefficient left the disk");
  }
  return alphas;
}

cx moment_inner_product(const std::vector<cx>& c, const Poly& p, const Poly& q) {
  return moment_inner(c, p, q);
}

VerblunskyWord verblunsky_word_from_moments(const std::vector<cx>& c, int n) {
  if (static_cast<int>(c.size()) < n + 1)
    throw ValidationError("verblunsky_word_from_moments: not enough moments");
  MomentGS gs = moment_gram_schmidt(c, n);
  std::vector<cx> alphas(static_cast<size_t>(n - 1));
  for (int k = 1; k < n; ++k) {
    cx a = -std::conj(gs.phi[static_cast<size_t>(k)][0]);
    if (std::abs(a) >= 1.0) throw InversionError("verblunsky_word_from_moments: coefficient left the disk");
    alphas[static_cast<size_t>(k - 1)] = a;
  }
  // Terminal step: conj(alpha_{n-1}) = <Phi*, z Phi> / ||Phi||^2 at degree n-1.
  const Poly& top = gs.phi[static_cast<size_t>(n - 1)];
  cx abar = moment_inner(c, pstar(top, n - 1), pshift_up(top)) / gs.norm2[static_cast<size_t>(n - 1)];
  cx lambda = std::conj(abar);
  double mod = std::abs(lambda);
  if (std::abs(mod - 1.0) > 1e-6)
    throw DegenerateMeasureError("verblunsky_word_from_moments: terminal coefficient far from the circle");
  return VerblunskyWord::with_terminal(std::move(alphas), lambda / mod);
}

VerblunskyWord verblunsky_from_measure(const UnitCircleMeasure& mu) {
  int n = mu.size();
  return verblunsky_word_from_moments(mu.moments(n), n);
}

std::vector<cx> bernstein_szego_moments(const MonicPoly& phi, int kmax) {
  int n = phi.degree();
  if (n >= 1) {
    for (cx r : roots(phi.coeffs())) {
      if (std::abs(r) >= 1.0 - 1e-6)
        throw IllConditionedError("bernstein_szego_moments: root too close to the circle");
    }
  }
  int grid = std::max(4096, 64 * (n + kmax));
  std::vector<cx> c(static_cast<size_t>(kmax) + 1, cx(0.0));
  double mass = 0.0;
  for (int i = 0; i < grid; ++i) {
    double theta = kTwoPi * i / grid;
    cx z = unit(theta);
    double w = 1.0 / std::norm(phi(z));
    mass += w;
    cx zbar = std::conj(z);
    cx pw(1.0);
    for (int k = 0; k <= kmax; ++k) {
      c[static_cast<size_t>(k)] += w * pw;
      pw *= zbar;
    }
  }
  for (cx& v : c) v /= mass;
  c[0] = cx(1.0);
  return c;
}

}  // namespace opuc
