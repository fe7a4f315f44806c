#pragma once

// Szego forward/inverse recursion, Verblunsky <-> polynomial <-> measure
// conversions, second kind polynomials and Bernstein-Szego moments.
//
// Moment convention used throughout: c_k := integral of e^{-ik theta} d mu,
// so the Gram matrix of the monomials {z^j} is the Hermitian Toeplitz matrix
// <z^r, z^s> = c_{r-s}.

#include <optional>
#include <vector>

#include "opuc/common.hpp"
#include "opuc/poly.hpp"

namespace opuc {

// Finite word alpha_0..alpha_{m-1} in the open disk, optionally closed by a
// unimodular terminal coefficient (the POPUC / trivial-measure case).
class VerblunskyWord {
 public:
  static VerblunskyWord interior(std::vector<cx> alphas);
  static VerblunskyWord with_terminal(std::vector<cx> alphas, cx lambda);

  const std::vector<cx>& alphas() const { return alphas_; }
  const std::optional<cx>& terminal() const { return terminal_; }
  int interior_size() const { return static_cast<int>(alphas_.size()); }
  double rho(int j) const;  // sqrt(1 - |alpha_j|^2)

  // Word of the second kind objects: all interior signs flipped, terminal
  // lambda (when present) replaced by -lambda.
  VerblunskyWord sign_flipped() const;

 private:
  VerblunskyWord() = default;
  std::vector<cx> alphas_;
  std::optional<cx> terminal_;
};

struct OpucSequence {
  std::vector<MonicPoly> phis;   // Phi_0..Phi_m
  std::vector<Poly> stars;       // Phi_k^* = tau_k(Phi_k)
  std::vector<double> norms;     // ||Phi_k|| = rho_0...rho_{k-1}
  std::optional<MonicPoly> popuc;  // Phi_{m+1}(.; lambda), norm zero
  std::optional<cx> lambda;

  const MonicPoly& top() const { return phis.back(); }
};

class UnitCircleMeasure {
 public:
  // Finitely many unimodular nodes with positive weights summing to 1.
  UnitCircleMeasure(std::vector<cx> nodes, std::vector<double> weights);

  const std::vector<cx>& nodes() const { return nodes_; }
  const std::vector<double>& weights() const { return weights_; }
  int size() const { return static_cast<int>(nodes_.size()); }

  // c_k for k = 0..kmax under the module moment convention.
  std::vector<cx> moments(int kmax) const;

 private:
  std::vector<cx> nodes_;
  std::vector<double> weights_;
};

// Phi_0..Phi_m (and stars, norms) by Szego recursion; when the word has a
// terminal lambda the paraorthogonal Phi_{m+1}(z;lambda) is attached.
OpucSequence szego_forward(const VerblunskyWord& word);

// Second kind sequence Psi_k: szego_forward of the sign-flipped word.
OpucSequence second_kind(const VerblunskyWord& word);

// Inverse Szego recursion.  Requires all roots of phi strictly inside the
// disk (margin 1e-10); the word returned regenerates phi to ~1e-10.
VerblunskyWord verblunsky_from_phi(const MonicPoly& phi);

// Interior coefficients alpha_0..alpha_{count-1} from moments c_0..c_k of a
// nontrivial measure (needs k >= count).  Modified Gram-Schmidt on the
// Toeplitz moment Gram matrix, re-orthogonalized, with Eq-style extraction
// alpha_{j-1} = -conj(Phi_j(0)).
std::vector<cx> verblunsky_from_moments(const std::vector<cx>& c, int count);

// Full word of an N-point measure: N-1 interior coefficients plus the
// unimodular terminal one.
VerblunskyWord verblunsky_from_measure(const UnitCircleMeasure& mu);

// Same extraction from raw moments c_0..c_n of an n-point measure (used when
// the measure is only known through a unitary and a cyclic vector).
VerblunskyWord verblunsky_word_from_moments(const std::vector<cx>& c, int n);

// Hermitian Toeplitz inner product <p, q> = sum conj(p_r) q_s c_{r-s}.
cx moment_inner_product(const std::vector<cx>& c, const Poly& p, const Poly& q);

// Moments c_0..c_K of the Bernstein-Szego measure c * dtheta/|phi(e^{i
// theta})|^2 via trapezoid quadrature on max(4096, 64*(deg+K)) points.
// Throws IllConditionedError when a root of phi is within 1e-6 of the circle.
std::vector<cx> bernstein_szego_moments(const MonicPoly& phi, int kmax);

}  // namespace opuc
