#pragma once

// Schur algorithm on rational Schur functions, closed-form Schur parameters
// of lambda * Phi_n/Phi_n^*, and Caratheodory evaluations.

#include <vector>

#include "opuc/common.hpp"
#include "opuc/poly.hpp"
#include "opuc/szego.hpp"

namespace opuc {

// f = num/den, analytic on the closed disk with sup norm <= 1.  Construction
// checks that den has no roots in the closed unit disk and samples |f| on 512
// circle points against 1 + 1e-10.
class RationalSchurFn {
 public:
  RationalSchurFn(Poly num, Poly den);

  cx operator()(cx z) const { return peval(num_, z) / peval(den_, z); }
  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }

  // scale * Phi_m / Phi_m^* for the interior part of the word; with
  // |scale| = 1 this is the Blaschke product through the zeros of Phi_m.
  static RationalSchurFn blaschke(const VerblunskyWord& word, cx scale = cx(1.0));

 private:
  Poly num_, den_;
};

// Schur parameters gamma_0..gamma_{steps-1} by Moebius peeling with the
// removable factor z cancelled in exact coefficient arithmetic.  Stops early
// (shorter list) once a parameter lands on the circle, which is the finite
// Blaschke termination.
std::vector<cx> schur_algorithm(const RationalSchurFn& f, int steps);

// (-lambda conj(alpha_{m-1}), ..., -lambda conj(alpha_0), lambda): the Schur
// parameters of lambda B_m.  Requires the terminal coefficient.
std::vector<cx> schur_params_closed_form(const VerblunskyWord& word);

cx caratheodory(const RationalSchurFn& f, cx z);      // (1 + z f)/(1 - z f)
cx caratheodory(const UnitCircleMeasure& mu, cx z);   // sum w_j (n_j+z)/(n_j-z)

// F_m = Psi_m^*/Phi_m^* for the interior word (Caratheodory function of the
// measure whose coefficients continue with zeros).
cx caratheodory_Fn(const VerblunskyWord& word, cx z);

}  // namespace opuc
