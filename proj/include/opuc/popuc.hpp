#pragma once

// Paraorthogonal zeros on the circle, Christoffel weights, M-functions and
// the spectral-measure word identity.

#include <utility>
#include <vector>

#include "opuc/common.hpp"
#include "opuc/szego.hpp"

namespace opuc {

// For one unimodular lambda: the m+1 zeros of Phi_{m+1}(.; lambda) in
// increasing argument, their masses m_j and Christoffel numbers q_j.
struct PonceletFrame {
  cx lambda;
  std::vector<cx> zeros;
  std::vector<double> weights;      // m_j, sum to 1
  std::vector<double> christoffel;  // q_j

  int size() const { return static_cast<int>(zeros.size()); }
};

// Simple unimodular zeros found by tracking the strictly increasing phase of
// e^{i theta} Phi_m/Phi_m^* (total increase 2 pi (m+1)), bisecting each
// crossing of arg(conj(lambda)) and polishing with Newton in theta.
PonceletFrame popuc_zeros(const VerblunskyWord& word, cx lambda);

// q_j = 1 / sum_{k<=m} |phi_k(w_j)|^2 and m_j = q_j |phi_m(w_j)|^2, cross
// checked against the normalized eigenvector route on the GGT unitary.
std::pair<std::vector<double>, std::vector<double>> christoffel_weights(
    const VerblunskyWord& word, cx lambda, const std::vector<cx>& zeros);

// Frame spectral measure d nu = sum m_j delta_{w_j}.
UnitCircleMeasure spectral_measure(const PonceletFrame& frame);

// M(z) = sum w_j/(z - node_j).
cx m_function(const UnitCircleMeasure& mu, cx z);

// Frame form: the partial fraction sum, asserted against Phi_m/Phi_{m+1} to
// 1e-9 relative.
cx m_function(const VerblunskyWord& word, const PonceletFrame& frame, cx z);

// Word of the frame measure: checked against the reversal closed form
// (-lambda conj(alpha_{m-1-j}), terminal lambda) and returned in that form.
VerblunskyWord nu_verblunsky(const VerblunskyWord& word, const PonceletFrame& frame);

}  // namespace opuc
