#pragma once

// Numerical range boundary of a GGT contraction: the Poncelet tangent-point
// sweep as the primary construction, a Jacobi support-function oracle as the
// independent second route, membership tests and complete-graph chords.

#include <optional>
#include <vector>

#include "opuc/common.hpp"
#include "opuc/linalg.hpp"
#include "opuc/szego.hpp"

namespace opuc {

struct Provenance {
  std::optional<cx> lambda;             // tangent-sweep points
  int edge = -1;                        // edge index within the lambda polygon
  std::optional<double> support_angle;  // oracle points
};

// Ordered samples of a closed strictly convex curve.
struct BoundaryCurve {
  std::vector<cx> samples;
  std::vector<Provenance> provenance;
};

// zeta_j = (m_j w_{j+1} + m_{j+1} w_j)/(m_j + m_{j+1}), indices cyclic; the
// point dividing edge j of the lambda polygon in ratio m_j : m_{j+1}.
std::vector<cx> tangent_points(const VerblunskyWord& word, cx lambda);

// Tangent points over lambda = exp(2 pi i k/num_lambda), ordered by argument
// about their centroid and convexity-checked.
BoundaryCurve boundary_sweep(const VerblunskyWord& word, int num_lambda);

// Support height of the numerical range of A in direction angle: the top
// eigenvalue of (e^{-i angle} A + e^{i angle} A^*)/2.
double support_height(const CMat& a, double angle);

// Boundary point <v, A v> for the top eigenvector at each angle.
BoundaryCurve support_oracle(const CMat& a, const std::vector<double>& angles);

// Half-plane membership against 128 support directions.
bool contains(const CMat& a, cx point, double slack);
bool contains(const VerblunskyWord& word, cx point, double slack);

struct Chord {
  cx lambda;
  int i = 0;
  int j = 0;
  cx from;
  cx to;
};

// All C(m+2, 2) chords between POPUC zero pairs, for each sampled lambda;
// plotting data for the complete-graph envelope.
std::vector<Chord> kippenhahn_chords(const VerblunskyWord& word, int num_lambda);

// Support height of the sampled curve (max projection over samples).
double polyline_support(const BoundaryCurve& curve, double angle);

// Smooth support function of a swept curve, interpolating the exact
// tangent-line support values recorded in the provenance (falls back to the
// sample maximum when the curve carries no tangent data).
class SupportTable {
 public:
  explicit SupportTable(const BoundaryCurve& curve);
  double operator()(double angle) const;

 private:
  std::vector<double> angles_;  // strictly increasing in [0, 2 pi)
  std::vector<double> heights_;
  std::vector<cx> points_;      // fallback
};

// Distance from a point to the closed polyline through the samples.
double point_to_polyline(const BoundaryCurve& curve, cx p);

// max(d1, d2): oracle samples to the sweep polyline, and sweep samples to the
// oracle body through its support function (refined maximization over the
// direction).  Discretization-safe curve distance used by the test suites.
double curve_distance(const BoundaryCurve& sweep, const CMat& a, const BoundaryCurve& oracle);

}  // namespace opuc
