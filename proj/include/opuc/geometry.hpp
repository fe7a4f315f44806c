#pragma once

// Critical-point geometry (midpoint tangency, Steiner foci, feasibility of
// prescribed critical points) and the Poncelet tangent-chord billiard.

#include <optional>
#include <vector>

#include "opuc/common.hpp"
#include "opuc/numrange.hpp"
#include "opuc/poly.hpp"
#include "opuc/szego.hpp"

namespace opuc {

struct Ellipse {
  cx focus1;
  cx focus2;
  double semimajor = 0.0;

  Ellipse(cx f1, cx f2, double a);

  cx center() const { return 0.5 * (focus1 + focus2); }
  double focal_half() const { return 0.5 * std::abs(focus2 - focus1); }
  double semiminor() const;
  double axis_angle() const;          // direction of the major axis
  double support(double angle) const; // support function about the origin
  cx boundary_point(double t) const;  // parametric boundary
};

// The two Steiner focus values for a triangle; equal to the roots of P' with
// P the monic cubic through the vertices.
std::pair<cx, cx> steiner_foci(cx z1, cx z2, cx z3);

struct MidpointWordResult {
  VerblunskyWord word;  // interior, length n for an (n+1)-gon
  cx lambda;
};

// Word whose numerical range is tangent to the polygon edge midpoints:
// Phi_n = P'/(n+1).  Verifies the tangent points land on the midpoints.
MidpointWordResult midpoint_word(const std::vector<cx>& vertices);

struct CriticalReport {
  bool feasible = false;
  cx lambda;                     // best parameter found
  std::vector<cx> residuals;     // per-index residual of the coefficient equations
  double max_residual = 0.0;
  std::vector<cx> sym;           // elementary symmetric functions s_1..s_n
  std::optional<MonicPoly> witness;  // Phi_{n+1}(.; lambda) when feasible
};

// Are the given disk points the critical points of a polynomial with all
// zeros on the circle?  Residual system solved in lambda: closed form at the
// middle index for odd n, otherwise a 4096-point grid scan with Newton
// refinement.
CriticalReport critical_feasibility(const std::vector<cx>& points);

struct ClosureReport {
  double argsum = 0.0;
  double defect = 0.0;
  std::vector<cx> vertices;  // w0, B(w0), ..., B^steps(w0)
};

// Iterate the tangent-chord map from w0: each step takes the chord through
// the current point tangent to the body, leaving the body on the clockwise
// side, and lands on its second circle intersection.
ClosureReport billiard_closure(const Ellipse& body, cx w0, int steps);
ClosureReport billiard_closure(const BoundaryCurve& body, cx w0, int steps);

// The ellipse with the given foci whose billiard closes an ngon-gon; found by
// bisection on the semimajor axis (the argsum is monotone) and verified from
// five start points.
Ellipse closure_eccentricity(cx focus1, cx focus2, int ngon);

}  // namespace opuc
