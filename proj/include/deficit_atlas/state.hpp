#pragma once

#include <cmath>
#include <string>

#include "deficit_atlas/errors.hpp"

namespace deficit_atlas {

inline constexpr double kBoundaryTol = 1e-12;

/// Correlator triple (s1, c1, c3) of a symmetric XXZ two-qubit X state.
/// Valid states live on the tetrahedron
///   c3 in [-1, 1],  |s1| <= (1+c3)/2,  |c1| <= (1-c3)/2.
struct XxzState {
  double s1 = 0.0;
  double c1 = 0.0;
  double c3 = 0.0;
};

/// Checks the three tetrahedron inequalities (inclusive, tolerance 1e-12)
/// and returns the state, or throws DomainError naming the failed one.
inline XxzState validate(double s1, double c1, double c3) {
  if (!std::isfinite(s1) || !std::isfinite(c1) || !std::isfinite(c3))
    throw DomainError("non-finite correlator");
  if (std::abs(c3) > 1.0 + kBoundaryTol)
    throw DomainError("|c3| > 1 (c3 = " + std::to_string(c3) + ")");
  if (std::abs(s1) > (1.0 + c3) / 2.0 + kBoundaryTol)
    throw DomainError("|s1| > (1+c3)/2 (s1 = " + std::to_string(s1) +
                      ", c3 = " + std::to_string(c3) + ")");
  if (std::abs(c1) > (1.0 - c3) / 2.0 + kBoundaryTol)
    throw DomainError("|c1| > (1-c3)/2 (c1 = " + std::to_string(c1) +
                      ", c3 = " + std::to_string(c3) + ")");
  return XxzState{s1, c1, c3};
}

inline bool in_domain(double s1, double c1, double c3) {
  return std::isfinite(s1) && std::isfinite(c1) && std::isfinite(c3) &&
         std::abs(c3) <= 1.0 + kBoundaryTol &&
         std::abs(s1) <= (1.0 + c3) / 2.0 + kBoundaryTol &&
         std::abs(c1) <= (1.0 - c3) / 2.0 + kBoundaryTol;
}

/// Probability weights of the Bell-mixture form
///   rho = q1 |Psi+><Psi+| + q2 |Psi-><Psi-| + q3 |00><00| + q4 |11><11|.
struct BellMixWeights {
  double q1 = 0.0;
  double q2 = 0.0;
  double q3 = 0.0;
  double q4 = 0.0;
};

inline BellMixWeights validate(const BellMixWeights& w) {
  const double qs[4] = {w.q1, w.q2, w.q3, w.q4};
  for (double q : qs)
    if (!(q >= -kBoundaryTol))
      throw DomainError("negative mixture weight " + std::to_string(q));
  if (std::abs(w.q1 + w.q2 + w.q3 + w.q4 - 1.0) > kBoundaryTol)
    throw DomainError("mixture weights do not sum to 1");
  return w;
}

inline XxzState from_bell_mixture(const BellMixWeights& w) {
  return XxzState{w.q1 + w.q2 + 2.0 * w.q3 - 1.0, w.q1 - w.q2,
                  1.0 - 2.0 * (w.q1 + w.q2)};
}

inline BellMixWeights to_bell_mixture(const XxzState& x) {
  return BellMixWeights{(1.0 + 2.0 * x.c1 - x.c3) / 4.0,
                        (1.0 - 2.0 * x.c1 - x.c3) / 4.0,
                        (1.0 + 2.0 * x.s1 + x.c3) / 4.0,
                        (1.0 - 2.0 * x.s1 + x.c3) / 4.0};
}

/// Seven-correlator general two-qubit X state.
struct GeneralXState {
  double s1 = 0.0, s2 = 0.0;
  double c1 = 0.0, c2 = 0.0;
  double c12 = 0.0, c21 = 0.0;
  double c3 = 0.0;
};

/// Result of reducing a general X state to the real five-parameter form.
struct XReduction {
  double s1 = 0.0, s2 = 0.0, c3 = 0.0;
  double u = 0.0, v = 0.0;
  bool xxz_subclass = false;  // s1=s2, c1=c2, c12=c21=0 within 1e-12
  XxzState xxz;               // meaningful only if xxz_subclass
};

/// Local z-rotations turn the complex off-diagonals into u, v >= 0.
inline XReduction reduce_general_x(const GeneralXState& g) {
  const double u2 = (g.c1 - g.c2) * (g.c1 - g.c2) + (g.c12 + g.c21) * (g.c12 + g.c21);
  const double v2 = (g.c1 + g.c2) * (g.c1 + g.c2) + (g.c12 - g.c21) * (g.c12 - g.c21);
  const double lhs1 = (1.0 + g.c3) * (1.0 + g.c3) - (g.s1 + g.s2) * (g.s1 + g.s2);
  const double lhs2 = (1.0 - g.c3) * (1.0 - g.c3) - (g.s1 - g.s2) * (g.s1 - g.s2);
  if (lhs1 < u2 - kBoundaryTol)
    throw DomainError("(1+c3)^2 - (s1+s2)^2 < u^2");
  if (lhs2 < v2 - kBoundaryTol)
    throw DomainError("(1-c3)^2 - (s1-s2)^2 < v^2");

  XReduction r;
  r.s1 = g.s1;
  r.s2 = g.s2;
  r.c3 = g.c3;
  r.u = std::sqrt(u2);
  r.v = std::sqrt(v2);
  r.xxz_subclass = std::abs(g.s1 - g.s2) <= kBoundaryTol &&
                   std::abs(g.c1 - g.c2) <= kBoundaryTol &&
                   std::abs(g.c12) <= kBoundaryTol && std::abs(g.c21) <= kBoundaryTol;
  if (r.xxz_subclass) r.xxz = validate(g.s1, g.c1, g.c3);
  return r;
}

}  // namespace deficit_atlas
