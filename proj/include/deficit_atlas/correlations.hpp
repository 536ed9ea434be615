#pragma once

#include <algorithm>
#include <cmath>
#include <optional>

#include "deficit_atlas/entropy.hpp"
#include "deficit_atlas/errors.hpp"
#include "deficit_atlas/golden.hpp"
#include "deficit_atlas/state.hpp"

namespace deficit_atlas {

enum class PhaseLabel { Zero, PiHalf, Theta };

inline const char* to_string(PhaseLabel p) {
  switch (p) {
    case PhaseLabel::Zero: return "0";
    case PhaseLabel::PiHalf: return "pi2";
    default: return "theta";
  }
}

/// Optimized correlation value with its phase classification.
struct DeficitResult {
  double value = 0.0;          // nats
  PhaseLabel phase = PhaseLabel::Zero;
  double theta_opt = 0.0;      // radians
  double branch_zero = 0.0;    // Delta_0 (or Q_0)
  double branch_pi_half = 0.0; // Delta_pi/2 (or Q_pi/2)
  std::optional<double> branch_theta;  // interior branch, if distinct
};

inline constexpr int kGridPoints = 201;
inline constexpr double kAngleTol = 1e-10;
inline constexpr double kEndpointTol = 1e-6;
inline constexpr double kValueTieTol = 1e-12;

/// Measurement-dependent one-way deficit Delta(theta) = S~(theta) - S.
inline double deficit_at(const XxzState& x, double theta) {
  return post_entropy(x, theta) - pre_entropy(x);
}

inline double deficit_at(const XxzState& x, MeasurementAngle a) {
  return deficit_at(x, a.theta);
}

/// 0-branch closed form. Independent of s1; identical to the discord branch Q_0.
inline double deficit_branch_0(const XxzState& x) {
  const double a = 1.0 + 2.0 * x.c1 - x.c3;
  const double b = 1.0 - 2.0 * x.c1 - x.c3;
  if (a < -1e-12 || b < -1e-12)
    throw SingularInput("deficit_branch_0: negative log argument");
  return -0.5 * detail::xlnx(1.0 - x.c3) +
         0.25 * (detail::xlnx(a) + detail::xlnx(b));
}

/// pi/2-branch closed form.
inline double deficit_branch_pi2(const XxzState& x) {
  const double r = std::sqrt(x.s1 * x.s1 + x.c1 * x.c1);
  if (r > 1.0 + 1e-12)
    throw SingularInput("deficit_branch_pi2: r > 1");
  return -0.5 * (detail::xlnx(1.0 + r) + detail::xlnx(std::max(0.0, 1.0 - r))) +
         0.25 * (detail::xlnx(1.0 + 2.0 * x.c1 - x.c3) +
                 detail::xlnx(std::max(0.0, 1.0 - 2.0 * x.c1 - x.c3)) +
                 detail::xlnx(1.0 + 2.0 * x.s1 + x.c3) +
                 detail::xlnx(std::max(0.0, 1.0 - 2.0 * x.s1 + x.c3)));
}

/// Global minimum of Delta(theta) over [0, pi/2] by a 201-point grid followed
/// by golden-section refinement of every local-minimum bracket. The profile
/// can be bimodal, so a single descent would be unsound.
inline MinResult minimize_interior(const XxzState& x, int grid_points = kGridPoints) {
  return grid_golden_min([&x](double t) { return deficit_at(x, t); }, 0.0, kHalfPi,
                         grid_points, kAngleTol);
}

namespace detail {

template <class F>
DeficitResult optimize_branches(F&& objective, double branch0, double branch_pi2) {
  MinResult m = grid_golden_min(objective, 0.0, kHalfPi, kGridPoints, kAngleTol);
  DeficitResult r;
  r.branch_zero = branch0;
  r.branch_pi_half = branch_pi2;
  r.value = std::min(std::min(branch0, branch_pi2), m.value);
  const bool interior = m.x > kEndpointTol && m.x < kHalfPi - kEndpointTol;
  if (interior) r.branch_theta = m.value;
  // ties resolved deterministically in the order Zero, PiHalf, Theta
  if (branch0 <= r.value + kValueTieTol) {
    r.phase = PhaseLabel::Zero;
    r.theta_opt = 0.0;
    r.value = branch0;
  } else if (branch_pi2 <= r.value + kValueTieTol) {
    r.phase = PhaseLabel::PiHalf;
    r.theta_opt = kHalfPi;
    r.value = branch_pi2;
  } else {
    r.phase = PhaseLabel::Theta;
    r.theta_opt = m.x;
    r.value = m.value;
  }
  return r;
}

}  // namespace detail

/// Optimized one-way deficit Delta = min{Delta_0, Delta_pi/2, Delta_theta}.
inline DeficitResult deficit(const XxzState& x) {
  return detail::optimize_branches([&x](double t) { return deficit_at(x, t); },
                                   deficit_branch_0(x), deficit_branch_pi2(x));
}

/// Measurement-dependent discord Q(theta) = Delta(theta) + h((1+s1)/2)
/// - h((1+s1 cos theta)/2).
inline double discord_at(const XxzState& x, double theta) {
  // grouping keeps Q(0) = Delta(0) bit-exact: at theta = 0 the two marginal
  // entropies are identical and the correction cancels to zero
  return deficit_at(x, theta) + (binary_entropy((1.0 + x.s1) / 2.0) -
                                 binary_entropy((1.0 + x.s1 * std::cos(theta)) / 2.0));
}

inline double discord_at(const XxzState& x, MeasurementAngle a) {
  return discord_at(x, a.theta);
}

/// Optimized discord Q = min{Q_0, Q_pi/2, Q_theta*}, same machinery as deficit.
inline DeficitResult discord(const XxzState& x) {
  const double h_s1 = binary_entropy((1.0 + x.s1) / 2.0);
  const double q0 = deficit_branch_0(x);  // Q_0 = Delta_0
  const double qp = deficit_branch_pi2(x) + h_s1 - std::log(2.0);
  return detail::optimize_branches([&x](double t) { return discord_at(x, t); }, q0, qp);
}

/// Common deficit/discord value on the Bell-diagonal edge c3 = -1, s1 = 0.
inline double bell_diagonal_value(double c1) {
  if (std::abs(c1) > 1.0 + 1e-12)
    throw DomainError("bell_diagonal_value: |c1| > 1");
  c1 = std::clamp(c1, -1.0, 1.0);
  return 0.5 * (detail::xlnx(1.0 + c1) + detail::xlnx(1.0 - c1));
}

}  // namespace deficit_atlas
