#pragma once

#include <array>
#include <cmath>
#include <string>

#include "deficit_atlas/errors.hpp"
#include "deficit_atlas/state.hpp"

namespace deficit_atlas {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kHalfPi = kPi / 2.0;

namespace detail {

// x ln x with the convention 0 ln 0 = 0.
inline double xlnx(double x) {
  return x < 1e-300 ? 0.0 : x * std::log(x);
}

inline double clip_prob(double p, const char* who) {
  if (p < -1e-12)
    throw DomainError(std::string(who) + ": eigenvalue " + std::to_string(p) +
                      " below -1e-12");
  return p < 0.0 ? 0.0 : p;
}

}  // namespace detail

/// Probability quadruple (pre- or post-measurement eigenvalues).
struct Spectrum4 {
  std::array<double, 4> p{};

  double operator[](int i) const { return p[static_cast<size_t>(i)]; }
  double sum() const { return p[0] + p[1] + p[2] + p[3]; }
};

/// Polar measurement angle, restricted to [0, pi/2] by the theta -> pi - theta
/// symmetry of the post-measurement entropy.
struct MeasurementAngle {
  double theta = 0.0;

  MeasurementAngle() = default;
  explicit MeasurementAngle(double t) : theta(t) {
    if (!(t >= 0.0 && t <= kHalfPi + 1e-12))
      throw DomainError("measurement angle outside [0, pi/2]: " + std::to_string(t));
  }
};

/// Shannon binary entropy in nats.
inline double binary_entropy(double x) {
  if (!(x >= -1e-12 && x <= 1.0 + 1e-12))
    throw DomainError("binary_entropy argument outside [0,1]: " + std::to_string(x));
  if (x < 0.0) x = 0.0;
  if (x > 1.0) x = 1.0;
  return -detail::xlnx(x) - detail::xlnx(1.0 - x);
}

inline double quaternary_entropy(const Spectrum4& s) {
  double acc = 0.0;
  for (double p : s.p) acc -= detail::xlnx(detail::clip_prob(p, "quaternary_entropy"));
  return acc;
}

inline Spectrum4 pre_spectrum(const XxzState& x) {
  return Spectrum4{{(1.0 + 2.0 * x.s1 + x.c3) / 4.0, (1.0 - 2.0 * x.s1 + x.c3) / 4.0,
                    (1.0 + 2.0 * x.c1 - x.c3) / 4.0, (1.0 - 2.0 * x.c1 - x.c3) / 4.0}};
}

inline double pre_entropy(const XxzState& x) {
  return quaternary_entropy(pre_spectrum(x));
}

/// Eigenvalues of the averaged post-measurement state. The secular equation
/// factorizes into two quadratics, so each pair shares one square root.
inline Spectrum4 post_spectrum(const XxzState& x, double theta) {
  const double ct = std::cos(theta);
  const double st = std::sin(theta);
  const double ra = std::sqrt((x.s1 + x.c3 * ct) * (x.s1 + x.c3 * ct) +
                              x.c1 * x.c1 * st * st);
  const double rb = std::sqrt((x.s1 - x.c3 * ct) * (x.s1 - x.c3 * ct) +
                              x.c1 * x.c1 * st * st);
  const double a = x.s1 * ct;
  return Spectrum4{{(1.0 + a + ra) / 4.0, (1.0 + a - ra) / 4.0,
                    (1.0 - a + rb) / 4.0, (1.0 - a - rb) / 4.0}};
}

inline Spectrum4 post_spectrum(const XxzState& x, MeasurementAngle a) {
  return post_spectrum(x, a.theta);
}

inline double post_entropy(const XxzState& x, double theta) {
  return quaternary_entropy(post_spectrum(x, theta));
}

inline double post_entropy(const XxzState& x, MeasurementAngle a) {
  return post_entropy(x, a.theta);
}

/// Closed form of the post-measurement entropy at theta = 0.
inline double post_entropy_zero_closed(const XxzState& x) {
  return 2.0 * std::log(2.0) - 0.5 * detail::xlnx(1.0 - x.c3) -
         0.25 * (detail::xlnx(1.0 + 2.0 * x.s1 + x.c3) +
                 detail::xlnx(1.0 - 2.0 * x.s1 + x.c3));
}

/// Closed form of the post-measurement entropy at theta = pi/2.
inline double post_entropy_pi_half_closed(const XxzState& x) {
  const double r = std::sqrt(x.s1 * x.s1 + x.c1 * x.c1);
  return 2.0 * std::log(2.0) -
         0.5 * (detail::xlnx(1.0 + r) + detail::xlnx(1.0 - r));
}

inline double cond_entropy(const XxzState& x, double theta) {
  return post_entropy(x, theta) - binary_entropy((1.0 + x.s1 * std::cos(theta)) / 2.0);
}

inline double cond_entropy(const XxzState& x, MeasurementAngle a) {
  return cond_entropy(x, a.theta);
}

/// Second derivative of the post-measurement entropy at theta = 0.
/// The removable singularities at s1 = -c3 and s1 = c3 are replaced by their
/// analytic limits 2/(1-c3) when the offending denominator is below 1e-8.
inline double d2_post_at_zero(const XxzState& x) {
  const double A = 1.0 + 2.0 * x.s1 + x.c3;
  const double B = 1.0 - 2.0 * x.s1 + x.c3;
  const double C = 1.0 - x.c3;
  if (C <= 0.0 || A <= 0.0 || B <= 0.0)
    throw SingularInput("d2_post_at_zero: log argument <= 0");
  const double t1 = x.s1 * std::log(A / B) + x.c3 * std::log(A * B / (C * C));
  const double b1 = std::abs(x.s1 + x.c3) < 1e-8 ? 2.0 / C
                                                 : std::log(A / C) / (x.s1 + x.c3);
  const double b2 = std::abs(x.s1 - x.c3) < 1e-8 ? 2.0 / C
                                                 : std::log(C / B) / (x.s1 - x.c3);
  return 0.25 * (t1 - x.c1 * x.c1 * (b1 + b2));
}

/// Second derivative of the post-measurement entropy at theta = pi/2, written
/// with c1^2/r^2 and s1^2/r^2 factored out so the r -> 0 limit (-c3^2) is
/// reached smoothly; ln((1+r)/(1-r))/(2r) uses an odd series for tiny r.
inline double d2_post_at_pi_half(const XxzState& x) {
  const double r2 = x.s1 * x.s1 + x.c1 * x.c1;
  const double r = std::sqrt(r2);
  if (r >= 1.0) throw SingularInput("d2_post_at_pi_half: r >= 1");
  if (r < 1e-12) return -x.c3 * x.c3;
  // L = ln((1+r)/(1-r)) / (2r)
  const double L = r < 1e-6 ? 1.0 + r2 / 3.0 + r2 * r2 / 5.0 : std::atanh(r) / r;
  return (x.c1 * x.c1 / r2) * (r2 - x.c3 * x.c3) * L -
         0.5 * (x.s1 * x.s1 / r2) *
             ((r + x.c3) * (r + x.c3) / (1.0 + r) +
              (r - x.c3) * (r - x.c3) / (1.0 - r));
}

}  // namespace deficit_atlas
