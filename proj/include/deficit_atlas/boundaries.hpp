#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <vector>

#include "deficit_atlas/correlations.hpp"
#include "deficit_atlas/entropy.hpp"
#include "deficit_atlas/errors.hpp"
#include "deficit_atlas/golden.hpp"
#include "deficit_atlas/state.hpp"

namespace deficit_atlas {

/// The four critical conditions separating the deficit phases.
enum class BoundaryKind {
  Zero,       // S~''(0) = 0: interior minimum bifurcates from theta = 0
  PiHalf,     // S~''(pi/2) = 0: bifurcation at theta = pi/2
  ZeroPrime,  // Delta_0 = Delta_theta: endpoint ties with an interior minimum
  Equal       // Delta_0 = Delta_pi/2: equilibrium of the two endpoint branches
};

inline const char* to_string(BoundaryKind k) {
  switch (k) {
    case BoundaryKind::Zero: return "zero";
    case BoundaryKind::PiHalf: return "pi2";
    case BoundaryKind::ZeroPrime: return "zeroprime";
    default: return "equal";
  }
}

enum class Axis { S1, C1 };

/// Traced critical curve. For fixed-c3 slices all points share the slice c3;
/// face curves vary c3 along the curve (the slice c3 field is then NaN).
struct BoundaryCurve {
  BoundaryKind kind = BoundaryKind::Zero;
  double c3 = std::numeric_limits<double>::quiet_NaN();
  std::vector<XxzState> points;
  bool start_on_edge = false;  // terminates on the slice rectangle edge
  bool end_on_edge = false;    // (otherwise: lost at a curve junction)
};

inline constexpr double kInteriorWindow = 1e-4;  // rad, for the 0' condition
inline constexpr double kBisectTol = 1e-9;
inline constexpr int kBisectMaxIter = 80;
inline constexpr double kDefaultStep = 0.002;

/// Best interior local minimum of Delta over the window [delta, pi/2 - delta].
/// Only genuine interior stationary minima count: a minimum that is merely the
/// window edge of a monotone profile, or one born exactly on the edge, throws
/// NoInteriorMinimum. Near the 0' boundary the interior minimum can sit above
/// the global window minimum, so a plain global search would miss it.
inline MinResult interior_minimum(const XxzState& x, double delta = kInteriorWindow) {
  auto f = [&x](double t) { return deficit_at(x, t); };
  const double lo = delta, hi = kHalfPi - delta;
  const int n = kGridPoints;
  std::vector<double> xs(static_cast<size_t>(n)), vs(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    xs[static_cast<size_t>(i)] = lo + (hi - lo) * i / (n - 1);
    vs[static_cast<size_t>(i)] = f(xs[static_cast<size_t>(i)]);
  }
  MinResult best{};
  bool have = false;
  for (int i = 1; i + 1 < n; ++i) {
    const size_t k = static_cast<size_t>(i);
    if (!(vs[k] <= vs[k - 1] && vs[k] <= vs[k + 1])) continue;
    const MinResult r = golden_section(f, xs[k - 1], xs[k + 1], kAngleTol);
    if (r.x <= lo + 1e-6 || r.x >= hi - 1e-6) continue;
    if (!have || r.value < best.value) {
      best = r;
      have = true;
    }
  }
  if (!have)
    throw NoInteriorMinimum("no interior stationary minimum in the window");
  return best;
}

/// Signed residual of a critical condition; its zero set is the boundary.
inline double residual(BoundaryKind kind, const XxzState& x) {
  if (!in_domain(x.s1, x.c1, x.c3))
    throw DomainError("residual: state outside the tetrahedron");
  switch (kind) {
    case BoundaryKind::Zero:
      return d2_post_at_zero(x);
    case BoundaryKind::PiHalf:
      return d2_post_at_pi_half(x);
    case BoundaryKind::Equal:
      return deficit_branch_0(x) - deficit_branch_pi2(x);
    case BoundaryKind::ZeroPrime:
    default: {
      // window-global minimum, edges included: left of the crossing the window
      // edge value exceeds Delta_0 by ~S''(0) delta^2 / 2, giving a tiny but
      // strictly signed negative residual even before the interior minimum is
      // born (the fold sits only O(1e-4) before the crossing)
      const MinResult m =
          grid_golden_min([&x](double t) { return deficit_at(x, t); },
                          kInteriorWindow, kHalfPi - kInteriorWindow, kGridPoints,
                          kAngleTol);
      return deficit_branch_0(x) - m.value;
    }
  }
}

namespace detail {

inline XxzState slice_state(Axis free_axis, double free, Axis fixed_axis,
                            double fixed, double c3) {
  return free_axis == Axis::S1 ? XxzState{free, fixed, c3}
                               : XxzState{fixed, free, c3};
}

// NaN when the residual is not evaluable (singular set, no interior minimum).
template <class F>
double try_eval(F&& f, double t) {
  try {
    return f(t);
  } catch (const SingularInput&) {
  } catch (const NoInteriorMinimum&) {
  } catch (const DomainError&) {
  }
  return std::numeric_limits<double>::quiet_NaN();
}

template <class F>
double bisect(F&& f, double lo, double hi, double flo, double fhi) {
  if (!(flo * fhi < 0.0))
    throw BracketError("no sign change on [" + std::to_string(lo) + ", " +
                       std::to_string(hi) + "]");
  for (int i = 0; i < kBisectMaxIter; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (hi - lo < kBisectTol) return mid;
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    if (flo * fm < 0.0) {
      hi = mid;
    } else {
      lo = mid;
      flo = fm;
    }
  }
  throw ConvergenceError("bisection did not converge in 80 iterations");
}

}  // namespace detail

/// Bisection root of the residual along the free axis, with the other of
/// s1/c1 held at `fixed_value`.
inline double solve_boundary(BoundaryKind kind, double c3, Axis fixed_axis,
                             double fixed_value, double lo, double hi) {
  const Axis free_axis = fixed_axis == Axis::S1 ? Axis::C1 : Axis::S1;
  const double free_max =
      free_axis == Axis::S1 ? (1.0 + c3) / 2.0 : (1.0 - c3) / 2.0;
  lo = std::max(lo, -free_max + 1e-9);
  hi = std::min(hi, free_max - 1e-9);
  auto f = [&](double t) {
    return residual(kind, detail::slice_state(free_axis, t, fixed_axis, fixed_value, c3));
  };
  // endpoints may be non-evaluable (no interior minimum, singular set); fall
  // back to an inward scan for an evaluable sign-changing pair
  double root = std::numeric_limits<double>::quiet_NaN();
  const double flo = detail::try_eval(f, lo), fhi = detail::try_eval(f, hi);
  if (!std::isnan(flo) && !std::isnan(fhi) && flo * fhi < 0.0) {
    root = detail::bisect(f, lo, hi, flo, fhi);
  } else {
    const int n = 64;
    double prev_t = std::numeric_limits<double>::quiet_NaN(), prev_v = 0.0;
    for (int i = 0; i <= n && std::isnan(root); ++i) {
      const double t = lo + (hi - lo) * i / n;
      const double v = detail::try_eval(f, t);
      if (std::isnan(v)) {
        prev_t = std::numeric_limits<double>::quiet_NaN();
        continue;
      }
      if (!std::isnan(prev_t) && prev_v * v < 0.0)
        root = detail::bisect(f, prev_t, t, prev_v, v);
      prev_t = t;
      prev_v = v;
    }
    if (std::isnan(root))
      throw BracketError("no sign change on [" + std::to_string(lo) + ", " +
                         std::to_string(hi) + "]");
  }
  if (!in_domain(free_axis == Axis::S1 ? root : fixed_value,
                 free_axis == Axis::C1 ? root : fixed_value, c3))
    throw NotFound("boundary root lies outside the tetrahedron");
  return root;
}

namespace detail {

struct MarchResult {
  std::vector<std::pair<double, double>> points;  // (march coord, free coord)
  bool start_on_edge = false;
  bool end_on_edge = false;
};

// Continuation along one axis: at each march position, bisect the residual on
// the free axis, seeding the bracket from the previous root and widening on
// failure. residual_f(march, free) may throw; non-evaluable points read as NaN.
inline MarchResult march_curve(const std::function<double(double, double)>& residual_f,
                               double march_lo, double march_hi, double free_lo,
                               double free_hi, double step) {
  const double margin = 1e-9;
  auto eval = [&](double m, double f) {
    return try_eval([&](double ff) { return residual_f(m, ff); }, f);
  };

  auto root_near = [&](double m, double guess,
                       bool& ok) -> double {  // bracket = guess +- 5*step, widened x2 up to 5 times
    double half = 5.0 * step;
    for (int w = 0; w <= 5; ++w, half *= 2.0) {
      double lo = std::max(free_lo + margin, guess - half);
      double hi = std::min(free_hi - margin, guess + half);
      if (lo >= hi) break;
      double flo = eval(m, lo), fhi = eval(m, hi);
      if (std::isnan(flo) || std::isnan(fhi)) {
        // sample inward for an evaluable, sign-changing pair
        const int n = 16;
        double prev_t = std::numeric_limits<double>::quiet_NaN(), prev_v = 0.0;
        for (int i = 0; i <= n; ++i) {
          const double t = lo + (hi - lo) * i / n;
          const double v = eval(m, t);
          if (std::isnan(v)) continue;
          if (!std::isnan(prev_t) && prev_v * v < 0.0) {
            ok = true;
            return bisect([&](double ff) { return residual_f(m, ff); }, prev_t, t,
                          prev_v, v);
          }
          prev_t = t;
          prev_v = v;
        }
        continue;
      }
      if (flo * fhi < 0.0) {
        ok = true;
        return bisect([&](double ff) { return residual_f(m, ff); }, lo, hi, flo, fhi);
      }
    }
    ok = false;
    return 0.0;
  };

  // scan seed columns for a starting root
  MarchResult out;
  const int seed_columns = 200;
  const int free_samples = 100;
  double m0 = 0.0, f0 = 0.0;
  bool found = false;
  for (int j = 0; j < seed_columns && !found; ++j) {
    const double m = march_lo + (march_hi - march_lo) * (j + 0.5) / seed_columns;
    double prev_t = std::numeric_limits<double>::quiet_NaN(), prev_v = 0.0;
    for (int i = 0; i <= free_samples; ++i) {
      const double t = free_lo + margin + (free_hi - free_lo - 2 * margin) * i / free_samples;
      const double v = eval(m, t);
      if (std::isnan(v)) {
        prev_t = std::numeric_limits<double>::quiet_NaN();
        continue;
      }
      if (!std::isnan(prev_t) && prev_v * v < 0.0) {
        m0 = m;
        f0 = bisect([&](double ff) { return residual_f(m, ff); }, prev_t, t, prev_v, v);
        found = true;
        break;
      }
      prev_t = t;
      prev_v = v;
    }
  }
  if (!found) throw EmptyCurve("no starting root found on a scan of 200 seed columns");

  auto march = [&](double dir, std::vector<std::pair<double, double>>& pts,
                   bool& on_edge) {
    double m = m0, f = f0;
    on_edge = false;
    for (;;) {
      const double next = m + dir * step;
      if (next < march_lo - 1e-15 || next > march_hi + 1e-15) {
        on_edge = true;
        return;
      }
      bool ok = false;
      const double root = root_near(next, f, ok);
      if (!ok) return;  // junction: bracket cannot be re-established
      m = next;
      f = root;
      pts.emplace_back(m, f);
      if (f >= free_hi - 2.0 * margin || f <= free_lo + 2.0 * margin) {
        on_edge = true;
        return;
      }
    }
  };

  std::vector<std::pair<double, double>> down, up;
  march(-1.0, down, out.start_on_edge);
  march(+1.0, up, out.end_on_edge);
  out.points.reserve(down.size() + up.size() + 1);
  for (auto it = down.rbegin(); it != down.rend(); ++it) out.points.push_back(*it);
  out.points.emplace_back(m0, f0);
  for (const auto& p : up) out.points.push_back(p);
  return out;
}

}  // namespace detail

/// Traces one critical curve in the quadrant s1 >= 0, c1 >= 0 of the slice
/// c3 = const. Zero, PiHalf and Equal march in c1 solving for s1; ZeroPrime
/// marches in s1 solving for c1 (the curves are single-valued that way round).
inline BoundaryCurve trace_slice(BoundaryKind kind, double c3,
                                 double step = kDefaultStep) {
  if (!(c3 > -1.0 && c3 < 1.0)) throw DomainError("trace_slice: c3 outside (-1, 1)");
  if (!(step > 0.0 && step <= 0.05)) throw DomainError("trace_slice: bad step");
  const double s1max = (1.0 + c3) / 2.0;
  const double c1max = (1.0 - c3) / 2.0;
  const bool march_s1 = kind == BoundaryKind::ZeroPrime;

  auto res = [&](double m, double f) {
    const XxzState x = march_s1 ? XxzState{m, f, c3} : XxzState{f, m, c3};
    return residual(kind, x);
  };
  detail::MarchResult mr =
      march_s1 ? detail::march_curve(res, 0.0, s1max, 0.0, c1max, step)
               : detail::march_curve(res, 0.0, c1max, 0.0, s1max, step);

  BoundaryCurve curve;
  curve.kind = kind;
  curve.c3 = c3;
  curve.start_on_edge = mr.start_on_edge;
  curve.end_on_edge = mr.end_on_edge;
  curve.points.reserve(mr.points.size());
  for (const auto& [m, f] : mr.points)
    curve.points.push_back(march_s1 ? XxzState{m, f, c3} : XxzState{f, m, c3});
  return curve;
}

namespace detail {

// Limit of d2_post_at_zero along the tetrahedron edge s1 = (1+c3)/2,
// c1 = (1-c3)/2, where the log(1-2s1+c3) divergences cancel identically.
inline double d2_zero_edge(double c3) {
  const double s1 = (1.0 + c3) / 2.0;
  const double c1 = (1.0 - c3) / 2.0;
  const double lnA = std::log(2.0 * (1.0 + c3));
  const double lnC = std::log(1.0 - c3);
  const double sp = s1 + c3;  // (1+3c3)/2, nonzero away from c3 = -1/3
  return 0.25 * (sp * lnA - 2.0 * c3 * lnC - c1 * c1 * (lnA - lnC) / sp -
                 c1 * c1 * lnC / (s1 - c3));
}

// Root of the residual in the free coordinate on a tetrahedron face,
// bracketing by a scan.
inline double face_root(BoundaryKind kind, double c3, Axis fixed_axis) {
  const double fixed =
      fixed_axis == Axis::S1 ? (1.0 + c3) / 2.0 : (1.0 - c3) / 2.0;
  const Axis free_axis = fixed_axis == Axis::S1 ? Axis::C1 : Axis::S1;
  const double free_max =
      free_axis == Axis::S1 ? (1.0 + c3) / 2.0 : (1.0 - c3) / 2.0;
  auto f = [&](double t) {
    return residual(kind, slice_state(free_axis, t, fixed_axis, fixed, c3));
  };
  const int n = 400;
  double prev_t = std::numeric_limits<double>::quiet_NaN(), prev_v = 0.0;
  for (int i = 0; i <= n; ++i) {
    const double t = 1e-9 + (free_max - 2e-9) * i / n;
    const double v = try_eval(f, t);
    if (std::isnan(v)) {
      prev_t = std::numeric_limits<double>::quiet_NaN();
      continue;
    }
    if (!std::isnan(prev_t) && prev_v * v < 0.0)
      return bisect(f, prev_t, t, prev_v, v);
    prev_t = t;
    prev_v = v;
  }
  throw NotFound("no face root for " + std::string(to_string(kind)) +
                 " at c3 = " + std::to_string(c3));
}

}  // namespace detail

/// c3 where the Zero boundary reaches the v1-v4 edge (|c1| = 0.5 there).
inline double landmark_a_c3() {
  return detail::bisect([](double c3) { return detail::d2_zero_edge(c3); }, -0.25,
                        0.3, detail::d2_zero_edge(-0.25), detail::d2_zero_edge(0.3));
}

/// c3 where the PiHalf boundary reaches the edge corner
/// s1 = (1+c3)/2, c1 = (1-c3)/2.
inline double landmark_b_c3() {
  auto corner = [](double c3) {
    return d2_post_at_pi_half(XxzState{(1.0 + c3) / 2.0, (1.0 - c3) / 2.0, c3});
  };
  return detail::bisect(corner, -0.5, -0.2, corner(-0.5), corner(-0.2));
}

/// c3 where the PiHalf and ZeroPrime endpoints meet on the face s1 = (1+c3)/2.
inline double landmark_c_c3() {
  auto gap = [](double c3) {
    return detail::face_root(BoundaryKind::PiHalf, c3, Axis::S1) -
           detail::face_root(BoundaryKind::ZeroPrime, c3, Axis::S1);
  };
  return detail::bisect(gap, -0.57, -0.5, gap(-0.57), gap(-0.5));
}

/// Phase boundaries on the two faces adjacent to the v1-v4 edge, plus the
/// landmark points where curves meet that edge.
struct FaceDiagram {
  std::vector<BoundaryCurve> curves;  // points carry varying c3
  double landmark_a_c3 = 0.0;  // Zero boundary reaches the edge (c1 = 0.5 there)
  double landmark_b_c3 = 0.0;  // PiHalf boundary reaches the edge corner
  double landmark_c_c3 = 0.0;  // PiHalf and ZeroPrime endpoints meet
};

inline FaceDiagram trace_faces(double step = kDefaultStep) {
  if (!(step > 0.0 && step <= 0.05)) throw DomainError("trace_faces: bad step");
  FaceDiagram out;

  // Curves parameterized by c3, one face coordinate pinned. The upper face is
  // taken at c1 = +(1-c3)/2 (all quantities are symmetric under c1 -> -c1).
  struct FaceSpec {
    BoundaryKind kind;
    Axis fixed_axis;  // S1 pins s1 = (1+c3)/2 (lower face), C1 pins c1 = (1-c3)/2
  };
  const FaceSpec specs[] = {
      {BoundaryKind::Zero, Axis::C1},      {BoundaryKind::PiHalf, Axis::C1},
      {BoundaryKind::Zero, Axis::S1},      {BoundaryKind::PiHalf, Axis::S1},
      {BoundaryKind::ZeroPrime, Axis::S1}, {BoundaryKind::Equal, Axis::S1},
  };
  for (const FaceSpec& fs : specs) {
    auto res = [&](double c3, double f) {
      const double fixed =
          fs.fixed_axis == Axis::S1 ? (1.0 + c3) / 2.0 : (1.0 - c3) / 2.0;
      const Axis free_axis = fs.fixed_axis == Axis::S1 ? Axis::C1 : Axis::S1;
      return residual(fs.kind, detail::slice_state(free_axis, f, fs.fixed_axis, fixed, c3));
    };
    try {
      // free coordinate range: conservative envelope max over c3 of the face
      detail::MarchResult mr =
          detail::march_curve(res, -1.0 + 1e-6, 1.0 / 3.0, 0.0, 1.0, step);
      BoundaryCurve curve;
      curve.kind = fs.kind;
      curve.start_on_edge = mr.start_on_edge;
      curve.end_on_edge = mr.end_on_edge;
      for (const auto& [c3, f] : mr.points) {
        const double fixed =
            fs.fixed_axis == Axis::S1 ? (1.0 + c3) / 2.0 : (1.0 - c3) / 2.0;
        curve.points.push_back(fs.fixed_axis == Axis::S1 ? XxzState{fixed, f, c3}
                                                         : XxzState{f, fixed, c3});
      }
      // drop points the envelope let through outside the tetrahedron
      std::erase_if(curve.points, [](const XxzState& x) {
        return !in_domain(x.s1, x.c1, x.c3);
      });
      if (!curve.points.empty()) out.curves.push_back(std::move(curve));
    } catch (const EmptyCurve&) {
    }
  }

  out.landmark_a_c3 = landmark_a_c3();
  out.landmark_b_c3 = landmark_b_c3();
  out.landmark_c_c3 = landmark_c_c3();
  return out;
}

/// Intersection of the Equal boundary with the PiHalf boundary in the slice
/// c3 = const, where all three branch values tie pairwise.
inline XxzState find_triple_point(double c3, double step = kDefaultStep) {
  BoundaryCurve pihalf = [&] {
    try {
      return trace_slice(BoundaryKind::PiHalf, c3, step);
    } catch (const EmptyCurve&) {
      throw NotFound("no PiHalf boundary in this slice");
    }
  }();

  auto equal_on_curve = [&](double c1, double s1_guess) {
    // re-solve s1 on the PiHalf curve, then evaluate the Equal residual there
    auto res = [&](double m, double f) {
      return residual(BoundaryKind::PiHalf, XxzState{f, m, c3});
    };
    double half = 5.0 * step;
    const double s1max = (1.0 + c3) / 2.0;
    for (int w = 0; w <= 5; ++w, half *= 2.0) {
      const double lo = std::max(1e-9, s1_guess - half);
      const double hi = std::min(s1max - 1e-9, s1_guess + half);
      const double flo = detail::try_eval([&](double t) { return res(c1, t); }, lo);
      const double fhi = detail::try_eval([&](double t) { return res(c1, t); }, hi);
      if (!std::isnan(flo) && !std::isnan(fhi) && flo * fhi < 0.0) {
        const double s1 =
            detail::bisect([&](double t) { return res(c1, t); }, lo, hi, flo, fhi);
        return std::pair<double, double>{
            residual(BoundaryKind::Equal, XxzState{s1, c1, c3}), s1};
      }
    }
    throw NotFound("lost the PiHalf curve while locating the triple point");
  };

  for (size_t i = 0; i + 1 < pihalf.points.size(); ++i) {
    const XxzState& p = pihalf.points[i];
    const XxzState& q = pihalf.points[i + 1];
    double fp, fq;
    try {
      fp = residual(BoundaryKind::Equal, p);
      fq = residual(BoundaryKind::Equal, q);
    } catch (const SingularInput&) {
      continue;
    }
    if (!(fp * fq < 0.0)) continue;
    // bisect in the march coordinate c1 along the curve
    double lo = p.c1, hi = q.c1, s1 = p.s1;
    double flo = fp;
    for (int it = 0; it < kBisectMaxIter && hi - lo >= kBisectTol; ++it) {
      const double mid = 0.5 * (lo + hi);
      auto [fm, s1m] = equal_on_curve(mid, s1);
      s1 = s1m;
      if (flo * fm < 0.0) {
        hi = mid;
      } else {
        lo = mid;
        flo = fm;
      }
    }
    const double c1 = 0.5 * (lo + hi);
    auto [fr, s1r] = equal_on_curve(c1, s1);
    (void)fr;
    return XxzState{s1r, c1, c3};
  }
  throw NotFound("Equal and PiHalf boundaries do not intersect in this slice");
}

}  // namespace deficit_atlas
