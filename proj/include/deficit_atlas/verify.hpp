#pragma once

#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "deficit_atlas/boundaries.hpp"
#include "deficit_atlas/correlations.hpp"
#include "deficit_atlas/diagram.hpp"
#include "deficit_atlas/entropy.hpp"
#include "deficit_atlas/oracle.hpp"
#include "deficit_atlas/state.hpp"

// Built-in verification: the known landmark values and the property suites,
// each as one pass/fail line with expected / computed / tolerance.

namespace deficit_atlas::verify {

struct Check {
  std::string name;
  double expected = 0.0;
  double computed = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

inline Check check_abs(std::string name, double expected, double computed,
                       double tol) {
  return Check{std::move(name), expected, computed, tol,
               std::abs(computed - expected) <= tol};
}

// "computed" is an error magnitude that must stay below tol
inline Check check_bound(std::string name, double computed, double tol) {
  return Check{std::move(name), 0.0, computed, tol, computed <= tol};
}

namespace detail {

inline XxzState random_state(std::mt19937_64& rng, double margin = 0.0,
                             double c3_lo = -1.0, double c3_hi = 1.0) {
  std::uniform_real_distribution<double> u(-1.0 + 1e-12, 1.0 - 1e-12);
  std::uniform_real_distribution<double> uc3(c3_lo, c3_hi);
  const double c3 = uc3(rng);
  const double f = 1.0 - margin;
  return XxzState{u(rng) * f * (1.0 + c3) / 2.0, u(rng) * f * (1.0 - c3) / 2.0, c3};
}

}  // namespace detail

inline std::vector<Check> run_all_checks() {
  std::vector<Check> out;

  // 1-2: boundary endpoints on the slice c3 = 0.1, c1 = 0.45
  out.push_back(check_abs(
      "1 pi2-boundary endpoint, c3=0.1, c1=0.45", 0.416297,
      solve_boundary(BoundaryKind::PiHalf, 0.1, Axis::C1, 0.45, 0.3, 0.5), 1e-4));
  out.push_back(check_abs(
      "2 0-boundary endpoint, c3=0.1, c1=0.45", 0.502469,
      solve_boundary(BoundaryKind::Zero, 0.1, Axis::C1, 0.45, 0.45, 0.55), 1e-4));

  // 3: Delta_theta segment area and whole-region fraction at c3 = 0.1
  {
    const auto [seg, frac] = theta_region_area(0.1);
    out.push_back(check_abs("3a theta segment area, c3=0.1", 0.008639, seg,
                            0.03 * 0.008639));
    out.push_back(check_abs("3b theta region fraction, c3=0.1", 0.035, frac, 0.002));
  }

  // 4: slice c3 = 0
  {
    const BoundaryCurve zero = trace_slice(BoundaryKind::Zero, 0.0);
    double dev = 0.0;
    for (const XxzState& p : zero.points)
      dev = std::max(dev, std::abs(p.s1 - p.c1));
    out.push_back(check_bound("4a 0-boundary is c1=s1 at c3=0", dev, 1e-6));
    out.push_back(check_abs(
        "4b pi2-boundary endpoint, c3=0, c1=0.5", 0.415037,
        solve_boundary(BoundaryKind::PiHalf, 0.0, Axis::C1, 0.5, 0.3, 0.5), 1e-4));
    out.push_back(check_abs("4c theta region fraction, c3=0", 0.042,
                            theta_region_area(0.0).second, 0.003));
  }

  // 5-6: 0'-boundary points
  out.push_back(check_abs(
      "5 0'-boundary point, c3=-0.2, s1=0.4", 0.576208,
      solve_boundary(BoundaryKind::ZeroPrime, -0.2, Axis::S1, 0.4, 0.5, 0.65), 1e-4));
  out.push_back(check_abs(
      "6 0'-boundary point, c3=-0.4, s1=0.3", 0.652165,
      solve_boundary(BoundaryKind::ZeroPrime, -0.4, Axis::S1, 0.3, 0.6, 0.69), 1e-4));

  // 7-8: face landmarks
  out.push_back(check_abs("7 face landmark b", -0.350302, landmark_b_c3(), 1e-3));
  out.push_back(check_abs("8 face landmark c", -0.538191, landmark_c_c3(), 2e-3));

  // 9: bifurcation abscissas at c3 = 0.15, c1 = 0.425
  out.push_back(check_abs(
      "9a pi2 bifurcation, c3=0.15, c1=0.425", 0.406975,
      solve_boundary(BoundaryKind::PiHalf, 0.15, Axis::C1, 0.425, 0.3, 0.5), 1e-4));
  out.push_back(check_abs(
      "9b 0 bifurcation, c3=0.15, c1=0.425", 0.483997,
      solve_boundary(BoundaryKind::Zero, 0.15, Axis::C1, 0.425, 0.45, 0.57), 1e-4));

  // 10: the band c3 >= 1/3 is pure phase Zero
  {
    std::mt19937_64 rng(1001);
    int non_zero = 0;
    for (int i = 0; i < 1000; ++i) {
      const XxzState x = detail::random_state(rng, 0.0, 1.0 / 3.0, 1.0 - 1e-9);
      if (deficit(x).phase != PhaseLabel::Zero) ++non_zero;
    }
    out.push_back(check_bound("10 band c3>=1/3 classifies Zero", non_zero, 0.0));
  }

  // 11: Bell-diagonal edge c3 = -1, s1 = 0
  {
    double dev = 0.0;
    for (double c1 : {-1.0, -0.5, 0.0, 0.5, 1.0})
      dev = std::max(dev, std::abs(deficit(XxzState{0.0, c1, -1.0}).value -
                                   bell_diagonal_value(c1)));
    out.push_back(check_bound("11a Bell edge matches closed form", dev, 1e-10));
    out.push_back(check_abs("11b Bell edge value at |c1|=1 (nats)", std::log(2.0),
                            deficit(XxzState{0.0, 1.0, -1.0}).value, 1e-10));
  }

  // 12: triple point at c3 = -0.6, absent at c3 = -0.3
  {
    const XxzState t = find_triple_point(-0.6);
    const double b0 = deficit_branch_0(t);
    const double bp = deficit_branch_pi2(t);
    // at the triple point the interior minimum sits at the window edge (the
    // pi/2 bifurcation moment), so take the window minimum value directly
    const double bi =
        grid_golden_min([&t](double th) { return deficit_at(t, th); },
                        kInteriorWindow, kHalfPi - kInteriorWindow)
            .value;
    const double spread = std::max({std::abs(b0 - bp), std::abs(b0 - bi),
                                    std::abs(bp - bi)});
    out.push_back(check_bound("12a triple point branch spread, c3=-0.6", spread, 1e-6));
    bool absent = false;
    try {
      find_triple_point(-0.3);
    } catch (const NotFound&) {
      absent = true;
    }
    out.push_back(check_bound("12b no triple point at c3=-0.3", absent ? 0.0 : 1.0, 0.0));
  }

  // 13: matrix oracle vs analytic spectrum, phi-independent
  {
    std::mt19937_64 rng(1013);
    std::uniform_real_distribution<double> uth(0.0, kPi), uph(0.0, 2.0 * kPi);
    double dev = 0.0;
    for (int i = 0; i < 1000; ++i) {
      const XxzState x = detail::random_state(rng);
      const double th = uth(rng), ph = uph(rng);
      const Spectrum4 o = oracle_spectrum(oracle_post_matrix(x, th, ph));
      Spectrum4 a = post_spectrum(x, th);
      std::sort(a.p.begin(), a.p.end(), std::greater<>());
      for (int k = 0; k < 4; ++k) dev = std::max(dev, std::abs(o[k] - a[k]));
    }
    out.push_back(check_bound("13 oracle spectral equivalence", dev, 1e-10));
  }

  // 14: analytic second derivatives vs finite differences. The zero locus of
  // each S~'' is a singular set of the relative comparison (the FD rounding
  // floor at step 1e-4 is ~1e-7), so states with |S~''| < 0.02 are excluded
  // from the relative check; all states must pass an absolute 1e-5 bound
  // (near a face a small eigenvalue inflates the FD truncation error).
  {
    std::mt19937_64 rng(1014);
    const double h = 1e-4;
    double rel = 0.0, abs_dev = 0.0;
    int used = 0;
    for (int i = 0; i < 1000; ++i) {
      const XxzState x = detail::random_state(rng, 0.05);
      const double r = std::sqrt(x.s1 * x.s1 + x.c1 * x.c1);
      if (r < 1e-6 || r > 1.0 - 1e-6) continue;
      // central stencils via the theta -> -theta and theta -> pi - theta symmetries
      const double fd0 = 2.0 * (post_entropy(x, h) - post_entropy(x, 0.0)) / (h * h);
      const double fdp =
          2.0 * (post_entropy(x, kHalfPi - h) - post_entropy(x, kHalfPi)) / (h * h);
      const double a0 = d2_post_at_zero(x);
      const double ap = d2_post_at_pi_half(x);
      abs_dev = std::max({abs_dev, std::abs(a0 - fd0), std::abs(ap - fdp)});
      if (std::abs(a0) >= 0.02) {
        rel = std::max(rel, std::abs(a0 - fd0) / std::abs(a0));
        ++used;
      }
      if (std::abs(ap) >= 0.02) {
        rel = std::max(rel, std::abs(ap - fdp) / std::abs(ap));
        ++used;
      }
    }
    out.push_back(check_bound("14a d2 formulas vs finite differences (rel)", rel, 1e-5));
    out.push_back(check_bound("14b d2 formulas vs finite differences (abs)", abs_dev, 1e-5));
    (void)used;
  }

  // 15: reflection symmetries and theta -> pi - theta via the oracle
  {
    std::mt19937_64 rng(1015);
    double dev = 0.0;
    for (int i = 0; i < 300; ++i) {
      const XxzState x = detail::random_state(rng);
      const XxzState xs{-x.s1, x.c1, x.c3};
      const XxzState xc{x.s1, -x.c1, x.c3};
      dev = std::max({dev, std::abs(deficit(x).value - deficit(xs).value),
                      std::abs(deficit(x).value - deficit(xc).value),
                      std::abs(discord(x).value - discord(xs).value),
                      std::abs(discord(x).value - discord(xc).value)});
    }
    out.push_back(check_bound("15a deficit/discord reflection symmetry", dev, 1e-10));
    std::uniform_real_distribution<double> uth(0.0, kPi), uph(0.0, 2.0 * kPi);
    double sdev = 0.0;
    for (int i = 0; i < 100; ++i) {
      const XxzState x = detail::random_state(rng);
      const double th = uth(rng), ph = uph(rng);
      const Spectrum4 a = oracle_spectrum(oracle_post_matrix(x, th, ph));
      const Spectrum4 b = oracle_spectrum(oracle_post_matrix(x, kPi - th, ph));
      for (int k = 0; k < 4; ++k) sdev = std::max(sdev, std::abs(a[k] - b[k]));
    }
    out.push_back(check_bound("15b oracle theta -> pi-theta symmetry", sdev, 1e-12));
  }

  // 16: nonnegativity of Delta(theta) and endpoint stationarity
  {
    std::mt19937_64 rng(1016);
    std::uniform_real_distribution<double> uth(0.0, kHalfPi);
    double min_delta = 0.0, stat = 0.0;
    const double eps = 1e-4;
    for (int i = 0; i < 1000; ++i) {
      const XxzState x = detail::random_state(rng);
      min_delta = std::min(min_delta, deficit_at(x, uth(rng)));
      stat = std::max({stat,
                       std::abs(post_entropy(x, eps) - post_entropy(x, 0.0)),
                       std::abs(post_entropy(x, kHalfPi) -
                                post_entropy(x, kHalfPi - eps))});
    }
    out.push_back(check_bound("16a Delta(theta) nonnegative", -min_delta, 1e-10));
    out.push_back(check_bound("16b endpoint first derivatives vanish (O(eps^2))",
                              stat, 100.0 * eps * eps));
  }

  // 17: discord/deficit coincidence
  {
    std::mt19937_64 rng(1017);
    double dev0 = 0.0;
    for (int i = 0; i < 100; ++i) {
      const XxzState x = detail::random_state(rng);
      dev0 = std::max(dev0, std::abs(discord_at(x, 0.0) - deficit_at(x, 0.0)));
    }
    out.push_back(check_bound("17a Q(0) = Delta(0) exactly", dev0, 0.0));
    double dev = 0.0;
    for (int i = 0; i < 100; ++i) {
      XxzState x = detail::random_state(rng);
      x.s1 = 0.0;
      dev = std::max(dev, std::abs(discord(x).value - deficit(x).value));
    }
    out.push_back(check_bound("17b Q = Delta for s1 = 0", dev, 1e-10));
  }

  // 18: minimizer robustness under grid-density doubling
  {
    std::mt19937_64 rng(1018);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    double dev = 0.0;
    auto probe = [&dev](const XxzState& x) {
      const double b = std::min(deficit_branch_0(x), deficit_branch_pi2(x));
      const double v1 = std::min(b, minimize_interior(x, 201).value);
      const double v2 = std::min(b, minimize_interior(x, 401).value);
      dev = std::max(dev, std::abs(v1 - v2));
    };
    for (int i = 0; i < 1000; ++i) probe(detail::random_state(rng));
    for (int i = 0; i < 100; ++i) {
      const double c3 = -0.2 + 0.02 * u(rng);
      const double c1 = std::min(0.58 + 0.02 * u(rng), (1.0 - c3) / 2.0);
      const double s1 = std::min(0.4 + 0.02 * u(rng), (1.0 + c3) / 2.0);
      probe(XxzState{s1, c1, c3});
    }
    out.push_back(check_bound("18 minimizer robust to grid doubling", dev, 1e-10));
  }

  return out;
}

}  // namespace deficit_atlas::verify
