#pragma once

#include <cmath>
#include <vector>

#include "deficit_atlas/errors.hpp"

namespace deficit_atlas {

struct MinResult {
  double x = 0.0;
  double value = 0.0;
};

/// Golden-section search for a minimum on [a, b], to |b-a| < xtol.
template <class F>
MinResult golden_section(F&& f, double a, double b, double xtol = 1e-10,
                         int max_iter = 200) {
  constexpr double inv_gr = 0.6180339887498949;  // 1/phi
  double c = b - inv_gr * (b - a);
  double d = a + inv_gr * (b - a);
  double fc = f(c), fd = f(d);
  int it = 0;
  while (b - a > xtol) {
    if (++it > max_iter)
      throw ConvergenceError("golden_section: exceeded max iterations");
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_gr * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_gr * (b - a);
      fd = f(d);
    }
  }
  const double xm = 0.5 * (a + b);
  return MinResult{xm, f(xm)};
}

/// Global minimum on [a, b]: uniform grid of n points, then golden-section
/// refinement of every local-minimum bracket (endpoints included). Handles
/// bimodal profiles; ties resolved toward the smallest x.
template <class F>
MinResult grid_golden_min(F&& f, double a, double b, int n = 201,
                          double xtol = 1e-10) {
  std::vector<double> xs(static_cast<size_t>(n)), vs(static_cast<size_t>(n));
  const double h = (b - a) / (n - 1);
  for (int i = 0; i < n; ++i) {
    xs[static_cast<size_t>(i)] = a + h * i;
    vs[static_cast<size_t>(i)] = f(xs[static_cast<size_t>(i)]);
  }
  MinResult best{xs[0], vs[0]};
  bool have = false;
  for (int i = 0; i < n; ++i) {
    const bool left_ok = i == 0 || vs[static_cast<size_t>(i)] <= vs[static_cast<size_t>(i - 1)];
    const bool right_ok = i == n - 1 || vs[static_cast<size_t>(i)] <= vs[static_cast<size_t>(i + 1)];
    if (!(left_ok && right_ok)) continue;
    const double lo = xs[static_cast<size_t>(i == 0 ? 0 : i - 1)];
    const double hi = xs[static_cast<size_t>(i == n - 1 ? n - 1 : i + 1)];
    MinResult r = lo < hi ? golden_section(f, lo, hi, xtol)
                          : MinResult{lo, vs[static_cast<size_t>(i)]};
    // brackets visited left to right, so strict < keeps the smallest x on ties
    if (!have || r.value < best.value) {
      best = r;
      have = true;
    }
  }
  return best;
}

}  // namespace deficit_atlas
