#pragma once

#include <array>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

#include "deficit_atlas/boundaries.hpp"
#include "deficit_atlas/correlations.hpp"
#include "deficit_atlas/errors.hpp"
#include "deficit_atlas/parallel.hpp"
#include "deficit_atlas/state.hpp"

namespace deficit_atlas {

struct PhaseAreas {
  std::array<double, 3> absolute{};  // indexed by PhaseLabel
  std::array<double, 3> fraction{};
};

/// Classified grid over one c3 cross-section. The slice rectangle
/// s1 in [-(1+c3)/2, (1+c3)/2] x c1 in [-(1-c3)/2, (1-c3)/2] coincides with
/// the tetrahedron cross-section, so every cell center is a valid state.
struct SliceDiagram {
  double c3 = 0.0;
  int resolution = 0;
  // row-major: index = row * resolution + col, row over c1, col over s1,
  // both starting at the negative end
  std::vector<PhaseLabel> labels;
  std::vector<double> values;  // optimized deficit, nats
  std::vector<double> thetas;  // optimal angle, rad
  PhaseAreas areas;
  std::vector<BoundaryCurve> curves;

  double s1_max() const { return (1.0 + c3) / 2.0; }
  double c1_max() const { return (1.0 - c3) / 2.0; }
};

/// Cell-center classification of one quadrant, mirrored to the other three by
/// the s1 -> -s1 and c1 -> -c1 symmetries of the deficit.
inline SliceDiagram classify_grid(double c3, int resolution,
                                  double curve_step = kDefaultStep) {
  if (!(c3 > -1.0 && c3 < 1.0)) throw DomainError("classify_grid: c3 outside (-1, 1)");
  if (resolution < 16 || resolution > 4096)
    throw DomainError("classify_grid: resolution outside [16, 4096]");

  SliceDiagram d;
  d.c3 = c3;
  d.resolution = resolution;
  const size_t n = static_cast<size_t>(resolution) * static_cast<size_t>(resolution);
  d.labels.assign(n, PhaseLabel::Zero);
  d.values.assign(n, 0.0);
  d.thetas.assign(n, 0.0);

  const double s1max = d.s1_max(), c1max = d.c1_max();
  const double ds = 2.0 * s1max / resolution;
  const double dc = 2.0 * c1max / resolution;
  const int half = resolution / 2;  // quadrant start (center row/col for odd)

  auto center_s1 = [&](int col) { return -s1max + (col + 0.5) * ds; };
  auto center_c1 = [&](int row) { return -c1max + (row + 0.5) * dc; };
  auto idx = [&](int row, int col) {
    return static_cast<size_t>(row) * static_cast<size_t>(resolution) +
           static_cast<size_t>(col);
  };

  const int rows = resolution - half;
  parallel_for(static_cast<size_t>(rows), [&](size_t rr) {
    const int row = half + static_cast<int>(rr);
    for (int col = half; col < resolution; ++col) {
      const DeficitResult r = deficit(XxzState{center_s1(col), center_c1(row), c3});
      const int mrow = resolution - 1 - row, mcol = resolution - 1 - col;
      for (const auto [rw, cl] : {std::pair{row, col}, std::pair{row, mcol},
                                  std::pair{mrow, col}, std::pair{mrow, mcol}}) {
        d.labels[idx(rw, cl)] = r.phase;
        d.values[idx(rw, cl)] = r.value;
        d.thetas[idx(rw, cl)] = r.theta_opt;
      }
    }
  });

  const double cell_area = ds * dc;
  std::array<size_t, 3> counts{};
  for (PhaseLabel l : d.labels) counts[static_cast<size_t>(l)]++;
  for (size_t k = 0; k < 3; ++k) {
    d.areas.absolute[k] = static_cast<double>(counts[k]) * cell_area;
    d.areas.fraction[k] = static_cast<double>(counts[k]) / static_cast<double>(n);
  }

  for (BoundaryKind kind : {BoundaryKind::Zero, BoundaryKind::PiHalf,
                            BoundaryKind::ZeroPrime, BoundaryKind::Equal}) {
    try {
      d.curves.push_back(trace_slice(kind, c3, curve_step));
    } catch (const EmptyCurve&) {
    }
  }
  return d;
}

/// Area of one Delta_theta quadrant segment by trapezoid integration between
/// the traced PiHalf (left) and Zero (right) curves, plus the whole-region
/// fraction 4 * segment / [(1+c3)(1-c3)].
inline std::pair<double, double> theta_region_area(double c3,
                                                   double trace_step = 1e-3) {
  if (!(c3 > -1.0 && c3 < 1.0))
    throw DomainError("theta_region_area: c3 outside (-1, 1)");
  BoundaryCurve left, right;
  try {
    left = trace_slice(BoundaryKind::PiHalf, c3, trace_step);
    right = trace_slice(BoundaryKind::Zero, c3, trace_step);
  } catch (const EmptyCurve&) {
    return {0.0, 0.0};
  }
  if (left.points.size() < 2 || right.points.size() < 2) return {0.0, 0.0};

  // both curves are single-valued functions s1(c1), points ordered in c1
  auto interp = [](const BoundaryCurve& c, double c1) {
    const auto& p = c.points;
    size_t lo = 0, hi = p.size() - 1;
    while (hi - lo > 1) {
      const size_t mid = (lo + hi) / 2;
      (p[mid].c1 <= c1 ? lo : hi) = mid;
    }
    const double t = (c1 - p[lo].c1) / (p[hi].c1 - p[lo].c1);
    return p[lo].s1 + t * (p[hi].s1 - p[lo].s1);
  };
  const double c1_lo = std::max(left.points.front().c1, right.points.front().c1);
  const double c1_hi = std::min(left.points.back().c1, right.points.back().c1);
  if (c1_hi <= c1_lo) return {0.0, 0.0};

  const int n = std::max(2, static_cast<int>(std::ceil((c1_hi - c1_lo) / trace_step)));
  double area = 0.0;
  double prev_w = std::max(0.0, interp(right, c1_lo) - interp(left, c1_lo));
  for (int i = 1; i <= n; ++i) {
    const double c1 = c1_lo + (c1_hi - c1_lo) * i / n;
    const double w = std::max(0.0, interp(right, c1) - interp(left, c1));
    area += 0.5 * (prev_w + w) * (c1_hi - c1_lo) / n;
    prev_w = w;
  }
  const double rect = (1.0 + c3) * (1.0 - c3);
  return {area, 4.0 * area / rect};
}

namespace detail {

inline std::string fmt(const char* spec, double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), spec, v);
  return buf;
}

}  // namespace detail

enum class DiagramFormat { Csv, Svg };

inline const char* phase_color(PhaseLabel p) {
  switch (p) {
    case PhaseLabel::Zero: return "#4169e1";
    case PhaseLabel::PiHalf: return "#2e8b57";
    default: return "#ffd700";
  }
}

/// Writes the diagram as CSV (one row per cell center) or SVG (one rect per
/// cell, boundary polylines overlaid in black). Output is deterministic.
inline void emit(const SliceDiagram& d, DiagramFormat format, std::ostream& out) {
  const int res = d.resolution;
  const double s1max = d.s1_max(), c1max = d.c1_max();
  const double ds = 2.0 * s1max / res, dc = 2.0 * c1max / res;
  auto idx = [&](int row, int col) {
    return static_cast<size_t>(row) * static_cast<size_t>(res) +
           static_cast<size_t>(col);
  };

  if (format == DiagramFormat::Csv) {
    out << "s1,c1,phase,deficit_nats,theta_opt_rad\n";
    for (int row = 0; row < res; ++row) {
      const double c1 = -c1max + (row + 0.5) * dc;
      for (int col = 0; col < res; ++col) {
        const double s1 = -s1max + (col + 0.5) * ds;
        const size_t i = idx(row, col);
        out << detail::fmt("%.12g", s1) << ',' << detail::fmt("%.12g", c1) << ','
            << to_string(d.labels[i]) << ',' << detail::fmt("%.12g", d.values[i])
            << ',' << detail::fmt("%.12g", d.thetas[i]) << '\n';
      }
    }
  } else {
    const double cell_w = 1000.0 / res;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 1000 1000\">\n";
    for (int row = 0; row < res; ++row)
      for (int col = 0; col < res; ++col) {
        // s1 -> x, c1 -> y with y up
        out << "<rect x=\"" << detail::fmt("%.4f", col * cell_w) << "\" y=\""
            << detail::fmt("%.4f", (res - 1 - row) * cell_w) << "\" width=\""
            << detail::fmt("%.4f", cell_w) << "\" height=\""
            << detail::fmt("%.4f", cell_w) << "\" fill=\""
            << phase_color(d.labels[idx(row, col)]) << "\"/>\n";
      }
    for (const BoundaryCurve& c : d.curves) {
      if (c.points.size() < 2) continue;
      // curves are traced in one quadrant; draw all four mirror images
      for (const auto [ms, mc] : {std::pair{1, 1}, std::pair{-1, 1},
                                  std::pair{1, -1}, std::pair{-1, -1}}) {
        out << "<polyline fill=\"none\" stroke=\"black\" stroke-width=\"2\" points=\"";
        for (const XxzState& p : c.points) {
          const double x = (ms * p.s1 + s1max) / (2.0 * s1max) * 1000.0;
          const double y = 1000.0 - (mc * p.c1 + c1max) / (2.0 * c1max) * 1000.0;
          out << detail::fmt("%.4f", x) << ',' << detail::fmt("%.4f", y) << ' ';
        }
        out << "\"/>\n";
      }
    }
    out << "</svg>\n";
  }
  if (!out) throw IoError("emit: sink failure");
}

}  // namespace deficit_atlas
