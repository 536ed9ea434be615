// Command-line front-end: evaluation, slice diagrams, boundary roots, face
// landmarks, triple points, and the built-in verification suite. All numerics
// live in the library; this file only parses flags and formats output.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "deficit_atlas/deficit_atlas.hpp"
#include "deficit_atlas/verify.hpp"

namespace da = deficit_atlas;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitDomain = 2;
constexpr int kExitIo = 3;
constexpr int kExitBracket = 4;

double to_units(double nats, const std::string& units) {
  return units == "bits" ? nats / std::log(2.0) : nats;
}

json result_json(const da::DeficitResult& r, const std::string& units) {
  json j{{"value", to_units(r.value, units)},
         {"phase", da::to_string(r.phase)},
         {"theta_opt_rad", r.theta_opt},
         {"branch_zero", to_units(r.branch_zero, units)},
         {"branch_pi_half", to_units(r.branch_pi_half, units)}};
  if (r.branch_theta) j["branch_theta"] = to_units(*r.branch_theta, units);
  return j;
}

void print_result(const char* what, const da::DeficitResult& r,
                  const std::string& units) {
  std::printf("%s: %.12g %s  phase=%s  theta_opt=%.12g rad\n", what,
              to_units(r.value, units), units.c_str(), da::to_string(r.phase),
              r.theta_opt);
  std::printf("  branches: Delta_0=%.12g  Delta_pi2=%.12g",
              to_units(r.branch_zero, units), to_units(r.branch_pi_half, units));
  if (r.branch_theta)
    std::printf("  Delta_theta=%.12g", to_units(*r.branch_theta, units));
  std::printf("\n");
}

// write temp file then rename, so readers never see a partial file
void write_atomic(const std::filesystem::path& path, const std::string& content) {
  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary);
    f << content;
    if (!f) throw da::IoError("cannot write " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw da::IoError("cannot rename " + tmp.string() + ": " + ec.message());
}

da::BoundaryKind parse_kind(const std::string& s) {
  if (s == "zero") return da::BoundaryKind::Zero;
  if (s == "pi2") return da::BoundaryKind::PiHalf;
  if (s == "zeroprime") return da::BoundaryKind::ZeroPrime;
  if (s == "equal") return da::BoundaryKind::Equal;
  throw CLI::ValidationError("--kind", "expected zero|pi2|zeroprime|equal");
}

json curve_json(const da::BoundaryCurve& c) {
  json j{{"kind", da::to_string(c.kind)},
         {"n_points", c.points.size()},
         {"start_on_edge", c.start_on_edge},
         {"end_on_edge", c.end_on_edge}};
  if (!c.points.empty()) {
    j["start"] = {c.points.front().s1, c.points.front().c1, c.points.front().c3};
    j["end"] = {c.points.back().s1, c.points.back().c1, c.points.back().c3};
  }
  return j;
}

int run(int argc, char** argv) {
  CLI::App app{"One-way quantum deficit and discord atlas for symmetric XXZ "
               "two-qubit X states"};
  app.require_subcommand(1);

  double s1 = 0.0, c1 = 0.0, c3 = 0.0, lo = 0.0, hi = 0.0, step = da::kDefaultStep;
  int res = 256;
  std::string units = "nats", fix, out_prefix = "slice", kind_name;
  bool as_json = false;

  auto* eval = app.add_subcommand("eval", "Deficit and discord at one state");
  eval->add_option("--s1", s1)->required();
  eval->add_option("--c1", c1)->required();
  eval->add_option("--c3", c3)->required();
  eval->add_option("--units", units)->check(CLI::IsMember({"nats", "bits"}));
  eval->add_flag("--json", as_json);

  auto* slice = app.add_subcommand("slice", "Classified cross-section diagram");
  slice->add_option("--c3", c3)->required();
  slice->add_option("--res", res);
  slice->add_option("--step", step);
  slice->add_option("--out", out_prefix, "output path prefix");

  auto* boundary = app.add_subcommand("boundary", "Bisection root of a critical condition");
  boundary->add_option("--kind", kind_name)->required();
  boundary->add_option("--c3", c3)->required();
  boundary->add_option("--fix", fix, "held coordinate, e.g. c1=0.45")->required();
  boundary->add_option("--lo", lo)->required();
  boundary->add_option("--hi", hi)->required();
  boundary->add_flag("--json", as_json);

  auto* faces = app.add_subcommand("faces", "Boundary curves and landmarks on the faces");
  faces->add_option("--step", step);
  faces->add_flag("--json", as_json);

  auto* triple = app.add_subcommand("triple", "Triple point in a c3 slice");
  triple->add_option("--c3", c3)->required();
  triple->add_flag("--json", as_json);

  auto* verify_cmd = app.add_subcommand("verify", "Run the built-in verification suite");
  verify_cmd->add_flag("--json", as_json);

  CLI11_PARSE(app, argc, argv);

  if (eval->parsed()) {
    const da::XxzState x = da::validate(s1, c1, c3);
    const da::DeficitResult d = da::deficit(x);
    const da::DeficitResult q = da::discord(x);
    if (as_json) {
      json j{{"s1", s1},      {"c1", c1},
             {"c3", c3},      {"units", units},
             {"deficit", result_json(d, units)}, {"discord", result_json(q, units)}};
      std::cout << j.dump(2) << "\n";
    } else {
      print_result("deficit", d, units);
      print_result("discord", q, units);
    }
    return kExitOk;
  }

  if (slice->parsed()) {
    const da::SliceDiagram d = da::classify_grid(c3, res, step);
    std::ostringstream csv, svg;
    da::emit(d, da::DiagramFormat::Csv, csv);
    da::emit(d, da::DiagramFormat::Svg, svg);
    write_atomic(out_prefix + ".csv", csv.str());
    write_atomic(out_prefix + ".svg", svg.str());

    json areas;
    const char* names[3] = {"zero", "pi2", "theta"};
    for (int k = 0; k < 3; ++k)
      areas[names[k]] = {{"absolute", d.areas.absolute[static_cast<size_t>(k)]},
                         {"fraction", d.areas.fraction[static_cast<size_t>(k)]}};
    json curves = json::array();
    for (const auto& c : d.curves) curves.push_back(curve_json(c));
    const auto [seg, frac] = da::theta_region_area(c3);
    json j{{"c3", c3},
           {"resolution", res},
           {"areas", areas},
           {"curves", curves},
           {"theta_segment", {{"absolute", seg}, {"fraction", frac}}}};
    write_atomic(out_prefix + ".areas.json", j.dump(2) + "\n");
    std::printf("wrote %s.csv, %s.svg, %s.areas.json\n", out_prefix.c_str(),
                out_prefix.c_str(), out_prefix.c_str());
    return kExitOk;
  }

  if (boundary->parsed()) {
    const auto eq = fix.find('=');
    if (eq == std::string::npos)
      throw CLI::ValidationError("--fix", "expected axis=value");
    const std::string axis_name = fix.substr(0, eq);
    const double fixed_value = std::stod(fix.substr(eq + 1));
    if (axis_name != "s1" && axis_name != "c1")
      throw CLI::ValidationError("--fix", "axis must be s1 or c1");
    const da::Axis axis = axis_name == "s1" ? da::Axis::S1 : da::Axis::C1;
    const da::BoundaryKind kind = parse_kind(kind_name);
    try {
      const double root = da::solve_boundary(kind, c3, axis, fixed_value, lo, hi);
      const char* free_name = axis == da::Axis::S1 ? "c1" : "s1";
      const da::XxzState x = axis == da::Axis::S1
                                 ? da::XxzState{fixed_value, root, c3}
                                 : da::XxzState{root, fixed_value, c3};
      const double r = da::residual(kind, x);
      if (as_json) {
        json j{{"kind", kind_name}, {"c3", c3},       {axis_name, fixed_value},
               {free_name, root},   {"residual", r}};
        std::cout << j.dump(2) << "\n";
      } else {
        std::printf("%s = %.12g  (residual %.3e)\n", free_name, root, r);
      }
      return kExitOk;
    } catch (const da::BracketError& e) {
      std::fprintf(stderr, "bracket error: %s\n", e.what());
      auto at = [&](double t) {
        const da::XxzState x = axis == da::Axis::S1 ? da::XxzState{fixed_value, t, c3}
                                                    : da::XxzState{t, fixed_value, c3};
        try {
          return da::residual(kind, x);
        } catch (const std::exception&) {
          return std::numeric_limits<double>::quiet_NaN();
        }
      };
      std::fprintf(stderr, "sign table:\n");
      for (int i = 0; i <= 8; ++i) {
        const double t = lo + (hi - lo) * i / 8;
        std::fprintf(stderr, "  %-10.6f %+.6e\n", t, at(t));
      }
      return kExitBracket;
    }
  }

  if (faces->parsed()) {
    const da::FaceDiagram f = da::trace_faces(step);
    if (as_json) {
      json curves = json::array();
      for (const auto& c : f.curves) curves.push_back(curve_json(c));
      json j{{"curves", curves},
             {"landmark_a_c3", f.landmark_a_c3},
             {"landmark_b_c3", f.landmark_b_c3},
             {"landmark_c_c3", f.landmark_c_c3}};
      std::cout << j.dump(2) << "\n";
    } else {
      for (const auto& c : f.curves)
        std::printf("curve %-9s  %4zu points  c3 in [%.6f, %.6f]\n",
                    da::to_string(c.kind), c.points.size(), c.points.front().c3,
                    c.points.back().c3);
      std::printf("landmark a: c3 = %.6f\n", f.landmark_a_c3);
      std::printf("landmark b: c3 = %.6f\n", f.landmark_b_c3);
      std::printf("landmark c: c3 = %.6f\n", f.landmark_c_c3);
    }
    return kExitOk;
  }

  if (triple->parsed()) {
    try {
      const da::XxzState t = da::find_triple_point(c3);
      if (as_json) {
        json j{{"c3", c3}, {"s1", t.s1}, {"c1", t.c1}};
        std::cout << j.dump(2) << "\n";
      } else {
        std::printf("triple point: s1 = %.9f, c1 = %.9f\n", t.s1, t.c1);
      }
      return kExitOk;
    } catch (const da::NotFound& e) {
      std::fprintf(stderr, "not found: %s\n", e.what());
      return kExitBracket;
    }
  }

  if (verify_cmd->parsed()) {
    const auto checks = da::verify::run_all_checks();
    bool all = true;
    if (as_json) {
      json arr = json::array();
      for (const auto& c : checks) {
        all = all && c.pass;
        arr.push_back({{"name", c.name},
                       {"expected", c.expected},
                       {"computed", c.computed},
                       {"tolerance", c.tolerance},
                       {"pass", c.pass}});
      }
      std::cout << arr.dump(2) << "\n";
    } else {
      std::printf("%-48s %14s %14s %10s  %s\n", "check", "expected", "computed",
                  "tolerance", "result");
      for (const auto& c : checks) {
        all = all && c.pass;
        std::printf("%-48s %14.6g %14.6g %10.2g  %s\n", c.name.c_str(), c.expected,
                    c.computed, c.tolerance, c.pass ? "PASS" : "FAIL");
      }
    }
    return all ? kExitOk : kExitVerifyFail;
  }

  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const da::DomainError& e) {
    std::fprintf(stderr, "domain error: %s\n", e.what());
    return kExitDomain;
  } catch (const da::IoError& e) {
    std::fprintf(stderr, "i/o error: %s\n", e.what());
    return kExitIo;
  } catch (const da::BracketError& e) {
    std::fprintf(stderr, "bracket error: %s\n", e.what());
    return kExitBracket;
  } catch (const da::ConvergenceError& e) {
    std::fprintf(stderr, "convergence error: %s\n", e.what());
    return kExitBracket;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitDomain;
  }
}
