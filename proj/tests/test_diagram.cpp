#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "deficit_atlas/diagram.hpp"

using namespace deficit_atlas;

TEST_CASE("classify_grid argument validation") {
  CHECK_THROWS_AS(classify_grid(1.5, 64), DomainError);
  CHECK_THROWS_AS(classify_grid(0.1, 8), DomainError);
  CHECK_THROWS_AS(classify_grid(0.1, 8192), DomainError);
}

TEST_CASE("grid over the pure-Zero band") {
  const SliceDiagram d = classify_grid(0.6, 16);
  CHECK(d.resolution == 16);
  CHECK(d.labels.size() == 256);
  for (PhaseLabel l : d.labels) CHECK(l == PhaseLabel::Zero);
  CHECK(d.areas.fraction[static_cast<size_t>(PhaseLabel::Zero)] == doctest::Approx(1.0));
  CHECK(d.areas.absolute[static_cast<size_t>(PhaseLabel::Zero)] ==
        doctest::Approx((1.0 + 0.6) * (1.0 - 0.6)).epsilon(1e-12));
}

TEST_CASE("grid at c3 = 0.1 contains all three phases, mirrored fourfold") {
  const SliceDiagram d = classify_grid(0.1, 64);
  std::array<int, 3> counts{};
  for (PhaseLabel l : d.labels) counts[static_cast<size_t>(l)]++;
  CHECK(counts[0] > 0);
  CHECK(counts[1] > 0);
  CHECK(counts[2] > 0);
  for (int c : counts) CHECK(c % 4 == 0);  // even resolution: exact 4-fold symmetry

  const int res = d.resolution;
  auto at = [&](int row, int col) {
    return d.labels[static_cast<size_t>(row) * static_cast<size_t>(res) +
                    static_cast<size_t>(col)];
  };
  for (int row = 0; row < res; ++row)
    for (int col = 0; col < res; ++col) {
      CHECK(at(row, col) == at(res - 1 - row, col));
      CHECK(at(row, col) == at(row, res - 1 - col));
    }
}

TEST_CASE("grid values and angles are consistent with the labels") {
  const SliceDiagram d = classify_grid(0.1, 32);
  const int res = d.resolution;
  for (int row = 0; row < res; ++row)
    for (int col = 0; col < res; ++col) {
      const size_t i = static_cast<size_t>(row) * static_cast<size_t>(res) +
                       static_cast<size_t>(col);
      CHECK(d.values[i] >= -1e-12);
      if (d.labels[i] == PhaseLabel::Zero) CHECK(d.thetas[i] == 0.0);
      if (d.labels[i] == PhaseLabel::PiHalf)
        CHECK(d.thetas[i] == doctest::Approx(kHalfPi));
      if (d.labels[i] == PhaseLabel::Theta) {
        CHECK(d.thetas[i] > 0.0);
        CHECK(d.thetas[i] < kHalfPi);
      }
    }
}

TEST_CASE("classification is independent of the thread count") {
  setenv("DEFICIT_ATLAS_THREADS", "1", 1);
  const SliceDiagram a = classify_grid(0.1, 32);
  setenv("DEFICIT_ATLAS_THREADS", "4", 1);
  const SliceDiagram b = classify_grid(0.1, 32);
  unsetenv("DEFICIT_ATLAS_THREADS");
  CHECK(a.labels == b.labels);
  CHECK(a.values == b.values);
  CHECK(a.thetas == b.thetas);
}

TEST_CASE("theta region area at reference slices") {
  const auto [seg01, frac01] = theta_region_area(0.1);
  CHECK(seg01 == doctest::Approx(0.008639).epsilon(0.03));
  CHECK(frac01 == doctest::Approx(0.035).epsilon(0.06));
  const auto [seg0, frac0] = theta_region_area(0.0);
  CHECK(frac0 == doctest::Approx(0.042).epsilon(0.08));
  CHECK(seg0 > 0.0);
  // no theta wedge in the pure-Zero band
  const auto [seg_band, frac_band] = theta_region_area(0.6);
  CHECK(seg_band == 0.0);
  CHECK(frac_band == 0.0);
}

TEST_CASE("CSV output format") {
  const SliceDiagram d = classify_grid(0.1, 16);
  std::ostringstream s;
  emit(d, DiagramFormat::Csv, s);
  const std::string text = s.str();
  CHECK(text.rfind("s1,c1,phase,deficit_nats,theta_opt_rad\n", 0) == 0);
  size_t lines = 0;
  for (char c : text)
    if (c == '\n') ++lines;
  CHECK(lines == 1 + 16 * 16);

  // first data row is the cell center nearest (-s1max, -c1max)
  std::istringstream in(text);
  std::string header, first;
  std::getline(in, header);
  std::getline(in, first);
  const double s1max = d.s1_max(), c1max = d.c1_max();
  std::ostringstream want;
  want << detail::fmt("%.12g", -s1max + s1max / 16.0) << ','
       << detail::fmt("%.12g", -c1max + c1max / 16.0) << ',';
  CHECK(first.rfind(want.str(), 0) == 0);
}

TEST_CASE("SVG output format") {
  const SliceDiagram d = classify_grid(0.1, 16);
  std::ostringstream s;
  emit(d, DiagramFormat::Svg, s);
  const std::string text = s.str();
  CHECK(text.find("viewBox=\"0 0 1000 1000\"") != std::string::npos);
  CHECK(text.find("#4169e1") != std::string::npos);
  CHECK(text.find("#2e8b57") != std::string::npos);
  CHECK(text.find("#ffd700") != std::string::npos);
  CHECK(text.find("<polyline fill=\"none\" stroke=\"black\"") != std::string::npos);
  CHECK(text.rfind("</svg>\n") == text.size() - 7);
}

TEST_CASE("emission is deterministic") {
  const SliceDiagram d = classify_grid(0.1, 16);
  std::ostringstream a, b;
  emit(d, DiagramFormat::Csv, a);
  emit(d, DiagramFormat::Csv, b);
  CHECK(a.str() == b.str());
  std::ostringstream sa, sb;
  emit(d, DiagramFormat::Svg, sa);
  emit(d, DiagramFormat::Svg, sb);
  CHECK(sa.str() == sb.str());
}
