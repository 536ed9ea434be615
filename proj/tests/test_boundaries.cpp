#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "deficit_atlas/boundaries.hpp"

using namespace deficit_atlas;

TEST_CASE("residual signs straddle the known pi/2 boundary") {
  // root near s1 = 0.41630 at c3 = 0.1, c1 = 0.45
  CHECK(residual(BoundaryKind::PiHalf, XxzState{0.40, 0.45, 0.1}) *
            residual(BoundaryKind::PiHalf, XxzState{0.43, 0.45, 0.1}) <
        0.0);
}

TEST_CASE("solve_boundary reproduces frozen roots") {
  CHECK(solve_boundary(BoundaryKind::PiHalf, 0.1, Axis::C1, 0.45, 0.3, 0.5) ==
        doctest::Approx(0.4162959).epsilon(1e-5));
  CHECK(solve_boundary(BoundaryKind::Zero, 0.1, Axis::C1, 0.45, 0.45, 0.55) ==
        doctest::Approx(0.5024689).epsilon(1e-5));
  CHECK(solve_boundary(BoundaryKind::ZeroPrime, -0.2, Axis::S1, 0.4, 0.5, 0.65) ==
        doctest::Approx(0.5762094).epsilon(1e-5));
  CHECK(solve_boundary(BoundaryKind::ZeroPrime, -0.4, Axis::S1, 0.3, 0.6, 0.69) ==
        doctest::Approx(0.6521649).epsilon(1e-5));
}

TEST_CASE("solve_boundary clamps the bracket to the slice rectangle") {
  // hi exceeds c1max = 0.6; the clamped bracket must still contain the root
  CHECK_NOTHROW(solve_boundary(BoundaryKind::ZeroPrime, -0.2, Axis::S1, 0.4, 0.5, 0.65));
}

TEST_CASE("solve_boundary reports a missing sign change") {
  CHECK_THROWS_AS(solve_boundary(BoundaryKind::PiHalf, 0.1, Axis::C1, 0.45, 0.30, 0.35),
                  BracketError);
}

TEST_CASE("interior_minimum flags monotone profiles") {
  // deep in the Zero band the deficit increases all the way to pi/2
  CHECK_THROWS_AS(interior_minimum(XxzState{0.1, 0.05, 0.6}), NoInteriorMinimum);
  // in the theta wedge a genuine interior minimum exists
  const MinResult m = interior_minimum(XxzState{0.46, 0.45, 0.1});
  CHECK(m.x > kInteriorWindow + 1e-6);
  CHECK(m.x < kHalfPi - kInteriorWindow - 1e-6);
}

TEST_CASE("residual rejects out-of-domain states") {
  CHECK_THROWS_AS(residual(BoundaryKind::Zero, XxzState{0.9, 0.0, 0.1}), DomainError);
}

TEST_CASE("traced slice curves satisfy their defining condition") {
  for (BoundaryKind kind : {BoundaryKind::Zero, BoundaryKind::PiHalf}) {
    const BoundaryCurve c = trace_slice(kind, 0.1);
    REQUIRE(c.points.size() > 10);
    for (size_t i = 0; i < c.points.size(); i += 7)
      CHECK(std::abs(residual(kind, c.points[i])) < 1e-7);
  }
}

TEST_CASE("slice curves stay in the closed quadrant") {
  const BoundaryCurve c = trace_slice(BoundaryKind::Zero, 0.1);
  for (const XxzState& p : c.points) {
    CHECK(p.s1 >= -1e-9);
    CHECK(p.c1 >= -1e-9);
    CHECK(in_domain(p.s1, p.c1, p.c3));
  }
}

TEST_CASE("the 0-boundary at c3 = 0 degenerates to s1 = c1") {
  const BoundaryCurve c = trace_slice(BoundaryKind::Zero, 0.0);
  REQUIRE(c.points.size() > 10);
  for (const XxzState& p : c.points)
    CHECK(p.s1 == doctest::Approx(p.c1).epsilon(1e-6));
}

TEST_CASE("trace_slice argument validation") {
  CHECK_THROWS_AS(trace_slice(BoundaryKind::Zero, 1.5), DomainError);
  CHECK_THROWS_AS(trace_slice(BoundaryKind::Zero, 0.1, 0.2), DomainError);
  // no critical curve deep inside the Zero band
  CHECK_THROWS_AS(trace_slice(BoundaryKind::PiHalf, 0.8), EmptyCurve);
}

TEST_CASE("face landmarks") {
  CHECK(std::abs(landmark_a_c3()) < 1e-6);  // the 0-curve meets the edge at c3 = 0
  CHECK(landmark_b_c3() == doctest::Approx(-0.3503019).epsilon(3e-5));
  CHECK(landmark_c_c3() == doctest::Approx(-0.5381911).epsilon(3e-4));
}

TEST_CASE("edge-limit of the zero-condition second derivative") {
  // interior formula approaches the cancelled edge form
  const double c3 = 0.12;
  const double s1 = (1.0 + c3) / 2.0 - 1e-7;
  const double c1 = (1.0 - c3) / 2.0 - 1e-7;
  CHECK(detail::d2_zero_edge(c3) ==
        doctest::Approx(d2_post_at_zero(XxzState{s1, c1, c3})).epsilon(1e-4));
}

TEST_CASE("face tracing produces the five curve families") {
  // the 0-condition is singular on the open face s1 = (1+c3)/2 (its boundary
  // degenerates to the edge point there), so five curves remain
  const FaceDiagram f = trace_faces(0.005);
  CHECK(f.curves.size() == 5);
  size_t n_zero = 0, n_pihalf = 0;
  for (const auto& c : f.curves) {
    REQUIRE(!c.points.empty());
    for (const XxzState& p : c.points) CHECK(in_domain(p.s1, p.c1, p.c3));
    if (c.kind == BoundaryKind::Zero) ++n_zero;
    if (c.kind == BoundaryKind::PiHalf) ++n_pihalf;
  }
  CHECK(n_zero == 1);
  CHECK(n_pihalf == 2);
  CHECK(std::abs(f.landmark_a_c3) < 1e-6);
}

TEST_CASE("triple point at c3 = -0.6, absent at c3 = -0.3") {
  const XxzState t = find_triple_point(-0.6);
  CHECK(t.s1 == doctest::Approx(0.19410).epsilon(5e-4));
  CHECK(t.c1 == doctest::Approx(0.72405).epsilon(5e-4));
  const double spread =
      std::abs(deficit_branch_0(t) - deficit_branch_pi2(t));
  CHECK(spread < 1e-6);
  CHECK_THROWS_AS(find_triple_point(-0.3), NotFound);
}
