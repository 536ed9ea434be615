#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "deficit_atlas/correlations.hpp"

using namespace deficit_atlas;

namespace {
const XxzState kRef{0.2, 0.3, 0.1};
}

TEST_CASE("deficit branches match the angle-resolved value at the endpoints") {
  CHECK(deficit_branch_0(kRef) == doctest::Approx(deficit_at(kRef, 0.0)).epsilon(1e-13));
  CHECK(deficit_branch_pi2(kRef) ==
        doctest::Approx(deficit_at(kRef, kHalfPi)).epsilon(1e-13));
  // frozen endpoint differences S~(.) - S for the reference state
  CHECK(deficit_at(kRef, 0.0) ==
        doctest::Approx(1.344075292814629 - 1.2349116055524905).epsilon(1e-12));
  CHECK(deficit_at(kRef, kHalfPi) ==
        doctest::Approx(1.3198072413338129 - 1.2349116055524905).epsilon(1e-12));
}

TEST_CASE("0-branch is independent of s1") {
  const double a = deficit_branch_0(XxzState{0.0, 0.3, 0.1});
  const double b = deficit_branch_0(XxzState{0.5, 0.3, 0.1});
  CHECK(a == doctest::Approx(b).epsilon(1e-15));
}

TEST_CASE("grid-golden minimizer") {
  // smooth convex profile
  auto f = [](double t) { return (t - 0.7) * (t - 0.7); };
  const MinResult m = grid_golden_min(f, 0.0, kHalfPi);
  CHECK(m.x == doctest::Approx(0.7).epsilon(1e-8));

  // bimodal profile: global minimum in the second well
  auto g = [](double t) {
    return std::min((t - 0.3) * (t - 0.3) + 0.1, (t - 1.2) * (t - 1.2));
  };
  CHECK(grid_golden_min(g, 0.0, kHalfPi).x == doctest::Approx(1.2).epsilon(1e-8));

  // flat function: tie resolved within the leftmost grid bracket
  CHECK(grid_golden_min([](double) { return 1.0; }, 0.0, 1.0).x <= 0.0051);
}

TEST_CASE("deficit picks the smallest branch with deterministic ties") {
  const DeficitResult r = deficit(kRef);
  CHECK(r.value <= r.branch_zero + 1e-15);
  CHECK(r.value <= r.branch_pi_half + 1e-15);
  CHECK(r.value >= 0.0);
  if (r.phase == PhaseLabel::Zero) CHECK(r.theta_opt == 0.0);
  if (r.phase == PhaseLabel::PiHalf) CHECK(r.theta_opt == doctest::Approx(kHalfPi));

  // deep in the band c3 >= 1/3 the optimum is theta = 0
  const DeficitResult band = deficit(XxzState{0.3, 0.1, 0.6});
  CHECK(band.phase == PhaseLabel::Zero);

  // symmetric two-well state: exact tie between the endpoint branches
  // resolves to Zero
  const DeficitResult tie = deficit(XxzState{0.0, 0.0, 0.0});
  CHECK(tie.phase == PhaseLabel::Zero);
  CHECK(tie.value == doctest::Approx(0.0));
}

TEST_CASE("interior phase exists between the slice boundaries") {
  // at c3 = 0.1, c1 = 0.45 the theta window is s1 in (0.4163, 0.5025)
  const DeficitResult r = deficit(XxzState{0.46, 0.45, 0.1});
  CHECK(r.phase == PhaseLabel::Theta);
  CHECK(r.theta_opt > kEndpointTol);
  CHECK(r.theta_opt < kHalfPi - kEndpointTol);
  CHECK(r.branch_theta.has_value());
  CHECK(*r.branch_theta < r.branch_zero);
  CHECK(*r.branch_theta < r.branch_pi_half);
}

TEST_CASE("deficit is even in s1 and c1") {
  for (const XxzState& x : {XxzState{0.3, 0.2, 0.1}, XxzState{0.1, 0.35, -0.25}}) {
    const double v = deficit(x).value;
    CHECK(deficit(XxzState{-x.s1, x.c1, x.c3}).value == doctest::Approx(v).epsilon(1e-12));
    CHECK(deficit(XxzState{x.s1, -x.c1, x.c3}).value == doctest::Approx(v).epsilon(1e-12));
  }
}

TEST_CASE("discord relation to the deficit") {
  // Q(0) = Delta(0) identically
  CHECK(discord_at(kRef, 0.0) == deficit_at(kRef, 0.0));
  // the correction term at a generic angle
  const double t = 0.9;
  const double corr = binary_entropy((1.0 + kRef.s1) / 2.0) -
                      binary_entropy((1.0 + kRef.s1 * std::cos(t)) / 2.0);
  CHECK(discord_at(kRef, t) == doctest::Approx(deficit_at(kRef, t) + corr).epsilon(1e-14));
  // s1 = 0 makes the correction vanish for every theta
  const XxzState z{0.0, 0.3, 0.1};
  CHECK(discord(z).value == doctest::Approx(deficit(z).value).epsilon(1e-12));
}

TEST_CASE("discord branch values") {
  const DeficitResult q = discord(kRef);
  CHECK(q.branch_zero == doctest::Approx(deficit_branch_0(kRef)).epsilon(1e-14));
  CHECK(q.branch_pi_half ==
        doctest::Approx(deficit_branch_pi2(kRef) +
                        binary_entropy((1.0 + kRef.s1) / 2.0) - std::log(2.0))
            .epsilon(1e-13));
  CHECK(q.value >= -1e-12);
}

TEST_CASE("Bell-diagonal edge closed form") {
  CHECK(bell_diagonal_value(0.0) == doctest::Approx(0.0));
  CHECK(bell_diagonal_value(1.0) == doctest::Approx(std::log(2.0)).epsilon(1e-14));
  CHECK(bell_diagonal_value(0.5) == doctest::Approx(0.13081203594113697).epsilon(1e-14));
  CHECK(bell_diagonal_value(-0.5) == doctest::Approx(bell_diagonal_value(0.5)));
  CHECK_THROWS_AS(bell_diagonal_value(1.1), DomainError);

  for (double c1 : {0.2, 0.5, 0.8}) {
    CHECK(deficit(XxzState{0.0, c1, -1.0}).value ==
          doctest::Approx(bell_diagonal_value(c1)).epsilon(1e-10));
    CHECK(discord(XxzState{0.0, c1, -1.0}).value ==
          doctest::Approx(bell_diagonal_value(c1)).epsilon(1e-10));
  }
}

TEST_CASE("pi/2 branch frozen value at s1 = c1 = 0") {
  CHECK(deficit_branch_pi2(XxzState{0.0, 0.0, 0.4}) ==
        doctest::Approx(0.08228287850505178).epsilon(1e-13));
}

TEST_CASE("units conversion factor") {
  // nats-to-bits is a pure division by ln 2; spot-check through a known value
  const double nats = deficit(XxzState{0.0, 1.0, -1.0}).value;
  CHECK(nats / std::log(2.0) == doctest::Approx(1.0).epsilon(1e-12));
}
