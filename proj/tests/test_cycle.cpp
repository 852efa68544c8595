#include <doctest.h>

#include <cmath>
#include <random>

#include "anyon_carnot/cycle.hpp"
#include "anyon_carnot/errors.hpp"
#include "oracle/brute_force.hpp"

using namespace anyon;
using oracle::rel_diff;

namespace {

CycleConfig reference() { return {2.0, 1.0, 0.0, 1.0, 1.0, 0.0}; }
CycleConfig mixed() { return {2.0, 1.0, 0.2, 0.8, 0.6, 0.1}; }

// Computed once with 50-digit level sums (600 shells per class) for the
// reference config T_h=2, T_c=1, nu=(0,1,1,0), hbar*omega = k_B = 1.
constexpr double kGoldenQIn = 4.1422361498527966486;
constexpr double kGoldenQOut = 3.9486843332863245109;
constexpr double kGoldenEta = 0.046726408047341873936;

// Same pipeline for T_h=2, T_c=1, nu=(0.2,0.8,0.6,0.1).
constexpr double kMixedQIn = 4.0280521119154434103;
constexpr double kMixedQOut = 3.943794948564430053;

void expect_field(const CycleConfig& c, const char* field) {
  try {
    c.validate();
    FAIL("expected a DomainError for " << field);
  } catch (const DomainError& e) {
    CHECK(e.field() == field);
  }
}

}  // namespace

TEST_CASE("classical efficiency") {
  CHECK(classical_efficiency(400.0, 300.0) == doctest::Approx(0.25));
  CHECK(classical_efficiency(2.0, 1.0) == 0.5);
  CHECK(classical_efficiency(1.0, 1.0 - 1e-9) == doctest::Approx(1e-9).epsilon(1e-6));
  CHECK_THROWS_AS(classical_efficiency(1.0, 1.0), DomainError);
  CHECK_THROWS_AS(classical_efficiency(1.0, 2.0), DomainError);
  CHECK_THROWS_AS(classical_efficiency(1.0, 0.0), DomainError);
}

TEST_CASE("config validation names the offending field") {
  auto c = reference();
  CHECK_NOTHROW(c.validate());
  c.t_c = 2.0;
  expect_field(c, "t_c");
  c = reference();
  c.t_h = -1.0;
  expect_field(c, "t_h");
  c = reference();
  c.nu_b = 1.2;
  expect_field(c, "nu_b");
  c = reference();
  c.nu_d = -0.1;
  expect_field(c, "nu_d");
  c = reference();
  c.scale.k_b = 0.0;
  expect_field(c, "k_b");
  CHECK_THROWS_AS(run_cycle(CycleConfig{1.0, 1.0, 0.5, 0.5, 0.5, 0.5}), DomainError);
}

TEST_CASE("reference cycle reproduces the frozen high-precision values") {
  const auto r = run_cycle(reference());
  CHECK(rel_diff(r.q_in, kGoldenQIn) < 1e-13);
  CHECK(rel_diff(r.q_out, kGoldenQOut) < 1e-13);
  REQUIRE(r.eta_qce);
  CHECK(rel_diff(*r.eta_qce, kGoldenEta) < 1e-12);

  const auto s = run_cycle(reference(), Route::series);
  REQUIRE(s.eta_qce);
  CHECK(rel_diff(*s.eta_qce, kGoldenEta) < 1e-10);

  const auto m = run_cycle(mixed());
  CHECK(rel_diff(m.q_in, kMixedQIn) < 1e-13);
  CHECK(rel_diff(m.q_out, kMixedQOut) < 1e-13);
}

TEST_CASE("report is self-consistent") {
  const auto r = run_cycle(mixed());
  CHECK(r.work == r.q_in - r.q_out);
  REQUIRE(r.eta_qce);
  CHECK(*r.eta_qce == 1.0 - r.q_out / r.q_in);
  CHECK(r.eta_cce == 0.5);
  CHECK(r.flags.q_in_positive);
  CHECK(r.flags.positive_work);
  CHECK(r.flags.eta_below_carnot);
  CHECK(r.valid());
  CHECK(r.corners.c.nu.value() == 0.6);
  CHECK(r.corners.a.beta.x() == 0.5);
}

TEST_CASE("heat_out: entropy form and ln Z form agree") {
  const auto c = mixed();
  CHECK(rel_diff(heat_out(c), heat_out_entropy_form(c)) < 1e-12);
  CHECK(rel_diff(heat_in(c), heat_in_entropy_form(c)) < 1e-12);
}

TEST_CASE("heats via truncated sums agree with the closed forms") {
  for (const auto& c : {reference(), mixed(), CycleConfig{3.0, 0.7, 0.9, 0.1, 0.4, 0.5}}) {
    CHECK(rel_diff(heat_out(c, Route::series), heat_out(c)) < 1e-8);
    CHECK(rel_diff(heat_in(c, Route::series), heat_in(c)) < 1e-8);
  }
}

TEST_CASE("heats vanish as the reservoirs merge in a degenerate cycle") {
  for (double nu : {0.0, 0.4, 1.0}) {
    double previous = INFINITY;
    for (double gap : {1e-2, 1e-4, 1e-6, 1e-8}) {
      const CycleConfig c{1.5, 1.5 * (1.0 - gap), nu, nu, nu, nu};
      const double q = std::abs(heat_out(c));
      CHECK(q < previous);
      CHECK(q < 10.0 * gap);
      CHECK(std::abs(heat_in(c)) == doctest::Approx(q));
      previous = q;
    }
  }
}

TEST_CASE("degenerate statistics: zero work, heat passes straight through") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0.0, 1.0), t(0.2, 5.0);
  for (int i = 0; i < 100; ++i) {
    const double nu = u(rng), tc = t(rng), th = tc * (1.0 + t(rng));
    const auto r = run_cycle({th, tc, nu, nu, nu, nu});
    CHECK(r.work == 0.0);
    CHECK(r.q_in == r.q_out);
    CHECK_FALSE(r.flags.positive_work);
  }
}

TEST_CASE("work vanishes when T_c approaches T_h with nu_B=nu_C and nu_D=nu_A") {
  const CycleConfig c{2.0, 2.0 * (1.0 - 1e-4), 0.2, 0.7, 0.7, 0.2};
  CHECK(std::abs(run_cycle(c).work) < 1e-3);
  const CycleConfig closer{2.0, 2.0 * (1.0 - 1e-7), 0.2, 0.7, 0.7, 0.2};
  CHECK(std::abs(run_cycle(closer).work) < 1e-6);
}

TEST_CASE("efficiency undefined when no heat is drawn") {
  // The relaxation A' -> A releases more than the hot isotherm absorbs.
  const auto r = run_cycle({1.2, 1.0, 0.0, 0.0, 0.0, 1.0});
  CHECK(r.q_in < 0.0);
  CHECK_FALSE(r.flags.q_in_positive);
  CHECK_FALSE(r.eta_qce.has_value());
  CHECK_FALSE(r.flags.eta_below_carnot);
  CHECK_FALSE(r.valid());
}

TEST_CASE("units invariance of the efficiency") {
  const auto base = run_cycle(mixed());
  for (double lambda : {0.5, 3.0, 17.0}) {
    auto c = mixed();
    c.t_h *= lambda;
    c.t_c *= lambda;
    c.scale.hbar_omega *= lambda;
    const auto r = run_cycle(c);
    REQUIRE(r.eta_qce);
    CHECK(rel_diff(*r.eta_qce, *base.eta_qce) < 1e-12);
    CHECK(rel_diff(r.work, lambda * base.work) < 1e-12);
  }
  // k_B and T trade off the same way
  auto c = mixed();
  c.scale.k_b = 4.0;
  c.t_h /= 4.0;
  c.t_c /= 4.0;
  CHECK(rel_diff(*run_cycle(c).eta_qce, *base.eta_qce) < 1e-12);
}
