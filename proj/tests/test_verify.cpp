#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "paraflow/instance_gen.hpp"
#include "paraflow/label_setting.hpp"
#include "paraflow/verify.hpp"
#include "support.hpp"

using namespace paraflow;
using test::golden_network;

TEST_CASE("golden solution verifies against the oracle") {
  const DynamicNetwork net = golden_network();
  const auto sol = solve_with_base(net, test::golden_base_flow());
  REQUIRE(sol.has_value());
  const VerificationReport report = verify(*sol, net);
  CHECK(report.all_match);
  CHECK(report.mismatches.empty());
  // 4 breakpoints, 3 midpoints, plus the random draws.
  CHECK(report.samples.size() >= 7);
  for (const VerificationSample& sample : report.samples) {
    CHECK(sample.oracle_ok);
    CHECK(sample.parametric == sample.oracle);
  }
}

TEST_CASE("constant networks verify trivially") {
  DynamicNetwork net = golden_network();
  for (ArcSpec& arc : net.arcs) {
    arc.lower_slope.assign(4, 0);
  }
  const auto sol = solve(net);
  REQUIRE(sol.has_value());
  const VerificationReport report = verify(*sol, net, 1);
  CHECK(report.all_match);
  CHECK(report.samples.size() >= 3);
  for (const VerificationSample& sample : report.samples) {
    CHECK(sample.parametric == sol->value_function.front().value);
  }
}

TEST_CASE("a perturbed slope is flagged") {
  const DynamicNetwork net = golden_network();
  auto sol = solve_with_base(net, test::golden_base_flow());
  REQUIRE(sol.has_value());
  ParametricSolution corrupted = *sol;
  corrupted.value_function[1].slope += 1;

  const VerificationReport report = verify(corrupted, net);
  CHECK_FALSE(report.all_match);
  CHECK_FALSE(report.mismatches.empty());
  // Every mismatch lies past the left end of the corrupted piece; the value
  // there is untouched by a slope change.
  for (const VerificationSample& sample : report.mismatches) {
    CHECK(sample.lambda > corrupted.value_function[1].lambda_lo);
    CHECK(sample.lambda <= corrupted.value_function[1].lambda_hi);
  }
  CHECK_FALSE(structural_defects(corrupted, net).empty());
}

TEST_CASE("generated instances are valid and feasible") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 25; ++trial) {
    const GeneratedInstance instance = random_feasible_instance(rng);
    CHECK(validate_network(instance.net).ok());
    CHECK(base_flow_defects(instance.net, instance.feasible_base).empty());
  }
}

TEST_CASE("random instances solve, verify and certify against cuts") {
  std::mt19937_64 rng(3);
  int cut_checked = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const GeneratedInstance instance = random_feasible_instance(rng);
    const auto sol = solve(instance.net);
    REQUIRE(sol.has_value());
    CHECK(structural_defects(*sol, instance.net).empty());
    const VerificationReport report = verify(*sol, instance.net, 2, trial);
    CHECK(report.all_match);

    const int internal_ntps =
        (instance.net.node_count - 2) * (instance.net.horizon + 1);
    if (internal_ntps <= 16 && cut_checked < 8) {
      ++cut_checked;
      for (const Rational& lambda :
           {Rational(0), Rational(1, 2), Rational(1)}) {
        const auto by_cuts = test::min_flow_by_cut_enumeration(
            expand(instance.net, lambda));
        REQUIRE(by_cuts.has_value());
        CHECK(evaluate_value(*sol, lambda) == *by_cuts);
      }
    }
  }
  CHECK(cut_checked > 0);
}

TEST_CASE("subintervals advance and end exhausted on random instances") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 15; ++trial) {
    const GeneratedInstance instance = random_feasible_instance(rng);
    const auto sol = solve(instance.net);
    REQUIRE(sol.has_value());
    ArcTimeTable<Rational> base(instance.net.arcs.size(),
                                instance.net.horizon);
    // Rebuild the solver's own base flow from interval 0 at lambda 0.
    for (std::size_t a = 0; a < instance.net.arcs.size(); ++a) {
      for (TimeStep theta = 0; theta <= instance.net.horizon; ++theta) {
        base.at(a, theta) = instance.feasible_base.at(a, theta);
      }
    }
    for (const Rational& lo : sol->breakpoints) {
      if (lo == instance.net.lambda_max) {
        break;
      }
      const SubintervalOutcome outcome =
          solve_subinterval(instance.net, base, lo);
      CHECK(outcome.interval.lambda_hi > lo);
      CHECK_FALSE(compute_labels(outcome.residual, instance.net).reachable);
    }
  }
}

TEST_CASE("infeasible instances surface as nullopt") {
  CHECK_FALSE(solve(test::infeasible_network()).has_value());
}
