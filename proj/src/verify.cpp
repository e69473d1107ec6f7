#include "paraflow/verify.hpp"

#include <algorithm>
#include <random>

#include "paraflow/static_flow.hpp"

namespace paraflow {

VerificationReport verify(const ParametricSolution& sol,
                          const DynamicNetwork& net,
                          int extra_samples_per_interval, std::uint64_t seed) {
  std::vector<Rational> points(sol.breakpoints);
  std::mt19937_64 rng(seed);
  for (const IntervalResult& interval : sol.intervals) {
    const Rational width = interval.lambda_hi - interval.lambda_lo;
    points.push_back(interval.lambda_lo + width / 2);
    for (int i = 0; i < extra_samples_per_interval; ++i) {
      // Interior rational with small denominator.
      const std::uint64_t den = 2 + rng() % 999;
      const std::uint64_t num = 1 + rng() % (den - 1);
      points.push_back(interval.lambda_lo +
                       width * Rational(num, den));
    }
  }
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());

  VerificationReport report;
  for (const Rational& lambda : points) {
    VerificationSample sample;
    sample.lambda = lambda;
    sample.parametric = evaluate_value(sol, lambda);
    const auto solved = min_flow(expand(net, lambda));
    if (solved) {
      sample.oracle = solved->value;
      sample.oracle_ok = true;
      sample.match = sample.oracle == sample.parametric;
    }
    if (!sample.match) {
      report.all_match = false;
      report.mismatches.push_back(sample);
    }
    report.samples.push_back(std::move(sample));
  }
  return report;
}

namespace {

void check_interval_endpoint(const DynamicNetwork& net,
                             const IntervalResult& interval,
                             const Rational& lambda,
                             std::vector<std::string>& defects) {
  const int periods = net.horizon + 1;
  std::vector<Rational> balance(
      static_cast<std::size_t>(net.node_count) * periods);
  const Rational offset = lambda - interval.lambda_lo;
  for (std::size_t a = 0; a < net.arcs.size(); ++a) {
    const ArcSpec& arc = net.arcs[a];
    for (TimeStep theta = 0; theta <= net.horizon; ++theta) {
      if (!net.arc_active(a, theta)) {
        if (interval.flow.at(a, theta) != LinearFlow{}) {
          defects.push_back("interval carries flow on a late entry");
        }
        continue;
      }
      const auto th = static_cast<std::size_t>(theta);
      const LinearFlow& lf = interval.flow.at(a, theta);
      const Rational f = lf.base + lf.slope * offset;
      const Rational lower = arc.lower0[th] + lambda * arc.lower_slope[th];
      if (f < lower || f > arc.capacity[th]) {
        defects.push_back("interval flow violates bounds at lambda=" +
                          to_string(lambda));
      }
      balance[(arc.from - 1) * periods + theta] += f;
      balance[(arc.to - 1) * periods + theta + arc.transit[th]] -= f;
    }
  }
  for (NodeId node = 1; node <= net.node_count; ++node) {
    if (node == net.source || node == net.sink) {
      continue;
    }
    for (TimeStep theta = 0; theta <= net.horizon; ++theta) {
      if (balance[(node - 1) * periods + theta] != 0) {
        defects.push_back("interval flow breaks conservation at lambda=" +
                          to_string(lambda));
      }
    }
  }
}

}  // namespace

std::vector<std::string> structural_defects(const ParametricSolution& sol,
                                            const DynamicNetwork& net) {
  std::vector<std::string> defects;
  if (sol.breakpoints.empty() || sol.breakpoints.front() != 0 ||
      sol.breakpoints.back() != net.lambda_max) {
    defects.push_back("breakpoints do not span [0, lambda_max]");
  }
  for (std::size_t i = 1; i < sol.breakpoints.size(); ++i) {
    if (sol.breakpoints[i] <= sol.breakpoints[i - 1]) {
      defects.push_back("breakpoints not strictly increasing");
    }
  }
  if (sol.breakpoints.size() != sol.intervals.size() + 1 ||
      sol.intervals.size() != sol.value_function.size()) {
    defects.push_back("piece counts inconsistent with breakpoints");
    return defects;
  }
  for (std::size_t k = 0; k < sol.intervals.size(); ++k) {
    const IntervalResult& interval = sol.intervals[k];
    const ValuePiece& piece = sol.value_function[k];
    if (interval.lambda_lo != sol.breakpoints[k] ||
        interval.lambda_hi != sol.breakpoints[k + 1] ||
        piece.lambda_lo != interval.lambda_lo ||
        piece.lambda_hi != interval.lambda_hi) {
      defects.push_back("interval does not tile its breakpoint slot");
    }
    // The piece must be the source imbalance of the interval flow.
    Rational value = 0;
    Rational slope = 0;
    for (std::size_t a = 0; a < net.arcs.size(); ++a) {
      const int sign = net.arcs[a].from == net.source  ? 1
                       : net.arcs[a].to == net.source ? -1
                                                       : 0;
      if (sign == 0) {
        continue;
      }
      for (TimeStep theta = 0; theta <= net.horizon; ++theta) {
        if (!net.arc_active(a, theta)) {
          continue;
        }
        value += sign * interval.flow.at(a, theta).base;
        slope += sign * interval.flow.at(a, theta).slope;
      }
    }
    if (value != piece.value || slope != piece.slope) {
      defects.push_back("value piece disagrees with interval flow");
    }
    check_interval_endpoint(net, interval, interval.lambda_lo, defects);
    check_interval_endpoint(net, interval, interval.lambda_hi, defects);
  }
  for (std::size_t k = 1; k < sol.value_function.size(); ++k) {
    const ValuePiece& prev = sol.value_function[k - 1];
    const ValuePiece& next = sol.value_function[k];
    const Rational left =
        prev.value + prev.slope * (prev.lambda_hi - prev.lambda_lo);
    if (left != next.value) {
      defects.push_back("value function discontinuous at " +
                        to_string(next.lambda_lo));
    }
  }
  return defects;
}

}  // namespace paraflow
