#include "paraflow/solver.hpp"

#include <stdexcept>

#include "paraflow/static_flow.hpp"

namespace paraflow {

ArcTimeTable<Rational> tight_lower_bounds(const DynamicNetwork& net) {
  ArcTimeTable<Rational> bounds(net.arcs.size(), net.horizon);
  for (std::size_t a = 0; a < net.arcs.size(); ++a) {
    for (TimeStep theta = 0; theta <= net.horizon; ++theta) {
      const auto th = static_cast<std::size_t>(theta);
      const Rational& slope = net.arcs[a].lower_slope[th];
      bounds.at(a, theta) = net.arcs[a].lower0[th];
      if (slope > 0) {
        bounds.at(a, theta) += net.lambda_max * slope;
      }
    }
  }
  return bounds;
}

std::vector<std::string> base_flow_defects(
    const DynamicNetwork& net, const ArcTimeTable<Rational>& base_flow) {
  std::vector<std::string> defects;
  if (base_flow.arc_count() != net.arcs.size() ||
      base_flow.periods() != net.horizon + 1) {
    defects.push_back("flow table shape does not match the network");
    return defects;
  }
  const auto bounds = tight_lower_bounds(net);
  auto describe = [](const ArcSpec& arc, TimeStep theta) {
    return "arc (" + std::to_string(arc.from) + "," + std::to_string(arc.to) +
           ") at theta=" + std::to_string(theta);
  };
  std::vector<Rational> balance(
      static_cast<std::size_t>(net.node_count) * (net.horizon + 1));
  const int periods = net.horizon + 1;
  for (std::size_t a = 0; a < net.arcs.size(); ++a) {
    const ArcSpec& arc = net.arcs[a];
    for (TimeStep theta = 0; theta <= net.horizon; ++theta) {
      const Rational& f = base_flow.at(a, theta);
      if (!net.arc_active(a, theta)) {
        if (f != 0) {
          defects.push_back("nonzero flow on late entry " +
                            describe(arc, theta));
        }
        continue;
      }
      if (f < bounds.at(a, theta)) {
        defects.push_back("flow below tight lower bound on " +
                          describe(arc, theta));
      }
      if (f > arc.capacity[static_cast<std::size_t>(theta)]) {
        defects.push_back("flow above capacity on " + describe(arc, theta));
      }
      const int arrival = theta + arc.transit[static_cast<std::size_t>(theta)];
      balance[(arc.from - 1) * periods + theta] += f;
      balance[(arc.to - 1) * periods + arrival] -= f;
    }
  }
  for (NodeId node = 1; node <= net.node_count; ++node) {
    if (node == net.source || node == net.sink) {
      continue;
    }
    for (TimeStep theta = 0; theta <= net.horizon; ++theta) {
      if (balance[(node - 1) * periods + theta] != 0) {
        defects.push_back("conservation fails at node " +
                          std::to_string(node) + " theta=" +
                          std::to_string(theta));
      }
    }
  }
  return defects;
}

namespace {

ParametricSolution run_intervals(const DynamicNetwork& net,
                                 const ArcTimeTable<Rational>& base_flow) {
  ParametricSolution sol;
  sol.breakpoints.push_back(0);
  Rational lambda = 0;
  const std::size_t interval_cap =
      10 * net.arcs.size() * static_cast<std::size_t>(net.horizon + 1) + 10;
  while (lambda < net.lambda_max) {
    SubintervalOutcome outcome = solve_subinterval(net, base_flow, lambda);
    if (outcome.interval.lambda_hi <= lambda) {
      throw std::logic_error("subinterval failed to advance");
    }
    lambda = outcome.interval.lambda_hi;
    sol.breakpoints.push_back(lambda);
    sol.intervals.push_back(std::move(outcome.interval));
    if (sol.intervals.size() > interval_cap) {
      throw std::logic_error("breakpoint count exceeded safety cap");
    }
  }

  for (const IntervalResult& interval : sol.intervals) {
    ValuePiece piece;
    piece.lambda_lo = interval.lambda_lo;
    piece.lambda_hi = interval.lambda_hi;
    piece.value = 0;
    piece.slope = 0;
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
        piece.value += sign * interval.flow.at(a, theta).base;
        piece.slope += sign * interval.flow.at(a, theta).slope;
      }
    }
    sol.value_function.push_back(std::move(piece));
  }
  return sol;
}

}  // namespace

std::optional<ParametricSolution> solve_with_base(
    const DynamicNetwork& net, const ArcTimeTable<Rational>& base_flow) {
  const auto report = validate_network(net);
  if (!report.ok()) {
    throw std::invalid_argument("invalid network: " +
                                to_string(report.violations.front().rule));
  }
  const auto defects = base_flow_defects(net, base_flow);
  if (!defects.empty()) {
    throw std::invalid_argument("unusable base flow: " + defects.front());
  }
  return run_intervals(net, base_flow);
}

std::optional<ParametricSolution> solve(const DynamicNetwork& net) {
  const auto report = validate_network(net);
  if (!report.ok()) {
    throw std::invalid_argument("invalid network: " +
                                to_string(report.violations.front().rule));
  }
  const auto bounds = tight_lower_bounds(net);
  const TimeExpandedNetwork tnet = expand_with_lower(net, bounds);
  const auto feasible = feasible_flow(tnet);
  if (!feasible) {
    return std::nullopt;
  }
  ArcTimeTable<Rational> base(net.arcs.size(), net.horizon);
  for (std::size_t e = 0; e < tnet.arcs.size(); ++e) {
    base.at(tnet.arcs[e].arc, tnet.arcs[e].theta) = feasible->arc_flow[e];
  }
  return run_intervals(net, base);
}

Rational evaluate_value(const ParametricSolution& sol,
                        const Rational& lambda) {
  if (sol.value_function.empty()) {
    throw std::out_of_range("empty solution");
  }
  if (lambda < sol.value_function.front().lambda_lo ||
      lambda > sol.value_function.back().lambda_hi) {
    throw std::out_of_range("lambda outside [0, lambda_max]");
  }
  for (const ValuePiece& piece : sol.value_function) {
    if (lambda <= piece.lambda_hi) {
      return piece.value + piece.slope * (lambda - piece.lambda_lo);
    }
  }
  return sol.value_function.back().value +
         sol.value_function.back().slope *
             (lambda - sol.value_function.back().lambda_lo);
}

}  // namespace paraflow
