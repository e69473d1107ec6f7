#include "paraflow/network.hpp"

#include <map>
#include <stdexcept>
#include <utility>

namespace paraflow {

std::string to_string(ViolationRule rule) {
  switch (rule) {
    case ViolationRule::kNodeOutOfRange:
      return "node id out of range";
    case ViolationRule::kSourceEqualsSink:
      return "source equals sink";
    case ViolationRule::kNegativeHorizon:
      return "negative horizon";
    case ViolationRule::kLambdaMaxNotPositive:
      return "lambda_max not positive";
    case ViolationRule::kTableLength:
      return "table length differs from horizon+1";
    case ViolationRule::kNegativeTransit:
      return "negative transit time";
    case ViolationRule::kCapacityBelowLower:
      return "capacity below lower bound";
    case ViolationRule::kSlopeExceedsMargin:
      return "lower-bound slope exceeds (capacity - lower0) / lambda_max";
    case ViolationRule::kNegativeLowerBound:
      return "lower bound negative at an endpoint of [0, lambda_max]";
    case ViolationRule::kSelfLoop:
      return "self loop";
    case ViolationRule::kParallelArcs:
      return "parallel arcs";
    case ViolationRule::kOppositeArcs:
      return "opposite arcs";
  }
  return "unknown";
}

ValidationReport validate_network(const DynamicNetwork& net) {
  ValidationReport report;
  auto flag = [&report](int arc, TimeStep theta, ViolationRule rule,
                        std::string detail = {}) {
    report.violations.push_back({arc, theta, rule, std::move(detail)});
  };

  if (net.source < 1 || net.source > net.node_count) {
    flag(-1, -1, ViolationRule::kNodeOutOfRange, "source");
  }
  if (net.sink < 1 || net.sink > net.node_count) {
    flag(-1, -1, ViolationRule::kNodeOutOfRange, "sink");
  }
  if (net.source == net.sink) {
    flag(-1, -1, ViolationRule::kSourceEqualsSink);
  }
  if (net.horizon < 0) {
    flag(-1, -1, ViolationRule::kNegativeHorizon);
  }
  if (net.lambda_max <= 0) {
    flag(-1, -1, ViolationRule::kLambdaMaxNotPositive);
  }

  std::map<std::pair<NodeId, NodeId>, int> seen;
  for (std::size_t a = 0; a < net.arcs.size(); ++a) {
    const ArcSpec& arc = net.arcs[a];
    const int index = static_cast<int>(a);
    if (arc.from < 1 || arc.from > net.node_count || arc.to < 1 ||
        arc.to > net.node_count) {
      flag(index, -1, ViolationRule::kNodeOutOfRange);
      continue;
    }
    if (arc.from == arc.to) {
      flag(index, -1, ViolationRule::kSelfLoop);
    } else {
      if (seen.count({arc.from, arc.to}) != 0) {
        flag(index, -1, ViolationRule::kParallelArcs);
      }
      if (seen.count({arc.to, arc.from}) != 0) {
        flag(index, -1, ViolationRule::kOppositeArcs);
      }
      seen.emplace(std::pair{arc.from, arc.to}, index);
    }

    const std::size_t periods = static_cast<std::size_t>(net.horizon) + 1;
    if (net.horizon < 0 || arc.transit.size() != periods ||
        arc.capacity.size() != periods || arc.lower0.size() != periods ||
        arc.lower_slope.size() != periods) {
      flag(index, -1, ViolationRule::kTableLength);
      continue;
    }

    for (TimeStep theta = 0; theta <= net.horizon; ++theta) {
      const auto th = static_cast<std::size_t>(theta);
      if (arc.transit[th] < 0) {
        flag(index, theta, ViolationRule::kNegativeTransit);
      }
      const Rational& u = arc.capacity[th];
      const Rational& l0 = arc.lower0[th];
      const Rational& slope = arc.lower_slope[th];
      if (u < l0) {
        flag(index, theta, ViolationRule::kCapacityBelowLower);
      }
      if (net.lambda_max > 0 && slope * net.lambda_max > u - l0) {
        flag(index, theta, ViolationRule::kSlopeExceedsMargin);
      }
      // Affine in lambda, so nonnegativity at both endpoints covers [0, Λmax].
      if (l0 < 0 || (net.lambda_max > 0 && l0 + net.lambda_max * slope < 0)) {
        flag(index, theta, ViolationRule::kNegativeLowerBound);
      }
    }
  }
  return report;
}

Rational lower_bound_at(const DynamicNetwork& net, std::size_t arc,
                        TimeStep theta, const Rational& lambda) {
  if (arc >= net.arcs.size()) {
    throw std::out_of_range("arc index out of range");
  }
  if (theta < 0 || theta > net.horizon) {
    throw std::out_of_range("theta outside 0..T");
  }
  if (lambda < 0 || lambda > net.lambda_max) {
    throw std::out_of_range("lambda outside [0, lambda_max]");
  }
  const auto th = static_cast<std::size_t>(theta);
  return net.arcs[arc].lower0[th] + lambda * net.arcs[arc].lower_slope[th];
}

}  // namespace paraflow
