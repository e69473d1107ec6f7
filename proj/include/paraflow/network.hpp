#ifndef PARAFLOW_NETWORK_HPP
#define PARAFLOW_NETWORK_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "paraflow/rational.hpp"

namespace paraflow {

using NodeId = int;    // 1-based
using TimeStep = int;  // 0..T

// One arc of the dynamic network with per-time-step attributes. Each table
// has horizon+1 entries. The effective lower bound at parameter value
// lambda is lower0[theta] + lambda * lower_slope[theta].
struct ArcSpec {
  NodeId from = 0;
  NodeId to = 0;
  std::vector<int> transit;           // nonnegative travel times
  std::vector<Rational> capacity;     // upper bounds
  std::vector<Rational> lower0;       // lower bounds at lambda = 0
  std::vector<Rational> lower_slope;  // per-lambda slope of the lower bound

  friend bool operator==(const ArcSpec&, const ArcSpec&) = default;
};

// Discrete-time dynamic network with parametric lower bounds on [0, lambda_max].
// Parallel and opposite arcs are not allowed. Flow entering arc a at time
// theta arrives at theta + transit[theta]; entries with arrival past the
// horizon carry no flow.
struct DynamicNetwork {
  int node_count = 0;
  NodeId source = 0;
  NodeId sink = 0;
  int horizon = 0;  // T
  Rational lambda_max = 0;
  std::vector<ArcSpec> arcs;

  // True when the (arc, theta) copy exists, i.e. theta + transit <= T.
  bool arc_active(std::size_t arc, TimeStep theta) const {
    const int h = arcs[arc].transit[static_cast<std::size_t>(theta)];
    return theta + h <= horizon;
  }

  friend bool operator==(const DynamicNetwork&, const DynamicNetwork&) =
      default;
};

enum class ViolationRule {
  kNodeOutOfRange,
  kSourceEqualsSink,
  kNegativeHorizon,
  kLambdaMaxNotPositive,
  kTableLength,
  kNegativeTransit,
  kCapacityBelowLower,
  kSlopeExceedsMargin,
  kNegativeLowerBound,
  kSelfLoop,
  kParallelArcs,
  kOppositeArcs,
};

std::string to_string(ViolationRule rule);

struct Violation {
  int arc_index = -1;  // -1 for network-level rules
  TimeStep theta = -1;
  ViolationRule rule;
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

// Checks every structural rule and returns all violations; never throws.
ValidationReport validate_network(const DynamicNetwork& net);

// lower0 + lambda * lower_slope for the given arc copy. Throws
// std::out_of_range for theta outside 0..T or lambda outside [0, lambda_max].
Rational lower_bound_at(const DynamicNetwork& net, std::size_t arc,
                        TimeStep theta, const Rational& lambda);

}  // namespace paraflow

#endif
