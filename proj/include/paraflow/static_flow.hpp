#ifndef PARAFLOW_STATIC_FLOW_HPP
#define PARAFLOW_STATIC_FLOW_HPP

#include <optional>
#include <vector>

#include "paraflow/time_expanded.hpp"

namespace paraflow {

// Direction in which adjacency lists are scanned while searching for
// augmenting paths. Used by tests to confirm the optimum is order-independent.
enum class ScanOrder {
  kForward,
  kReverse,
};

// A flow on a time-expanded network, indexed like its arc vector.
struct StaticFlow {
  std::vector<Rational> arc_flow;
};

struct MinFlowResult {
  Rational value;
  StaticFlow flow;
};

// Per-NTP imbalance (outflow minus inflow), indexed by ntp_index.
std::vector<Rational> node_imbalance(const TimeExpandedNetwork& tnet,
                                     const StaticFlow& flow);

// Sum over theta of the net outflow of the source copies.
Rational source_value(const TimeExpandedNetwork& tnet, const StaticFlow& flow);

// Bounds hold on every arc and conservation holds at every NTP whose node is
// neither the source nor the sink.
bool is_feasible(const TimeExpandedNetwork& tnet, const StaticFlow& flow);

// A flow with l <= f <= u everywhere and zero imbalance away from the
// source/sink copies, or nullopt when none exists. Uses the standard
// super-source/super-sink transformation of the lower bounds.
std::optional<StaticFlow> feasible_flow(const TimeExpandedNetwork& tnet,
                                        ScanOrder order = ScanOrder::kForward);

// Augments `start` until no residual path from `from` to `to` remains.
// Capacities only; lower bounds are the caller's concern.
StaticFlow max_flow(const TimeExpandedNetwork& tnet,
                    const std::vector<NTP>& from, const std::vector<NTP>& to,
                    const StaticFlow& start,
                    ScanOrder order = ScanOrder::kForward);

// Minimum total source outflow over all feasible flows: a feasible flow
// reduced by a maximum flow from the sink copies back to the source copies in
// the residual network. Nullopt when no feasible flow exists.
std::optional<MinFlowResult> min_flow(const TimeExpandedNetwork& tnet,
                                      ScanOrder order = ScanOrder::kForward);

}  // namespace paraflow

#endif
