#ifndef PARAFLOW_LABEL_SETTING_HPP
#define PARAFLOW_LABEL_SETTING_HPP

#include <cstdint>
#include <limits>

#include "paraflow/residual.hpp"

namespace paraflow {

inline constexpr std::int64_t kUnreachable =
    std::numeric_limits<std::int64_t>::max() / 2;

// Transit-time labels computed backward from the sink copies. tau[(i,theta)]
// is the least total transit of a residual path from (i,theta) to any sink
// copy, or kUnreachable. `via` stores the first hop of such a path.
struct LabelState {
  int node_count = 0;
  int horizon = 0;
  std::vector<std::int64_t> tau;  // by NTP index
  std::vector<Hop> via;           // via[i].arc < 0 marks "no successor"
  std::int64_t quickest = kUnreachable;  // min over theta of tau[(s,theta)]
  TimeStep entry_theta = -1;             // earliest theta attaining it
  bool reachable = false;
  NodeId source = 0;

  std::int64_t tau_at(NodeId node, TimeStep theta) const {
    return tau[(node - 1) * (horizon + 1) + theta];
  }
  const Hop& via_at(NodeId node, TimeStep theta) const {
    return via[(node - 1) * (horizon + 1) + theta];
  }
};

// Computes quickest-path labels over the residual network. Reverse residual
// arcs carry negative transit times, so a pure never-revisit discipline is
// unsound; improved labels re-enter the candidate queue instead. Every cycle
// of the residual network has zero total transit (each hop's transit equals
// its time displacement), so labels cannot decrease without bound.
// Ties on equal labels break by queue insertion order.
LabelState compute_labels(const ResidualState& state,
                          const DynamicNetwork& net);

// Follows `via` from (source, entry_theta) to a sink copy. Requires
// labels.reachable; throws std::logic_error on a broken or cyclic chain.
DynPath extract_path(const LabelState& labels, const DynamicNetwork& net);

}  // namespace paraflow

#endif
