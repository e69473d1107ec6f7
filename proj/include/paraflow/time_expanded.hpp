#ifndef PARAFLOW_TIME_EXPANDED_HPP
#define PARAFLOW_TIME_EXPANDED_HPP

#include <cstddef>
#include <vector>

#include "paraflow/arc_time_table.hpp"
#include "paraflow/network.hpp"

namespace paraflow {

// One copy (node, theta) of a node in the time-expanded view.
struct NTP {
  NodeId node = 0;
  TimeStep theta = 0;

  friend bool operator==(const NTP&, const NTP&) = default;
  friend auto operator<=>(const NTP&, const NTP&) = default;
};

struct ExpandedArc {
  NTP tail;
  NTP head;
  Rational lower;
  Rational capacity;
  std::size_t arc = 0;  // originating arc index
  TimeStep theta = 0;   // entering time of the original copy
};

// Static expansion of a dynamic network: one node per NTP and one arc per
// (arc, theta) copy whose arrival theta + h stays within the horizon.
struct TimeExpandedNetwork {
  int node_count = 0;
  int horizon = 0;
  NodeId source = 0;
  NodeId sink = 0;
  std::vector<ExpandedArc> arcs;

  int ntp_count() const { return node_count * (horizon + 1); }
  int ntp_index(const NTP& ntp) const {
    return (ntp.node - 1) * (horizon + 1) + ntp.theta;
  }
  NTP ntp_at(int index) const {
    return {index / (horizon + 1) + 1, index % (horizon + 1)};
  }
  std::vector<NTP> source_ntps() const;
  std::vector<NTP> sink_ntps() const;
};

// Expansion with lower bounds fixed at the given lambda. Throws
// std::out_of_range when lambda is outside [0, lambda_max].
TimeExpandedNetwork expand(const DynamicNetwork& net, const Rational& lambda);

// Expansion with an explicit per-(arc, theta) lower-bound table.
TimeExpandedNetwork expand_with_lower(const DynamicNetwork& net,
                                      const ArcTimeTable<Rational>& lower);

}  // namespace paraflow

#endif
