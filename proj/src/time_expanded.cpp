#include "paraflow/time_expanded.hpp"

#include <stdexcept>

namespace paraflow {

std::vector<NTP> TimeExpandedNetwork::source_ntps() const {
  std::vector<NTP> out;
  out.reserve(horizon + 1);
  for (TimeStep theta = 0; theta <= horizon; ++theta) {
    out.push_back({source, theta});
  }
  return out;
}

std::vector<NTP> TimeExpandedNetwork::sink_ntps() const {
  std::vector<NTP> out;
  out.reserve(horizon + 1);
  for (TimeStep theta = 0; theta <= horizon; ++theta) {
    out.push_back({sink, theta});
  }
  return out;
}

namespace {

template <typename LowerFn>
TimeExpandedNetwork expand_impl(const DynamicNetwork& net, LowerFn lower) {
  TimeExpandedNetwork out;
  out.node_count = net.node_count;
  out.horizon = net.horizon;
  out.source = net.source;
  out.sink = net.sink;
  for (std::size_t a = 0; a < net.arcs.size(); ++a) {
    const ArcSpec& arc = net.arcs[a];
    for (TimeStep theta = 0; theta <= net.horizon; ++theta) {
      if (!net.arc_active(a, theta)) {
        continue;
      }
      const auto th = static_cast<std::size_t>(theta);
      const int h = arc.transit[th];
      out.arcs.push_back({{arc.from, theta},
                          {arc.to, theta + h},
                          lower(a, theta),
                          arc.capacity[th],
                          a,
                          theta});
    }
  }
  return out;
}

}  // namespace

TimeExpandedNetwork expand(const DynamicNetwork& net, const Rational& lambda) {
  if (lambda < 0 || lambda > net.lambda_max) {
    throw std::out_of_range("lambda outside [0, lambda_max]");
  }
  return expand_impl(net, [&](std::size_t a, TimeStep theta) {
    const auto th = static_cast<std::size_t>(theta);
    return net.arcs[a].lower0[th] + lambda * net.arcs[a].lower_slope[th];
  });
}

TimeExpandedNetwork expand_with_lower(const DynamicNetwork& net,
                                      const ArcTimeTable<Rational>& lower) {
  return expand_impl(
      net, [&](std::size_t a, TimeStep theta) { return lower.at(a, theta); });
}

}  // namespace paraflow
