#ifndef PARAFLOW_TESTS_SUPPORT_HPP
#define PARAFLOW_TESTS_SUPPORT_HPP

#include <optional>
#include <vector>

#include "paraflow/instance_gen.hpp"
#include "paraflow/network.hpp"
#include "paraflow/static_flow.hpp"

namespace paraflow::test {

// Four-node reference network used across the suites: two routes from node 1
// to node 4, horizon 3, lambda on [0, 1], with parametric lower bounds on
// both routes. Its solution has breakpoints {0, 1/4, 3/5, 1}.
inline DynamicNetwork golden_network() {
  DynamicNetwork net;
  net.node_count = 4;
  net.source = 1;
  net.sink = 4;
  net.horizon = 3;
  net.lambda_max = 1;
  auto rat = [](std::initializer_list<int> values) {
    return std::vector<Rational>(values.begin(), values.end());
  };
  net.arcs.push_back({1, 2, {1, 2, 2, 2}, rat({5, 5, 5, 5}),
                      rat({3, 0, 0, 0}), rat({-2, 0, 0, 0})});
  net.arcs.push_back({1, 3, {1, 1, 2, 2}, rat({5, 5, 5, 5}),
                      rat({1, 1, 0, 0}), rat({4, 1, 0, 0})});
  net.arcs.push_back({2, 3, {1, 1, 1, 1}, rat({5, 5, 5, 5}),
                      rat({0, 0, 0, 0}), rat({0, 3, 0, 0})});
  net.arcs.push_back({2, 4, {1, 1, 2, 2}, rat({5, 5, 5, 5}),
                      rat({0, 0, 0, 0}), rat({0, 0, 0, 0})});
  net.arcs.push_back({3, 4, {2, 2, 1, 1}, rat({5, 5, 5, 5}),
                      rat({0, 2, 2, 0}), rat({0, 0, -2, 0})});
  return net;
}

// A base flow feasible against the tight lower bounds of golden_network(),
// chosen so the augmentation traces in the golden tests are reproducible.
inline ArcTimeTable<Rational> golden_base_flow() {
  ArcTimeTable<Rational> flow(5, 3);
  flow.at(0, 0) = 5;
  flow.at(1, 0) = 5;
  flow.at(1, 1) = 2;
  flow.at(2, 1) = 3;
  flow.at(3, 1) = 2;
  flow.at(4, 1) = 5;
  flow.at(4, 2) = 5;
  return flow;
}

// Passes validation but admits no feasible flow: the middle node must push
// at least 3 units onward while at most 1 unit can ever reach it.
inline DynamicNetwork infeasible_network() {
  DynamicNetwork net;
  net.node_count = 3;
  net.source = 1;
  net.sink = 3;
  net.horizon = 2;
  net.lambda_max = 1;
  auto rat = [](std::initializer_list<int> values) {
    return std::vector<Rational>(values.begin(), values.end());
  };
  net.arcs.push_back({1, 2, {1, 1, 1}, rat({1, 1, 1}), rat({0, 0, 0}),
                      rat({0, 0, 0})});
  net.arcs.push_back({2, 3, {1, 1, 1}, rat({3, 3, 3}), rat({3, 0, 0}),
                      rat({0, 0, 0})});
  return net;
}

// Independent minimum-flow oracle by exhaustive cut enumeration. For any
// feasible flow and any NTP set S containing every source copy and no sink
// copy, the value is at least l(S, out) - u(in, S); the maximum over all such
// cuts equals the minimum value. Usable only while 2^(internal NTPs) stays
// small. Returns nullopt when no feasible flow exists.
inline std::optional<Rational> min_flow_by_cut_enumeration(
    const TimeExpandedNetwork& tnet) {
  if (!feasible_flow(tnet)) {
    return std::nullopt;
  }
  std::vector<int> internal;
  for (int i = 0; i < tnet.ntp_count(); ++i) {
    const NodeId node = tnet.ntp_at(i).node;
    if (node != tnet.source && node != tnet.sink) {
      internal.push_back(i);
    }
  }
  std::vector<char> in_cut(tnet.ntp_count(), 0);
  for (TimeStep theta = 0; theta <= tnet.horizon; ++theta) {
    in_cut[tnet.ntp_index({tnet.source, theta})] = 1;
  }
  std::optional<Rational> best;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << internal.size());
       ++mask) {
    for (std::size_t b = 0; b < internal.size(); ++b) {
      in_cut[internal[b]] = (mask >> b) & 1;
    }
    Rational value = 0;
    for (const ExpandedArc& arc : tnet.arcs) {
      const bool tail_in = in_cut[tnet.ntp_index(arc.tail)] != 0;
      const bool head_in = in_cut[tnet.ntp_index(arc.head)] != 0;
      if (tail_in && !head_in) {
        value += arc.lower;
      } else if (!tail_in && head_in) {
        value -= arc.capacity;
      }
    }
    if (!best || value > *best) {
      best = value;
    }
  }
  return best;
}

}  // namespace paraflow::test

#endif
