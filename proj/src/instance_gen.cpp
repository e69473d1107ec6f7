#include "paraflow/instance_gen.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <utility>

namespace paraflow {

namespace {

int draw(std::mt19937_64& rng, int bound) {  // uniform-ish over 0..bound-1
  return static_cast<int>(rng() % static_cast<std::uint64_t>(bound));
}

}  // namespace

GeneratedInstance random_feasible_instance(std::mt19937_64& rng,
                                           const GeneratorLimits& limits) {
  DynamicNetwork net;
  net.node_count = 2 + draw(rng, limits.max_nodes - 1);
  net.horizon = 1 + draw(rng, limits.max_horizon);
  net.lambda_max = 1;
  net.source = 1 + draw(rng, net.node_count);
  do {
    net.sink = 1 + draw(rng, net.node_count);
  } while (net.sink == net.source);

  // Candidate arcs in random order, skipping parallels and opposites. A
  // source->sink arc is seeded first so an s-t connection usually exists.
  std::vector<std::pair<NodeId, NodeId>> pairs;
  for (NodeId i = 1; i <= net.node_count; ++i) {
    for (NodeId j = 1; j <= net.node_count; ++j) {
      if (i != j && !(i == net.source && j == net.sink)) {
        pairs.emplace_back(i, j);
      }
    }
  }
  for (std::size_t i = pairs.size(); i > 1; --i) {
    std::swap(pairs[i - 1], pairs[draw(rng, static_cast<int>(i))]);
  }
  pairs.insert(pairs.begin(), {net.source, net.sink});

  const int target_arcs = 1 + draw(rng, limits.max_arcs);
  std::set<std::pair<NodeId, NodeId>> taken;
  const auto periods = static_cast<std::size_t>(net.horizon) + 1;
  for (const auto& [from, to] : pairs) {
    if (static_cast<int>(net.arcs.size()) >= target_arcs) {
      break;
    }
    if (taken.count({from, to}) != 0 || taken.count({to, from}) != 0) {
      continue;
    }
    taken.insert({from, to});
    ArcSpec arc;
    arc.from = from;
    arc.to = to;
    arc.transit.resize(periods);
    arc.capacity.assign(periods, 0);
    arc.lower0.assign(periods, 0);
    arc.lower_slope.assign(periods, 0);
    for (auto& h : arc.transit) {
      h = draw(rng, 8) == 0 ? 0 : 1 + draw(rng, 3);
    }
    net.arcs.push_back(std::move(arc));
  }

  // Flow from a handful of random timed source-to-sink walks.
  ArcTimeTable<Rational> flow(net.arcs.size(), net.horizon);
  std::vector<std::vector<int>> out_arcs(net.node_count);
  for (std::size_t a = 0; a < net.arcs.size(); ++a) {
    out_arcs[net.arcs[a].from - 1].push_back(static_cast<int>(a));
  }
  const int walks = draw(rng, 5);
  for (int w = 0; w < walks; ++w) {
    for (int attempt = 0; attempt < 20; ++attempt) {
      std::vector<std::pair<int, TimeStep>> visited;  // (arc, theta)
      NodeId at = net.source;
      TimeStep now = draw(rng, net.horizon + 1);
      bool arrived = false;
      for (int hops = 0; hops < net.node_count + 2 && !arrived; ++hops) {
        const auto& options = out_arcs[at - 1];
        if (options.empty()) {
          break;
        }
        const int a = options[draw(rng, static_cast<int>(options.size()))];
        if (!net.arc_active(a, now)) {
          break;
        }
        visited.emplace_back(a, now);
        now += net.arcs[a].transit[now];
        at = net.arcs[a].to;
        arrived = at == net.sink;
      }
      if (arrived) {
        const Rational amount = 1 + draw(rng, 3);
        for (const auto& [a, theta] : visited) {
          flow.at(a, theta) += amount;
        }
        break;
      }
    }
  }

  // Bounds around the flow. Endpoint values of the parametric lower bound
  // are drawn within [0, f], so the tight bound never exceeds the flow, and
  // the slope constraint holds because the capacity is at least f.
  for (std::size_t a = 0; a < net.arcs.size(); ++a) {
    ArcSpec& arc = net.arcs[a];
    for (TimeStep theta = 0; theta <= net.horizon; ++theta) {
      const auto th = static_cast<std::size_t>(theta);
      if (!net.arc_active(a, theta)) {
        arc.capacity[th] = draw(rng, limits.max_value + 1);
        continue;
      }
      const Rational& f = flow.at(a, theta);
      arc.capacity[th] = f + draw(rng, limits.max_value + 1);
      const int f_int = f.convert_to<int>();
      const int at_zero = draw(rng, f_int + 1);
      const int at_max = draw(rng, f_int + 1);
      arc.lower0[th] = at_zero;
      arc.lower_slope[th] = at_max - at_zero;  // lambda_max is 1
    }
  }

  assert(validate_network(net).ok());
  return {std::move(net), std::move(flow)};
}

}  // namespace paraflow
