#include "paraflow/static_flow.hpp"

#include <cassert>
#include <deque>
#include <stdexcept>

namespace paraflow {

std::vector<Rational> node_imbalance(const TimeExpandedNetwork& tnet,
                                     const StaticFlow& flow) {
  std::vector<Rational> balance(tnet.ntp_count());
  for (std::size_t e = 0; e < tnet.arcs.size(); ++e) {
    balance[tnet.ntp_index(tnet.arcs[e].tail)] += flow.arc_flow[e];
    balance[tnet.ntp_index(tnet.arcs[e].head)] -= flow.arc_flow[e];
  }
  return balance;
}

Rational source_value(const TimeExpandedNetwork& tnet,
                      const StaticFlow& flow) {
  Rational value = 0;
  for (std::size_t e = 0; e < tnet.arcs.size(); ++e) {
    if (tnet.arcs[e].tail.node == tnet.source) {
      value += flow.arc_flow[e];
    }
    if (tnet.arcs[e].head.node == tnet.source) {
      value -= flow.arc_flow[e];
    }
  }
  return value;
}

bool is_feasible(const TimeExpandedNetwork& tnet, const StaticFlow& flow) {
  if (flow.arc_flow.size() != tnet.arcs.size()) {
    return false;
  }
  for (std::size_t e = 0; e < tnet.arcs.size(); ++e) {
    if (flow.arc_flow[e] < tnet.arcs[e].lower ||
        flow.arc_flow[e] > tnet.arcs[e].capacity) {
      return false;
    }
  }
  const auto balance = node_imbalance(tnet, flow);
  for (int i = 0; i < tnet.ntp_count(); ++i) {
    const NodeId node = tnet.ntp_at(i).node;
    if (node != tnet.source && node != tnet.sink && balance[i] != 0) {
      return false;
    }
  }
  return true;
}

namespace {

// Residual graph with paired edges; edge i and i^1 are twins. Augments along
// breadth-first (fewest-edge) paths, which keeps runs deterministic for a
// given scan order.
class AugmentingGraph {
 public:
  explicit AugmentingGraph(int nodes) : adjacency_(nodes) {}

  int add_edge(int from, int to, Rational cap, Rational back_cap = 0) {
    const int id = static_cast<int>(capacity_.size());
    adjacency_[from].push_back(id);
    targets_.push_back(to);
    capacity_.push_back(std::move(cap));
    adjacency_[to].push_back(id + 1);
    targets_.push_back(from);
    capacity_.push_back(std::move(back_cap));
    return id;
  }

  const Rational& residual(int edge) const { return capacity_[edge]; }

  Rational augment_all(const std::vector<int>& sources,
                       const std::vector<int>& sinks, ScanOrder order) {
    std::vector<char> is_sink(adjacency_.size(), 0);
    for (int v : sinks) {
      is_sink[v] = 1;
    }
    Rational total = 0;
    std::vector<int> parent_edge(adjacency_.size());
    while (true) {
      std::fill(parent_edge.begin(), parent_edge.end(), -1);
      std::deque<int> queue;
      for (int v : sources) {
        if (parent_edge[v] == -2) {
          continue;
        }
        parent_edge[v] = -2;  // visited, no incoming edge
        queue.push_back(v);
      }
      int reached = -1;
      while (!queue.empty() && reached < 0) {
        const int v = queue.front();
        queue.pop_front();
        const auto& out = adjacency_[v];
        for (std::size_t k = 0; k < out.size(); ++k) {
          const int edge =
              order == ScanOrder::kForward ? out[k] : out[out.size() - 1 - k];
          const int w = targets_[edge];
          if (parent_edge[w] != -1 || capacity_[edge] == 0) {
            continue;
          }
          parent_edge[w] = edge;
          if (is_sink[w]) {
            reached = w;
            break;
          }
          queue.push_back(w);
        }
      }
      if (reached < 0) {
        return total;
      }
      Rational bottleneck;
      bool first = true;
      for (int v = reached; parent_edge[v] >= 0;) {
        const int edge = parent_edge[v];
        if (first || capacity_[edge] < bottleneck) {
          bottleneck = capacity_[edge];
          first = false;
        }
        v = targets_[edge ^ 1];
      }
      for (int v = reached; parent_edge[v] >= 0;) {
        const int edge = parent_edge[v];
        capacity_[edge] -= bottleneck;
        capacity_[edge ^ 1] += bottleneck;
        v = targets_[edge ^ 1];
      }
      total += bottleneck;
    }
  }

 private:
  std::vector<std::vector<int>> adjacency_;
  std::vector<int> targets_;
  std::vector<Rational> capacity_;
};

// A finite stand-in for unbounded capacity: larger than any flow the real
// arcs can carry.
Rational big_capacity(const TimeExpandedNetwork& tnet) {
  Rational big = 1;
  for (const ExpandedArc& arc : tnet.arcs) {
    big += abs(arc.capacity) + abs(arc.lower);
  }
  return big;
}

}  // namespace

std::optional<StaticFlow> feasible_flow(const TimeExpandedNetwork& tnet,
                                        ScanOrder order) {
  for (const ExpandedArc& arc : tnet.arcs) {
    if (arc.lower > arc.capacity) {
      return std::nullopt;
    }
  }
  const int n = tnet.ntp_count();
  const int hub_source = n;      // frees the imbalance of source copies
  const int hub_sink = n + 1;    // frees the imbalance of sink copies
  const int super_source = n + 2;
  const int super_sink = n + 3;
  AugmentingGraph graph(n + 4);
  const Rational big = big_capacity(tnet);

  std::vector<int> arc_edge(tnet.arcs.size());
  std::vector<Rational> excess(n);
  for (std::size_t e = 0; e < tnet.arcs.size(); ++e) {
    const ExpandedArc& arc = tnet.arcs[e];
    arc_edge[e] = graph.add_edge(tnet.ntp_index(arc.tail),
                                 tnet.ntp_index(arc.head),
                                 arc.capacity - arc.lower);
    excess[tnet.ntp_index(arc.head)] += arc.lower;
    excess[tnet.ntp_index(arc.tail)] -= arc.lower;
  }
  for (TimeStep theta = 0; theta <= tnet.horizon; ++theta) {
    const int s_copy = tnet.ntp_index({tnet.source, theta});
    const int t_copy = tnet.ntp_index({tnet.sink, theta});
    graph.add_edge(hub_source, s_copy, big, big);
    graph.add_edge(t_copy, hub_sink, big, big);
  }
  graph.add_edge(hub_sink, hub_source, big, big);

  // Every node, terminal copies included, gets its excess arc; the hub edges
  // are what leave the terminal imbalances free in the recovered flow.
  Rational required = 0;
  for (int v = 0; v < n; ++v) {
    if (excess[v] > 0) {
      graph.add_edge(super_source, v, excess[v]);
      required += excess[v];
    } else if (excess[v] < 0) {
      graph.add_edge(v, super_sink, -excess[v]);
    }
  }

  const Rational pushed =
      graph.augment_all({super_source}, {super_sink}, order);
  if (pushed != required) {
    return std::nullopt;
  }
  StaticFlow flow;
  flow.arc_flow.resize(tnet.arcs.size());
  for (std::size_t e = 0; e < tnet.arcs.size(); ++e) {
    const ExpandedArc& arc = tnet.arcs[e];
    flow.arc_flow[e] =
        arc.lower + (arc.capacity - arc.lower) - graph.residual(arc_edge[e]);
  }
  assert(is_feasible(tnet, flow));
  return flow;
}

StaticFlow max_flow(const TimeExpandedNetwork& tnet,
                    const std::vector<NTP>& from, const std::vector<NTP>& to,
                    const StaticFlow& start, ScanOrder order) {
  AugmentingGraph graph(tnet.ntp_count());
  std::vector<int> arc_edge(tnet.arcs.size());
  for (std::size_t e = 0; e < tnet.arcs.size(); ++e) {
    const ExpandedArc& arc = tnet.arcs[e];
    arc_edge[e] = graph.add_edge(tnet.ntp_index(arc.tail),
                                 tnet.ntp_index(arc.head),
                                 arc.capacity - start.arc_flow[e],
                                 start.arc_flow[e]);
  }
  std::vector<int> sources;
  std::vector<int> sinks;
  for (const NTP& ntp : from) {
    sources.push_back(tnet.ntp_index(ntp));
  }
  for (const NTP& ntp : to) {
    sinks.push_back(tnet.ntp_index(ntp));
  }
  graph.augment_all(sources, sinks, order);

  StaticFlow flow;
  flow.arc_flow.resize(tnet.arcs.size());
  for (std::size_t e = 0; e < tnet.arcs.size(); ++e) {
    flow.arc_flow[e] = tnet.arcs[e].capacity - graph.residual(arc_edge[e]);
  }
  return flow;
}

std::optional<MinFlowResult> min_flow(const TimeExpandedNetwork& tnet,
                                      ScanOrder order) {
  const auto start = feasible_flow(tnet, order);
  if (!start) {
    return std::nullopt;
  }
  const int n = tnet.ntp_count();
  const int collector = n;  // gathers the source copies
  const int emitter = n + 1;  // feeds the sink copies
  AugmentingGraph graph(n + 2);
  const Rational big = big_capacity(tnet);

  std::vector<int> arc_edge(tnet.arcs.size());
  for (std::size_t e = 0; e < tnet.arcs.size(); ++e) {
    const ExpandedArc& arc = tnet.arcs[e];
    arc_edge[e] = graph.add_edge(tnet.ntp_index(arc.tail),
                                 tnet.ntp_index(arc.head),
                                 arc.capacity - start->arc_flow[e],
                                 start->arc_flow[e] - arc.lower);
  }
  for (TimeStep theta = 0; theta <= tnet.horizon; ++theta) {
    graph.add_edge(emitter, tnet.ntp_index({tnet.sink, theta}), big);
    graph.add_edge(tnet.ntp_index({tnet.source, theta}), collector, big);
  }
  graph.augment_all({emitter}, {collector}, order);

  MinFlowResult result;
  result.flow.arc_flow.resize(tnet.arcs.size());
  for (std::size_t e = 0; e < tnet.arcs.size(); ++e) {
    result.flow.arc_flow[e] =
        tnet.arcs[e].capacity - graph.residual(arc_edge[e]);
  }
  assert(is_feasible(tnet, result.flow));
  result.value = source_value(tnet, result.flow);
  return result;
}

}  // namespace paraflow
