#include "paraflow/label_setting.hpp"

#include <queue>
#include <stdexcept>
#include <tuple>

namespace paraflow {

namespace {

struct QueueEntry {
  std::int64_t tau;
  std::uint64_t seq;
  int ntp;

  bool operator>(const QueueEntry& other) const {
    return std::tie(tau, seq) > std::tie(other.tau, other.seq);
  }
};

}  // namespace

LabelState compute_labels(const ResidualState& state,
                          const DynamicNetwork& net) {
  LabelState labels;
  labels.node_count = net.node_count;
  labels.horizon = net.horizon;
  labels.source = net.source;
  const int periods = net.horizon + 1;
  labels.tau.assign(static_cast<std::size_t>(net.node_count) * periods,
                    kUnreachable);
  labels.via.assign(labels.tau.size(), Hop{});

  auto index = [periods](NodeId node, TimeStep theta) {
    return (node - 1) * periods + theta;
  };

  std::priority_queue<QueueEntry, std::vector<QueueEntry>,
                      std::greater<QueueEntry>>
      queue;
  std::uint64_t seq = 0;
  for (TimeStep theta = 0; theta <= net.horizon; ++theta) {
    labels.tau[index(net.sink, theta)] = 0;
    queue.push({0, seq++, index(net.sink, theta)});
  }

  while (!queue.empty()) {
    const QueueEntry top = queue.top();
    queue.pop();
    if (top.tau != labels.tau[top.ntp]) {
      continue;  // stale entry, label improved since insertion
    }
    const NodeId node = top.ntp / periods + 1;
    const TimeStep theta = top.ntp % periods;
    for (const ResidualArcIn& in :
         residual_arcs_into(state, net, node, theta)) {
      const int transit = net.arcs[in.arc].transit[in.enter_theta];
      const std::int64_t candidate =
          top.tau + (in.reverse ? -transit : transit);
      const int pred = index(in.pred.node, in.pred.theta);
      if (candidate < labels.tau[pred]) {
        labels.tau[pred] = candidate;
        labels.via[pred] = {in.pred, {node, theta}, in.arc, in.enter_theta,
                            in.reverse};
        queue.push({candidate, seq++, pred});
      }
    }
  }

  for (TimeStep theta = 0; theta <= net.horizon; ++theta) {
    const std::int64_t tau = labels.tau[index(net.source, theta)];
    if (tau < labels.quickest) {
      labels.quickest = tau;
      labels.entry_theta = theta;
    }
  }
  labels.reachable = labels.quickest < kUnreachable;
  return labels;
}

DynPath extract_path(const LabelState& labels, const DynamicNetwork& net) {
  if (!labels.reachable) {
    throw std::logic_error("no path: source copies unreachable");
  }
  DynPath path;
  NTP at{net.source, labels.entry_theta};
  const std::size_t limit =
      static_cast<std::size_t>(net.node_count) * (net.horizon + 1);
  while (at.node != net.sink) {
    const Hop& hop = labels.via_at(at.node, at.theta);
    if (hop.arc < 0 || !(hop.from == at) || path.size() > limit) {
      throw std::logic_error("successor chain broken or cyclic");
    }
    path.push_back(hop);
    at = hop.to;
  }
  return path;
}

}  // namespace paraflow
