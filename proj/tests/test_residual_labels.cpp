#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "paraflow/label_setting.hpp"
#include "paraflow/residual.hpp"
#include "support.hpp"

using namespace paraflow;
using test::golden_network;

namespace {

// Resolves a hop between two NTPs against the network: forward when an arc
// runs from->to entered at from.theta, reverse when an arc runs to->from
// entered at to.theta.
Hop make_hop(const DynamicNetwork& net, NTP from, NTP to) {
  for (std::size_t a = 0; a < net.arcs.size(); ++a) {
    const ArcSpec& arc = net.arcs[a];
    if (arc.from == from.node && arc.to == to.node &&
        from.theta + arc.transit[from.theta] == to.theta) {
      return {from, to, static_cast<int>(a), from.theta, false};
    }
    if (arc.from == to.node && arc.to == from.node &&
        to.theta + arc.transit[to.theta] == from.theta) {
      return {from, to, static_cast<int>(a), to.theta, true};
    }
  }
  FAIL("no hop between the given NTPs");
  return {};
}

DynPath make_path(const DynamicNetwork& net, std::vector<NTP> ntps) {
  DynPath path;
  for (std::size_t i = 0; i + 1 < ntps.size(); ++i) {
    path.push_back(make_hop(net, ntps[i], ntps[i + 1]));
  }
  return path;
}

void check_mate_identity(const DynamicNetwork& net,
                         const ResidualState& state) {
  for (std::size_t a = 0; a < net.arcs.size(); ++a) {
    for (TimeStep theta = 0; theta <= net.horizon; ++theta) {
      if (!net.arc_active(a, theta)) {
        continue;
      }
      const auto th = static_cast<std::size_t>(theta);
      const ResidualCoeff& fwd = state.forward(a, theta);
      const ResidualCoeff& rev = state.reverse(a, theta);
      // Forward plus reverse capacity equals u - lower(lambda), as
      // polynomials in lambda around lambda_lo.
      const Rational lower_at_lo =
          net.arcs[a].lower0[th] + state.lambda_lo() * net.arcs[a].lower_slope[th];
      CHECK(fwd.alpha + rev.alpha == net.arcs[a].capacity[th] - lower_at_lo);
      CHECK(fwd.beta + rev.beta == -net.arcs[a].lower_slope[th]);
    }
  }
}

void check_label_optimality(const DynamicNetwork& net,
                            const ResidualState& state,
                            const LabelState& labels) {
  for (NodeId node = 1; node <= net.node_count; ++node) {
    for (TimeStep theta = 0; theta <= net.horizon; ++theta) {
      if (labels.tau_at(node, theta) >= kUnreachable) {
        continue;
      }
      for (const ResidualArcIn& in :
           residual_arcs_into(state, net, node, theta)) {
        const int transit = net.arcs[in.arc].transit[in.enter_theta];
        CHECK(labels.tau_at(in.pred.node, in.pred.theta) <=
              labels.tau_at(node, theta) + (in.reverse ? -transit : transit));
      }
    }
  }
}

}  // namespace

TEST_CASE("initial residual coefficients around lambda 0") {
  const DynamicNetwork net = golden_network();
  const ResidualState state = build_residual(net, test::golden_base_flow(), 0);

  // Arc (1,3) at theta=0: flow 5 against bound 1 + 4*lambda.
  CHECK(state.forward(1, 0) == ResidualCoeff{4, -4});
  CHECK(state.reverse(1, 0) == ResidualCoeff{0, 0});
  // Arc (3,4) at theta=1: flow 5 against bound 2.
  CHECK(state.forward(4, 1) == ResidualCoeff{3, 0});
  CHECK(state.flow(1, 0) == LinearFlow{5, 0});
  check_mate_identity(net, state);
}

TEST_CASE("residual arcs into a node-time pair") {
  const DynamicNetwork net = golden_network();
  const ResidualState state = build_residual(net, test::golden_base_flow(), 0);

  const auto into = residual_arcs_into(state, net, 3, 2);
  REQUIRE(into.size() == 2);
  CHECK(into[0].pred == NTP{1, 1});
  CHECK(into[0].arc == 1);
  CHECK_FALSE(into[0].reverse);
  CHECK(into[0].coeff.alpha == 1);
  CHECK(into[1].pred == NTP{2, 1});
  CHECK(into[1].arc == 2);
  CHECK(into[1].coeff.alpha == 3);
}

TEST_CASE("an isolated node has no incoming residual arcs") {
  DynamicNetwork net = golden_network();
  net.node_count = 5;  // node 5 touches nothing
  const ResidualState state = build_residual(net, test::golden_base_flow(), 0);
  for (TimeStep theta = 0; theta <= net.horizon; ++theta) {
    CHECK(residual_arcs_into(state, net, 5, theta).empty());
  }
}

TEST_CASE("zero capacity at lambda_lo with positive slope stays traversable") {
  DynamicNetwork net;
  net.node_count = 2;
  net.source = 1;
  net.sink = 2;
  net.horizon = 1;
  net.lambda_max = 1;
  net.arcs.push_back({1, 2, {1, 1}, {5, 5}, {2, 2}, {-1, -1}});
  ArcTimeTable<Rational> flow(1, 1);
  flow.at(0, 0) = Rational(3, 2);
  const ResidualState state = build_residual(net, flow, Rational(1, 2));
  CHECK(state.forward(0, 0) == ResidualCoeff{0, 1});
  // No capacity at lambda_lo itself, but positive on the whole open
  // interval beyond it, so label setting may route through it. Dropping it
  // would leave the flow minimal at lambda_lo only.
  const auto into = residual_arcs_into(state, net, 2, 1);
  REQUIRE(into.size() == 1);
  CHECK(into[0].coeff == ResidualCoeff{0, 1});

  // A negative slope at zero capacity stays excluded.
  ArcTimeTable<Rational> pinned(1, 1);
  pinned.at(0, 0) = Rational(3, 2);
  DynamicNetwork rising = net;
  rising.arcs[0].lower0 = {1, 1};
  rising.arcs[0].lower_slope = {1, 1};
  const ResidualState rising_state =
      build_residual(rising, pinned, Rational(1, 2));
  CHECK(rising_state.forward(0, 0) == ResidualCoeff{0, -1});
  CHECK(residual_arcs_into(rising_state, rising, 2, 1).empty());
}

TEST_CASE("saturated lower bound leaves no forward arc") {
  DynamicNetwork net;
  net.node_count = 2;
  net.source = 1;
  net.sink = 2;
  net.horizon = 1;
  net.lambda_max = 1;
  net.arcs.push_back({1, 2, {1, 1}, {2, 2}, {2, 2}, {0, 0}});
  ArcTimeTable<Rational> flow(1, 1);
  flow.at(0, 0) = 2;
  const ResidualState state = build_residual(net, flow, 0);
  CHECK(state.forward(0, 0) == ResidualCoeff{0, 0});
  CHECK(residual_arcs_into(state, net, 2, 1).empty());
}

TEST_CASE("infeasible base flow is rejected") {
  const DynamicNetwork net = golden_network();
  ArcTimeTable<Rational> flow = test::golden_base_flow();
  flow.at(1, 0) = 0;  // below the lower bound 1 + 4*lambda
  CHECK_THROWS_AS(build_residual(net, flow, 0), std::logic_error);
}

TEST_CASE("augmentation moves coefficients, mates and flows together") {
  const DynamicNetwork net = golden_network();
  ResidualState state = build_residual(net, test::golden_base_flow(), 0);

  const DynPath path =
      make_path(net, {{1, 1}, {3, 2}, {2, 1}, {4, 2}});
  REQUIRE(path.size() == 3);
  CHECK(path[1].reverse);
  CHECK(path[1].arc == 2);
  CHECK(path[1].enter_theta == 1);

  augment(state, path, 1, -1);
  CHECK(state.flow(1, 1) == LinearFlow{1, 1});
  CHECK(state.forward(1, 1) == ResidualCoeff{0, 0});
  CHECK(state.reverse(2, 1) == ResidualCoeff{1, 1});
  CHECK(state.forward(2, 1) == ResidualCoeff{4, -4});
  CHECK(state.flow(2, 1) == LinearFlow{4, -1});
  CHECK(state.flow(3, 1) == LinearFlow{1, 1});
  check_mate_identity(net, state);

  // The identity augmentation changes nothing.
  const ResidualState before = state;
  augment(state, path, 0, 0);
  CHECK(state.flow(2, 1) == before.flow(2, 1));
  CHECK(state.forward(2, 1) == before.forward(2, 1));

  // Overdraw is impossible by construction and rejected loudly.
  CHECK_THROWS_AS(augment(state, path, 10, 0), std::logic_error);
}

TEST_CASE("labels of the first golden search") {
  const DynamicNetwork net = golden_network();
  const ResidualState state = build_residual(net, test::golden_base_flow(), 0);
  const LabelState labels = compute_labels(state, net);

  CHECK(labels.reachable);
  CHECK(labels.quickest == 1);
  CHECK(labels.entry_theta == 1);
  CHECK(labels.tau_at(1, 0) == 2);
  CHECK(labels.tau_at(1, 2) >= kUnreachable);
  CHECK(labels.tau_at(1, 3) >= kUnreachable);
  check_label_optimality(net, state, labels);

  const DynPath path = extract_path(labels, net);
  const DynPath expected =
      make_path(net, {{1, 1}, {3, 2}, {2, 1}, {4, 2}});
  CHECK(path == expected);

  // Signed transit along the path telescopes to the quickest label.
  int total = 0;
  for (const Hop& hop : path) {
    const int transit = net.arcs[hop.arc].transit[hop.enter_theta];
    total += hop.reverse ? -transit : transit;
  }
  CHECK(total == labels.quickest);

  const LabelState again = compute_labels(state, net);
  CHECK(again.tau == labels.tau);
  CHECK(again.quickest == labels.quickest);
  CHECK(again.entry_theta == labels.entry_theta);
}

TEST_CASE("third golden search ties break toward the earlier insertion") {
  const DynamicNetwork net = golden_network();
  ResidualState state = build_residual(net, test::golden_base_flow(), 0);
  augment(state, make_path(net, {{1, 1}, {3, 2}, {2, 1}, {4, 2}}), 1, -1);
  augment(state, make_path(net, {{1, 0}, {2, 1}, {4, 2}}), 1, 1);

  const LabelState labels = compute_labels(state, net);
  CHECK(labels.quickest == 3);
  CHECK(labels.entry_theta == 0);
  // Both (2,1) and (3,1) sit at label 2; the route through (3,1) entered the
  // queue first and must win, giving the two-hop path.
  CHECK(extract_path(labels, net) ==
        make_path(net, {{1, 0}, {3, 1}, {4, 3}}));
  check_label_optimality(net, state, labels);

  augment(state, make_path(net, {{1, 0}, {3, 1}, {4, 3}}), 3, 0);
  const LabelState fourth = compute_labels(state, net);
  CHECK(extract_path(fourth, net) ==
        make_path(net, {{1, 0}, {2, 1}, {3, 2}, {4, 3}}));

  augment(state, make_path(net, {{1, 0}, {2, 1}, {3, 2}, {4, 3}}), 1, 1);
  const LabelState done = compute_labels(state, net);
  CHECK_FALSE(done.reachable);
  CHECK(done.quickest >= kUnreachable);
  CHECK_THROWS_AS(extract_path(done, net), std::logic_error);
  check_mate_identity(net, state);
}

TEST_CASE("single arc network has the one-hop quickest path") {
  DynamicNetwork net;
  net.node_count = 2;
  net.source = 1;
  net.sink = 2;
  net.horizon = 2;
  net.lambda_max = 1;
  net.arcs.push_back({1, 2, {1, 1, 1}, {4, 4, 4}, {1, 1, 1}, {0, 0, 0}});
  ArcTimeTable<Rational> flow(1, 2);
  flow.at(0, 0) = 2;
  flow.at(0, 1) = 1;
  const ResidualState state = build_residual(net, flow, 0);
  const LabelState labels = compute_labels(state, net);
  CHECK(labels.quickest == 1);
  CHECK(labels.entry_theta == 0);
  CHECK(extract_path(labels, net) == make_path(net, {{1, 0}, {2, 1}}));
}

TEST_CASE("empty residual network is unreachable") {
  DynamicNetwork net;
  net.node_count = 2;
  net.source = 1;
  net.sink = 2;
  net.horizon = 1;
  net.lambda_max = 1;
  net.arcs.push_back({1, 2, {1, 1}, {2, 2}, {2, 2}, {0, 0}});
  ArcTimeTable<Rational> flow(1, 1);
  flow.at(0, 0) = 2;  // pinned: lower = capacity
  const ResidualState state = build_residual(net, flow, 0);
  const LabelState labels = compute_labels(state, net);
  CHECK_FALSE(labels.reachable);
}
