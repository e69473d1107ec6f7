#include "paraflow/residual.hpp"

#include <stdexcept>

namespace paraflow {

ResidualState::ResidualState(const DynamicNetwork& net, Rational lambda_lo)
    : lambda_lo_(std::move(lambda_lo)),
      forward_(net.arcs.size(), net.horizon),
      reverse_(net.arcs.size(), net.horizon),
      flow_(net.arcs.size(), net.horizon),
      active_(net.arcs.size(), net.horizon),
      arrivals_(net.arcs.size(), net.horizon),
      in_arcs_(net.node_count),
      out_arcs_(net.node_count) {
  for (std::size_t a = 0; a < net.arcs.size(); ++a) {
    out_arcs_[net.arcs[a].from - 1].push_back(static_cast<int>(a));
    in_arcs_[net.arcs[a].to - 1].push_back(static_cast<int>(a));
    for (TimeStep theta = 0; theta <= net.horizon; ++theta) {
      if (!net.arc_active(a, theta)) {
        continue;
      }
      active_.at(a, theta) = 1;
      const int arrival = theta + net.arcs[a].transit[theta];
      arrivals_.at(a, arrival).push_back(theta);
    }
  }
}

ResidualState build_residual(const DynamicNetwork& net,
                             const ArcTimeTable<Rational>& base_flow,
                             const Rational& lambda_lo) {
  ResidualState state(net, lambda_lo);
  for (std::size_t a = 0; a < net.arcs.size(); ++a) {
    const ArcSpec& arc = net.arcs[a];
    for (TimeStep theta = 0; theta <= net.horizon; ++theta) {
      if (!state.active(a, theta)) {
        continue;
      }
      const auto th = static_cast<std::size_t>(theta);
      const Rational& f = base_flow.at(a, theta);
      ResidualCoeff& fwd = state.forward(a, theta);
      fwd.alpha = f - arc.lower0[th] - lambda_lo * arc.lower_slope[th];
      fwd.beta = -arc.lower_slope[th];
      if (fwd.alpha < 0) {
        throw std::logic_error("infeasible base flow at lambda_lo");
      }
      ResidualCoeff& rev = state.reverse(a, theta);
      rev.alpha = arc.capacity[th] - f;
      rev.beta = 0;
      if (rev.alpha < 0) {
        throw std::logic_error("base flow exceeds capacity");
      }
      state.flow(a, theta) = {f, 0};
    }
  }
  return state;
}

namespace {

// Positive on the upcoming subinterval: either already positive at
// lambda_lo, or zero there and growing. Arcs that are zero at lambda_lo with
// positive slope open up immediately past lambda_lo; dropping them would
// leave flows that are minimal at lambda_lo but not beyond it.
bool traversable(const ResidualCoeff& coeff) {
  return coeff.alpha > 0 || (coeff.alpha == 0 && coeff.beta > 0);
}

}  // namespace

std::vector<ResidualArcIn> residual_arcs_into(const ResidualState& state,
                                              const DynamicNetwork& net,
                                              NodeId node, TimeStep theta) {
  std::vector<ResidualArcIn> result;
  for (int a : state.arcs_into(node)) {
    for (TimeStep enter : state.entering_times(a, theta)) {
      const ResidualCoeff& coeff = state.forward(a, enter);
      if (traversable(coeff)) {
        result.push_back(
            {{net.arcs[a].from, enter}, a, enter, false, coeff});
      }
    }
  }
  for (int a : state.arcs_out_of(node)) {
    // Reverse arc of the copy entered at `theta`: it runs from the copy's
    // arrival NTP back to (node, theta).
    if (!state.active(a, theta)) {
      continue;
    }
    const ResidualCoeff& coeff = state.reverse(a, theta);
    if (traversable(coeff)) {
      const int arrival = theta + net.arcs[a].transit[theta];
      result.push_back({{net.arcs[a].to, arrival}, a, theta, true, coeff});
    }
  }
  return result;
}

void augment(ResidualState& state, const DynPath& path, const Rational& alpha,
             const Rational& beta) {
  for (const Hop& hop : path) {
    ResidualCoeff& used = hop.reverse
                              ? state.reverse(hop.arc, hop.enter_theta)
                              : state.forward(hop.arc, hop.enter_theta);
    ResidualCoeff& mate = hop.reverse
                              ? state.forward(hop.arc, hop.enter_theta)
                              : state.reverse(hop.arc, hop.enter_theta);
    used.alpha -= alpha;
    used.beta -= beta;
    mate.alpha += alpha;
    mate.beta += beta;
    if (used.alpha < 0) {
      throw std::logic_error("augmentation exceeds residual capacity");
    }
    LinearFlow& flow = state.flow(hop.arc, hop.enter_theta);
    if (hop.reverse) {
      flow.base += alpha;
      flow.slope += beta;
    } else {
      flow.base -= alpha;
      flow.slope -= beta;
    }
  }
}

}  // namespace paraflow
