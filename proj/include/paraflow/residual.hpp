#ifndef PARAFLOW_RESIDUAL_HPP
#define PARAFLOW_RESIDUAL_HPP

#include <cstddef>
#include <vector>

#include "paraflow/arc_time_table.hpp"
#include "paraflow/network.hpp"
#include "paraflow/time_expanded.hpp"

namespace paraflow {

// A residual capacity linear in lambda: alpha + beta * (lambda - lambda_lo).
struct ResidualCoeff {
  Rational alpha;
  Rational beta;

  friend bool operator==(const ResidualCoeff&, const ResidualCoeff&) = default;
};

// A flow linear in lambda: base + slope * (lambda - lambda_lo).
struct LinearFlow {
  Rational base;
  Rational slope;

  friend bool operator==(const LinearFlow&, const LinearFlow&) = default;
};

// One step of a dynamic path. `arc` and `enter_theta` identify the
// underlying (arc, theta) copy; a reverse hop runs from the copy's arrival
// NTP back to its entering NTP and carries negative transit time.
struct Hop {
  NTP from;
  NTP to;
  int arc = -1;
  TimeStep enter_theta = -1;
  bool reverse = false;

  friend bool operator==(const Hop&, const Hop&) = default;
};

using DynPath = std::vector<Hop>;

// Residual network of a base flow, with capacities kept linear on
// [lambda_lo, ...]. Forward coefficients measure how far the flow sits above
// the lower bound (room to decrease); reverse coefficients measure the gap to
// the capacity (room to push back). Both are keyed by the entering time of
// the underlying copy: keying reverse arcs by arrival time would collide when
// two entering times share one arrival.
class ResidualState {
 public:
  ResidualState() = default;
  ResidualState(const DynamicNetwork& net, Rational lambda_lo);

  const Rational& lambda_lo() const { return lambda_lo_; }
  bool active(std::size_t arc, TimeStep theta) const {
    return active_.at(arc, theta) != 0;
  }

  ResidualCoeff& forward(std::size_t arc, TimeStep theta) {
    return forward_.at(arc, theta);
  }
  const ResidualCoeff& forward(std::size_t arc, TimeStep theta) const {
    return forward_.at(arc, theta);
  }
  ResidualCoeff& reverse(std::size_t arc, TimeStep theta) {
    return reverse_.at(arc, theta);
  }
  const ResidualCoeff& reverse(std::size_t arc, TimeStep theta) const {
    return reverse_.at(arc, theta);
  }
  const ResidualCoeff& coeff(const Hop& hop) const {
    return hop.reverse ? reverse_.at(hop.arc, hop.enter_theta)
                       : forward_.at(hop.arc, hop.enter_theta);
  }

  LinearFlow& flow(std::size_t arc, TimeStep theta) {
    return flow_.at(arc, theta);
  }
  const LinearFlow& flow(std::size_t arc, TimeStep theta) const {
    return flow_.at(arc, theta);
  }
  const ArcTimeTable<LinearFlow>& flow_table() const { return flow_; }

  const std::vector<int>& arcs_into(NodeId node) const {
    return in_arcs_[node - 1];
  }
  const std::vector<int>& arcs_out_of(NodeId node) const {
    return out_arcs_[node - 1];
  }
  // Entering times theta of `arc` with theta + h(theta) == arrival.
  const std::vector<TimeStep>& entering_times(std::size_t arc,
                                              TimeStep arrival) const {
    return arrivals_.at(arc, arrival);
  }

 private:
  Rational lambda_lo_;
  ArcTimeTable<ResidualCoeff> forward_;
  ArcTimeTable<ResidualCoeff> reverse_;
  ArcTimeTable<LinearFlow> flow_;
  ArcTimeTable<char> active_;
  ArcTimeTable<std::vector<TimeStep>> arrivals_;
  std::vector<std::vector<int>> in_arcs_;
  std::vector<std::vector<int>> out_arcs_;
};

// Initial coefficients at lambda_lo for a base flow that stays feasible up to
// lambda_max: forward alpha = f - l0 - lambda_lo * slope with beta = -slope,
// reverse alpha = u - f with beta = 0. Throws std::logic_error if any forward
// alpha comes out negative (the base flow was not feasible at lambda_lo).
ResidualState build_residual(const DynamicNetwork& net,
                             const ArcTimeTable<Rational>& base_flow,
                             const Rational& lambda_lo);

// A residual arc ending at some NTP, paired with its tail NTP.
struct ResidualArcIn {
  NTP pred;
  int arc = -1;
  TimeStep enter_theta = -1;
  bool reverse = false;
  ResidualCoeff coeff;
};

// All residual arcs entering (node, theta) whose capacity is positive just
// past lambda_lo: alpha > 0, or alpha == 0 with beta > 0. The latter arcs
// carry no capacity at lambda_lo itself but open up immediately beyond it;
// paths through them augment with alpha = 0 and keep the flow minimal on the
// interior of the subinterval.
std::vector<ResidualArcIn> residual_arcs_into(const ResidualState& state,
                                              const DynamicNetwork& net,
                                              NodeId node, TimeStep theta);

// Applies a path augmentation: every traversed residual arc loses
// (alpha, beta), its mate gains the same, and the underlying flow moves
// down on forward hops and up on reverse hops.
void augment(ResidualState& state, const DynPath& path, const Rational& alpha,
             const Rational& beta);

}  // namespace paraflow

#endif
