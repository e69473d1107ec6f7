#ifndef PARAFLOW_SOLVER_HPP
#define PARAFLOW_SOLVER_HPP

#include <optional>
#include <vector>

#include "paraflow/quickest_paths.hpp"

namespace paraflow {

// One affine piece of the minimum-flow value function:
// value + slope * (lambda - lambda_lo) on [lambda_lo, lambda_hi].
struct ValuePiece {
  Rational lambda_lo;
  Rational lambda_hi;
  Rational value;  // at lambda_lo
  Rational slope;
};

// Full parametric answer: the breakpoints partitioning [0, lambda_max], a
// minimum flow per subinterval, and the piecewise-linear value function.
struct ParametricSolution {
  std::vector<Rational> breakpoints;  // starts at 0, ends at lambda_max
  std::vector<IntervalResult> intervals;
  std::vector<ValuePiece> value_function;

  int interval_count() const { return static_cast<int>(intervals.size()); }
};

// Worst-case lower bounds over the whole parameter interval:
// lower0 when the slope is <= 0, lower0 + lambda_max * slope otherwise.
// A flow feasible against these bounds is feasible for every lambda.
ArcTimeTable<Rational> tight_lower_bounds(const DynamicNetwork& net);

// Solves the parametric minimum flow over time problem. Returns nullopt when
// the network admits no flow against the tight lower bounds. Throws
// std::invalid_argument when validate_network reports violations.
std::optional<ParametricSolution> solve(const DynamicNetwork& net);

// Same, but starts from a caller-supplied base flow (it must be feasible
// against the tight lower bounds; throws std::invalid_argument otherwise).
// Useful when a specific augmentation trace has to be reproduced.
std::optional<ParametricSolution> solve_with_base(
    const DynamicNetwork& net, const ArcTimeTable<Rational>& base_flow);

// Value of the piecewise-linear function. Throws std::out_of_range outside
// [0, lambda_max]; interior breakpoints may resolve to either adjacent piece
// since the function is continuous.
Rational evaluate_value(const ParametricSolution& sol, const Rational& lambda);

// Problems a caller-supplied base flow would have, empty when it is usable.
std::vector<std::string> base_flow_defects(
    const DynamicNetwork& net, const ArcTimeTable<Rational>& base_flow);

}  // namespace paraflow

#endif
