#ifndef PARAFLOW_QUICKEST_PATHS_HPP
#define PARAFLOW_QUICKEST_PATHS_HPP

#include <utility>
#include <vector>

#include "paraflow/label_setting.hpp"
#include "paraflow/residual.hpp"

namespace paraflow {

struct Augmentation {
  DynPath path;
  Rational alpha;
  Rational beta;
  // The running upper limit of the subinterval after this augmentation.
  Rational lambda_limit;
};

// Minimum flow on one subinterval [lambda_lo, lambda_hi], with per-copy flow
// coefficients linear in (lambda - lambda_lo).
struct IntervalResult {
  Rational lambda_lo;
  Rational lambda_hi;
  ArcTimeTable<LinearFlow> flow;
  std::vector<Augmentation> augmentations;
};

struct SubintervalOutcome {
  IntervalResult interval;
  ResidualState residual;  // final state; no source-to-sink path remains
};

// Path capacity envelope: alpha is the least residual alpha over the path,
// beta the least beta among the hops attaining that alpha.
std::pair<Rational, Rational> path_coefficients(const DynPath& path,
                                                const ResidualState& state);

// Narrows the candidate upper limit of the subinterval: each hop whose beta
// lies below the path beta stops being the binding capacity at
// lambda_lo + (alpha_hop - alpha) / (beta - beta_hop); the least such point
// is where the path capacity function would acquire a breakpoint. Reads the
// coefficients as they stand, so call it before `augment`.
Rational breakpoint_candidate(const DynPath& path, const ResidualState& state,
                              const Rational& alpha, const Rational& beta,
                              const Rational& lambda_lo,
                              const Rational& lambda_cur);

// Repeatedly finds quickest source-to-sink paths in the residual network of
// the base flow at lambda_lo, decreases flow along them, and narrows the
// subinterval, until no path remains. The returned upper limit is lambda_max
// when no capacity function forced an earlier stop.
SubintervalOutcome solve_subinterval(const DynamicNetwork& net,
                                     const ArcTimeTable<Rational>& base_flow,
                                     const Rational& lambda_lo);

}  // namespace paraflow

#endif
