#ifndef PARAFLOW_VERIFY_HPP
#define PARAFLOW_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "paraflow/solver.hpp"

namespace paraflow {

struct VerificationSample {
  Rational lambda;
  Rational parametric;
  Rational oracle;
  bool oracle_ok = false;  // false when the fixed-lambda solve was infeasible
  bool match = false;
};

struct VerificationReport {
  std::vector<VerificationSample> samples;
  std::vector<VerificationSample> mismatches;
  bool all_match = true;
};

// Compares the parametric value function against independent fixed-lambda
// static minimum-flow solves, at every breakpoint, every interval midpoint,
// and `extra_samples_per_interval` seeded random rationals per interval.
// Agreement is exact; mismatches are reported, not thrown.
VerificationReport verify(const ParametricSolution& sol,
                          const DynamicNetwork& net,
                          int extra_samples_per_interval = 3,
                          std::uint64_t seed = 0);

// Structural checks on a solution: breakpoints strictly increase from 0 to
// lambda_max, the value function is continuous, interval flows respect
// bounds and conservation at both interval endpoints, late entries carry no
// flow, and each piece matches its interval's source imbalance. Returns one
// message per defect.
std::vector<std::string> structural_defects(const ParametricSolution& sol,
                                            const DynamicNetwork& net);

}  // namespace paraflow

#endif
