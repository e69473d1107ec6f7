#include "paraflow/quickest_paths.hpp"

#include <stdexcept>

namespace paraflow {

std::pair<Rational, Rational> path_coefficients(const DynPath& path,
                                                const ResidualState& state) {
  if (path.empty()) {
    throw std::invalid_argument("empty path");
  }
  Rational alpha = state.coeff(path.front()).alpha;
  for (const Hop& hop : path) {
    const Rational& a = state.coeff(hop).alpha;
    if (a < alpha) {
      alpha = a;
    }
  }
  bool first = true;
  Rational beta;
  for (const Hop& hop : path) {
    const ResidualCoeff& coeff = state.coeff(hop);
    if (coeff.alpha == alpha && (first || coeff.beta < beta)) {
      beta = coeff.beta;
      first = false;
    }
  }
  return {alpha, beta};
}

Rational breakpoint_candidate(const DynPath& path, const ResidualState& state,
                              const Rational& alpha, const Rational& beta,
                              const Rational& lambda_lo,
                              const Rational& lambda_cur) {
  Rational limit = lambda_cur;
  for (const Hop& hop : path) {
    const ResidualCoeff& coeff = state.coeff(hop);
    if (coeff.beta < beta) {
      const Rational candidate =
          lambda_lo + (coeff.alpha - alpha) / (beta - coeff.beta);
      if (candidate < limit) {
        limit = candidate;
      }
    }
  }
  return limit;
}

SubintervalOutcome solve_subinterval(const DynamicNetwork& net,
                                     const ArcTimeTable<Rational>& base_flow,
                                     const Rational& lambda_lo) {
  ResidualState state = build_residual(net, base_flow, lambda_lo);
  Rational lambda_hi = net.lambda_max;
  std::vector<Augmentation> augmentations;

  const std::size_t cap =
      8 * net.arcs.size() * static_cast<std::size_t>(net.horizon + 1) + 64;

  LabelState labels = compute_labels(state, net);
  while (labels.reachable) {
    DynPath path = extract_path(labels, net);
    const auto [alpha, beta] = path_coefficients(path, state);
    lambda_hi =
        breakpoint_candidate(path, state, alpha, beta, lambda_lo, lambda_hi);
    augment(state, path, alpha, beta);
    augmentations.push_back({std::move(path), alpha, beta, lambda_hi});
    if (augmentations.size() > cap) {
      throw std::logic_error("augmentation count exceeded safety cap");
    }
    labels = compute_labels(state, net);
  }

  SubintervalOutcome out{{lambda_lo, lambda_hi, state.flow_table(),
                          std::move(augmentations)},
                         std::move(state)};
  return out;
}

}  // namespace paraflow
