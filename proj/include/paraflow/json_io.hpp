#ifndef PARAFLOW_JSON_IO_HPP
#define PARAFLOW_JSON_IO_HPP

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "paraflow/solver.hpp"
#include "paraflow/verify.hpp"

namespace paraflow {

// Raised for malformed documents; the message names the offending field.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Network document: {n, source, sink, T, lambda_max, arcs:[{from, to, h[],
// u[], l0[], L[]}]} with every array of length T+1. Rational values are
// integers or "p/q" strings; transit times are integers.
DynamicNetwork network_from_json(const nlohmann::json& doc);
nlohmann::json network_to_json(const DynamicNetwork& net);

// Flow document: {flows:[{from, to, theta, value}]}; omitted copies are zero.
ArcTimeTable<Rational> flow_from_json(const nlohmann::json& doc,
                                      const DynamicNetwork& net);
nlohmann::json flow_to_json(const DynamicNetwork& net,
                            const ArcTimeTable<Rational>& flow);

// Solution document with breakpoints, value pieces and per-interval flows;
// augmentation traces are included when `trace` is set.
nlohmann::json solution_to_json(const ParametricSolution& sol,
                                const DynamicNetwork& net, bool trace);

nlohmann::json report_to_json(const VerificationReport& report);

// "lambda,value" rows at the breakpoints plus a uniform grid, sorted with
// duplicates removed, rendered to 12 significant digits.
std::string value_function_csv(const ParametricSolution& sol,
                               int grid_points);

}  // namespace paraflow

#endif
