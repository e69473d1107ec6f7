#ifndef PARAFLOW_INSTANCE_GEN_HPP
#define PARAFLOW_INSTANCE_GEN_HPP

#include <random>

#include "paraflow/arc_time_table.hpp"
#include "paraflow/network.hpp"

namespace paraflow {

struct GeneratorLimits {
  int max_nodes = 6;
  int max_arcs = 10;
  int max_horizon = 5;
  int max_value = 5;
};

struct GeneratedInstance {
  DynamicNetwork net;
  // Feasible against tight_lower_bounds(net) by construction.
  ArcTimeTable<Rational> feasible_base;
};

// Seeded random network that always admits a feasible flow: bounds are grown
// around a flow assembled from random source-to-sink dynamic paths, so the
// tight lower bounds never exceed it. Only rng() is consumed, keeping draws
// identical across standard library implementations.
GeneratedInstance random_feasible_instance(std::mt19937_64& rng,
                                           const GeneratorLimits& limits = {});

}  // namespace paraflow

#endif
