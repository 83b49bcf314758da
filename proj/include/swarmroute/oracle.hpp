#pragma once

#include "swarmroute/encoding.hpp"
#include "swarmroute/topology.hpp"

namespace swarmroute {

inline constexpr int kDefaultOracleCap = 12;

struct OracleResult {
  Path path;
  double fitness = 0.0;
  std::size_t paths_enumerated = 0;
};

// Exhaustive depth-first enumeration of every simple source->destination
// path; returns the fitness-maximal one, ties resolved to the
// lexicographically smallest node sequence. Throws OracleTooLarge when the
// network exceeds `node_cap` nodes and NoPathFound when the pair is
// disconnected.
OracleResult brute_force_best(const Network& network, NodeId source,
                              NodeId destination, int node_cap = kDefaultOracleCap);

}  // namespace swarmroute
