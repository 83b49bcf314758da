#pragma once

#include "swarmroute/encoding.hpp"
#include "swarmroute/topology.hpp"

namespace swarmroute {

// Bandwidth of the link leaving the source divided by the summed bandwidth
// of every link on the path. Lies in (0, 1]; single-link paths score 1.
// Throws InvalidPath for paths without links or with a missing link.
// Shared verbatim by the PSO and GA so both score paths identically.
double fitness(const Network& network, const Path& path);

// Best fitness observed at one optimizer iteration / GA generation.
struct TracePoint {
  int iteration;
  double best_fitness;

  bool operator==(const TracePoint&) const = default;
};

}  // namespace swarmroute
