#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "swarmroute/random.hpp"
#include "swarmroute/topology.hpp"

namespace swarmroute {

// Marks a node already placed on the partial path. Reserved: decode rejects
// inputs that contain it.
inline constexpr double kSelectedPriority = -999.0;

// One real priority per node id. Particle positions and GA chromosomes both
// use this representation.
struct PriorityVector {
  std::vector<double> values;

  std::size_t size() const { return values.size(); }
  bool operator==(const PriorityVector&) const = default;
};

struct Path {
  std::vector<NodeId> nodes;

  bool empty() const { return nodes.empty(); }
  // Number of links.
  int hop_count() const {
    return nodes.empty() ? 0 : static_cast<int>(nodes.size()) - 1;
  }
  bool operator==(const Path&) const = default;
};

struct DecodeParams {
  int window = 4;        // heuristic operator M, >= 1
  int max_retries = 50;  // re-draws when a random vector dead-ends

  // M = floor(pn / a), the base region size.
  static DecodeParams for_network(const Network& network);
};

// Backtracking guard. Moving towards a higher-id destination, a candidate may
// sit at most M-1 ids below the terminal node; mirrored otherwise.
constexpr bool heuristic_allows(NodeId source, NodeId destination,
                                NodeId terminal, NodeId candidate, int window) {
  const long diff = static_cast<long>(candidate) - static_cast<long>(terminal);
  return source < destination ? diff > -window : diff < window;
}

// Neighbors of the path's terminal node that are unselected in `working` and
// pass heuristic_allows. An adjacent destination is always included. Sorted
// ascending.
std::vector<NodeId> eligible_neighbors(const Network& network,
                                       std::span<const double> working,
                                       std::span<const NodeId> path_so_far,
                                       NodeId source, NodeId destination,
                                       const DecodeParams& params);

// Greedy highest-priority walk from source to destination. Ties go to the
// lower node id. Returns nullopt on a dead end. `priorities` is not modified.
std::optional<Path> decode(const Network& network, const PriorityVector& priorities,
                           NodeId source, NodeId destination,
                           const DecodeParams& params);

// i.i.d. uniform on [0, 1).
PriorityVector random_priorities(std::size_t node_count, Seed seed);
PriorityVector random_priorities(std::size_t node_count, Engine& rng);

struct DecodedPriorities {
  PriorityVector priorities;
  Path path;
};

// Draws random vectors from `rng` until one decodes, up to
// params.max_retries re-draws after the first attempt. Throws NoPathFound
// naming the pair otherwise.
DecodedPriorities random_decodable_priorities(const Network& network,
                                              NodeId source, NodeId destination,
                                              const DecodeParams& params,
                                              Engine& rng);

// Simple, edge-connected, anchored at both ends.
bool is_valid_path(const Network& network, const Path& path, NodeId source,
                   NodeId destination);

}  // namespace swarmroute
