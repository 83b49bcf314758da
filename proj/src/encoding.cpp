#include "swarmroute/encoding.hpp"

#include <algorithm>
#include <string>

#include "swarmroute/errors.hpp"

namespace swarmroute {

DecodeParams DecodeParams::for_network(const Network& network) {
  DecodeParams params;
  params.window = network.layout().base_region_size();
  return params;
}

std::vector<NodeId> eligible_neighbors(const Network& network,
                                       std::span<const double> working,
                                       std::span<const NodeId> path_so_far,
                                       NodeId source, NodeId destination,
                                       const DecodeParams& params) {
  std::vector<NodeId> out;
  if (path_so_far.empty()) return out;
  const NodeId terminal = path_so_far.back();
  for (NodeId n : network.neighbors(terminal)) {
    if (working[static_cast<std::size_t>(n)] == kSelectedPriority) continue;
    if (n == destination ||
        heuristic_allows(source, destination, terminal, n, params.window)) {
      out.push_back(n);
    }
  }
  return out;
}

std::optional<Path> decode(const Network& network, const PriorityVector& priorities,
                           NodeId source, NodeId destination,
                           const DecodeParams& params) {
  const int pn = network.node_count();
  if (priorities.size() != static_cast<std::size_t>(pn)) {
    throw Error(ErrorCode::InvalidArgument,
                "priority vector length " + std::to_string(priorities.size()) +
                    " does not match node count " + std::to_string(pn));
  }
  if (source < 0 || source >= pn || destination < 0 || destination >= pn) {
    throw Error(ErrorCode::InvalidArgument, "source/destination out of range");
  }
  if (source == destination) {
    throw Error(ErrorCode::InvalidArgument, "source equals destination");
  }
  if (params.window < 1) {
    throw Error(ErrorCode::InvalidArgument, "heuristic window must be >= 1");
  }
  if (std::find(priorities.values.begin(), priorities.values.end(),
                kSelectedPriority) != priorities.values.end()) {
    throw Error(ErrorCode::InvalidArgument, "priority vector contains the reserved -999 marker");
  }

  std::vector<double> working = priorities.values;
  Path path;
  path.nodes.push_back(source);
  working[static_cast<std::size_t>(source)] = kSelectedPriority;

  while (path.nodes.back() != destination) {
    const auto candidates =
        eligible_neighbors(network, working, path.nodes, source, destination, params);
    if (candidates.empty()) return std::nullopt;
    // Candidates are ascending, so strict > keeps the lowest id on ties.
    NodeId best = candidates.front();
    for (NodeId c : candidates) {
      if (working[static_cast<std::size_t>(c)] > working[static_cast<std::size_t>(best)]) {
        best = c;
      }
    }
    working[static_cast<std::size_t>(best)] = kSelectedPriority;
    path.nodes.push_back(best);
  }
  return path;
}

PriorityVector random_priorities(std::size_t node_count, Engine& rng) {
  PriorityVector out;
  out.values.resize(node_count);
  for (double& v : out.values) v = uniform01(rng);
  return out;
}

PriorityVector random_priorities(std::size_t node_count, Seed seed) {
  Engine rng = make_engine(derive_seed(seed, Stream::Priorities));
  return random_priorities(node_count, rng);
}

DecodedPriorities random_decodable_priorities(const Network& network,
                                              NodeId source, NodeId destination,
                                              const DecodeParams& params,
                                              Engine& rng) {
  const auto pn = static_cast<std::size_t>(network.node_count());
  for (int attempt = 0; attempt <= params.max_retries; ++attempt) {
    PriorityVector candidate = random_priorities(pn, rng);
    if (auto path = decode(network, candidate, source, destination, params)) {
      return {std::move(candidate), std::move(*path)};
    }
  }
  throw Error(ErrorCode::NoPathFound,
              "no decodable path from " + std::to_string(source) + " to " +
                  std::to_string(destination) + " after " +
                  std::to_string(params.max_retries) + " retries");
}

bool is_valid_path(const Network& network, const Path& path, NodeId source,
                   NodeId destination) {
  if (path.nodes.size() < 2) return false;
  if (path.nodes.front() != source || path.nodes.back() != destination) return false;
  std::vector<char> seen(static_cast<std::size_t>(network.node_count()), 0);
  for (NodeId n : path.nodes) {
    if (n < 0 || n >= network.node_count()) return false;
    if (seen[static_cast<std::size_t>(n)]) return false;
    seen[static_cast<std::size_t>(n)] = 1;
  }
  for (std::size_t i = 1; i < path.nodes.size(); ++i) {
    if (!network.has_link(path.nodes[i - 1], path.nodes[i])) return false;
  }
  return true;
}

}  // namespace swarmroute
