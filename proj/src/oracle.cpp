#include "swarmroute/oracle.hpp"

#include <string>

#include "swarmroute/errors.hpp"
#include "swarmroute/fitness.hpp"

namespace swarmroute {

namespace {

struct Search {
  const Network& network;
  NodeId destination;
  std::vector<char> on_path;
  Path current;
  OracleResult best;

  void visit(NodeId node) {
    on_path[static_cast<std::size_t>(node)] = 1;
    current.nodes.push_back(node);
    if (node == destination) {
      ++best.paths_enumerated;
      const double f = fitness(network, current);
      // Neighbors are visited in ascending order and no complete path is a
      // prefix of another, so enumeration order is lexicographic and the
      // first maximum wins ties.
      if (best.path.empty() || f > best.fitness) {
        best.fitness = f;
        best.path = current;
      }
    } else {
      for (NodeId next : network.neighbors(node)) {
        if (!on_path[static_cast<std::size_t>(next)]) visit(next);
      }
    }
    current.nodes.pop_back();
    on_path[static_cast<std::size_t>(node)] = 0;
  }
};

}  // namespace

OracleResult brute_force_best(const Network& network, NodeId source,
                              NodeId destination, int node_cap) {
  if (network.node_count() > node_cap) {
    throw Error(ErrorCode::OracleTooLarge,
                "oracle limited to " + std::to_string(node_cap) + " nodes, network has " +
                    std::to_string(network.node_count()));
  }
  const int pn = network.node_count();
  if (source < 0 || source >= pn || destination < 0 || destination >= pn ||
      source == destination) {
    throw Error(ErrorCode::InvalidArgument, "invalid source/destination pair");
  }
  Search search{network, destination,
                std::vector<char>(static_cast<std::size_t>(pn), 0), {}, {}};
  search.visit(source);
  if (search.best.path.empty()) {
    throw Error(ErrorCode::NoPathFound, "no path from " + std::to_string(source) +
                                            " to " + std::to_string(destination));
  }
  return search.best;
}

}  // namespace swarmroute
