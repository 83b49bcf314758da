#include "swarmroute/fitness.hpp"

#include "swarmroute/errors.hpp"

namespace swarmroute {

double fitness(const Network& network, const Path& path) {
  if (path.nodes.size() < 2) {
    throw Error(ErrorCode::InvalidPath, "path has no links");
  }
  const double first = network.bandwidth(path.nodes[0], path.nodes[1]);
  double total = 0.0;
  for (std::size_t i = 1; i < path.nodes.size(); ++i) {
    total += network.bandwidth(path.nodes[i - 1], path.nodes[i]);
  }
  return first / total;
}

}  // namespace swarmroute
