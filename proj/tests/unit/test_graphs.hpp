#pragma once

// Small hand-built networks and independent oracles shared by the unit and
// acceptance suites. Nothing here calls into the code paths it checks.

#include <queue>
#include <vector>

#include "swarmroute/topology.hpp"

namespace swarmroute::fixtures {

inline Network build(int pn, std::vector<Link> links, BandwidthRange range = {1.0, 100.0}) {
  return Network(partition_regions(pn), std::move(links), 0, range);
}

// 0-1, 0-2, 1-3, 2-3 with 0-1-3 scoring 0.5 and 0-2-3 scoring 0.6.
inline Network diamond() {
  return build(4, {{0, 1, 50.0}, {1, 3, 50.0}, {0, 2, 60.0}, {2, 3, 40.0}});
}

inline Network line(int pn, double bandwidth = 10.0) {
  std::vector<Link> links;
  for (NodeId i = 0; i + 1 < pn; ++i) links.push_back({i, i + 1, bandwidth});
  return build(pn, std::move(links));
}

inline Network complete(int pn, double bandwidth = 10.0) {
  std::vector<Link> links;
  for (NodeId a = 0; a < pn; ++a)
    for (NodeId b = a + 1; b < pn; ++b) links.push_back({a, b, bandwidth});
  return build(pn, std::move(links));
}

// Reachability from `start` by breadth-first search over the raw link list.
inline std::vector<bool> reachable_from(const Network& net, NodeId start) {
  const auto n = static_cast<std::size_t>(net.node_count());
  std::vector<std::vector<NodeId>> adj(n);
  for (const Link& l : net.links()) {
    adj[static_cast<std::size_t>(l.u)].push_back(l.v);
    adj[static_cast<std::size_t>(l.v)].push_back(l.u);
  }
  std::vector<bool> seen(n, false);
  std::queue<NodeId> q;
  seen[static_cast<std::size_t>(start)] = true;
  q.push(start);
  while (!q.empty()) {
    const NodeId u = q.front();
    q.pop();
    for (NodeId v : adj[static_cast<std::size_t>(u)]) {
      if (!seen[static_cast<std::size_t>(v)]) {
        seen[static_cast<std::size_t>(v)] = true;
        q.push(v);
      }
    }
  }
  return seen;
}

// Bandwidth lookup by linear scan of the link list, not the adjacency index.
inline double scan_bandwidth(const Network& net, NodeId a, NodeId b) {
  for (const Link& l : net.links()) {
    if ((l.u == a && l.v == b) || (l.u == b && l.v == a)) return l.bandwidth;
  }
  return -1.0;
}

// Sum-and-divide fitness written independently of the library version.
inline double oracle_fitness(const Network& net, const std::vector<NodeId>& nodes) {
  std::vector<double> bws;
  for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
    bws.push_back(scan_bandwidth(net, nodes[i], nodes[i + 1]));
  }
  long double sum = 0.0L;
  for (double b : bws) sum += b;
  return static_cast<double>(static_cast<long double>(bws.front()) / sum);
}

}  // namespace swarmroute::fixtures
