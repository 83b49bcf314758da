#include "swarmroute/topology.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <string>

#include "swarmroute/errors.hpp"

namespace swarmroute {

int RegionLayout::region_of(NodeId node) const {
  if (node < 0 || node >= node_count) {
    throw Error(ErrorCode::InvalidArgument,
                "node " + std::to_string(node) + " out of range");
  }
  const int base = base_region_size();
  return std::min(static_cast<int>(node) / base, region_count - 1);
}

RegionLayout partition_regions(int node_count) {
  if (node_count < 4) {
    throw Error(ErrorCode::InvalidNodeCount,
                "node count must be >= 4, got " + std::to_string(node_count));
  }
  RegionLayout layout;
  layout.node_count = node_count;
  // floor(log2(pn)); exact powers of two land on their own exponent.
  layout.region_count =
      static_cast<int>(std::bit_width(static_cast<unsigned>(node_count))) - 1;
  const int base = node_count / layout.region_count;
  layout.sizes.assign(layout.region_count, base);
  layout.sizes.back() += node_count % layout.region_count;

  NodeId next = 0;
  for (int size : layout.sizes) {
    layout.ranges.push_back({next, static_cast<NodeId>(next + size - 1)});
    next += size;
  }
  return layout;
}

Network::Network(RegionLayout layout, std::vector<Link> links, Seed seed,
                 BandwidthRange range)
    : layout_(std::move(layout)), links_(std::move(links)), seed_(seed),
      range_(range) {
  if (!(range_.min > 0.0) || range_.max < range_.min) {
    throw Error(ErrorCode::InvalidBandwidthRange, "bandwidth range must satisfy 0 < min <= max");
  }
  for (Link& l : links_) {
    if (l.u == l.v) {
      throw Error(ErrorCode::InvalidArgument,
                  "self-loop at node " + std::to_string(l.u));
    }
    if (l.u > l.v) std::swap(l.u, l.v);
    if (l.u < 0 || l.v >= layout_.node_count) {
      throw Error(ErrorCode::InvalidArgument, "link endpoint out of range");
    }
    if (!range_.contains(l.bandwidth)) {
      throw Error(ErrorCode::InvalidArgument,
                  "link bandwidth outside configured range");
    }
  }
  std::sort(links_.begin(), links_.end(), [](const Link& a, const Link& b) {
    return std::pair(a.u, a.v) < std::pair(b.u, b.v);
  });
  auto dup = std::adjacent_find(links_.begin(), links_.end(),
                                [](const Link& a, const Link& b) {
                                  return a.u == b.u && a.v == b.v;
                                });
  if (dup != links_.end()) {
    throw Error(ErrorCode::InvalidArgument,
                "duplicate link " + std::to_string(dup->u) + "-" +
                    std::to_string(dup->v));
  }
  build_adjacency();
}

void Network::build_adjacency() {
  const auto n = static_cast<std::size_t>(layout_.node_count);
  std::vector<std::size_t> degree(n, 0);
  for (const Link& l : links_) {
    ++degree[l.u];
    ++degree[l.v];
  }
  offsets_.assign(n + 1, 0);
  std::partial_sum(degree.begin(), degree.end(), offsets_.begin() + 1);

  adjacency_.assign(offsets_.back(), 0);
  adjacency_link_.assign(offsets_.back(), 0);
  std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
  for (std::size_t i = 0; i < links_.size(); ++i) {
    const Link& l = links_[i];
    adjacency_[cursor[l.u]] = l.v;
    adjacency_link_[cursor[l.u]++] = i;
    adjacency_[cursor[l.v]] = l.u;
    adjacency_link_[cursor[l.v]++] = i;
  }
  // Links are sorted by (u, v), so each node's higher neighbors arrive in
  // order but lower neighbors may interleave; sort each row.
  for (std::size_t node = 0; node < n; ++node) {
    const std::size_t b = offsets_[node];
    const std::size_t e = offsets_[node + 1];
    std::vector<std::pair<NodeId, std::size_t>> row;
    row.reserve(e - b);
    for (std::size_t k = b; k < e; ++k) row.emplace_back(adjacency_[k], adjacency_link_[k]);
    std::sort(row.begin(), row.end());
    for (std::size_t k = b; k < e; ++k) {
      adjacency_[k] = row[k - b].first;
      adjacency_link_[k] = row[k - b].second;
    }
  }
}

std::span<const NodeId> Network::neighbors(NodeId node) const {
  if (node < 0 || node >= node_count()) return {};
  return std::span<const NodeId>(adjacency_).subspan(
      offsets_[node], offsets_[node + 1] - offsets_[node]);
}

std::ptrdiff_t Network::find_link(NodeId a, NodeId b) const {
  if (a < 0 || b < 0 || a >= node_count() || b >= node_count()) return -1;
  auto row = neighbors(a);
  auto it = std::lower_bound(row.begin(), row.end(), b);
  if (it == row.end() || *it != b) return -1;
  return static_cast<std::ptrdiff_t>(
      adjacency_link_[offsets_[a] + static_cast<std::size_t>(it - row.begin())]);
}

bool Network::has_link(NodeId a, NodeId b) const { return find_link(a, b) >= 0; }

double Network::bandwidth(NodeId a, NodeId b) const {
  const auto idx = find_link(a, b);
  if (idx < 0) {
    throw Error(ErrorCode::InvalidPath, "no link " + std::to_string(a) + "-" +
                                            std::to_string(b));
  }
  return links_[static_cast<std::size_t>(idx)].bandwidth;
}

Network Network::with_bandwidths(std::vector<double> bandwidths,
                                 BandwidthRange range) const {
  if (bandwidths.size() != links_.size()) {
    throw Error(ErrorCode::InvalidArgument, "bandwidth count does not match link count");
  }
  Network out = *this;
  out.range_ = range;
  for (std::size_t i = 0; i < links_.size(); ++i) {
    if (!range.contains(bandwidths[i])) {
      throw Error(ErrorCode::InvalidArgument, "bandwidth outside configured range");
    }
    out.links_[i].bandwidth = bandwidths[i];
  }
  return out;
}

Network generate_topology(int node_count, Seed seed,
                          const TopologyOptions& options) {
  auto valid_prob = [](double p) { return p >= 0.0 && p <= 1.0; };
  if (!valid_prob(options.intra_density) || !valid_prob(options.inter_density)) {
    throw Error(ErrorCode::InvalidArgument, "densities must lie in [0, 1]");
  }
  RegionLayout layout = partition_regions(node_count);
  Engine rng = make_engine(derive_seed(seed, Stream::Topology));

  const auto n = static_cast<std::size_t>(node_count);
  std::vector<char> present(n * n, 0);
  std::vector<Link> links;
  auto add = [&](NodeId a, NodeId b) {
    if (a > b) std::swap(a, b);
    char& slot = present[static_cast<std::size_t>(a) * n + static_cast<std::size_t>(b)];
    if (slot) return;
    slot = 1;
    links.push_back({a, b, 1.0});
  };

  if (options.ensure_connected) {
    // Random recursive tree over a shuffled node order.
    std::vector<NodeId> order(n);
    std::iota(order.begin(), order.end(), 0);
    for (std::size_t i = n - 1; i > 0; --i) {
      std::swap(order[i], order[uniform_index(rng, i + 1)]);
    }
    for (std::size_t i = 1; i < n; ++i) add(order[i], order[uniform_index(rng, i)]);
  }

  for (NodeId a = 0; a < node_count; ++a) {
    for (NodeId b = a + 1; b < node_count; ++b) {
      const bool same = layout.region_of(a) == layout.region_of(b);
      // Always draw so the stream position is independent of existing links.
      const bool link = bernoulli(rng, same ? options.intra_density : options.inter_density);
      if (link) add(a, b);
    }
  }
  return Network(std::move(layout), std::move(links), seed, BandwidthRange{1.0, 1.0});
}

namespace {

std::vector<double> sample_bandwidths(std::size_t count, Engine& rng,
                                      BandwidthRange range) {
  std::vector<double> out(count);
  for (double& b : out) {
    b = std::min(uniform_real(rng, range.min, range.max), range.max);
  }
  return out;
}

}  // namespace

Network assign_bandwidths(const Network& network, Seed seed,
                          BandwidthRange range) {
  if (!(range.min > 0.0) || range.max < range.min) {
    throw Error(ErrorCode::InvalidBandwidthRange,
                "bandwidth range must satisfy 0 < min <= max");
  }
  Engine rng = make_engine(derive_seed(seed, Stream::Bandwidth));
  return network.with_bandwidths(sample_bandwidths(network.link_count(), rng, range),
                                 range);
}

Network perturb_bandwidths(const Network& network, Seed seed, int iteration,
                           BandwidthMode mode) {
  if (mode == BandwidthMode::Static) return network;
  Engine rng = make_engine(derive_seed(
      seed, Stream::Perturb, {static_cast<std::uint64_t>(iteration)}));
  return network.with_bandwidths(
      sample_bandwidths(network.link_count(), rng, network.bandwidth_range()),
      network.bandwidth_range());
}

Network make_network(int node_count, Seed seed, const TopologyOptions& options,
                     BandwidthRange range) {
  return assign_bandwidths(generate_topology(node_count, seed, options), seed, range);
}

}  // namespace swarmroute
