#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "swarmroute/random.hpp"

namespace swarmroute {

using NodeId = std::int32_t;

struct NodeRange {
  NodeId first;  // inclusive
  NodeId last;   // inclusive

  bool operator==(const NodeRange&) const = default;
};

// Node ids 0..pn-1 split into `region_count` contiguous blocks. Every block
// but the last holds floor(pn / a) nodes; the last absorbs the remainder.
struct RegionLayout {
  int node_count = 0;
  int region_count = 0;
  std::vector<int> sizes;
  std::vector<NodeRange> ranges;

  int base_region_size() const { return node_count / region_count; }
  int region_of(NodeId node) const;

  bool operator==(const RegionLayout&) const = default;
};

// a = floor(log2(pn)). Throws InvalidNodeCount for pn < 4.
RegionLayout partition_regions(int node_count);

struct BandwidthRange {
  double min = 1.0;
  double max = 100.0;

  bool contains(double b) const { return b >= min && b <= max; }
  bool operator==(const BandwidthRange&) const = default;
};

// Undirected; stored with u < v.
struct Link {
  NodeId u;
  NodeId v;
  double bandwidth;

  bool operator==(const Link&) const = default;
};

enum class BandwidthMode { Static, Dynamic };

// Immutable region-partitioned undirected graph with per-link bandwidth.
class Network {
 public:
  Network() = default;

  // Links are normalized to u < v and sorted by (u, v). Throws
  // InvalidArgument on self-loops, duplicates, out-of-range ids, or
  // bandwidths outside `range`.
  Network(RegionLayout layout, std::vector<Link> links, Seed seed,
          BandwidthRange range);

  int node_count() const { return layout_.node_count; }
  const RegionLayout& layout() const { return layout_; }
  std::span<const Link> links() const { return links_; }
  std::size_t link_count() const { return links_.size(); }
  Seed seed() const { return seed_; }
  const BandwidthRange& bandwidth_range() const { return range_; }

  // Sorted ascending.
  std::span<const NodeId> neighbors(NodeId node) const;
  bool has_link(NodeId a, NodeId b) const;
  // Throws InvalidPath if the link does not exist.
  double bandwidth(NodeId a, NodeId b) const;

  // Same graph, new bandwidths (indexed like links()) and range.
  Network with_bandwidths(std::vector<double> bandwidths,
                          BandwidthRange range) const;

  bool operator==(const Network& other) const {
    return layout_ == other.layout_ && links_ == other.links_ &&
           seed_ == other.seed_ && range_ == other.range_;
  }

 private:
  std::ptrdiff_t find_link(NodeId a, NodeId b) const;
  void build_adjacency();

  RegionLayout layout_;
  std::vector<Link> links_;
  Seed seed_ = 0;
  BandwidthRange range_;
  // CSR adjacency: neighbors of n are adjacency_[offsets_[n] .. offsets_[n+1]).
  std::vector<std::size_t> offsets_;
  std::vector<NodeId> adjacency_;
  std::vector<std::size_t> adjacency_link_;
};

struct TopologyOptions {
  double intra_density = 0.6;
  double inter_density = 0.15;
  bool ensure_connected = true;
};

// Links carry a placeholder bandwidth of 1 until assign_bandwidths runs.
Network generate_topology(int node_count, Seed seed,
                          const TopologyOptions& options = {});

Network assign_bandwidths(const Network& network, Seed seed,
                          BandwidthRange range = {});

// Dynamic mode re-samples every link from the network's range, keyed by
// (seed, iteration). Static mode returns the input unchanged.
Network perturb_bandwidths(const Network& network, Seed seed, int iteration,
                           BandwidthMode mode);

// generate_topology followed by assign_bandwidths under the same seed.
Network make_network(int node_count, Seed seed,
                     const TopologyOptions& options = {},
                     BandwidthRange range = {});

}  // namespace swarmroute
