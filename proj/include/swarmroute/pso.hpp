#pragma once

#include <vector>

#include "swarmroute/encoding.hpp"
#include "swarmroute/fitness.hpp"
#include "swarmroute/random.hpp"
#include "swarmroute/topology.hpp"

namespace swarmroute {

struct PsoParams {
  int particles = 40;
  double inertia = 0.729;
  double cognitive = 1.49445;
  double social = 1.49445;
  double v_max = 1.0;
  int iterations = 20;
  BandwidthMode bandwidth_mode = BandwidthMode::Static;
  int max_retries = 50;
  // Heuristic window M; 0 selects the network's base region size.
  int heuristic_window = 0;

  // Throws InvalidArgument.
  void validate() const;
  DecodeParams decode_params(const Network& network) const;
};

struct Particle {
  PriorityVector position;
  std::vector<double> velocity;
  // Score of `position` at the most recent evaluation; 0 with an empty
  // path when it dead-ended.
  double fitness = 0.0;
  Path path;
  PriorityVector best_position;
  double best_fitness = 0.0;
  Path best_path;
};

struct Swarm {
  std::vector<Particle> particles;
  PriorityVector gbest_position;
  double gbest_fitness = 0.0;
  Path gbest_path;
  PsoParams params;
  NodeId source = 0;
  NodeId destination = 0;
  // Number of completed steps.
  int iteration = 0;
};

// Random decodable positions, zero velocities, pBest = position. Throws
// NoPathFound when a particle exhausts its retries.
Swarm init_swarm(const Network& network, NodeId source, NodeId destination,
                 const PsoParams& params, Seed seed);

// One iteration:
//   1. dynamic mode: bandwidths re-sampled for iteration `swarm.iteration+1`
//   2. every position decoded and scored (dead end scores 0)
//   3. pBest replaced on strict improvement, then gBest from the pBests
//   4. v <- w v + c1 r1 (pBest - x) + c2 r2 (gBest - x), clamped to
//      [-v_max, v_max]; x <- x + v
// `network` is the base network; the perturbed copy is internal.
Swarm step(Swarm swarm, const Network& network, Seed seed);

struct PsoResult {
  Path path;
  double fitness = 0.0;
  int hops = 0;
  int iterations = 0;
  std::vector<TracePoint> trace;
  double wall_ms = 0.0;
};

PsoResult run_pso(const Network& network, NodeId source, NodeId destination,
                  const PsoParams& params, Seed seed);

}  // namespace swarmroute
