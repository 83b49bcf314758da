#include "swarmroute/pso.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "swarmroute/errors.hpp"

namespace swarmroute {

void PsoParams::validate() const {
  if (particles < 2) throw Error(ErrorCode::InvalidArgument, "particles must be >= 2");
  if (iterations < 1) throw Error(ErrorCode::InvalidArgument, "iterations must be >= 1");
  if (!(v_max > 0.0)) throw Error(ErrorCode::InvalidArgument, "v_max must be > 0");
  if (max_retries < 0) throw Error(ErrorCode::InvalidArgument, "max_retries must be >= 0");
  if (heuristic_window < 0) {
    throw Error(ErrorCode::InvalidArgument, "heuristic window must be >= 0");
  }
}

DecodeParams PsoParams::decode_params(const Network& network) const {
  DecodeParams dp = DecodeParams::for_network(network);
  if (heuristic_window > 0) dp.window = heuristic_window;
  dp.max_retries = max_retries;
  return dp;
}

namespace {

void refresh_gbest(Swarm& swarm) {
  for (const Particle& p : swarm.particles) {
    if (p.best_fitness > swarm.gbest_fitness) {
      swarm.gbest_fitness = p.best_fitness;
      swarm.gbest_position = p.best_position;
      swarm.gbest_path = p.best_path;
    }
  }
}

}  // namespace

Swarm init_swarm(const Network& network, NodeId source, NodeId destination,
                 const PsoParams& params, Seed seed) {
  params.validate();
  const DecodeParams dp = params.decode_params(network);
  Engine rng = make_engine(derive_seed(seed, Stream::PsoInit));

  Swarm swarm;
  swarm.params = params;
  swarm.source = source;
  swarm.destination = destination;
  swarm.particles.reserve(static_cast<std::size_t>(params.particles));
  for (int i = 0; i < params.particles; ++i) {
    auto drawn = random_decodable_priorities(network, source, destination, dp, rng);
    Particle p;
    p.fitness = fitness(network, drawn.path);
    p.path = std::move(drawn.path);
    p.position = std::move(drawn.priorities);
    p.velocity.assign(p.position.size(), 0.0);
    p.best_position = p.position;
    p.best_fitness = p.fitness;
    p.best_path = p.path;
    swarm.particles.push_back(std::move(p));
  }
  refresh_gbest(swarm);
  return swarm;
}

Swarm step(Swarm swarm, const Network& network, Seed seed) {
  const PsoParams& params = swarm.params;
  const int iteration = swarm.iteration + 1;
  const Network state =
      perturb_bandwidths(network, seed, iteration, params.bandwidth_mode);
  const DecodeParams dp = params.decode_params(state);

  for (Particle& p : swarm.particles) {
    if (auto path = decode(state, p.position, swarm.source, swarm.destination, dp)) {
      p.fitness = fitness(state, *path);
      p.path = std::move(*path);
    } else {
      p.fitness = 0.0;
      p.path = {};
    }
    if (p.fitness > p.best_fitness) {
      p.best_fitness = p.fitness;
      p.best_position = p.position;
      p.best_path = p.path;
    }
  }
  refresh_gbest(swarm);

  Engine rng = make_engine(
      derive_seed(seed, Stream::PsoStep, {static_cast<std::uint64_t>(iteration)}));
  const auto& g = swarm.gbest_position.values;
  for (Particle& p : swarm.particles) {
    auto& x = p.position.values;
    const auto& pb = p.best_position.values;
    for (std::size_t d = 0; d < x.size(); ++d) {
      const double r1 = uniform01(rng);
      const double r2 = uniform01(rng);
      double v = params.inertia * p.velocity[d] +
                 params.cognitive * r1 * (pb[d] - x[d]) +
                 params.social * r2 * (g[d] - x[d]);
      v = std::clamp(v, -params.v_max, params.v_max);
      p.velocity[d] = v;
      x[d] += v;
      // The decode marker is reserved; nudge off it in the measure-zero case.
      if (x[d] == kSelectedPriority) x[d] = std::nextafter(x[d], 0.0);
    }
  }
  swarm.iteration = iteration;
  return swarm;
}

PsoResult run_pso(const Network& network, NodeId source, NodeId destination,
                  const PsoParams& params, Seed seed) {
  const auto start = std::chrono::steady_clock::now();
  Swarm swarm = init_swarm(network, source, destination, params, seed);
  PsoResult result;
  result.trace.reserve(static_cast<std::size_t>(params.iterations));
  for (int i = 0; i < params.iterations; ++i) {
    swarm = step(std::move(swarm), network, seed);
    result.trace.push_back({swarm.iteration, swarm.gbest_fitness});
  }
  result.path = swarm.gbest_path;
  result.fitness = swarm.gbest_fitness;
  result.hops = result.path.hop_count();
  result.iterations = params.iterations;
  result.wall_ms = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  return result;
}

}  // namespace swarmroute
