#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "swarmroute/encoding.hpp"
#include "swarmroute/fitness.hpp"
#include "swarmroute/random.hpp"
#include "swarmroute/topology.hpp"

namespace swarmroute {

// A chromosome is a priority vector; it decodes exactly like a particle
// position.
using Chromosome = PriorityVector;

enum class CrossoverKind { OnePoint, TwoPoint };
enum class MutationKind { Swap, AdjacentSwap };

// How one-point crossover builds its children. Standard exchanges the whole
// suffix from the cut; SingleGene exchanges only the gene at the cut.
enum class OnePointMode { Standard, SingleGene };

struct GaParams {
  int population = 40;
  int generations = 20;  // kmax
  CrossoverKind crossover = CrossoverKind::OnePoint;
  double crossover_prob = 0.8;
  MutationKind mutation = MutationKind::Swap;
  double mutation_prob = 0.1;
  bool elitism = true;
  OnePointMode one_point_mode = OnePointMode::Standard;
  BandwidthMode bandwidth_mode = BandwidthMode::Static;
  int max_retries = 50;
  // Heuristic window M; 0 selects the network's base region size.
  int heuristic_window = 0;

  void validate() const;
  DecodeParams decode_params(const Network& network) const;
};

// Positions below are 1-indexed, matching how the operators are usually
// written out by hand.

// child1 = p1[1..k-1] ++ p2[k..len]; child2 symmetric. 1 <= k <= len.
std::pair<Chromosome, Chromosome> crossover_one_point(
    const Chromosome& p1, const Chromosome& p2, std::size_t k,
    OnePointMode mode = OnePointMode::Standard);

// Inclusive segment [j..k] exchanged between the parents. 1 <= j <= k <= len.
std::pair<Chromosome, Chromosome> crossover_two_point(const Chromosome& p1,
                                                      const Chromosome& p2,
                                                      std::size_t j, std::size_t k);

// 1 <= i < j <= len.
Chromosome mutate_swap(const Chromosome& c, std::size_t i, std::size_t j);

// Exchanges genes j and j+1. 1 <= j <= len-1.
Chromosome mutate_adjacent_swap(const Chromosome& c, std::size_t j);

// Roulette-wheel draws with replacement; `pairs` parent pairs of indices
// into `fitnesses`. All-zero fitness falls back to uniform selection.
std::vector<std::pair<std::size_t, std::size_t>> select_parents(
    std::span<const double> fitnesses, std::size_t pairs, Seed seed);
std::vector<std::pair<std::size_t, std::size_t>> select_parents(
    std::span<const double> fitnesses, std::size_t pairs, Engine& rng);

struct GaResult {
  Path path;
  double fitness = 0.0;
  int hops = 0;
  int generations = 0;
  // Best fitness of each generation, generation 0 being the initial
  // population; generations + 1 entries.
  std::vector<TracePoint> trace;
  double wall_ms = 0.0;
};

// Throws NoPathFound if the initial population cannot be drawn.
GaResult run_ga(const Network& network, NodeId source, NodeId destination,
                const GaParams& params, Seed seed);

}  // namespace swarmroute
