#include "swarmroute/ga.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <string>

#include "swarmroute/errors.hpp"

namespace swarmroute {

void GaParams::validate() const {
  if (population < 2) throw Error(ErrorCode::InvalidArgument, "population must be >= 2");
  if (generations < 0) throw Error(ErrorCode::InvalidArgument, "generations must be >= 0");
  auto prob = [](double p) { return p >= 0.0 && p <= 1.0; };
  if (!prob(crossover_prob) || !prob(mutation_prob)) {
    throw Error(ErrorCode::InvalidArgument, "operator probabilities must lie in [0, 1]");
  }
  if (max_retries < 0) throw Error(ErrorCode::InvalidArgument, "max_retries must be >= 0");
  if (heuristic_window < 0) {
    throw Error(ErrorCode::InvalidArgument, "heuristic window must be >= 0");
  }
}

DecodeParams GaParams::decode_params(const Network& network) const {
  DecodeParams dp = DecodeParams::for_network(network);
  if (heuristic_window > 0) dp.window = heuristic_window;
  dp.max_retries = max_retries;
  return dp;
}

namespace {

void require_same_length(const Chromosome& a, const Chromosome& b) {
  if (a.size() != b.size()) {
    throw Error(ErrorCode::LengthMismatch,
                "chromosome lengths differ: " + std::to_string(a.size()) + " vs " +
                    std::to_string(b.size()));
  }
}

}  // namespace

std::pair<Chromosome, Chromosome> crossover_one_point(const Chromosome& p1,
                                                      const Chromosome& p2,
                                                      std::size_t k, OnePointMode mode) {
  require_same_length(p1, p2);
  const std::size_t len = p1.size();
  if (k < 1 || k > len) {
    throw Error(ErrorCode::InvalidCutPoints,
                "cut " + std::to_string(k) + " outside [1, " + std::to_string(len) + "]");
  }
  Chromosome c1 = p1;
  Chromosome c2 = p2;
  const std::size_t last = mode == OnePointMode::SingleGene ? k : len;
  for (std::size_t pos = k; pos <= last; ++pos) {
    c1.values[pos - 1] = p2.values[pos - 1];
    c2.values[pos - 1] = p1.values[pos - 1];
  }
  return {std::move(c1), std::move(c2)};
}

std::pair<Chromosome, Chromosome> crossover_two_point(const Chromosome& p1,
                                                      const Chromosome& p2,
                                                      std::size_t j, std::size_t k) {
  require_same_length(p1, p2);
  const std::size_t len = p1.size();
  if (j < 1 || k > len || j > k) {
    throw Error(ErrorCode::InvalidCutPoints,
                "cut points (" + std::to_string(j) + ", " + std::to_string(k) +
                    ") invalid for length " + std::to_string(len));
  }
  Chromosome c1 = p1;
  Chromosome c2 = p2;
  for (std::size_t pos = j; pos <= k; ++pos) {
    c1.values[pos - 1] = p2.values[pos - 1];
    c2.values[pos - 1] = p1.values[pos - 1];
  }
  return {std::move(c1), std::move(c2)};
}

Chromosome mutate_swap(const Chromosome& c, std::size_t i, std::size_t j) {
  if (i < 1 || i >= j || j > c.size()) {
    throw Error(ErrorCode::InvalidIndex,
                "swap indices (" + std::to_string(i) + ", " + std::to_string(j) +
                    ") invalid for length " + std::to_string(c.size()));
  }
  Chromosome out = c;
  std::swap(out.values[i - 1], out.values[j - 1]);
  return out;
}

Chromosome mutate_adjacent_swap(const Chromosome& c, std::size_t j) {
  if (j < 1 || j + 1 > c.size()) {
    throw Error(ErrorCode::InvalidIndex,
                "adjacent swap index " + std::to_string(j) + " invalid for length " +
                    std::to_string(c.size()));
  }
  return mutate_swap(c, j, j + 1);
}

std::vector<std::pair<std::size_t, std::size_t>> select_parents(
    std::span<const double> fitnesses, std::size_t pairs, Engine& rng) {
  if (fitnesses.empty()) throw Error(ErrorCode::InvalidArgument, "empty population");
  std::vector<double> cumulative(fitnesses.size());
  double total = 0.0;
  for (std::size_t i = 0; i < fitnesses.size(); ++i) {
    if (!(fitnesses[i] >= 0.0)) {
      throw Error(ErrorCode::InvalidArgument, "fitness values must be >= 0");
    }
    total += fitnesses[i];
    cumulative[i] = total;
  }

  auto draw = [&]() -> std::size_t {
    if (total <= 0.0) return uniform_index(rng, fitnesses.size());
    const double target = uniform01(rng) * total;
    // First slot whose cumulative mass exceeds the target; zero-fitness
    // slots have no width and can never be hit.
    auto it = std::upper_bound(cumulative.begin(), cumulative.end(), target);
    if (it == cumulative.end()) {
      // Rounding at the top edge: take the last slot with positive mass.
      std::size_t i = fitnesses.size() - 1;
      while (fitnesses[i] <= 0.0) --i;
      return i;
    }
    return static_cast<std::size_t>(it - cumulative.begin());
  };

  std::vector<std::pair<std::size_t, std::size_t>> out;
  out.reserve(pairs);
  for (std::size_t i = 0; i < pairs; ++i) {
    const std::size_t a = draw();
    const std::size_t b = draw();
    out.emplace_back(a, b);
  }
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> select_parents(
    std::span<const double> fitnesses, std::size_t pairs, Seed seed) {
  Engine rng = make_engine(derive_seed(seed, Stream::Selection));
  return select_parents(fitnesses, pairs, rng);
}

namespace {

struct Evaluated {
  std::vector<double> fitness;
  std::vector<Path> paths;
  std::size_t best = 0;  // lowest index on ties
};

Evaluated evaluate(const Network& state, const std::vector<Chromosome>& population,
                   NodeId source, NodeId destination, const DecodeParams& dp) {
  Evaluated ev;
  ev.fitness.reserve(population.size());
  ev.paths.reserve(population.size());
  for (const Chromosome& c : population) {
    if (auto path = decode(state, c, source, destination, dp)) {
      ev.fitness.push_back(fitness(state, *path));
      ev.paths.push_back(std::move(*path));
    } else {
      ev.fitness.push_back(0.0);
      ev.paths.emplace_back();
    }
  }
  for (std::size_t i = 1; i < ev.fitness.size(); ++i) {
    if (ev.fitness[i] > ev.fitness[ev.best]) ev.best = i;
  }
  return ev;
}

}  // namespace

GaResult run_ga(const Network& network, NodeId source, NodeId destination,
                const GaParams& params, Seed seed) {
  params.validate();
  const auto start = std::chrono::steady_clock::now();
  const DecodeParams dp = params.decode_params(network);
  const auto pop_size = static_cast<std::size_t>(params.population);

  std::vector<Chromosome> population;
  population.reserve(pop_size);
  {
    Engine rng = make_engine(derive_seed(seed, Stream::GaInit));
    for (std::size_t i = 0; i < pop_size; ++i) {
      population.push_back(
          random_decodable_priorities(network, source, destination, dp, rng).priorities);
    }
  }

  GaResult result;
  result.generations = params.generations;
  result.trace.reserve(static_cast<std::size_t>(params.generations) + 1);

  Evaluated ev = evaluate(network, population, source, destination, dp);
  double best_fitness = ev.fitness[ev.best];
  Path best_path = ev.paths[ev.best];
  result.trace.push_back({0, best_fitness});

  const std::size_t len = population.front().size();
  for (int k = 1; k <= params.generations; ++k) {
    Engine rng = make_engine(
        derive_seed(seed, Stream::GaGeneration, {static_cast<std::uint64_t>(k)}));
    const auto parents = select_parents(ev.fitness, (pop_size + 1) / 2, rng);

    std::vector<Chromosome> next;
    next.reserve(pop_size + 1);
    for (const auto& [a, b] : parents) {
      Chromosome c1 = population[a];
      Chromosome c2 = population[b];
      if (bernoulli(rng, params.crossover_prob)) {
        if (params.crossover == CrossoverKind::OnePoint) {
          const std::size_t cut = 1 + uniform_index(rng, len);
          std::tie(c1, c2) = crossover_one_point(c1, c2, cut, params.one_point_mode);
        } else {
          std::size_t j = 1 + uniform_index(rng, len);
          std::size_t kk = 1 + uniform_index(rng, len);
          if (j > kk) std::swap(j, kk);
          std::tie(c1, c2) = crossover_two_point(c1, c2, j, kk);
        }
      }
      for (Chromosome* child : {&c1, &c2}) {
        if (!bernoulli(rng, params.mutation_prob)) continue;
        if (params.mutation == MutationKind::Swap) {
          std::size_t i = 1 + uniform_index(rng, len);
          std::size_t j = 1 + uniform_index(rng, len - 1);
          if (j >= i) ++j;
          if (i > j) std::swap(i, j);
          *child = mutate_swap(*child, i, j);
        } else {
          *child = mutate_adjacent_swap(*child, 1 + uniform_index(rng, len - 1));
        }
      }
      next.push_back(std::move(c1));
      next.push_back(std::move(c2));
    }
    next.resize(pop_size);
    if (params.elitism) next.front() = population[ev.best];
    population = std::move(next);

    const Network state = perturb_bandwidths(network, seed, k, params.bandwidth_mode);
    ev = evaluate(state, population, source, destination, dp);
    if (ev.fitness[ev.best] > best_fitness) {
      best_fitness = ev.fitness[ev.best];
      best_path = ev.paths[ev.best];
    }
    result.trace.push_back({k, ev.fitness[ev.best]});
  }

  result.path = std::move(best_path);
  result.fitness = best_fitness;
  result.hops = result.path.hop_count();
  result.wall_ms = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  return result;
}

}  // namespace swarmroute
