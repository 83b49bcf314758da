#pragma once

#include <cstddef>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "swarmroute/ga.hpp"
#include "swarmroute/pso.hpp"
#include "swarmroute/topology.hpp"

namespace swarmroute {

enum class OutputFormat { Csv, Json };

struct ExperimentConfig {
  int nodes = 21;
  Seed seed = 1;
  NodeId source = 0;
  // Negative selects the last node.
  NodeId destination = -1;
  std::vector<int> budgets = {5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 17, 18, 19, 20};
  int trials = 1;
  PsoParams pso;
  GaParams ga;
  TopologyOptions topology;
  BandwidthRange bandwidth;
  BandwidthMode bandwidth_mode = BandwidthMode::Static;
  // Reuse one network (built from `seed`) for every (budget, trial) instead
  // of regenerating per run.
  bool fixed_topology = false;
  int threads = 1;

  NodeId resolved_destination() const {
    return destination < 0 ? static_cast<NodeId>(nodes - 1) : destination;
  }
  // Throws InvalidArgument / InvalidNodeCount / InvalidBandwidthRange.
  void validate() const;
};

struct IterationRecord {
  int budget = 0;
  int trial = 0;
  Seed network_seed = 0;
  Seed run_seed = 0;
  double pso_fitness = 0.0;
  double ga_fitness = 0.0;
  int pso_hops = 0;
  int ga_hops = 0;
  double pso_ms = 0.0;
  double ga_ms = 0.0;
  Path pso_path;
  Path ga_path;
};

struct Aggregates {
  double pso_mean_fitness = 0.0;
  double pso_median_fitness = 0.0;
  double ga_mean_fitness = 0.0;
  double ga_median_fitness = 0.0;
  double pso_mean_hops = 0.0;
  double ga_mean_hops = 0.0;
  double pso_mean_ms = 0.0;
  double pso_median_ms = 0.0;
  double ga_mean_ms = 0.0;
  double ga_median_ms = 0.0;
};

// Directional comparisons, computed rather than asserted.
struct Verdicts {
  bool pso_fitness_ge_ga = false;
  bool pso_mean_ms_le_ga = false;
};

struct Report {
  ExperimentConfig config;
  std::vector<IterationRecord> records;  // ordered by (budget, trial)
  Aggregates aggregates;
  Verdicts verdicts;
};

Aggregates compute_aggregates(std::span<const IterationRecord> records);
Verdicts compute_verdicts(const Aggregates& aggregates);

// The network a given (budget, trial) cell runs on.
Network experiment_network(const ExperimentConfig& config, int budget, int trial);

// Runs PSO (iterations = budget) and GA (generations = budget) on the same
// network with the same run seed for every budget and trial. Deterministic
// apart from the timing fields. Propagates NoPathFound.
Report compare(const ExperimentConfig& config);

inline constexpr const char* kCsvHeader =
    "budget,trial,pso_fitness,ga_fitness,pso_hops,ga_hops,pso_ms,ga_ms";

// Throws EmptyReport for a report without records.
std::string render(const Report& report, OutputFormat format);

// Writes render(report, format) to `target`; returns bytes written. Throws
// Io naming the path on failure.
std::size_t emit(const Report& report, OutputFormat format,
                 const std::filesystem::path& target);

}  // namespace swarmroute
