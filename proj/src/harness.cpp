#include "swarmroute/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <exception>
#include <fstream>
#include <mutex>
#include <numeric>
#include <thread>

#include "swarmroute/errors.hpp"
#include "swarmroute/serialize.hpp"

namespace swarmroute {

void ExperimentConfig::validate() const {
  partition_regions(nodes);
  if (budgets.empty()) throw Error(ErrorCode::InvalidArgument, "budgets must be non-empty");
  if (std::any_of(budgets.begin(), budgets.end(), [](int b) { return b < 1; })) {
    throw Error(ErrorCode::InvalidArgument, "budgets must all be >= 1");
  }
  if (trials < 1) throw Error(ErrorCode::InvalidArgument, "trials must be >= 1");
  if (threads < 1) throw Error(ErrorCode::InvalidArgument, "threads must be >= 1");
  const NodeId dest = resolved_destination();
  if (source < 0 || source >= nodes || dest >= nodes) {
    throw Error(ErrorCode::InvalidArgument, "source/destination out of range");
  }
  if (source == dest) throw Error(ErrorCode::InvalidArgument, "source equals destination");
  if (!(bandwidth.min > 0.0) || bandwidth.max < bandwidth.min) {
    throw Error(ErrorCode::InvalidBandwidthRange,
                "bandwidth range must satisfy 0 < min <= max");
  }
  auto prob = [](double p) { return p >= 0.0 && p <= 1.0; };
  if (!prob(topology.intra_density) || !prob(topology.inter_density)) {
    throw Error(ErrorCode::InvalidArgument, "densities must lie in [0, 1]");
  }
  // Budgets overwrite the iteration counts, so validate with one in place.
  PsoParams pso_check = pso;
  pso_check.iterations = 1;
  pso_check.validate();
  ga.validate();
}

namespace {

double mean(const std::vector<double>& v) {
  return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 == 1 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

}  // namespace

Aggregates compute_aggregates(std::span<const IterationRecord> records) {
  Aggregates a;
  if (records.empty()) return a;
  std::vector<double> pf, gf, ph, gh, pm, gm;
  for (const IterationRecord& r : records) {
    pf.push_back(r.pso_fitness);
    gf.push_back(r.ga_fitness);
    ph.push_back(r.pso_hops);
    gh.push_back(r.ga_hops);
    pm.push_back(r.pso_ms);
    gm.push_back(r.ga_ms);
  }
  a.pso_mean_fitness = mean(pf);
  a.pso_median_fitness = median(pf);
  a.ga_mean_fitness = mean(gf);
  a.ga_median_fitness = median(gf);
  a.pso_mean_hops = mean(ph);
  a.ga_mean_hops = mean(gh);
  a.pso_mean_ms = mean(pm);
  a.pso_median_ms = median(pm);
  a.ga_mean_ms = mean(gm);
  a.ga_median_ms = median(gm);
  return a;
}

Verdicts compute_verdicts(const Aggregates& a) {
  return {a.pso_mean_fitness >= a.ga_mean_fitness, a.pso_mean_ms <= a.ga_mean_ms};
}

namespace {

Seed network_seed(const ExperimentConfig& config, int budget, int trial) {
  if (config.fixed_topology) return config.seed;
  return derive_seed(config.seed, Stream::Trial,
                     {static_cast<std::uint64_t>(budget), static_cast<std::uint64_t>(trial)});
}

Seed run_seed(const ExperimentConfig& config, int budget, int trial) {
  return derive_seed(config.seed, Stream::Run,
                     {static_cast<std::uint64_t>(budget), static_cast<std::uint64_t>(trial)});
}

IterationRecord run_cell(const ExperimentConfig& config, int budget, int trial) {
  IterationRecord rec;
  rec.budget = budget;
  rec.trial = trial;
  rec.network_seed = network_seed(config, budget, trial);
  rec.run_seed = run_seed(config, budget, trial);

  const Network network = experiment_network(config, budget, trial);
  const NodeId source = config.source;
  const NodeId dest = config.resolved_destination();

  PsoParams pso = config.pso;
  pso.iterations = budget;
  pso.bandwidth_mode = config.bandwidth_mode;
  GaParams ga = config.ga;
  ga.generations = budget;
  ga.bandwidth_mode = config.bandwidth_mode;

  const PsoResult pr = run_pso(network, source, dest, pso, rec.run_seed);
  const GaResult gr = run_ga(network, source, dest, ga, rec.run_seed);
  rec.pso_fitness = pr.fitness;
  rec.pso_hops = pr.hops;
  rec.pso_ms = pr.wall_ms;
  rec.pso_path = pr.path;
  rec.ga_fitness = gr.fitness;
  rec.ga_hops = gr.hops;
  rec.ga_ms = gr.wall_ms;
  rec.ga_path = gr.path;
  return rec;
}

}  // namespace

Network experiment_network(const ExperimentConfig& config, int budget, int trial) {
  return make_network(config.nodes, network_seed(config, budget, trial),
                      config.topology, config.bandwidth);
}

Report compare(const ExperimentConfig& config) {
  config.validate();
  Report report;
  report.config = config;

  struct Cell {
    int budget;
    int trial;
  };
  std::vector<Cell> cells;
  for (int budget : config.budgets) {
    for (int trial = 0; trial < config.trials; ++trial) cells.push_back({budget, trial});
  }
  report.records.resize(cells.size());

  const auto workers = std::min<std::size_t>(static_cast<std::size_t>(config.threads),
                                             cells.size());
  if (workers <= 1) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      report.records[i] = run_cell(config, cells[i].budget, cells[i].trial);
    }
  } else {
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < cells.size(); i = next++) {
          try {
            report.records[i] = run_cell(config, cells[i].budget, cells[i].trial);
          } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
          }
        }
      });
    }
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
  }

  report.aggregates = compute_aggregates(report.records);
  report.verdicts = compute_verdicts(report.aggregates);
  return report;
}

namespace {

std::string render_csv(const Report& report) {
  std::string out = kCsvHeader;
  out += '\n';
  char line[256];
  for (const IterationRecord& r : report.records) {
    std::snprintf(line, sizeof line, "%d,%d,%.6f,%.6f,%d,%d,%.3f,%.3f\n", r.budget,
                  r.trial, r.pso_fitness, r.ga_fitness, r.pso_hops, r.ga_hops, r.pso_ms,
                  r.ga_ms);
    out += line;
  }
  return out;
}

}  // namespace

std::string render(const Report& report, OutputFormat format) {
  if (report.records.empty()) {
    throw Error(ErrorCode::EmptyReport, "report has no records");
  }
  if (format == OutputFormat::Csv) return render_csv(report);
  return Json(report).dump(2) + "\n";
}

std::size_t emit(const Report& report, OutputFormat format,
                 const std::filesystem::path& target) {
  const std::string text = render(report, format);
  std::ofstream out(target, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::Io, "cannot open " + target.string() + " for writing");
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  out.flush();
  if (!out) throw Error(ErrorCode::Io, "failed writing " + target.string());
  return text.size();
}

}  // namespace swarmroute
