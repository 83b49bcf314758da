// swarmroute: generate region-based networks and search them for
// maximum-fitness paths with PSO and a GA.
//
// Exit codes: 0 success, 2 invalid configuration, 3 no path found.

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include "swarmroute/errors.hpp"
#include "swarmroute/harness.hpp"
#include "swarmroute/oracle.hpp"
#include "swarmroute/serialize.hpp"

namespace {

using namespace swarmroute;

constexpr int kExitOk = 0;
constexpr int kExitInvalidConfig = 2;
constexpr int kExitNoPath = 3;

struct Options {
  int nodes = 21;
  Seed seed = 1;
  NodeId source = 0;
  NodeId dest = -1;
  int iterations = 20;
  int particles = 40;
  int population = 40;
  std::string crossover = "1pt";
  std::string mutation = "swap";
  double crossover_prob = 0.8;
  double mutation_prob = 0.1;
  bool single_gene_exchange = false;
  bool no_elitism = false;
  double bandwidth_min = 1.0;
  double bandwidth_max = 100.0;
  double intra_density = 0.6;
  double inter_density = 0.15;
  bool no_backbone = false;
  bool dynamic_bandwidth = false;
  int trials = 1;
  std::string budgets = "5-20";
  bool fixed_topology = false;
  int threads = 1;
  int oracle_cap = kDefaultOracleCap;
  std::string format = "csv";
  std::string out;
  std::string network_file;
};

void add_shared(CLI::App* cmd, Options& o) {
  cmd->add_option("--nodes", o.nodes, "Node count (>= 4)");
  cmd->add_option("--seed", o.seed, "Base RNG seed");
  cmd->add_option("--source", o.source, "Source node id");
  cmd->add_option("--dest", o.dest, "Destination node id (default: last node)");
  cmd->add_option("--bandwidth-min", o.bandwidth_min, "Lower link bandwidth bound");
  cmd->add_option("--bandwidth-max", o.bandwidth_max, "Upper link bandwidth bound");
  cmd->add_option("--intra-density", o.intra_density, "Link probability within a region");
  cmd->add_option("--inter-density", o.inter_density, "Link probability across regions");
  cmd->add_flag("--no-backbone", o.no_backbone, "Skip the random spanning-tree backbone");
  cmd->add_option("--out", o.out, "Write output to FILE instead of stdout");
}

void add_search(CLI::App* cmd, Options& o) {
  cmd->add_option("--iterations", o.iterations, "PSO iterations / GA generations");
  cmd->add_option("--particles", o.particles, "PSO swarm size");
  cmd->add_option("--population", o.population, "GA population size");
  cmd->add_option("--crossover", o.crossover, "GA crossover")
      ->check(CLI::IsMember({"1pt", "2pt"}));
  cmd->add_option("--mutation", o.mutation, "GA mutation")
      ->check(CLI::IsMember({"swap", "adjswap"}));
  cmd->add_option("--crossover-prob", o.crossover_prob, "GA crossover probability");
  cmd->add_option("--mutation-prob", o.mutation_prob, "GA mutation probability");
  cmd->add_flag("--single-gene-exchange", o.single_gene_exchange,
                "One-point crossover exchanges only the gene at the cut");
  cmd->add_flag("--no-elitism", o.no_elitism, "Disable GA elitism");
  cmd->add_flag("--dynamic-bandwidth", o.dynamic_bandwidth,
                "Re-sample link bandwidths every iteration");
  cmd->add_option("--network", o.network_file, "Load the network from a JSON file");
}

std::vector<int> parse_budgets(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto dash = item.find('-', 1);
    try {
      if (dash == std::string::npos) {
        out.push_back(std::stoi(item));
      } else {
        const int lo = std::stoi(item.substr(0, dash));
        const int hi = std::stoi(item.substr(dash + 1));
        if (hi < lo) throw Error(ErrorCode::InvalidArgument, "empty budget range " + item);
        for (int b = lo; b <= hi; ++b) out.push_back(b);
      }
    } catch (const std::logic_error&) {
      throw Error(ErrorCode::InvalidArgument, "malformed budget '" + item + "'");
    }
  }
  return out;
}

ExperimentConfig to_config(const Options& o) {
  ExperimentConfig c;
  c.nodes = o.nodes;
  c.seed = o.seed;
  c.source = o.source;
  c.destination = o.dest;
  c.trials = o.trials;
  c.fixed_topology = o.fixed_topology;
  c.threads = o.threads;
  c.bandwidth = {o.bandwidth_min, o.bandwidth_max};
  c.topology = {o.intra_density, o.inter_density, !o.no_backbone};
  c.bandwidth_mode = o.dynamic_bandwidth ? BandwidthMode::Dynamic : BandwidthMode::Static;

  c.pso.particles = o.particles;
  c.pso.iterations = o.iterations;
  c.pso.bandwidth_mode = c.bandwidth_mode;

  c.ga.population = o.population;
  c.ga.generations = o.iterations;
  c.ga.crossover = o.crossover == "2pt" ? CrossoverKind::TwoPoint : CrossoverKind::OnePoint;
  c.ga.mutation = o.mutation == "adjswap" ? MutationKind::AdjacentSwap : MutationKind::Swap;
  c.ga.crossover_prob = o.crossover_prob;
  c.ga.mutation_prob = o.mutation_prob;
  c.ga.elitism = !o.no_elitism;
  c.ga.one_point_mode =
      o.single_gene_exchange ? OnePointMode::SingleGene : OnePointMode::Standard;
  c.ga.bandwidth_mode = c.bandwidth_mode;
  c.budgets = parse_budgets(o.budgets);
  return c;
}

Network load_or_generate(const Options& o, const ExperimentConfig& c) {
  if (!o.network_file.empty()) {
    std::ifstream in(o.network_file);
    if (!in) throw Error(ErrorCode::Io, "cannot read " + o.network_file);
    return network_from_json(Json::parse(in));
  }
  return make_network(c.nodes, c.seed, c.topology, c.bandwidth);
}

NodeId destination_for(const Options& o, const Network& network) {
  return o.dest < 0 ? static_cast<NodeId>(network.node_count() - 1) : o.dest;
}

void write_output(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(o.out, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::Io, "cannot open " + o.out + " for writing");
  out << text;
  if (!out) throw Error(ErrorCode::Io, "failed writing " + o.out);
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

// One-line human summary on stderr; stdout carries only the JSON document.
void summarize(const Path& path, double fitness) {
  std::string nodes;
  for (NodeId v : path.nodes) nodes += (nodes.empty() ? "" : ",") + std::to_string(v);
  char tail[64];
  std::snprintf(tail, sizeof tail, " fitness=%.6f hops=%d", fitness, path.hop_count());
  std::cerr << "path " << nodes << tail << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Region-based network path search with PSO and GA"};
  app.require_subcommand(1);
  Options o;

  auto* generate = app.add_subcommand("generate", "Emit a random network as JSON");
  add_shared(generate, o);

  auto* run_pso_cmd = app.add_subcommand("run-pso", "Single PSO run, JSON result");
  add_shared(run_pso_cmd, o);
  add_search(run_pso_cmd, o);

  auto* run_ga_cmd = app.add_subcommand("run-ga", "Single GA run, JSON result");
  add_shared(run_ga_cmd, o);
  add_search(run_ga_cmd, o);

  auto* compare_cmd = app.add_subcommand("compare", "PSO vs GA over iteration budgets");
  add_shared(compare_cmd, o);
  add_search(compare_cmd, o);
  compare_cmd->add_option("--trials", o.trials, "Trial seeds per budget");
  compare_cmd->add_option("--budgets", o.budgets, "Budgets, e.g. 5-20 or 5,10,20");
  compare_cmd->add_flag("--fixed-topology", o.fixed_topology,
                        "Use one network for every budget and trial");
  compare_cmd->add_option("--threads", o.threads, "Worker threads");
  compare_cmd->add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}));

  auto* oracle_cmd = app.add_subcommand("oracle", "Exhaustive best path (small networks)");
  add_shared(oracle_cmd, o);
  oracle_cmd->add_option("--network", o.network_file, "Load the network from a JSON file");
  oracle_cmd->add_option("--cap", o.oracle_cap, "Maximum node count to enumerate");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalidConfig;
  }

  try {
    const ExperimentConfig config = to_config(o);
    if (generate->parsed()) {
      write_output(o, dump(make_network(config.nodes, config.seed, config.topology,
                                        config.bandwidth)));
    } else if (run_pso_cmd->parsed()) {
      const Network net = load_or_generate(o, config);
      const PsoResult r = run_pso(net, o.source, destination_for(o, net), config.pso, config.seed);
      write_output(o, dump(r));
      summarize(r.path, r.fitness);
    } else if (run_ga_cmd->parsed()) {
      const Network net = load_or_generate(o, config);
      const GaResult r = run_ga(net, o.source, destination_for(o, net), config.ga, config.seed);
      write_output(o, dump(r));
      summarize(r.path, r.fitness);
    } else if (compare_cmd->parsed()) {
      const Report report = compare(config);
      const OutputFormat fmt = o.format == "json" ? OutputFormat::Json : OutputFormat::Csv;
      if (o.out.empty()) {
        std::cout << render(report, fmt);
      } else {
        emit(report, fmt, o.out);
      }
      std::cerr << "verdict pso_fitness_ge_ga=" << std::boolalpha
                << report.verdicts.pso_fitness_ge_ga
                << " pso_mean_ms_le_ga=" << report.verdicts.pso_mean_ms_le_ga << "\n";
    } else if (oracle_cmd->parsed()) {
      const Network net = load_or_generate(o, config);
      const OracleResult r =
          brute_force_best(net, o.source, destination_for(o, net), o.oracle_cap);
      write_output(o, dump(r));
      summarize(r.path, r.fitness);
    }
  } catch (const Error& e) {
    std::cerr << "error (" << to_string(e.code()) << "): " << e.what() << "\n";
    return e.code() == ErrorCode::NoPathFound ? kExitNoPath : kExitInvalidConfig;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: malformed network JSON: " << e.what() << "\n";
    return kExitInvalidConfig;
  }
  return kExitOk;
}
