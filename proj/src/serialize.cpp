#include "swarmroute/serialize.hpp"

#include <algorithm>
#include <string>

#include "swarmroute/errors.hpp"

namespace swarmroute {

const char* to_string(BandwidthMode mode) {
  return mode == BandwidthMode::Static ? "static" : "dynamic";
}
const char* to_string(CrossoverKind kind) {
  return kind == CrossoverKind::OnePoint ? "1pt" : "2pt";
}
const char* to_string(MutationKind kind) {
  return kind == MutationKind::Swap ? "swap" : "adjswap";
}

namespace {

BandwidthMode parse_mode(const std::string& s) {
  if (s == "static") return BandwidthMode::Static;
  if (s == "dynamic") return BandwidthMode::Dynamic;
  throw Error(ErrorCode::InvalidArgument, "unknown bandwidth mode '" + s + "'");
}
CrossoverKind parse_crossover(const std::string& s) {
  if (s == "1pt") return CrossoverKind::OnePoint;
  if (s == "2pt") return CrossoverKind::TwoPoint;
  throw Error(ErrorCode::InvalidArgument, "unknown crossover '" + s + "'");
}
MutationKind parse_mutation(const std::string& s) {
  if (s == "swap") return MutationKind::Swap;
  if (s == "adjswap") return MutationKind::AdjacentSwap;
  throw Error(ErrorCode::InvalidArgument, "unknown mutation '" + s + "'");
}

Json trace_json(const std::vector<TracePoint>& trace) {
  Json out = Json::array();
  for (const TracePoint& t : trace) out.push_back({{"iter", t.iteration}, {"gbest", t.best_fitness}});
  return out;
}

}  // namespace

void to_json(Json& j, const Path& path) { j = path.nodes; }
void from_json(const Json& j, Path& path) { j.get_to(path.nodes); }

void to_json(Json& j, const Network& network) {
  const RegionLayout& layout = network.layout();
  Json links = Json::array();
  for (const Link& l : network.links()) {
    links.push_back({{"u", l.u}, {"v", l.v}, {"bandwidth", l.bandwidth}});
  }
  j = Json{{"pn", layout.node_count},
           {"a", layout.region_count},
           {"sizes", layout.sizes},
           {"links", std::move(links)},
           {"seed", network.seed()},
           {"bandwidth_range",
            {{"min", network.bandwidth_range().min}, {"max", network.bandwidth_range().max}}}};
}

Network network_from_json(const Json& j) {
  RegionLayout layout = partition_regions(j.at("pn").get<int>());
  if (j.at("a").get<int>() != layout.region_count ||
      j.at("sizes").get<std::vector<int>>() != layout.sizes) {
    throw Error(ErrorCode::InvalidArgument, "region layout does not match pn");
  }
  std::vector<Link> links;
  for (const Json& l : j.at("links")) {
    links.push_back({l.at("u").get<NodeId>(), l.at("v").get<NodeId>(),
                     l.at("bandwidth").get<double>()});
  }
  BandwidthRange range;
  if (j.contains("bandwidth_range")) {
    range = {j["bandwidth_range"].at("min").get<double>(),
             j["bandwidth_range"].at("max").get<double>()};
  } else if (!links.empty()) {
    range = {links.front().bandwidth, links.front().bandwidth};
    for (const Link& l : links) {
      range.min = std::min(range.min, l.bandwidth);
      range.max = std::max(range.max, l.bandwidth);
    }
  }
  return Network(std::move(layout), std::move(links), j.at("seed").get<Seed>(), range);
}

void to_json(Json& j, const PsoResult& r) {
  j = Json{{"path", r.path},           {"fitness", r.fitness},
           {"hops", r.hops},           {"iterations", r.iterations},
           {"trace", trace_json(r.trace)}, {"wall_ms", r.wall_ms}};
}

void to_json(Json& j, const GaResult& r) {
  j = Json{{"path", r.path},           {"fitness", r.fitness},
           {"hops", r.hops},           {"generations", r.generations},
           {"trace", trace_json(r.trace)}, {"wall_ms", r.wall_ms}};
}

void to_json(Json& j, const OracleResult& r) {
  j = Json{{"path", r.path},
           {"fitness", r.fitness},
           {"hops", r.path.hop_count()},
           {"paths_enumerated", r.paths_enumerated}};
}

void to_json(Json& j, const ExperimentConfig& c) {
  j = Json{
      {"nodes", c.nodes},
      {"seed", c.seed},
      {"source", c.source},
      {"destination", c.resolved_destination()},
      {"budgets", c.budgets},
      {"trials", c.trials},
      {"bandwidth_mode", to_string(c.bandwidth_mode)},
      {"fixed_topology", c.fixed_topology},
      {"bandwidth", {{"min", c.bandwidth.min}, {"max", c.bandwidth.max}}},
      {"topology",
       {{"intra_density", c.topology.intra_density},
        {"inter_density", c.topology.inter_density},
        {"ensure_connected", c.topology.ensure_connected}}},
      {"pso",
       {{"particles", c.pso.particles},
        {"inertia", c.pso.inertia},
        {"cognitive", c.pso.cognitive},
        {"social", c.pso.social},
        {"v_max", c.pso.v_max},
        {"max_retries", c.pso.max_retries},
        {"heuristic_window", c.pso.heuristic_window}}},
      {"ga",
       {{"population", c.ga.population},
        {"crossover", to_string(c.ga.crossover)},
        {"crossover_prob", c.ga.crossover_prob},
        {"mutation", to_string(c.ga.mutation)},
        {"mutation_prob", c.ga.mutation_prob},
        {"elitism", c.ga.elitism},
        {"single_gene_exchange", c.ga.one_point_mode == OnePointMode::SingleGene},
        {"max_retries", c.ga.max_retries},
        {"heuristic_window", c.ga.heuristic_window}}},
  };
}

void from_json(const Json& j, ExperimentConfig& c) {
  c = ExperimentConfig{};
  j.at("nodes").get_to(c.nodes);
  j.at("seed").get_to(c.seed);
  j.at("source").get_to(c.source);
  j.at("destination").get_to(c.destination);
  j.at("budgets").get_to(c.budgets);
  j.at("trials").get_to(c.trials);
  c.bandwidth_mode = parse_mode(j.at("bandwidth_mode").get<std::string>());
  j.at("fixed_topology").get_to(c.fixed_topology);
  j.at("bandwidth").at("min").get_to(c.bandwidth.min);
  j.at("bandwidth").at("max").get_to(c.bandwidth.max);
  const Json& t = j.at("topology");
  t.at("intra_density").get_to(c.topology.intra_density);
  t.at("inter_density").get_to(c.topology.inter_density);
  t.at("ensure_connected").get_to(c.topology.ensure_connected);
  const Json& p = j.at("pso");
  p.at("particles").get_to(c.pso.particles);
  p.at("inertia").get_to(c.pso.inertia);
  p.at("cognitive").get_to(c.pso.cognitive);
  p.at("social").get_to(c.pso.social);
  p.at("v_max").get_to(c.pso.v_max);
  p.at("max_retries").get_to(c.pso.max_retries);
  p.at("heuristic_window").get_to(c.pso.heuristic_window);
  const Json& g = j.at("ga");
  g.at("population").get_to(c.ga.population);
  c.ga.crossover = parse_crossover(g.at("crossover").get<std::string>());
  g.at("crossover_prob").get_to(c.ga.crossover_prob);
  c.ga.mutation = parse_mutation(g.at("mutation").get<std::string>());
  g.at("mutation_prob").get_to(c.ga.mutation_prob);
  g.at("elitism").get_to(c.ga.elitism);
  c.ga.one_point_mode = g.at("single_gene_exchange").get<bool>() ? OnePointMode::SingleGene
                                                                 : OnePointMode::Standard;
  g.at("max_retries").get_to(c.ga.max_retries);
  g.at("heuristic_window").get_to(c.ga.heuristic_window);
  c.pso.bandwidth_mode = c.bandwidth_mode;
  c.ga.bandwidth_mode = c.bandwidth_mode;
}

void to_json(Json& j, const IterationRecord& r) {
  j = Json{{"budget", r.budget},
           {"trial", r.trial},
           {"network_seed", r.network_seed},
           {"run_seed", r.run_seed},
           {"pso_fitness", r.pso_fitness},
           {"ga_fitness", r.ga_fitness},
           {"pso_hops", r.pso_hops},
           {"ga_hops", r.ga_hops},
           {"pso_ms", r.pso_ms},
           {"ga_ms", r.ga_ms},
           {"pso_path", r.pso_path},
           {"ga_path", r.ga_path}};
}

void from_json(const Json& j, IterationRecord& r) {
  j.at("budget").get_to(r.budget);
  j.at("trial").get_to(r.trial);
  j.at("network_seed").get_to(r.network_seed);
  j.at("run_seed").get_to(r.run_seed);
  j.at("pso_fitness").get_to(r.pso_fitness);
  j.at("ga_fitness").get_to(r.ga_fitness);
  j.at("pso_hops").get_to(r.pso_hops);
  j.at("ga_hops").get_to(r.ga_hops);
  j.at("pso_ms").get_to(r.pso_ms);
  j.at("ga_ms").get_to(r.ga_ms);
  j.at("pso_path").get_to(r.pso_path);
  j.at("ga_path").get_to(r.ga_path);
}

void to_json(Json& j, const Aggregates& a) {
  j = Json{{"pso_mean_fitness", a.pso_mean_fitness},
           {"pso_median_fitness", a.pso_median_fitness},
           {"ga_mean_fitness", a.ga_mean_fitness},
           {"ga_median_fitness", a.ga_median_fitness},
           {"pso_mean_hops", a.pso_mean_hops},
           {"ga_mean_hops", a.ga_mean_hops},
           {"pso_mean_ms", a.pso_mean_ms},
           {"pso_median_ms", a.pso_median_ms},
           {"ga_mean_ms", a.ga_mean_ms},
           {"ga_median_ms", a.ga_median_ms}};
}

void from_json(const Json& j, Aggregates& a) {
  j.at("pso_mean_fitness").get_to(a.pso_mean_fitness);
  j.at("pso_median_fitness").get_to(a.pso_median_fitness);
  j.at("ga_mean_fitness").get_to(a.ga_mean_fitness);
  j.at("ga_median_fitness").get_to(a.ga_median_fitness);
  j.at("pso_mean_hops").get_to(a.pso_mean_hops);
  j.at("ga_mean_hops").get_to(a.ga_mean_hops);
  j.at("pso_mean_ms").get_to(a.pso_mean_ms);
  j.at("pso_median_ms").get_to(a.pso_median_ms);
  j.at("ga_mean_ms").get_to(a.ga_mean_ms);
  j.at("ga_median_ms").get_to(a.ga_median_ms);
}

void to_json(Json& j, const Report& r) {
  j = Json{{"config", r.config},
           {"records", r.records},
           {"aggregates", r.aggregates},
           {"verdicts",
            {{"pso_fitness_ge_ga", r.verdicts.pso_fitness_ge_ga},
             {"pso_mean_ms_le_ga", r.verdicts.pso_mean_ms_le_ga}}}};
}

void from_json(const Json& j, Report& r) {
  j.at("config").get_to(r.config);
  j.at("records").get_to(r.records);
  j.at("aggregates").get_to(r.aggregates);
  j.at("verdicts").at("pso_fitness_ge_ga").get_to(r.verdicts.pso_fitness_ge_ga);
  j.at("verdicts").at("pso_mean_ms_le_ga").get_to(r.verdicts.pso_mean_ms_le_ga);
}

}  // namespace swarmroute
