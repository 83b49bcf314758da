// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any
// criterion fails. Pass `--cli PATH` to include the CLI determinism checks.

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "../unit/test_graphs.hpp"
#include "swarmroute/encoding.hpp"
#include "swarmroute/fitness.hpp"
#include "swarmroute/ga.hpp"
#include "swarmroute/harness.hpp"
#include "swarmroute/oracle.hpp"
#include "swarmroute/pso.hpp"
#include "swarmroute/serialize.hpp"

using namespace swarmroute;

namespace {

constexpr double kFitnessTolerance = 1e-12;
constexpr double kDecodeBudgetSeconds = 10.0;
constexpr double kCompareBudgetSeconds = 10.0;
constexpr int kVerdictTrials = 20;

struct Outcome {
  bool pass = true;
  std::string detail;
};

class Check {
 public:
  void require(bool condition, const std::string& what) {
    if (!condition && failures_++ < 5) notes_ << " [violation: " << what << "]";
  }
  void note(const std::string& s) { notes_ << " " << s; }
  Outcome outcome() const {
    std::string d = notes_.str();
    if (failures_ > 5) d += " (+" + std::to_string(failures_ - 5) + " more)";
    return {failures_ == 0, d};
  }

 private:
  int failures_ = 0;
  std::ostringstream notes_;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Chromosome chrom(std::vector<double> v) { return Chromosome{std::move(v)}; }

// ---------------------------------------------------------------------------

Outcome region_partition() {
  Check c;
  const RegionLayout l = partition_regions(21);
  c.require(l.region_count == 4, "region count");
  c.require(l.sizes == std::vector<int>{5, 5, 5, 6}, "sizes");
  c.note("pn=21 -> a=" + std::to_string(l.region_count) + " sizes=[5,5,5,6]");
  return c.outcome();
}

Outcome operator_goldens() {
  Check c;
  const Chromosome base = chrom({1, 2, 3, 4, 5, 6, 7, 8});
  const Chromosome other = chrom({1, 1, 3, 3, 4, 5, 7, 8});
  c.require(mutate_swap(base, 3, 6) == chrom({1, 2, 6, 4, 5, 3, 7, 8}), "swap i=3 j=6");
  c.require(mutate_adjacent_swap(base, 6) == chrom({1, 2, 3, 4, 5, 7, 6, 8}), "adjacent j=6");
  c.require(crossover_two_point(base, other, 4, 6).second == chrom({1, 1, 3, 4, 5, 6, 7, 8}),
            "two-point second child j=4 k=6");
  c.note("swap, adjacent swap, two-point crossover");
  return c.outcome();
}

Outcome fitness_oracle() {
  Check c;
  Engine rng = make_engine(20240601);
  int pairs = 0;
  int single_links = 0;
  double worst = 0.0;
  for (Seed s = 0; pairs < 1000; ++s) {
    const int pn = 6 + static_cast<int>(uniform_index(rng, 35));
    const Network net = make_network(pn, s);
    Path path;
    if (s % 4 == 0) {
      const Link& l = net.links()[uniform_index(rng, net.link_count())];
      path.nodes = {l.u, l.v};
    } else {
      const NodeId src = static_cast<NodeId>(uniform_index(rng, static_cast<std::size_t>(pn)));
      NodeId dst = static_cast<NodeId>(uniform_index(rng, static_cast<std::size_t>(pn - 1)));
      if (dst >= src) ++dst;
      auto decoded = decode(net, random_priorities(static_cast<std::size_t>(pn), rng), src, dst,
                            DecodeParams::for_network(net));
      if (!decoded) continue;
      path = std::move(*decoded);
    }
    ++pairs;
    const double got = fitness(net, path);
    const double want = fixtures::oracle_fitness(net, path.nodes);
    worst = std::max(worst, std::abs(got - want));
    c.require(std::abs(got - want) <= kFitnessTolerance, "oracle mismatch");
    c.require(got > 0.0 && got <= 1.0, "fitness outside (0,1]");
    if (path.hop_count() == 1) {
      ++single_links;
      c.require(got == 1.0, "single-link path not exactly 1");
    }
  }
  char buf[128];
  std::snprintf(buf, sizeof buf, "pairs=%d single_link=%d max|diff|=%.3g", pairs, single_links,
                worst);
  c.note(buf);
  return c.outcome();
}

Outcome path_validity() {
  Check c;
  const auto t0 = std::chrono::steady_clock::now();
  int decoded = 0;
  for (Seed s = 0; s < 1000; ++s) {
    const int pn = 8 + static_cast<int>(s % 40);
    const Network net = make_network(pn, s);
    const NodeId src = static_cast<NodeId>(s % static_cast<Seed>(pn));
    const NodeId dst = static_cast<NodeId>((s * 7 + 3) % static_cast<Seed>(pn));
    if (src == dst) continue;
    const PriorityVector x = random_priorities(static_cast<std::size_t>(pn), s + 77);
    const PriorityVector before = x;
    const auto path = decode(net, x, src, dst, DecodeParams::for_network(net));
    c.require(x == before, "input priorities mutated");
    if (!path) continue;
    ++decoded;
    c.require(is_valid_path(net, *path, src, dst), "invalid path seed " + std::to_string(s));
  }
  const double elapsed = seconds_since(t0);
  c.require(elapsed < kDecodeBudgetSeconds, "runtime budget");
  char buf[96];
  std::snprintf(buf, sizeof buf, "decoded=%d/1000 elapsed=%.2fs", decoded, elapsed);
  c.note(buf);
  return c.outcome();
}

Outcome pso_invariants() {
  Check c;
  PsoParams params;
  params.particles = 40;
  params.iterations = 100;
  long steps = 0;
  for (Seed s = 0; s < 50; ++s) {
    const Network net = make_network(21, 1000 + s);
    Swarm swarm = init_swarm(net, 0, 20, params, s);
    double last = swarm.gbest_fitness;
    for (int i = 0; i < params.iterations; ++i) {
      swarm = step(std::move(swarm), net, s);
      ++steps;
      c.require(swarm.gbest_fitness >= last, "gBest decreased");
      last = swarm.gbest_fitness;
      for (const Particle& p : swarm.particles) {
        for (double v : p.velocity) c.require(std::abs(v) <= params.v_max, "velocity clamp");
      }
    }
  }
  c.note("instances=50 steps=" + std::to_string(steps));
  return c.outcome();
}

bool same_multiset(std::vector<double> a, std::vector<double> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

Outcome ga_invariants() {
  Check c;
  for (Seed s = 0; s < 50; ++s) {
    const Network net = make_network(21, 2000 + s);
    GaParams params;
    params.generations = 50;
    params.crossover = s % 2 ? CrossoverKind::TwoPoint : CrossoverKind::OnePoint;
    params.mutation = (s / 2) % 2 ? MutationKind::AdjacentSwap : MutationKind::Swap;
    const GaResult r = run_ga(net, 0, 20, params, s);
    for (std::size_t i = 1; i < r.trace.size(); ++i) {
      c.require(r.trace[i].best_fitness >= r.trace[i - 1].best_fitness, "GA trace decreased");
    }
  }

  Engine rng = make_engine(99);
  for (int n = 0; n < 10000; ++n) {
    const std::size_t len = 2 + uniform_index(rng, 30);
    const Chromosome p1 = random_priorities(len, rng);
    const Chromosome p2 = random_priorities(len, rng);
    std::size_t i = 1 + uniform_index(rng, len);
    std::size_t j = 1 + uniform_index(rng, len);
    if (i > j) std::swap(i, j);
    if (i == j) j = i == len ? (i = len - 1, len) : i + 1;

    c.require(same_multiset(mutate_swap(p1, i, j).values, p1.values), "swap multiset");
    c.require(same_multiset(mutate_adjacent_swap(p1, i).values, p1.values), "adjacent multiset");

    const auto one = crossover_one_point(p1, p2, i);
    const auto two = crossover_two_point(p1, p2, i, j);
    for (const auto* kids : {&one, &two}) {
      for (std::size_t g = 0; g < len; ++g) {
        const double a = kids->first.values[g];
        const double b = kids->second.values[g];
        c.require(a == p1.values[g] || a == p2.values[g], "child1 provenance");
        c.require(b == p1.values[g] || b == p2.values[g], "child2 provenance");
      }
    }
  }
  c.note("ga_instances=50 operator_applications=10000");
  return c.outcome();
}

Outcome oracle_soundness() {
  Check c;
  int attained = 0;
  int instances = 0;
  PsoParams pso;
  pso.iterations = 30;
  GaParams ga;
  ga.generations = 30;
  for (Seed s = 0; s < 50; ++s) {
    const int pn = 6 + static_cast<int>(s % 7);  // 6..12
    const Network net = make_network(pn, 3000 + s);
    const NodeId dst = pn - 1;
    const OracleResult best = brute_force_best(net, 0, dst);
    const PsoResult pr = run_pso(net, 0, dst, pso, s);
    const GaResult gr = run_ga(net, 0, dst, ga, s);
    ++instances;
    c.require(pr.fitness <= best.fitness, "PSO exceeded oracle");
    c.require(gr.fitness <= best.fitness, "GA exceeded oracle");
    if (std::abs(pr.fitness - best.fitness) <= kFitnessTolerance) ++attained;
  }
  char buf[96];
  std::snprintf(buf, sizeof buf, "instances=%d pso_attains_optimum=%.2f", instances,
                static_cast<double>(attained) / instances);
  c.note(buf);
  return c.outcome();
}

Outcome experiment_shape() {
  Check c;
  ExperimentConfig config;
  const auto t0 = std::chrono::steady_clock::now();
  const Report report = compare(config);
  const std::string csv = render(report, OutputFormat::Csv);
  const double elapsed = seconds_since(t0);

  c.require(report.records.size() == 16, "record count");
  c.require(csv.substr(0, csv.find('\n')) == kCsvHeader, "CSV header");
  c.require(std::count(csv.begin(), csv.end(), '\n') == 17, "CSV line count");
  c.require(elapsed < kCompareBudgetSeconds, "runtime budget");

  ExperimentConfig many = config;
  many.trials = kVerdictTrials;
  const Report verdict = compare(many);
  char buf[320];
  std::snprintf(buf, sizeof buf,
                "records=%zu elapsed=%.2fs | %d trials: pso_mean_fitness=%.4f "
                "ga_mean_fitness=%.4f pso_mean_ms=%.3f ga_mean_ms=%.3f "
                "verdict pso_fitness_ge_ga=%s pso_mean_ms_le_ga=%s",
                report.records.size(), elapsed, kVerdictTrials,
                verdict.aggregates.pso_mean_fitness, verdict.aggregates.ga_mean_fitness,
                verdict.aggregates.pso_mean_ms, verdict.aggregates.ga_mean_ms,
                verdict.verdicts.pso_fitness_ge_ga ? "true" : "false",
                verdict.verdicts.pso_mean_ms_le_ga ? "true" : "false");
  c.note(buf);
  return c.outcome();
}

std::string mask_times(const std::string& text) {
  static const std::regex json_ms(R"(("[a-z_]*_ms[a-z_]*": )[^,\n}]*)");
  std::string out = std::regex_replace(text, json_ms, "$1#");
  // CSV rows: blank the two trailing time columns.
  static const std::regex csv_ms(R"(,[0-9.]+,[0-9.]+\n)");
  if (out.rfind("budget,", 0) == 0) out = std::regex_replace(out, csv_ms, ",#,#\n");
  return out;
}

struct Captured {
  int status;
  std::string out;
};

Captured capture(const std::string& cmd) {
  FILE* pipe = popen((cmd + " 2>/dev/null").c_str(), "r");
  if (!pipe) return {-1, {}};
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  const int raw = pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

Outcome determinism(const std::string& cli) {
  Check c;
  // Library level.
  {
    ExperimentConfig config;
    config.trials = 2;
    const std::string a = render(compare(config), OutputFormat::Json);
    const std::string b = render(compare(config), OutputFormat::Json);
    c.require(mask_times(a) == mask_times(b), "library compare JSON differs");
    const Network net = make_network(21, 5);
    c.require(mask_times(Json(run_pso(net, 0, 20, {}, 5)).dump(2)) ==
                  mask_times(Json(run_pso(net, 0, 20, {}, 5)).dump(2)),
              "library PSO differs");
  }
  if (cli.empty()) {
    c.note("library-level only (no --cli given)");
    return c.outcome();
  }
  const std::vector<std::string> commands = {
      "generate --nodes 21 --seed 7",
      "run-pso --nodes 21 --seed 7 --iterations 20",
      "run-ga --nodes 21 --seed 7 --iterations 20 --crossover 2pt --mutation adjswap",
      "run-pso --nodes 21 --seed 7 --iterations 10 --dynamic-bandwidth",
      "compare --nodes 21 --seed 7 --format csv",
      "compare --nodes 21 --seed 7 --trials 2 --format json",
      "oracle --nodes 12 --seed 7",
  };
  for (const std::string& args : commands) {
    const Captured a = capture(cli + " " + args);
    const Captured b = capture(cli + " " + args);
    c.require(a.status == 0 && b.status == 0, "non-zero exit: " + args);
    c.require(!a.out.empty() && mask_times(a.out) == mask_times(b.out), "output differs: " + args);
  }
  c.note("library + " + std::to_string(commands.size()) + " CLI invocations");
  return c.outcome();
}

}  // namespace

int main(int argc, char** argv) {
  std::string cli;
  for (int i = 1; i + 1 < argc; ++i) {
    if (std::string(argv[i]) == "--cli") cli = argv[i + 1];
  }

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"AC1 region partition golden", region_partition},
      {"AC2 operator goldens", operator_goldens},
      {"AC3 fitness oracle equivalence", fitness_oracle},
      {"AC4 path validity property", path_validity},
      {"AC5 PSO invariants", pso_invariants},
      {"AC6 GA invariants", ga_invariants},
      {"AC7 oracle soundness", oracle_soundness},
      {"AC8 experiment shape", experiment_shape},
      {"AC9 determinism", [&] { return determinism(cli); }},
  };

  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string(" exception: ") + e.what()};
    }
    if (!o.pass) ++failed;
    std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << name << ":" << o.detail << "\n";
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " failed")
            << "\n";
  return failed == 0 ? 0 : 1;
}
