#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "swarmroute/encoding.hpp"
#include "swarmroute/errors.hpp"
#include "swarmroute/fitness.hpp"
#include "swarmroute/ga.hpp"
#include "swarmroute/harness.hpp"
#include "swarmroute/oracle.hpp"
#include "swarmroute/pso.hpp"
#include "swarmroute/serialize.hpp"
#include "swarmroute/topology.hpp"

namespace py = pybind11;
using namespace swarmroute;

namespace {

py::object to_python(const Json& j) {
  switch (j.type()) {
    case Json::value_t::null:
      return py::none();
    case Json::value_t::boolean:
      return py::bool_(j.get<bool>());
    case Json::value_t::number_integer:
      return py::int_(j.get<std::int64_t>());
    case Json::value_t::number_unsigned:
      return py::int_(j.get<std::uint64_t>());
    case Json::value_t::number_float:
      return py::float_(j.get<double>());
    case Json::value_t::string:
      return py::str(j.get<std::string>());
    case Json::value_t::array: {
      py::list out;
      for (const Json& v : j) out.append(to_python(v));
      return std::move(out);
    }
    default: {
      py::dict out;
      for (const auto& [k, v] : j.items()) out[py::str(k)] = to_python(v);
      return std::move(out);
    }
  }
}

BandwidthMode bandwidth_mode(bool dynamic) {
  return dynamic ? BandwidthMode::Dynamic : BandwidthMode::Static;
}

CrossoverKind crossover_kind(const std::string& s) {
  if (s == "1pt") return CrossoverKind::OnePoint;
  if (s == "2pt") return CrossoverKind::TwoPoint;
  throw Error(ErrorCode::InvalidArgument, "crossover must be '1pt' or '2pt', got '" + s + "'");
}

MutationKind mutation_kind(const std::string& s) {
  if (s == "swap") return MutationKind::Swap;
  if (s == "adjswap") return MutationKind::AdjacentSwap;
  throw Error(ErrorCode::InvalidArgument,
              "mutation must be 'swap' or 'adjswap', got '" + s + "'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Bandwidth-aware routing with particle swarm and genetic optimizers";

  py::register_exception<Error>(m, "SwarmrouteError", PyExc_ValueError);

  m.def(
      "partition_regions",
      [](int nodes) { return partition_regions(nodes).sizes; }, py::arg("nodes"),
      "Region sizes for a network of `nodes` nodes.");

  py::class_<Network>(m, "Network")
      .def_property_readonly("node_count", &Network::node_count)
      .def_property_readonly("link_count", &Network::link_count)
      .def("bandwidth", &Network::bandwidth, py::arg("a"), py::arg("b"))
      .def("has_link", &Network::has_link, py::arg("a"), py::arg("b"))
      .def("neighbors",
           [](const Network& n, NodeId v) {
             const auto s = n.neighbors(v);
             return std::vector<NodeId>(s.begin(), s.end());
           })
      .def("to_dict", [](const Network& n) { return to_python(Json(n)); })
      .def("to_json", [](const Network& n) { return Json(n).dump(); })
      .def_static(
          "from_json", [](const std::string& s) { return network_from_json(Json::parse(s)); },
          py::arg("text"))
      .def("__eq__", [](const Network& a, const Network& b) { return a == b; });

  m.def(
      "make_network",
      [](int nodes, Seed seed, double intra, double inter, bool backbone, double bw_min,
         double bw_max) {
        return make_network(nodes, seed, TopologyOptions{intra, inter, backbone},
                            BandwidthRange{bw_min, bw_max});
      },
      py::arg("nodes"), py::arg("seed"), py::arg("intra_density") = 0.6,
      py::arg("inter_density") = 0.15, py::arg("backbone") = true, py::arg("bandwidth_min") = 1.0,
      py::arg("bandwidth_max") = 100.0);

  m.def(
      "decode",
      [](const Network& net, const std::vector<double>& priorities, NodeId source,
         NodeId destination, int window) -> py::object {
        DecodeParams params = DecodeParams::for_network(net);
        if (window > 0) params.window = window;
        const auto path = decode(net, PriorityVector{priorities}, source, destination, params);
        if (!path) return py::none();
        return py::cast(path->nodes);
      },
      py::arg("network"), py::arg("priorities"), py::arg("source"), py::arg("destination"),
      py::arg("window") = 0, "Decode a priority vector into a path, or None at a dead end.");

  m.def(
      "fitness",
      [](const Network& net, const std::vector<NodeId>& nodes) {
        return fitness(net, Path{nodes});
      },
      py::arg("network"), py::arg("path"));

  m.def(
      "run_pso",
      [](const Network& net, NodeId source, NodeId destination, int particles, int iterations,
         bool dynamic, Seed seed) {
        PsoParams p;
        p.particles = particles;
        p.iterations = iterations;
        p.bandwidth_mode = bandwidth_mode(dynamic);
        return to_python(Json(run_pso(net, source, destination, p, seed)));
      },
      py::arg("network"), py::arg("source"), py::arg("destination"), py::arg("particles") = 40,
      py::arg("iterations") = 20, py::arg("dynamic") = false, py::arg("seed") = 0);

  m.def(
      "run_ga",
      [](const Network& net, NodeId source, NodeId destination, int population, int generations,
         const std::string& crossover, const std::string& mutation, bool elitism, bool dynamic,
         Seed seed) {
        GaParams p;
        p.population = population;
        p.generations = generations;
        p.crossover = crossover_kind(crossover);
        p.mutation = mutation_kind(mutation);
        p.elitism = elitism;
        p.bandwidth_mode = bandwidth_mode(dynamic);
        return to_python(Json(run_ga(net, source, destination, p, seed)));
      },
      py::arg("network"), py::arg("source"), py::arg("destination"), py::arg("population") = 40,
      py::arg("generations") = 20, py::arg("crossover") = "1pt", py::arg("mutation") = "swap",
      py::arg("elitism") = true, py::arg("dynamic") = false, py::arg("seed") = 0);

  m.def(
      "brute_force_best",
      [](const Network& net, NodeId source, NodeId destination, int cap) {
        return to_python(Json(brute_force_best(net, source, destination, cap)));
      },
      py::arg("network"), py::arg("source"), py::arg("destination"), py::arg("cap") = 12);

  m.def(
      "compare",
      [](const py::dict& overrides, const std::string& format) -> py::object {
        Json j = Json(ExperimentConfig{});
        const Json patch = Json::parse(py::str(py::module_::import("json").attr("dumps")(overrides))
                                           .cast<std::string>());
        j.merge_patch(patch);
        // Keep "last node" semantics unless the caller pins a destination.
        if (!patch.contains("destination")) j["destination"] = -1;
        const ExperimentConfig config = j.get<ExperimentConfig>();
        const Report report = [&] {
          py::gil_scoped_release release;
          return compare(config);
        }();
        if (format == "csv") return py::str(render(report, OutputFormat::Csv));
        if (format == "json") return to_python(Json(report));
        throw Error(ErrorCode::InvalidArgument, "format must be 'json' or 'csv'");
      },
      py::arg("config") = py::dict(), py::arg("format") = "json",
      "Run the PSO/GA comparison. `config` overrides fields of the default experiment "
      "configuration using the same keys as the JSON report.");
}
