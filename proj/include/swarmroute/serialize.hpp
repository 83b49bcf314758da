#pragma once

#include <json.hpp>

#include "swarmroute/encoding.hpp"
#include "swarmroute/ga.hpp"
#include "swarmroute/harness.hpp"
#include "swarmroute/oracle.hpp"
#include "swarmroute/pso.hpp"
#include "swarmroute/topology.hpp"

// JSON encodings for the public result types. Object keys are emitted in
// sorted order, and doubles use shortest round-trip form, so output is
// byte-stable for identical inputs.
namespace swarmroute {

using Json = nlohmann::json;

void to_json(Json& j, const Path& path);
void from_json(const Json& j, Path& path);

void to_json(Json& j, const Network& network);
Network network_from_json(const Json& j);

void to_json(Json& j, const PsoResult& result);
void to_json(Json& j, const GaResult& result);
void to_json(Json& j, const OracleResult& result);

void to_json(Json& j, const ExperimentConfig& config);
void from_json(const Json& j, ExperimentConfig& config);
void to_json(Json& j, const IterationRecord& record);
void from_json(const Json& j, IterationRecord& record);
void to_json(Json& j, const Aggregates& aggregates);
void from_json(const Json& j, Aggregates& aggregates);
void to_json(Json& j, const Report& report);
void from_json(const Json& j, Report& report);

const char* to_string(BandwidthMode mode);
const char* to_string(CrossoverKind kind);
const char* to_string(MutationKind kind);

}  // namespace swarmroute
