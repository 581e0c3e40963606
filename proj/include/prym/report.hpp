#pragma once

// JSON and DOT renderings. Key order is fixed so output is byte-stable.

#include "json.hpp"
#include <string>

#include "prym/components.hpp"
#include "prym/strategies.hpp"
#include "prym/surface.hpp"

namespace prym {

using Json = nlohmann::ordered_json;

Json to_json(const Surd& x);
Json to_json(const Prototype& p);
Json to_json(const Direction& d);
Json to_json(const MoveRecord& m);
Json to_json(const Bridge& b);
Json to_json(const TheoremReport& r);
Json to_json(const ComponentPartition& part);
Json to_json(const StrategyScan& scan);
Json to_json(const CylinderDecomposition& dec);

// Orbit report with "matches_theorem": one orbit exactly when P_D is non-empty.
Json orbit_json(const OrbitReport& r);
bool orbit_matches(const OrbitReport& r);

// Prototypes as nodes, generator moves as labelled edges.
std::string partition_dot(const ComponentPartition& part);
// P^A_D components and bridge surfaces as nodes, bridge moves as edges.
std::string orbit_dot(const OrbitReport& r);

}  // namespace prym
