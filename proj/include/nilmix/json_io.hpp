#pragma once

#include "json.hpp"
#include "nilmix/classical_orbit.hpp"
#include "nilmix/exceptional_data.hpp"
#include "nilmix/grid.hpp"
#include "nilmix/involution.hpp"
#include "nilmix/mixed_grading.hpp"
#include "nilmix/root_system.hpp"
#include "nilmix/sl2_module.hpp"
#include "nilmix/wdd.hpp"

namespace nilmix {

using Json = nlohmann::ordered_json;

// Shapes are documented in the README. Types with from_json round-trip exactly.

Json to_json(SimpleType t);
SimpleType simple_type_from_json(const Json& j);

Json to_json(const Root& r);
Json to_json(const RootSystem& rs);

/// {"weight": multiplicity} with weights as decimal strings.
Json to_json(const SL2Module& m);
SL2Module sl2_module_from_json(const Json& j);

Json to_json(const Partition& p);
Partition partition_from_json(const Json& j);

Json to_json(const WeightedDynkinDiagram& w);
WeightedDynkinDiagram wdd_from_json(const Json& j);

Json to_json(const CentralizerDims& c);
CentralizerDims centralizer_dims_from_json(const Json& j);

Json to_json(const SatakeDiagram& s);
SatakeDiagram satake_from_json(const Json& j);

Json to_json(const SymmetricPair& p);
/// Resolved through the descriptor.
SymmetricPair pair_from_json(const Json& j);

/// {"d0": {"i": d}, "d1": {...}} over the stored (nonzero) cells.
Json to_json(const MixedGrading& g);
MixedGrading grading_from_json(const Json& j);

Json to_json(const PairDecomposition& pd);
Json to_json(const UpsilonReport& r);
Json to_json(const Check04Report& r);
Json to_json(const ExceptionalOrbit& o);

}  // namespace nilmix
