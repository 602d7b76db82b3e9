#include "nilmix/exceptional_data.hpp"

#include <mutex>

#include "json.hpp"
#include "nilmix/errors.hpp"

namespace nilmix {

namespace {

// Node numbering: E_r has the chain 1..r-1 with node r attached to node r-3; F4 has 1,2 short.
// Decompositions of inner pairs were computed from the root system and are re-derived in tests.
constexpr std::string_view kDataset = R"json({
  "version": "nilmix-exceptional-1",
  "orbits": [
    {"type": "E6", "label": "E6", "wdd": [2,2,2,2,2,2], "dim_centralizer": 6, "red": "0", "dim_nil": 6,
     "source": "regular orbit; dims from WDD"},
    {"type": "E6", "label": "E6(a1)", "wdd": [2,2,0,2,2,2], "dim_centralizer": 8, "red": "0", "dim_nil": 8,
     "divisible": true, "source": "standard orbit tables (renumbered); dims from WDD"},
    {"type": "E6", "label": "E6(a3)", "wdd": [2,0,2,0,2,0], "dim_centralizer": 12, "red": "0", "dim_nil": 12,
     "source": "PI orbit table, E6"},
    {"type": "E6", "label": "D5", "wdd": [2,0,2,0,2,2], "dim_centralizer": 10, "red": "t1", "dim_nil": 9,
     "source": "root route; dims from WDD"},
    {"type": "E7", "label": "E6(a1)", "wdd": [0,2,0,2,0,2,0], "dim_centralizer": 15, "red": "t1", "dim_nil": 14,
     "divisible": true, "source": "PI orbit table, E7"},
    {"type": "E7", "label": "E7(a3)", "wdd": [2,2,0,2,0,2,0], "dim_centralizer": 13, "red": "0", "dim_nil": 13,
     "source": "root route; dims from WDD"},
    {"type": "E7", "label": "E6", "wdd": [0,2,0,2,2,2,0], "dim_centralizer": 13, "red": "A1", "dim_nil": 10,
     "source": "root route; dims from WDD"},
    {"type": "E8", "label": "E8(a4)", "wdd": [2,0,2,0,2,0,2,0], "dim_centralizer": 16, "red": "0", "dim_nil": 16,
     "divisible": true, "source": "PI orbit table, E8"},
    {"type": "E8", "label": "E8(a3)", "wdd": [2,2,2,0,2,0,2,0], "dim_centralizer": 14, "red": "0", "dim_nil": 14,
     "source": "root route; dims from WDD"},
    {"type": "F4", "label": "F4(a1)", "wdd": [2,0,2,2], "dim_centralizer": 6, "red": "0", "dim_nil": 6,
     "source": "root route; dims from WDD"},
    {"type": "F4", "label": "F4(a2)", "wdd": [2,0,2,0], "dim_centralizer": 8, "red": "0", "dim_nil": 8,
     "source": "PI orbit table, F4"},
    {"type": "G2", "label": "G2(a1)", "wdd": [0,2], "dim_centralizer": 4, "red": "0", "dim_nil": 4,
     "source": "PI orbit table, G2"}
  ],
  "involutions": [
    {"type": "E6", "g0": "C4", "inner": false, "black": [], "arrows": [],
     "regular_orbit": "E6(a1)", "m0": "R2+R6+R10+R14", "m1": "R4+R8+R10+R16",
     "source": "worked grid, E6 block"},
    {"type": "E6", "g0": "A5+A1", "inner": true, "black": [], "arrows": [[1,5],[2,4]],
     "regular_orbit": "E6(a3)", "m0": "2*R2+R4+R6+R8+R10", "m1": "R2+2*R4+R6+R8+R10",
     "source": "standard Satake tables (EII); decomposition by root route"},
    {"type": "E6", "g0": "D5+t1", "inner": true, "black": [2,3,4], "arrows": [[1,5]],
     "regular_orbit": "D5", "m0": "R0+R2+R6+R8+R10+R14", "m1": "2*R4+2*R10",
     "source": "standard Satake tables (EIII); decomposition by root route"},
    {"type": "E6", "g0": "F4", "inner": false, "black": [2,3,4,6], "arrows": [],
     "regular_orbit": "E6", "m0": "R2+R10+R14+R22", "m1": "R8+R16",
     "source": "standard Satake tables (EIV); principal sl2 exponents"},
    {"type": "E7", "g0": "A7", "inner": true, "black": [], "arrows": [],
     "regular_orbit": "E6(a1)", "m0": "R2+R4+R6+R8+R10+R12+R14", "m1": "R0+2*R4+2*R8+R10+R12+R16",
     "source": "worked grid, E7 block"},
    {"type": "E7", "g0": "D6+A1", "inner": true, "black": [1,3,7], "arrows": [],
     "regular_orbit": "E7(a3)", "m0": "2*R2+R6+2*R10+R14+R18", "m1": "R4+R6+R8+R10+R14+R16",
     "source": "standard Satake tables (EVI); decomposition by root route"},
    {"type": "E7", "g0": "E6+t1", "inner": true, "black": [3,4,5,7], "arrows": [],
     "regular_orbit": "E6", "m0": "R0+R2+R8+R10+R14+R16+R22", "m1": "2*R0+2*R8+2*R16",
     "source": "standard Satake tables (EVII); decomposition by root route"},
    {"type": "E8", "g0": "D8", "inner": true, "black": [], "arrows": [],
     "regular_orbit": "E8(a4)", "m0": "R2+R6+R10+2*R14+R18+R22+R26", "m1": "R4+R8+R10+R14+R16+R18+R22+R28",
     "source": "worked grid, E8 block"},
    {"type": "E8", "g0": "E7+A1", "inner": true, "black": [4,5,6,8], "arrows": [],
     "regular_orbit": "E8(a3)", "m0": "2*R2+R10+R14+R18+R22+R26+R34", "m1": "R8+R10+R16+R18+R26+R28",
     "source": "standard Satake tables (EIX); decomposition by root route"},
    {"type": "F4", "g0": "C3+A1", "inner": true, "black": [], "arrows": [],
     "regular_orbit": "F4(a2)", "m0": "2*R2+R6+R10", "m1": "R2+R4+R8+R10",
     "source": "standard Satake tables (FI); decomposition by root route"},
    {"type": "F4", "g0": "B4", "inner": true, "black": [2,3,4], "arrows": [],
     "regular_orbit": "F4(a1)", "m0": "R2+R6+R10+R14", "m1": "R4+R10",
     "source": "standard Satake tables (FII); decomposition by root route"},
    {"type": "G2", "g0": "A1+A1", "inner": true, "black": [], "arrows": [],
     "regular_orbit": "G2(a1)", "m0": "2*R2", "m1": "R2+R4",
     "source": "standard Satake tables (G); decomposition by root route"}
  ]
})json";

struct Loaded {
  std::vector<ExceptionalOrbit> orbits;
  std::vector<ExceptionalInvolution> involutions;
};

const Loaded& loaded() {
  static const Loaded data = [] {
    Loaded out;
    const auto j = nlohmann::json::parse(kDataset);
    for (const auto& o : j.at("orbits")) {
      const SimpleType t = SimpleType::parse(o.at("type").get<std::string>());
      ExceptionalOrbit rec{t,
                           o.at("label").get<std::string>(),
                           WeightedDynkinDiagram::make(t, o.at("wdd").get<std::vector<int>>()),
                           o.at("dim_centralizer").get<long>(),
                           ReductiveAlgebra::parse(o.at("red").get<std::string>()),
                           o.at("dim_nil").get<long>(),
                           std::nullopt,
                           o.at("source").get<std::string>()};
      if (o.contains("divisible")) rec.divisible = o.at("divisible").get<bool>();
      if (rec.dim_centralizer != rec.red.dimension() + rec.dim_nil)
        throw std::logic_error("dataset record " + rec.label + ": dim_centralizer != red + nil");
      out.orbits.push_back(std::move(rec));
    }
    for (const auto& v : j.at("involutions")) {
      ExceptionalInvolution rec;
      rec.type = SimpleType::parse(v.at("type").get<std::string>());
      rec.g0 = v.at("g0").get<std::string>();
      rec.inner = v.at("inner").get<bool>();
      rec.black = v.at("black").get<std::vector<int>>();
      for (const auto& a : v.at("arrows")) rec.arrows.emplace_back(a.at(0).get<int>(), a.at(1).get<int>());
      rec.regular_orbit = v.at("regular_orbit").get<std::string>();
      rec.m0 = SL2Module::parse(v.at("m0").get<std::string>());
      rec.m1 = SL2Module::parse(v.at("m1").get<std::string>());
      rec.source = v.at("source").get<std::string>();
      out.involutions.push_back(std::move(rec));
    }
    return out;
  }();
  return data;
}

}  // namespace

std::string_view exceptional_dataset_version() { return "nilmix-exceptional-1"; }
std::string_view exceptional_dataset_json() { return kDataset; }

const std::vector<ExceptionalOrbit>& exceptional_orbits() { return loaded().orbits; }
const std::vector<ExceptionalInvolution>& exceptional_involutions() { return loaded().involutions; }

const ExceptionalOrbit& exceptional_lookup(SimpleType t, std::string_view label) {
  std::string known;
  for (const auto& o : exceptional_orbits()) {
    if (o.type != t) continue;
    if (o.label == label) return o;
    known += (known.empty() ? "" : ", ") + o.label;
  }
  throw LookupFailure("no orbit '" + std::string(label) + "' for " + t.name() +
                      (known.empty() ? " (no records for this type)" : "; known labels: " + known));
}

}  // namespace nilmix
