#include "nilmix/json_io.hpp"

#include <charconv>

#include "nilmix/errors.hpp"

namespace nilmix {

namespace {

template <class F>
auto guarded(const char* what, F&& f) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("malformed ") + what + " JSON: " + e.what());
  }
}

int degree_key(const std::string& key) {
  int v = 0;
  const auto [ptr, ec] = std::from_chars(key.data(), key.data() + key.size(), v);
  if (ec != std::errc{} || ptr != key.data() + key.size())
    throw InvalidInput("malformed JSON: bad degree '" + key + "'");
  return v;
}

Json row_json(const std::map<int, long>& row) {
  Json j = Json::object();
  for (auto [i, d] : row) j[std::to_string(i)] = d;
  return j;
}

}  // namespace

Json to_json(SimpleType t) { return t.name(); }

SimpleType simple_type_from_json(const Json& j) {
  return guarded("type", [&] { return SimpleType::parse(j.get<std::string>()); });
}

Json to_json(const Root& r) { return r.coeffs; }

Json to_json(const RootSystem& rs) {
  Json roots = Json::array();
  for (const auto& r : rs.positive_roots()) roots.push_back(to_json(r));
  return {{"type", rs.type().name()},
          {"rank", rs.rank()},
          {"dimension", rs.dimension()},
          {"highest_root", to_json(rs.highest_root())},
          {"positive_roots", roots}};
}

Json to_json(const SL2Module& m) {
  Json j = Json::object();
  for (auto [k, mult] : m.terms()) j[std::to_string(k)] = mult;
  return j;
}

SL2Module sl2_module_from_json(const Json& j) {
  return guarded("sl2 module", [&] {
    SL2Module m;
    for (auto it = j.begin(); it != j.end(); ++it) {
      const int k = degree_key(it.key());
      const long long mult = it.value().get<long long>();
      if (k < 0 || mult < 0) throw InvalidInput("sl2 module JSON needs nonnegative weights and multiplicities");
      if (mult) m += SL2Module::irreducible(k, mult);
    }
    return m;
  });
}

Json to_json(const Partition& p) { return p.parts(); }

Partition partition_from_json(const Json& j) {
  return guarded("partition", [&] { return Partition(j.get<std::vector<int>>()); });
}

Json to_json(const WeightedDynkinDiagram& w) { return {{"type", w.type.name()}, {"labels", w.labels}}; }

WeightedDynkinDiagram wdd_from_json(const Json& j) {
  return guarded("weighted Dynkin diagram", [&] {
    return WeightedDynkinDiagram::make(simple_type_from_json(j.at("type")), j.at("labels").get<std::vector<int>>());
  });
}

Json to_json(const CentralizerDims& c) { return {{"total", c.total}, {"red", c.red}, {"nil", c.nil}}; }

CentralizerDims centralizer_dims_from_json(const Json& j) {
  return guarded("centralizer", [&] {
    return CentralizerDims{j.at("total").get<long>(), j.at("red").get<long>(), j.at("nil").get<long>()};
  });
}

Json to_json(const SatakeDiagram& s) {
  Json black = Json::array(), arrows = Json::array();
  for (int b : s.black) black.push_back(b + 1);
  for (auto [a, b] : s.arrows) arrows.push_back({a + 1, b + 1});
  return {{"type", s.type.name()}, {"black", black}, {"arrows", arrows}};
}

SatakeDiagram satake_from_json(const Json& j) {
  return guarded("Satake diagram", [&] {
    std::vector<int> black;
    for (int b : j.at("black").get<std::vector<int>>()) black.push_back(b - 1);
    std::vector<std::pair<int, int>> arrows;
    for (const auto& a : j.at("arrows")) arrows.emplace_back(a.at(0).get<int>() - 1, a.at(1).get<int>() - 1);
    return SatakeDiagram::make(simple_type_from_json(j.at("type")), std::move(black), std::move(arrows));
  });
}

Json to_json(const SymmetricPair& p) {
  return {{"descriptor", p.descriptor() + (p.inner ? "" : "-diagram")},
          {"type", p.g.name()},
          {"g0", p.g0_label},
          {"g0_type", p.g0.to_string()},
          {"inner", p.inner},
          {"dim_g0", p.dim_g0},
          {"dim_g1", p.dim_g1},
          {"satake", to_json(p.satake)},
          {"ibn", p.satake.has_ibn()}};
}

SymmetricPair pair_from_json(const Json& j) {
  return guarded("pair", [&] { return find_pair(j.at("descriptor").get<std::string>()); });
}

Json to_json(const MixedGrading& g) { return {{"d0", row_json(g.row(0))}, {"d1", row_json(g.row(1))}}; }

MixedGrading grading_from_json(const Json& j) {
  return guarded("grid", [&] {
    MixedGrading g;
    for (int r = 0; r < 2; ++r)
      for (auto it = j.at(r ? "d1" : "d0").begin(); it != j.at(r ? "d1" : "d0").end(); ++it)
        g.add(r, degree_key(it.key()), it.value().get<long>());
    return g;
  });
}

Json to_json(const PairDecomposition& pd) {
  Json j = {{"pair", to_json(pd.pair)}, {"m0", pd.m0.to_string()}, {"m1", pd.m1.to_string()}};
  if (pd.ambient_partition) j["partition"] = to_json(*pd.ambient_partition);
  if (!pd.orbit_label.empty()) j["orbit"] = pd.orbit_label;
  return j;
}

Json to_json(const UpsilonReport& r) {
  return {{"sigma", to_json(r.sigma)},
          {"e_wdd", to_json(r.e_wdd)},
          {"diff_check", r.diff_check},
          {"diff_cross", r.diff_cross},
          {"sigma_check", to_json(r.sigma_check)},
          {"sigma_sigma_check", to_json(r.sigma_sigma_check)}};
}

Json to_json(const Check04Report& r) {
  return {{"grid_identities", r.grid_identities},
          {"divisible", r.divisible},
          {"no_r2_in_m1", r.no_r2_in_m1},
          {"g0_semisimple", r.g0_semisimple},
          {"e_almost_distinguished", r.e_almost_distinguished},
          {"half_almost_distinguished", r.half_almost_distinguished},
          {"half_orbit", r.half_orbit},
          {"violations", r.violations}};
}

Json to_json(const ExceptionalOrbit& o) {
  Json j = {{"type", o.type.name()},
            {"label", o.label},
            {"wdd", o.wdd.labels},
            {"dim_centralizer", o.dim_centralizer},
            {"red", o.red.to_string()},
            {"dim_nil", o.dim_nil},
            {"source", o.source}};
  if (o.divisible) j["divisible"] = *o.divisible;
  return j;
}

}  // namespace nilmix
