#include "doctest.h"
#include "nilmix/errors.hpp"
#include "nilmix/exceptional_data.hpp"
#include "nilmix/json_io.hpp"
#include "nilmix/mixed_grading.hpp"
#include "nilmix/render.hpp"
#include "nilmix/verification.hpp"

using namespace nilmix;

namespace {

// Serialise, reparse as text and read back.
Json reparsed(const Json& j) { return Json::parse(j.dump()); }

}  // namespace

TEST_CASE("round trips") {
  for (SimpleType t : all_simple_types(9)) {
    CHECK(simple_type_from_json(reparsed(to_json(t))) == t);
    for (const auto& p : catalog(t)) {
      CAPTURE(p.descriptor());
      CHECK(same_class(pair_from_json(reparsed(to_json(p))), p));
      CHECK(satake_from_json(reparsed(to_json(p.satake))) == p.satake);
      const PairDecomposition pd = decompose_regular(p);
      const MixedGrading g = grading_grid(pd);
      CHECK(grading_from_json(reparsed(to_json(g))) == g);
      CHECK(sl2_module_from_json(reparsed(to_json(pd.m1))) == pd.m1);
      const WeightedDynkinDiagram w = ambient_wdd(pd);
      CHECK(wdd_from_json(reparsed(to_json(w))) == w);
      const CentralizerDims c = ambient_centralizer(pd);
      CHECK(centralizer_dims_from_json(reparsed(to_json(c))) == c);
      if (pd.ambient_partition)
        CHECK(partition_from_json(reparsed(to_json(*pd.ambient_partition))) == *pd.ambient_partition);
    }
  }
}

TEST_CASE("JSON shapes") {
  const Json w = to_json(exceptional_lookup(SimpleType::parse("E8"), "E8(a4)").wdd);
  CHECK(w["type"] == "E8");
  CHECK(w["labels"].size() == 8);
  const Json m = to_json(SL2Module::parse("R2+2*R4"));
  CHECK(m["4"] == 2);
  const Json s = to_json(find_pair("E6/D5+t1").satake);
  CHECK(s["black"] == Json::array({2, 3, 4}));
  CHECK(s["arrows"] == Json::array({Json::array({1, 5})}));
  const Json r = to_json(run_suite("kappa"));
  CHECK(r["suite"] == "kappa");
  CHECK(r["failed"] == 0);
  CHECK(r["cases"].size() == r["passed"].get<std::size_t>());
}

TEST_CASE("malformed JSON is rejected") {
  CHECK_THROWS_AS(simple_type_from_json(Json(5)), InvalidInput);
  CHECK_THROWS_AS(simple_type_from_json(Json("K3")), InvalidInput);
  CHECK_THROWS_AS(sl2_module_from_json(Json::parse(R"({"2": -1})")), InvalidInput);
  CHECK_THROWS_AS(partition_from_json(Json::parse("[3, 0]")), InvalidInput);
  CHECK_THROWS_AS(wdd_from_json(Json::parse(R"({"type": "A2", "labels": [1]})")), InvalidInput);
  CHECK_THROWS_AS(grading_from_json(Json::parse(R"({"d0": {"x": 1}})")), InvalidInput);
  CHECK_THROWS_AS(pair_from_json(Json::parse(R"({"descriptor": "E6/Z9"})")), InvalidInput);
  CHECK_THROWS_AS(pair_from_json(Json::parse(R"({"descriptor": "E6/G2"})")), LookupFailure);
}

TEST_CASE("verification plumbing") {
  CHECK(suite_names().size() == 10);
  CHECK_THROWS_AS(run_suite("nope"), InvalidInput);
  VerificationReport r;
  r.check("a", "tag", 1L, 1L);
  r.check("b", "tag", true, false);
  CHECK(r.passed() == 1);
  CHECK(r.failed() == 1);
  CHECK_FALSE(r.ok());
  CHECK_FALSE(VerificationReport{}.ok());
  const auto types = sweep_types(4);
  CHECK(types.front().name() == "A1");
  CHECK(types.back().name() == "G2");
}

TEST_CASE("rendering") {
  const std::string g = render_grid(grading_grid(decompose_regular(find_pair("E6/C4"))));
  CHECK(g.find("[4]") != std::string::npos);
  CHECK(render_wdd(WeightedDynkinDiagram::make(SimpleType::parse("G2"), {0, 2})) == "(0)≡<≡2\n");
  CHECK(render_satake(find_pair("E6/D5+t1").satake).find("arrows: 1<->5") != std::string::npos);
  const std::string d = render_wdd(WeightedDynkinDiagram::make(SimpleType::parse("D4"), {2, 0, 2, 2}));
  CHECK(d.find('|') != std::string::npos);
}
