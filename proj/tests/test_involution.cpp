#include <map>
#include <set>

#include "doctest.h"
#include "nilmix/errors.hpp"
#include "nilmix/exceptional_data.hpp"
#include "nilmix/involution.hpp"
#include "nilmix/root_route.hpp"

using namespace nilmix;

TEST_CASE("catalog dimensions") {
  for (SimpleType t : all_simple_types(10)) {
    CAPTURE(t.name());
    for (const auto& p : catalog(t)) {
      CAPTURE(p.descriptor());
      CHECK(p.dim_g0 + p.dim_g1 == t.dimension());
      CHECK(p.dim_g0 == p.g0.dimension());
      CHECK(p.satake.type == t);
    }
  }
}

TEST_CASE("catalog sizes") {
  auto count = [](const char* t) { return catalog(SimpleType::parse(t)).size(); };
  CHECK(count("E6") == 4);
  CHECK(count("E7") == 3);
  CHECK(count("E8") == 2);
  CHECK(count("F4") == 2);
  CHECK(count("G2") == 1);
  for (int r = 2; r <= 10; ++r) {
    CHECK(catalog(SimpleType::make(Family::B, r)).size() == static_cast<std::size_t>(r));
    if (r >= 3) CHECK(catalog(SimpleType::make(Family::C, r)).size() == static_cast<std::size_t>(r / 2 + 1));
  }
  std::set<std::string> sl4;
  for (const auto& p : catalog(SimpleType::parse("A3"))) sl4.insert(p.g0.to_string());
  CHECK(sl4 == std::set<std::string>{"A1+A1", "B2", "A2+t1", "A1+A1+t1"});
  const auto g2 = catalog(SimpleType::parse("G2"));
  CHECK(g2[0].g0.to_string() == "A1+A1");
  CHECK(g2[0].signature() == 2);
}

TEST_CASE("IBN signature identifies the class") {
  for (SimpleType t : all_simple_types(10)) {
    CAPTURE(t.name());
    std::map<std::pair<bool, long>, int> seen;
    for (const auto& p : catalog(t)) {
      if (!p.satake.has_ibn()) {
        CHECK_THROWS_AS(ibn_signature(p.satake), PreconditionViolation);
        continue;
      }
      CAPTURE(p.descriptor());
      CHECK(ibn_signature(p.satake) == p.signature());
      CHECK(++seen[{p.inner, p.signature()}] == 1);
      const auto found = identify_ibn(t, p.signature(), p.inner ? InnerFilter::Inner : InnerFilter::Outer);
      CHECK(same_class(found, p));
    }
  }
  CHECK_THROWS_AS(identify_ibn(SimpleType::parse("E8"), 3), LookupFailure);
}

TEST_CASE("so pairs with isolated black nodes") {
  CHECK(so_pair_ibn(5, 3));
  CHECK_FALSE(so_pair_ibn(9, 3));
  for (int k = 1; k <= 10; ++k) CHECK(so_pair_ibn(k, k));
  for (int total = 5; total <= 24; ++total) {
    if (total == 6) continue;
    const SimpleType t = SimpleType::make(total % 2 ? Family::B : Family::D, total / 2);
    for (const auto& p : catalog(t)) {
      if (p.shape != PairShape::SoSo) continue;
      CAPTURE(p.descriptor());
      CHECK(so_pair_ibn(p.p, p.q) == p.satake.has_ibn());
    }
  }
}

TEST_CASE("maximal rank and PI involutions") {
  for (SimpleType t : all_simple_types(9)) {
    CAPTURE(t.name());
    const auto m = maximal_rank(t);
    CHECK(m.signature() == t.rank);
    CHECK(m.satake.black.empty());
    CHECK(m.satake.arrows.empty());
    const auto pi = pi_involution(t);
    CHECK(pi.inner);
    CHECK(pi.g0 == root_route_principal(root_system(t)).g0);
    // sl2: both classes have g0 = t1.
    const bool pi_is_max =
        !((t.family == Family::A && t.rank > 1) || (t.family == Family::D && t.rank % 2) || t.name() == "E6");
    CHECK(same_class(pi, m) == pi_is_max);
  }
  CHECK(pi_involution(SimpleType::parse("C4")).g0.to_string() == "A3+t1");
  CHECK(pi_involution(SimpleType::parse("D8")).g0.to_string() == "D4+D4");
  CHECK(pi_involution(SimpleType::parse("E8")).g0.to_string() == "D8");
  CHECK(maximal_rank(SimpleType::parse("E7")).g0.to_string() == "A7");
  CHECK(maximal_rank(SimpleType::parse("F4")).g0.to_string() == "C3+A1");
  CHECK(maximal_rank(SimpleType::parse("A5")).g0.to_string() == "A3");
}

TEST_CASE("orbits meeting g1") {
  const auto e7 = find_pair("E7/D6+A1");
  CHECK_FALSE(orbit_meets_g1(exceptional_lookup(SimpleType::parse("E7"), "E7(a3)").wdd, e7.satake));
  const auto top = max_orbit_meeting_g1(e7.satake);
  for (int i = 0; i < 7; ++i) CHECK((top.labels[static_cast<std::size_t>(i)] == 0) == !e7.satake.is_white(i));
  CHECK(e7.satake.black.size() == 3);
  for (SimpleType t : all_simple_types(6)) {
    const auto m = maximal_rank(t);
    for (const auto& p : catalog(t)) CHECK(orbit_meets_g1(max_orbit_meeting_g1(p.satake), m.satake));
  }
  for (const auto& o : exceptional_orbits())
    if (o.type == SimpleType::parse("E6")) CHECK(orbit_meets_g1(o.wdd, maximal_rank(o.type).satake));
}

TEST_CASE("descriptor lookup") {
  CHECK(find_pair("so10/gl5").g0.to_string() == "A4+t1");
  CHECK(find_pair("D5/gl5").descriptor() == find_pair("so10/gl5").descriptor());
  CHECK(find_pair("E6/C4").inner == false);
  CHECK(find_pair("A5/C3-diagram").shape == PairShape::SlSp);
  CHECK(find_pair("sl6/s(gl3+gl3)").g0.to_string() == "A2+A2+t1");
  CHECK(find_pair("B6/so7+so6").g0.to_string() == "B3+A3");
  CHECK(find_pair("sp8/sp4+sp4").g0.to_string() == "B2+B2");
  CHECK_THROWS_AS(find_pair("E6/G2"), LookupFailure);
  CHECK_THROWS_AS(find_pair("nonsense"), InvalidInput);
  for (SimpleType t : all_simple_types(8))
    for (const auto& p : catalog(t)) CHECK(same_class(find_pair(p.descriptor() + (p.inner ? "" : "-diagram")), p));
}

TEST_CASE("Satake diagram validation") {
  const SimpleType a3 = SimpleType::parse("A3");
  CHECK_THROWS_AS(SatakeDiagram::make(a3, {5}, {}), InvalidInput);
  CHECK_THROWS_AS(SatakeDiagram::make(a3, {1}, {{1, 2}}), InvalidInput);
  CHECK(SatakeDiagram::make(a3, {1}, {{0, 2}}).has_ibn());
  CHECK_FALSE(SatakeDiagram::make(SimpleType::parse("A4"), {1, 2}, {}).has_ibn());
}
