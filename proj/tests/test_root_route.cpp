#include <algorithm>
#include <set>

#include "doctest.h"
#include "nilmix/errors.hpp"
#include "nilmix/mixed_grading.hpp"
#include "nilmix/root_route.hpp"

using namespace nilmix;

namespace {

// Inner pairs reachable by one node: coefficient 1 gives a torus, coefficient 2 a semisimple g0.
std::vector<RootRouteGrading> node_gradings(const RootSystem& rs) {
  std::vector<RootRouteGrading> out;
  const Coeffs& top = rs.highest_root().coeffs;
  for (int i = 0; i < rs.rank(); ++i) {
    const int c = top[static_cast<std::size_t>(i)];
    if (c == 1 || c == 2) out.push_back(root_route_node(rs, i));
  }
  return out;
}

// Very even D orbits come in pairs exchanged by the fork symmetry; D4 also has triality.
bool same_up_to_diagram(const WeightedDynkinDiagram& a, const WeightedDynkinDiagram& b) {
  if (a == b) return true;
  if (a.type.family != Family::D) return false;
  const std::size_t r = b.labels.size();
  std::vector<std::size_t> outer = {r - 2, r - 1};
  if (r == 4) outer = {0, 2, 3};
  std::vector<std::size_t> perm = outer;
  std::sort(perm.begin(), perm.end());
  do {
    std::vector<int> moved = b.labels;
    for (std::size_t k = 0; k < outer.size(); ++k) moved[outer[k]] = b.labels[perm[k]];
    if (moved == a.labels) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace

TEST_CASE("principal grading matches the catalog data") {
  for (SimpleType t : all_simple_types(9)) {
    CAPTURE(t.name());
    const RootRouteGrading rr = root_route_principal(root_system(t));
    const PairDecomposition pd = decompose_regular(pi_involution(t));
    CHECK(rr.grid == grading_grid(pd));
    CHECK(rr.wdd == ambient_wdd(pd));
    CHECK(rr.dim_g0 == pi_involution(t).dim_g0);
    CHECK(rr.dim_g0 + rr.dim_g1 == t.dimension());
    CHECK(static_cast<int>(rr.g0_simple_roots.size()) == rr.g0.rank() - rr.g0.center_dim());
  }
}

TEST_CASE("node gradings match the module data of every inner pair they reach") {
  int matched = 0;
  for (SimpleType t : all_simple_types(8)) {
    CAPTURE(t.name());
    const auto pairs = catalog(t);
    for (const auto& rr : node_gradings(root_system(t))) {
      CAPTURE(rr.g0.to_string());
      const SymmetricPair* hit = nullptr;
      for (const auto& p : pairs)
        if (p.inner && p.g0 == rr.g0) hit = &p;
      REQUIRE(hit);
      const PairDecomposition pd = decompose_regular(*hit);
      CHECK(rr.grid == grading_grid(pd));
      CHECK(same_up_to_diagram(rr.wdd, ambient_wdd(pd)));
      ++matched;
    }
  }
  CHECK(matched > 40);
}

TEST_CASE("every inner exceptional pair is reached") {
  for (const char* name : {"E6", "E7", "E8", "F4", "G2"}) {
    const SimpleType t = SimpleType::parse(name);
    std::set<std::string> reached;
    for (const auto& rr : node_gradings(root_system(t))) reached.insert(rr.g0.to_string());
    for (const auto& p : catalog(t))
      if (p.inner) CHECK(reached.count(p.g0.to_string()) == 1);
  }
}

TEST_CASE("subsystem classification") {
  const RootSystem& e8 = root_system(SimpleType::parse("E8"));
  CHECK(root_route_principal(e8).g0.to_string() == "D8");
  CHECK(root_route_principal(root_system(SimpleType::parse("G2"))).g0.to_string() == "A1+A1");
  CHECK(root_route_principal(root_system(SimpleType::parse("F4"))).g0.to_string() == "C3+A1");
  CHECK(root_route_principal(root_system(SimpleType::parse("E6"))).g0.to_string() == "A5+A1");
  CHECK(root_route_principal(root_system(SimpleType::parse("E7"))).g0.to_string() == "A7");
}
