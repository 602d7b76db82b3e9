#include <set>

#include "doctest.h"
#include "nilmix/errors.hpp"
#include "nilmix/root_system.hpp"

using namespace nilmix;

namespace {

// Closure of the simple roots under simple reflections.
std::set<Coeffs> weyl_closure(const RootSystem& rs) {
  const int r = rs.rank();
  std::set<Coeffs> roots;
  std::vector<Coeffs> todo;
  for (int i = 0; i < r; ++i) {
    Coeffs c(static_cast<std::size_t>(r), 0);
    c[static_cast<std::size_t>(i)] = 1;
    roots.insert(c);
    todo.push_back(c);
  }
  while (!todo.empty()) {
    const Coeffs b = todo.back();
    todo.pop_back();
    for (int i = 0; i < r; ++i) {
      int pair = 0;
      for (int j = 0; j < r; ++j) pair += b[static_cast<std::size_t>(j)] * rs.cartan(j, i);
      Coeffs c = b;
      c[static_cast<std::size_t>(i)] -= pair;
      if (roots.insert(c).second) todo.push_back(c);
    }
  }
  std::set<Coeffs> positive;
  for (const auto& c : roots)
    if (c > Coeffs(c.size(), 0) && *std::min_element(c.begin(), c.end()) >= 0) positive.insert(c);
  return positive;
}

int brute_kappa(const RootSystem& rs) {
  const int r = rs.rank();
  int best = 0;
  for (unsigned mask = 0; mask < (1u << r); ++mask) {
    bool ok = true;
    for (int i = 0; i < r && ok; ++i)
      for (int j = i + 1; j < r && ok; ++j)
        if ((mask >> i & 1u) && (mask >> j & 1u) && rs.adjacent(i, j)) ok = false;
    if (ok) best = std::max(best, __builtin_popcount(mask));
  }
  return best;
}

long positive_count(SimpleType t) {
  const long r = t.rank;
  switch (t.family) {
    case Family::A: return r * (r + 1) / 2;
    case Family::B:
    case Family::C: return r * r;
    case Family::D: return r * (r - 1);
    case Family::E: return r == 6 ? 36 : r == 7 ? 63 : 120;
    case Family::F: return 24;
    case Family::G: return 6;
  }
  return 0;
}

int coxeter(SimpleType t) {
  const int r = t.rank;
  switch (t.family) {
    case Family::A: return r + 1;
    case Family::B:
    case Family::C: return 2 * r;
    case Family::D: return 2 * r - 2;
    case Family::E: return r == 6 ? 12 : r == 7 ? 18 : 30;
    case Family::F: return 12;
    case Family::G: return 6;
  }
  return 0;
}

}  // namespace

TEST_CASE("type validation and parsing") {
  CHECK_THROWS_AS(SimpleType::make(Family::D, 3), InvalidInput);
  CHECK_THROWS_AS(SimpleType::make(Family::B, 1), InvalidInput);
  CHECK_THROWS_AS(SimpleType::make(Family::E, 5), InvalidInput);
  CHECK_THROWS_AS(SimpleType::parse("X4"), InvalidInput);
  CHECK(SimpleType::parse("e7") == SimpleType::make(Family::E, 7));
  CHECK(SimpleType::parse("D8").name() == "D8");
}

TEST_CASE("positive roots agree with the Weyl closure") {
  for (SimpleType t : all_simple_types(8)) {
    CAPTURE(t.name());
    const RootSystem& rs = root_system(t);
    std::set<Coeffs> lib;
    for (const auto& r : rs.positive_roots()) lib.insert(r.coeffs);
    CHECK(lib == weyl_closure(rs));
    CHECK(static_cast<long>(rs.positive_roots().size()) == positive_count(t));
    CHECK(rs.dimension() == t.dimension());
    CHECK(coxeter_number(rs) == coxeter(t));
  }
}

TEST_CASE("G2 highest root") {
  const RootSystem& rs = root_system(SimpleType::parse("G2"));
  CHECK(rs.highest_root().coeffs == Coeffs{3, 2});
  CHECK_FALSE(rs.is_long(0));
  CHECK(rs.is_long(1));
  CHECK(principal_layer(rs, 5).size() == 1);
  CHECK(principal_layer(rs, 5)[0].coeffs == Coeffs{3, 2});
}

TEST_CASE("E8 has 120 positive roots") { CHECK(root_system(SimpleType::parse("E8")).positive_roots().size() == 120); }

TEST_CASE("Coxeter number is odd only for A even") {
  for (SimpleType t : all_simple_types(10))
    CHECK((coxeter_number(root_system(t)) % 2 == 1) == (t.family == Family::A && t.rank % 2 == 0));
}

TEST_CASE("kappa: closed form, height count and independent sets") {
  for (SimpleType t : all_simple_types(12)) {
    CAPTURE(t.name());
    const RootSystem& rs = root_system(t);
    CHECK(kappa_direct(t) == brute_kappa(rs));
    CHECK(kappa_root_count(rs) == kappa_direct(t));
  }
  CHECK(kappa_direct(SimpleType::parse("A5")) == 3);
  CHECK(kappa_direct(SimpleType::parse("D8")) == 5);
  CHECK(kappa_direct(SimpleType::parse("G2")) == 1);
}

TEST_CASE("layer of height 2 has rank - 1 roots") {
  for (SimpleType t : all_simple_types(9)) {
    const RootSystem& rs = root_system(t);
    CHECK(static_cast<int>(principal_layer(rs, 2).size()) == rs.rank() - 1);
    CHECK(principal_layer(rs, -2).size() == principal_layer(rs, 2).size());
    CHECK(principal_layer(rs, 0).empty());
  }
}

TEST_CASE("beta root") {
  CHECK(beta_root(root_system(SimpleType::parse("B4"))).coeffs == Coeffs{0, 1, 1, 2});
  CHECK(beta_root(root_system(SimpleType::parse("G2"))).coeffs == Coeffs{3, 1});
  const RootSystem& e6 = root_system(SimpleType::parse("E6"));
  const Root b = beta_root(e6);
  CHECK(b.height() == 4);
  CHECK(b.coeffs[static_cast<std::size_t>(beta_centre_node(e6))] == 1);
  for (int n : e6.neighbours(beta_centre_node(e6))) CHECK(b.coeffs[static_cast<std::size_t>(n)] == 1);
  CHECK_THROWS_AS(beta_root(root_system(SimpleType::parse("A4"))), PreconditionViolation);
  CHECK_THROWS_AS(beta_root(root_system(SimpleType::parse("C3"))), PreconditionViolation);
  for (const char* t : {"B3", "D5", "E7", "E8", "F4"}) {
    const RootSystem& rs = root_system(SimpleType::parse(t));
    CHECK(rs.is_root(beta_root(rs).coeffs));
    CHECK(beta_root(rs).height() == 4);
  }
}
