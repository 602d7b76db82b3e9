#include <map>

#include "doctest.h"
#include "nilmix/errors.hpp"
#include "nilmix/sl2_module.hpp"

using namespace nilmix;

namespace {

using Character = std::map<int, long long>;

Character character(const SL2Module& m) {
  Character c;
  for (auto [k, mult] : m.terms())
    for (int w = -k; w <= k; w += 2) c[w] += mult;
  return c;
}

Character times(const Character& a, const Character& b) {
  Character c;
  for (auto [x, m] : a)
    for (auto [y, n] : b) c[x + y] += m * n;
  return c;
}

Character doubled(const Character& a) {
  Character c;
  for (auto [x, m] : a) c[2 * x] += m;
  return c;
}

Character half_combination(const Character& sq, const Character& d, int sign) {
  Character c;
  for (auto [x, m] : sq) c[x] += m;
  for (auto [x, m] : d) c[x] += sign * m;
  Character out;
  for (auto [x, m] : c)
    if (m) out[x] = m / 2;
  return out;
}

Character strip(Character c) {
  std::erase_if(c, [](const auto& kv) { return kv.second == 0; });
  return c;
}

const SL2Module samples[] = {SL2Module::parse("R0"),         SL2Module::parse("R1"),
                             SL2Module::parse("R4+R2"),      SL2Module::parse("2*R3+R1"),
                             SL2Module::parse("R2+R6+R10"),  SL2Module::parse("R5+R5+R0")};

}  // namespace

TEST_CASE("parse and print") {
  CHECK(SL2Module::parse("R2+R6+2*R10").to_string() == "R2+R6+2*R10");
  CHECK(SL2Module::parse("R6+R2").to_string() == "R2+R6");
  CHECK(SL2Module::parse("0").empty());
  CHECK(SL2Module::parse("").empty());
  CHECK_THROWS_AS(SL2Module::parse("R-1"), InvalidInput);
  CHECK_THROWS_AS(SL2Module::parse("Q2"), InvalidInput);
  const auto m = SL2Module::parse("R2+2*R4");
  CHECK(m.dimension() == 13);
  CHECK(m.length() == 3);
  CHECK(m.max_weight() == 4);
}

TEST_CASE("Clebsch-Gordan") {
  CHECK(tensor(SL2Module::parse("R4"), SL2Module::parse("R2")).to_string() == "R2+R4+R6");
  CHECK(sym2(SL2Module::parse("R2")).to_string() == "R0+R4");
  CHECK(alt2(SL2Module::parse("R4+R2")).to_string() == "3*R2+R4+2*R6");
}

TEST_CASE("tensor, sym2 and alt2 match Laurent characters") {
  for (const auto& a : samples) {
    for (const auto& b : samples) CHECK(character(tensor(a, b)) == strip(times(character(a), character(b))));
    const Character sq = times(character(a), character(a));
    const Character d = doubled(character(a));
    CHECK(character(sym2(a)) == strip(half_combination(sq, d, 1)));
    CHECK(character(alt2(a)) == strip(half_combination(sq, d, -1)));
  }
}

TEST_CASE("eigenspace dimensions") {
  const auto m = SL2Module::parse("R2+R6+R10+R14");
  CHECK(eigen_dim(m, 0) == 4);
  CHECK(eigen_dim(m, 4) == 3);
  CHECK(eigen_dim(m, 14) == 1);
  CHECK(eigen_dim(m, 16) == 0);
  CHECK(eigen_dim(m, 1) == 0);
  for (const auto& s : samples) {
    long long total = 0;
    for (auto [w, mult] : character(s)) {
      CHECK(eigen_dim(s, w) == mult);
      total += mult;
    }
    CHECK(total == s.dimension());
  }
}

TEST_CASE("signed counts") {
  CHECK(signed_count(SL2Module::parse("R2+R6+R10+R14"), SignRule::EvenPlus) == -4);
  CHECK(signed_count(SL2Module::parse("R4+R8+R10+R16"), SignRule::OddFlip) == -2);
  CHECK(signed_count(SL2Module::parse("R0+R4"), SignRule::EvenPlus) == 2);
  CHECK_THROWS_AS(signed_count(SL2Module::parse("R1"), SignRule::EvenPlus), PreconditionViolation);
}

TEST_CASE("submodule removal") {
  const auto m = SL2Module::parse("R2+2*R4");
  CHECK(m.minus(SL2Module::parse("R4")).to_string() == "R2+R4");
  CHECK_THROWS_AS(m.minus(SL2Module::parse("R6")), PreconditionViolation);
  CHECK(SL2Module::parse("R1+R3").all_odd());
  CHECK_FALSE(SL2Module::parse("R1+R2").all_even());
}
