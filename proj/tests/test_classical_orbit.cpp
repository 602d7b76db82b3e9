#include "doctest.h"
#include "nilmix/classical_orbit.hpp"
#include "nilmix/errors.hpp"
#include "nilmix/mixed_grading.hpp"
#include "nilmix/sl2_module.hpp"

using namespace nilmix;

namespace {

// ad h on g as an sl2-module, built from the natural module.
SL2Module adjoint_module(const ClassicalOrbit& o) {
  const SL2Module v = module_of_partition(o.lambda);
  switch (o.ambient) {
    case Ambient::SL: return tensor(v, v).minus(SL2Module::irreducible(0));
    case Ambient::SO: return alt2(v);
    case Ambient::SP: return sym2(v);
  }
  return {};
}

std::vector<ClassicalOrbit> sample_orbits(int max_n) {
  std::vector<ClassicalOrbit> out;
  for (int n = 2; n <= max_n; ++n) {
    for (auto& o : orbits_of(Ambient::SL, n)) out.push_back(o);
    if (n >= 5 && n != 6)
      for (auto& o : orbits_of(Ambient::SO, n)) out.push_back(o);
    if (n % 2 == 0 && n >= 4)
      for (auto& o : orbits_of(Ambient::SP, n)) out.push_back(o);
  }
  return out;
}

}  // namespace

TEST_CASE("partition parsing and counts") {
  CHECK(Partition::parse("(5,3,1)").parts() == std::vector<int>{5, 3, 1});
  CHECK(Partition::parse("1,3,5").to_string() == "(5,3,1)");
  CHECK(Partition::parse("(3^2,1)").parts() == std::vector<int>{3, 3, 1});
  CHECK(Partition::parse("[4 4]").total() == 8);
  CHECK_THROWS_AS(Partition::parse("(3,0)"), InvalidInput);
  CHECK_THROWS_AS(Partition::parse("(a)"), InvalidInput);
  const std::size_t p[] = {1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77};
  for (int n = 1; n <= 12; ++n) CHECK(partitions_of(n).size() == p[n - 1]);
  CHECK(Partition::parse("(4,2,1)").dual().parts() == std::vector<int>{3, 2, 1, 1});
}

TEST_CASE("orbit validity") {
  CHECK(ClassicalOrbit::is_valid(Ambient::SO, Partition({5, 3, 1})));
  CHECK(ClassicalOrbit::is_valid(Ambient::SO, Partition({2, 2, 1})));
  CHECK_FALSE(ClassicalOrbit::is_valid(Ambient::SO, Partition({2, 1, 1, 1})));
  CHECK(ClassicalOrbit::is_valid(Ambient::SP, Partition({2, 2})));
  CHECK_FALSE(ClassicalOrbit::is_valid(Ambient::SP, Partition({3, 1})));
  CHECK_THROWS_AS(ClassicalOrbit::make(Ambient::SP, Partition({3, 1})), InvalidInput);
}

TEST_CASE("WDD reproduces the h-spectrum of the adjoint module") {
  for (const auto& o : sample_orbits(10)) {
    CAPTURE(o.ambient_name());
    CAPTURE(o.lambda.to_string());
    const auto t = ambient_simple_type(o.ambient, o.n());
    REQUIRE(t);
    const WeightedDynkinDiagram w = wdd_from_partition(o);
    const SL2Module ad = adjoint_module(o);
    const auto dist = eigenvalue_distribution(*t, w.labels);
    long long total = 0;
    for (auto [i, d] : dist) {
      CHECK(d == eigen_dim(ad, i));
      total += d;
    }
    CHECK(total == ad.dimension());
    const CentralizerDims c = centralizer_dims(o);
    CHECK(c == centralizer_dims_from_wdd(w));
    CHECK(c.total == eigen_dim(ad, 0) + eigen_dim(ad, 1));
    CHECK(c.red == reductive_type(o).dimension());
    CHECK(is_even(o) == w.is_even());
  }
}

TEST_CASE("WDD examples") {
  CHECK(wdd_from_partition(ClassicalOrbit::make(Ambient::SP, Partition({4, 4}))).labels == std::vector<int>{0, 2, 0, 2});
  CHECK(wdd_from_partition(ClassicalOrbit::make(Ambient::SO, Partition({5, 5, 1, 1}))).labels ==
        std::vector<int>{0, 2, 0, 2, 0, 0});
  for (int n = 1; n <= 5; ++n)
    CHECK(wdd_from_partition(ClassicalOrbit::make(Ambient::SL, Partition({n + 1, n}))).labels ==
          std::vector<int>(static_cast<std::size_t>(2 * n), 1));
  CHECK(is_even(ClassicalOrbit::make(Ambient::SO, Partition({5, 3, 1}))));
  for (int n = 2; n <= 5; ++n)
    for (int k = 2; k < 2 * n + 1 - k; k += 2)
      CHECK_FALSE(is_even(ClassicalOrbit::make(Ambient::SL, Partition({2 * n + 1 - k, k}))));
}

TEST_CASE("centraliser examples") {
  CHECK(centralizer_dims(ClassicalOrbit::make(Ambient::SO, Partition({5, 3, 1}))) == CentralizerDims{8, 0, 8});
  CHECK(centralizer_dims(ClassicalOrbit::make(Ambient::SL, Partition({2, 2}))) == CentralizerDims{7, 3, 4});
  CHECK(reductive_type(ClassicalOrbit::make(Ambient::SL, Partition({2, 2}))).to_string() == "A1");
  CHECK(centralizer_dims(ClassicalOrbit::make(Ambient::SO, Partition({3, 3, 1}))).total == 7);
  CHECK(is_distinguished(ClassicalOrbit::make(Ambient::SO, Partition({7, 3, 1}))));
  const auto sp33 = ClassicalOrbit::make(Ambient::SP, Partition({3, 3}));
  CHECK(reductive_type(sp33).to_string() == "A1");
  CHECK_FALSE(is_almost_distinguished(sp33));
  const auto so12 = ClassicalOrbit::make(Ambient::SO, Partition({5, 5, 1, 1}));
  CHECK(reductive_type(so12).to_string() == "t2");
  CHECK(is_almost_distinguished(so12));
}

TEST_CASE("divisibility and half orbits") {
  CHECK(is_divisible(ClassicalOrbit::make(Ambient::SL, Partition({5, 1}))));
  CHECK(is_divisible(ClassicalOrbit::make(Ambient::SO, Partition({7, 7}))));
  CHECK(half_orbit(ClassicalOrbit::make(Ambient::SL, Partition({5, 1}))).lambda == Partition({3, 2, 1}));
  CHECK(half_orbit(ClassicalOrbit::make(Ambient::SO, Partition({7, 7}))).lambda == Partition({4, 4, 3, 3}));
  CHECK(half_orbit(ClassicalOrbit::make(Ambient::SO, Partition({5, 3}))).lambda == Partition({3, 2, 2, 1}));
  CHECK_THROWS_AS(half_orbit(ClassicalOrbit::make(Ambient::SL, Partition({4, 2}))), PreconditionViolation);
  CHECK_THROWS_AS(half_orbit(ClassicalOrbit::make(Ambient::SP, Partition({3, 3}))), Unsupported);
  // The half orbit carries half the labels of e.
  for (const auto& o : sample_orbits(12)) {
    if (o.ambient == Ambient::SP || !is_divisible(o)) continue;
    CAPTURE(o.lambda.to_string());
    std::vector<int> half = wdd_from_partition(o).labels;
    for (int& x : half) x /= 2;
    CHECK(wdd_from_partition(half_orbit(o)).labels == half);
  }
}
