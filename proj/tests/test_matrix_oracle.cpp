#include <Eigen/Dense>
#include <algorithm>
#include <random>

#include "doctest.h"
#include "nilmix/classical_orbit.hpp"
#include "nilmix/errors.hpp"
#include "nilmix/exact_rank.hpp"
#include "nilmix/matrix_oracle.hpp"
#include "nilmix/mixed_grading.hpp"

using namespace nilmix;

TEST_CASE("exact rank agrees with Eigen on small matrices") {
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> entry(-3, 3);
  std::uniform_int_distribution<int> size(1, 7);
  for (int trial = 0; trial < 300; ++trial) {
    const int r = size(rng), c = size(rng), k = size(rng);
    // Product of r x k and k x c factors, so the rank is often deficient.
    Eigen::MatrixXd a(r, k), b(k, c);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < k; ++j) a(i, j) = entry(rng);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < c; ++j) b(i, j) = entry(rng);
    const Eigen::MatrixXd m = a * b;
    IntMatrix x(r, c);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j) x(i, j) = static_cast<long long>(m(i, j));
    Eigen::FullPivLU<Eigen::MatrixXd> lu(m);
    CHECK(exact_rank(x) == lu.rank());
  }
}

TEST_CASE("exact rank survives large entries") {
  const long long big = 3'000'000'000'000'019LL;
  std::vector<std::vector<long long>> rows;
  for (int i = 0; i < 6; ++i) {
    std::vector<long long> row(6);
    for (int j = 0; j < 6; ++j) row[static_cast<std::size_t>(j)] = (i + 1) * big + (j * j + i) * (big / 7);
    rows.push_back(row);
  }
  // Second-order minors already exceed 128 bits.
  const int full = exact_rank(rows);
  rows.push_back(rows[0]);
  for (std::size_t j = 0; j < 6; ++j) rows.back()[j] = rows[0][j] * 5 - rows[3][j] * 2;
  CHECK(exact_rank(rows) == full);
  CHECK(full == 2);
  CHECK(exact_rank(std::vector<std::vector<long long>>{}) == 0);
  CHECK(exact_rank(IntMatrix::identity(9)) == 9);
}

TEST_CASE("natural triples") {
  for (int n = 1; n <= 8; ++n)
    for (Ambient a : {Ambient::SL, Ambient::SO, Ambient::SP})
      for (const auto& o : orbits_of(a, n)) {
        CAPTURE(o.ambient_name());
        CAPTURE(o.lambda.to_string());
        const FormedTriple ft = natural_triple(a, o.lambda);
        CHECK(triple_relations_hold(ft.triple));
        CHECK(preserves_form(ft.triple.e, ft.gram));
        CHECK(preserves_form(ft.triple.h, ft.gram));
        CHECK(preserves_form(ft.triple.f, ft.gram));
        if (n >= 2) CHECK(static_cast<long>(lie_basis(ft).elements.size()) == ambient_dimension(a, n));
        std::vector<int> diag;
        for (int i = 0; i < n; ++i) diag.push_back(static_cast<int>(ft.triple.h(i, i)));
        std::sort(diag.rbegin(), diag.rend());
        CHECK(diag == characteristic_values(o.lambda));
      }
  CHECK_THROWS_AS(natural_triple(Ambient::SP, Partition({3})), InvalidInput);
}

TEST_CASE("centraliser dimensions by rank") {
  CHECK(oracle_centralizer_dim(Ambient::SO, Partition({3, 3, 1})) == 7);
  CHECK(oracle_centralizer_dim(Ambient::SO, Partition({5, 3, 1})) == 8);
  CHECK(oracle_centralizer_dim(Ambient::SL, Partition({2, 2})) == 7);
  CHECK(oracle_centralizer_dim(Ambient::SP, Partition({4, 4})) == 8);
  CHECK(oracle_ker_ad_squared(Ambient::SL, Partition({5, 1})) ==
        centralizer_dims(ClassicalOrbit::make(Ambient::SL, Partition({3, 2, 1}))).total);
}

TEST_CASE("involution realisations") {
  for (const auto& name : {"sl5/so5", "sl6/sp6", "sl7/s(gl3+gl4)", "so9/so5+so4", "so10/gl5", "sp8/sp4+sp4",
                           "sp8/gl4", "so12/so6+so6", "so8/so5+so3"}) {
    CAPTURE(name);
    const SymmetricPair p = find_pair(name);
    const InvolutionRealization ir = realize(p, regular_factor_partitions(p));
    const WeightBasis basis = lie_basis(ir.natural);
    // The fixed space is spanned by X + sigma(X).
    std::vector<std::vector<long long>> plus;
    for (const auto& x : basis.elements) {
      const IntMatrix y = ir.apply(x);
      CHECK(ir.apply(y) == x);
      CHECK(preserves_form(y, ir.natural.gram));
      plus.push_back((x + y).data());
    }
    CHECK(exact_rank(plus) == p.dim_g0);
    CHECK(ir.apply(ir.natural.triple.e) == ir.natural.triple.e);
    CHECK(ir.apply(ir.natural.triple.h) == ir.natural.triple.h);
  }
}

TEST_CASE("oracle grids") {
  const MixedGrading sl6 = oracle_grid(find_pair("sl6/so6"));
  CHECK(sl6.d(0, 0) == 3);
  CHECK(sl6.d(1, 4) == 3);
  const MixedGrading sl3 = oracle_grid(find_pair("sl3/so3"));
  CHECK(sl3.d(0, 0) == 1);
  CHECK(sl3.d(0, 2) == 1);
  CHECK(sl3.d(0, 4) == 0);
  CHECK(sl3.d(1, 0) == 1);
  CHECK(sl3.d(1, 2) == 1);
  CHECK(sl3.d(1, 4) == 1);
  const SymmetricPair gl5 = find_pair("so10/gl5");
  CHECK(oracle_grid(gl5) == grading_grid(decompose_classical(gl5)));
  const SymmetricPair sp = find_pair("sp8/sp4+sp4");
  const Partition a({2, 2}), b({4});
  CHECK(oracle_grid(sp, {a, b}) == grading_grid(decompose_classical(sp, {module_of_partition(a), module_of_partition(b)})));
}

TEST_CASE("symplectic half orbits") {
  CHECK_THROWS_AS(sp_half_orbit(Partition({4, 2})), PreconditionViolation);
  for (int n = 2; n <= 10; n += 2)
    for (const auto& o : orbits_of(Ambient::SP, n)) {
      if (!is_divisible(o)) continue;
      CAPTURE(o.lambda.to_string());
      const Partition half = sp_half_orbit(o.lambda);
      CHECK(half.total() == n);
      CHECK(ClassicalOrbit::is_valid(Ambient::SP, half));
      CHECK(oracle_ker_ad_squared(Ambient::SP, o.lambda) == oracle_centralizer_dim(Ambient::SP, half));
    }
}
