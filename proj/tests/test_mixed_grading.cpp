#include <fmt/format.h>

#include "doctest.h"
#include "nilmix/errors.hpp"
#include "nilmix/mixed_grading.hpp"
#include "nilmix/verification.hpp"

using namespace nilmix;

namespace {

MixedGrading regular_grid(std::string_view pair) { return grading_grid(decompose_regular(find_pair(pair))); }

}  // namespace

TEST_CASE("grid rows add up to the pair") {
  for (const auto& p : sweep_pairs(8)) {
    CAPTURE(p.descriptor());
    const PairDecomposition pd = decompose_regular(p);
    const MixedGrading g = grading_grid(pd);
    CHECK(g.row_total(0) == p.dim_g0);
    CHECK(g.row_total(1) == p.dim_g1);
    CHECK(pd.m0.dimension() == p.dim_g0);
    CHECK(pd.m1.dimension() == p.dim_g1);
    CHECK(module_from_row(g, 0) == pd.m0);
    CHECK(module_from_row(g, 1) == pd.m1);
    for (int j = 0; j < 2; ++j)
      for (auto [i, d] : g.row(j)) CHECK(g.d(j, -i) == d);
    CHECK(pd.m0.multiplicity(0) == p.g0.center_dim());
  }
}

TEST_CASE("regular partitions") {
  CHECK(regular_e_partition(find_pair("so10/gl5")) == Partition({5, 5}));
  CHECK(regular_e_partition(find_pair("sp8/sp4+sp4")) == Partition({4, 4}));
  CHECK(regular_e_partition(find_pair("sl7/s(gl3+gl4)")) == Partition({4, 3}));
  CHECK(regular_e_partition(find_pair("B4/so5+so4")) == Partition({5, 3, 1}));
  CHECK(regular_e_partition(find_pair("sp6/sp4+sp2")) == Partition({4, 2}));
}

TEST_CASE("functorial decompositions") {
  const auto gl5 = find_pair("so10/gl5");
  const auto w = SL2Module::irreducible(4);
  const auto pd = decompose_classical(gl5, {w});
  CHECK(pd.m0 == tensor(w, w));
  CHECK(pd.m1 == alt2(w).scaled(2));
  const auto so4 = find_pair("sl4/so4");
  const auto v = SL2Module::parse("2*R1");
  const auto pd4 = decompose_classical(so4, {v});
  CHECK(pd4.m0.to_string() == "3*R0+R2");
  CHECK(pd4.m0.dimension() == 6);
  CHECK_THROWS_AS(decompose_classical(so4, {SL2Module::parse("R2")}), InvalidInput);
  CHECK_THROWS_AS(decompose_classical(so4, {v, v}), InvalidInput);
  const auto e6 = decompose_exceptional(find_pair("E6/C4"));
  CHECK(e6.m0.to_string() == "R2+R6+R10+R14");
  CHECK(e6.m1.to_string() == "R4+R8+R10+R16");
  CHECK(decompose_exceptional(find_pair("E7/A7")).m1.to_string() == "R0+2*R4+2*R8+R10+R12+R16");
  CHECK(decompose_exceptional(find_pair("E8/D8")).m0.to_string() == "R2+R6+R10+2*R14+R18+R22+R26");
}

TEST_CASE("grid predicates") {
  const MixedGrading e6 = regular_grid("E6/C4");
  CHECK(e6.d(0, 0) == 4);
  CHECK(check_02(e6));
  CHECK(check_04(e6));
  CHECK(check_4k2(e6));
  for (int n = 3; n <= 6; ++n) {
    const MixedGrading d = regular_grid(fmt::format("so{}/so{}+so1", 2 * n, 2 * n - 1));
    CHECK(d.d(0, 0) == n - 1);
    CHECK(d.d(1, 0) == 1);
    CHECK(d.d(1, 2) == 1);
    CHECK(d.max_degree(0) == 4 * n - 6);
    CHECK(d.max_degree(1) == 2 * n - 2);
    CHECK_FALSE(check_02(d));
    CHECK_FALSE(check_04(d));
    const MixedGrading b = regular_grid(fmt::format("so{}/so{}+so1", 2 * n + 1, 2 * n));
    CHECK_FALSE(check_02(b));
    CHECK_FALSE(check_04(b));
  }
  const MixedGrading b6 = regular_grid("B6/so7+so6");
  CHECK(failing_4k2(b6) == std::vector<int>{-2, 1});
  CHECK(cross_fixed_dim(b6) - fixed_dim(b6) == 2);
}

TEST_CASE("closed form for the sl/so family") {
  CHECK(d00_closed_form({2, 0}) == 3);
  CHECK_THROWS_AS(d00_closed_form({2, 1}), InvalidInput);
  for (int a = 0; a <= 3; ++a)
    for (int b = a + 2; b <= 7; ++b)
      for (int c = b + 2; c <= 9; ++c) {
        const int n = 2 * (a + b + c) + 3;
        SymmetricPair p;
        for (auto& q : catalog(SimpleType::make(Family::A, n - 1)))
          if (q.shape == PairShape::SlSo) p = q;
        const auto v = SL2Module::irreducible(2 * c) + SL2Module::irreducible(2 * b) + SL2Module::irreducible(2 * a);
        const MixedGrading g = grading_grid(decompose_classical(p, {v}));
        CHECK(g.d(0, 0) == d00_closed_form({c, b, a}));
        CHECK(check_04(g));
      }
}

TEST_CASE("consequences of d0(0) = d1(4)") {
  const auto pd = decompose_regular(find_pair("E6/C4"));
  const auto rep = check04_report(grading_grid(pd), pd);
  CHECK(rep.passed());
  CHECK(rep.divisible);
  CHECK(rep.g0_semisimple);
  const auto so = decompose_regular(find_pair("sl6/so6"));
  const auto so_rep = check04_report(grading_grid(so), so);
  CHECK(so_rep.passed());
  CHECK(so_rep.half_orbit == "(3,2,1)");
  const auto b = decompose_regular(find_pair("B6/so7+so6"));
  CHECK_THROWS_AS(check04_report(grading_grid(b), b), PreconditionViolation);
}

TEST_CASE("Upsilon preconditions and examples") {
  CHECK_THROWS_AS(upsilon(decompose_regular(find_pair("A4/s(gl2+gl3)"))), PreconditionViolation);
  CHECK_THROWS_AS(upsilon(decompose_regular(maximal_rank(SimpleType::parse("A1")))), PreconditionViolation);
  const auto e7 = upsilon(decompose_regular(find_pair("E7/A7")));
  CHECK(e7.sigma_check.g0.to_string() == "D6+A1");
  CHECK(same_class(e7.sigma_sigma_check, find_pair("E7/A7")));
  const auto d6 = upsilon(decompose_regular(find_pair("D6/gl6")));
  CHECK(same_class(d6.sigma_check, find_pair("D6/gl6")));
  CHECK(d6.sigma_sigma_check.g0.to_string() == "A3+A3");
  const auto a5 = upsilon(decompose_regular(find_pair("A5/C3-diagram")));
  CHECK(a5.sigma_check.g0.to_string() == "A2+A2+t1");
  CHECK(a5.sigma_sigma_check.g0.to_string() == "A3");
  const auto d5 = upsilon(decompose_regular(find_pair("D5/gl5")));
  CHECK(d5.diff_check == -3);
  CHECK(d5.diff_cross == 5);
}

TEST_CASE("collapsing defect") {
  CHECK(collapsing_defect(SimpleType::parse("E6")) == 0);
  CHECK(collapsing_defect(SimpleType::parse("E7")) == 1);
  CHECK(collapsing_defect(SimpleType::parse("D6")) == 2);
  CHECK(collapsing_defect(SimpleType::parse("A4")) == 0);
}
