#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nilmix/classical_orbit.hpp"
#include "nilmix/grid.hpp"
#include "nilmix/involution.hpp"
#include "nilmix/sl2_module.hpp"
#include "nilmix/wdd.hpp"

namespace nilmix {

/// sl2-decomposition of g0 and g1 under a triple with e in g0.
struct PairDecomposition {
  SymmetricPair pair;
  /// Jordan type of e in each classical g0 factor, in the order the factors are named.
  std::vector<Partition> factor_partitions;
  /// Jordan type of e on the natural module (classical pairs).
  std::optional<Partition> ambient_partition;
  /// Orbit label (exceptional pairs).
  std::string orbit_label;
  SL2Module m0;
  SL2Module m1;
};

/// Jordan type of an element regular in g0, on the natural module of g.
Partition regular_e_partition(const SymmetricPair& pair);
/// Jordan types of a regular element in each g0 factor.
std::vector<Partition> regular_factor_partitions(const SymmetricPair& pair);
/// R_{k-1} for every part k.
SL2Module module_of_partition(const Partition& lambda);

/// V holds one module per factor: one for SlSo, SlSp, SoGl, SpGl, two for the other shapes.
PairDecomposition decompose_classical(const SymmetricPair& pair, const std::vector<SL2Module>& v);
PairDecomposition decompose_classical(const SymmetricPair& pair);
/// An empty label selects the orbit of an element regular in g0.
PairDecomposition decompose_exceptional(const SymmetricPair& pair, std::string_view orbit_label = {});
/// e regular in g0, classical or exceptional.
PairDecomposition decompose_regular(const SymmetricPair& pair);

MixedGrading grading_grid(const PairDecomposition& pd);

/// Weighted Dynkin diagram of e in g, in the numbering of pd.pair.g.
WeightedDynkinDiagram ambient_wdd(const PairDecomposition& pd);
CentralizerDims ambient_centralizer(const PairDecomposition& pd);

bool check_02(const MixedGrading& mg);
bool check_04(const MixedGrading& mg);
bool check_4k2(const MixedGrading& mg);
/// All k with d0(4k+2) != d1(4k+2), ascending.
std::vector<int> failing_4k2(const MixedGrading& mg);

/// Consequences of d0(0) = d1(2): |m0 - m1| <= 2 and d0(0) <= d1(0).
bool check02_consequences(const MixedGrading& mg);

/// dim g^sigma and dim g^{sigma sigma-check} read from the grid.
long fixed_dim(const MixedGrading& mg);
long cross_fixed_dim(const MixedGrading& mg);

struct UpsilonReport {
  SymmetricPair sigma;
  /// dim g_{0} - dim g_{1} for the grading by eigenvalues mod 4.
  long diff_check = 0;
  /// dim g^{sigma sigma-check} - dim of its (-1)-eigenspace.
  long diff_cross = 0;
  SymmetricPair sigma_check;
  SymmetricPair sigma_sigma_check;
  WeightedDynkinDiagram e_wdd;
};

/// Requires e even in g. Identifies sigma-check among inner IBN classes and sigma sigma-check among
/// IBN classes in the component of sigma.
UpsilonReport upsilon(const PairDecomposition& pd);

struct Check04Report {
  bool grid_identities = false;
  bool divisible = false;
  bool no_r2_in_m1 = false;
  bool g0_semisimple = false;
  bool e_almost_distinguished = false;
  bool half_almost_distinguished = false;
  /// Half orbit, when it has a closed form.
  std::string half_orbit;
  std::vector<std::string> violations;

  bool passed() const { return violations.empty(); }
};

/// Throws PreconditionViolation unless check_04 holds.
Check04Report check04_report(const MixedGrading& mg, const PairDecomposition& pd);

/// sum (2j-1) m_j + C(s,2) for m strictly decreasing with gaps >= 2.
long d00_closed_form(const std::vector<int>& m);

/// dim g^e - 2 rank for e regular in the fixed algebra of the principal inner involution.
long collapsing_defect(SimpleType t);

}  // namespace nilmix
