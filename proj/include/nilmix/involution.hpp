#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nilmix/classical_orbit.hpp"
#include "nilmix/reductive.hpp"
#include "nilmix/wdd.hpp"

namespace nilmix {

/// Satake diagram: black nodes and arrows on the Dynkin diagram (0-based node indices).
struct SatakeDiagram {
  SimpleType type;
  std::vector<int> black;
  std::vector<std::pair<int, int>> arrows;

  /// Sorts and validates: nodes in range, arrows join distinct white nodes, no node used twice.
  static SatakeDiagram make(SimpleType type, std::vector<int> black, std::vector<std::pair<int, int>> arrows);

  /// Only isolated black nodes.
  bool has_ibn() const;
  bool is_white(int node) const;

  friend bool operator==(const SatakeDiagram&, const SatakeDiagram&) = default;
};

/// Shape of a classical symmetric pair, named after its fixed algebra.
enum class PairShape { SlSo, SlSp, SlGlGl, SoSo, SoGl, SpSp, SpGl, Exceptional };

/// Conjugacy class of an involution of a simple Lie algebra, with its fixed algebra g0.
///
/// Classical pairs carry the natural-module dimension n and the block sizes p, q:
/// SlGlGl has g0 = s(gl_p + gl_q) with p <= q; SoSo and SpSp have g0 = so_p + so_q (sp_p + sp_q)
/// with p >= q; SoGl and SpGl have g0 = gl_{n/2}.
struct SymmetricPair {
  SimpleType g;
  PairShape shape = PairShape::Exceptional;
  Ambient ambient = Ambient::SL;
  int n = 0;
  int p = 0;
  int q = 0;
  std::string g0_label;
  ReductiveAlgebra g0;
  bool inner = true;
  SatakeDiagram satake;
  long dim_g0 = 0;
  long dim_g1 = 0;

  bool is_classical() const { return shape != PairShape::Exceptional; }
  /// dim g1 - dim g0.
  long signature() const { return dim_g1 - dim_g0; }
  /// "B6/so7+so6", "E6/C4", "A5/sp6".
  std::string descriptor() const;
};

bool same_class(const SymmetricPair& a, const SymmetricPair& b);

/// All involution classes of g. For D_4 the class with g0 = gl_4 is omitted: it is carried to
/// so_6 + so_2 by triality, and the catalog lists classes up to all automorphisms.
std::vector<SymmetricPair> catalog(SimpleType t);

SymmetricPair maximal_rank(SimpleType t);
SymmetricPair pi_involution(SimpleType t);

/// rank - 2 #arrows - 4 #black; throws PreconditionViolation without IBN.
int ibn_signature(const SatakeDiagram& s);

enum class InnerFilter { Any, Inner, Outer };

/// The unique IBN class with dim g1 - dim g0 = signature. Throws LookupFailure otherwise.
SymmetricPair identify_ibn(SimpleType t, long signature, InnerFilter filter = InnerFilter::Any);

/// so_{n+m} with fixed algebra so_n + so_m has only isolated black nodes.
bool so_pair_ibn(int n, int m);

/// The orbit with this diagram meets g1 of an involution with this Satake diagram.
bool orbit_meets_g1(const WeightedDynkinDiagram& wdd, const SatakeDiagram& s);
/// Largest orbit meeting g1: label 2 on white nodes, 0 on black nodes.
WeightedDynkinDiagram max_orbit_meeting_g1(const SatakeDiagram& s);

/// Selects a pair by descriptor "<type>/<g0>[-diagram]", e.g. "E6/C4", "so10/gl5", "A5/C3-diagram".
SymmetricPair find_pair(std::string_view descriptor);

/// Natural ambient of a classical type: sl_{r+1}, so_{2r+1}, sp_{2r}, so_{2r}.
std::pair<Ambient, int> natural_ambient(SimpleType t);

}  // namespace nilmix
