#pragma once

#include <optional>
#include <vector>

#include "nilmix/classical_orbit.hpp"
#include "nilmix/exact_rank.hpp"
#include "nilmix/grid.hpp"
#include "nilmix/involution.hpp"

namespace nilmix {

/// sl2-triple of integer matrices acting on the natural module.
struct Triple {
  IntMatrix e;
  IntMatrix h;
  IntMatrix f;
};

/// Triple of Jordan type lambda preserving a bilinear form (Gram matrix, empty for SL).
/// Each block V_d has basis v_0..v_{d-1} of h-weights d-1, d-3, ..., with f v_k = v_{k+1} and
/// B(v_k, v_{d-1-k}) = (-1)^k; blocks of the wrong parity for the form are paired.
struct FormedTriple {
  Ambient ambient = Ambient::SL;
  Triple triple;
  IntMatrix gram;
};

FormedTriple natural_triple(Ambient a, const Partition& lambda);

/// [h,e] = 2e, [h,f] = -2f, [e,f] = h.
bool triple_relations_hold(const Triple& t);
/// X^T G + G X = 0 (trace zero for an empty Gram matrix).
bool preserves_form(const IntMatrix& x, const IntMatrix& gram);

/// Basis of sl_n, or of the algebra of the form, by h-weight vectors.
struct WeightBasis {
  std::vector<IntMatrix> elements;
  std::vector<int> weights;
};
WeightBasis lie_basis(const FormedTriple& ft);

long oracle_centralizer_dim(Ambient a, const Partition& lambda);
/// dim Ker (ad e)^2.
long oracle_ker_ad_squared(Ambient a, const Partition& lambda);

/// Realisation of a classical involution with a triple in g0.
struct InvolutionRealization {
  SymmetricPair pair;
  FormedTriple natural;
  /// sigma(X) = D X D for a diagonal sign matrix D, or -G^{-1} X^T G.
  bool transpose_type = false;
  IntMatrix d;
  IntMatrix form;

  IntMatrix apply(const IntMatrix& x) const;
};

/// factor_partitions: Jordan type of e in each g0 factor, as in decompose_classical.
InvolutionRealization realize(const SymmetricPair& pair, const std::vector<Partition>& factor_partitions);

MixedGrading oracle_grid(const SymmetricPair& pair, const std::vector<Partition>& factor_partitions);
/// e regular in g0.
MixedGrading oracle_grid(const SymmetricPair& pair);

/// Orbit of e/2 for a divisible symplectic orbit, found as the valid sp partition whose
/// characteristic is h/2. Throws PreconditionViolation when e is not divisible.
Partition sp_half_orbit(const Partition& lambda);

}  // namespace nilmix
