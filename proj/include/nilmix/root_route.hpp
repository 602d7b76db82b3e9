#pragma once

#include <functional>
#include <vector>

#include "nilmix/grid.hpp"
#include "nilmix/reductive.hpp"
#include "nilmix/wdd.hpp"

namespace nilmix {

/// An inner involution described by the root subsystem of its fixed algebra, together with the
/// mixed grading for e regular in g0, all computed from the root system alone.
struct RootRouteGrading {
  SimpleType type;
  ReductiveAlgebra g0;
  long dim_g0 = 0;
  long dim_g1 = 0;
  std::vector<Root> g0_simple_roots;
  MixedGrading grid;
  /// Orbit of e (regular in g0) in g.
  WeightedDynkinDiagram wdd;
};

/// Fixed algebra spanned by the Cartan subalgebra and the roots satisfying in_g0, which must
/// describe the +1 eigenspace of an inner involution (closed, symmetric, complement of an odd class).
RootRouteGrading root_route(const RootSystem& rs, const std::function<bool(const Root&)>& in_g0);

/// Inner involution with fixed roots {gamma : [gamma : alpha_node] even}; the node must carry
/// coefficient 1 or 2 in the highest root.
RootRouteGrading root_route_node(const RootSystem& rs, int node);

/// The principal inner involution: fixed roots are those of even height.
RootRouteGrading root_route_principal(const RootSystem& rs);

/// Isomorphism type of the subsystem spanned by a set of simple roots of a subsystem.
ReductiveAlgebra classify_subsystem(const RootSystem& rs, const std::vector<Root>& simple, int ambient_rank);

}  // namespace nilmix
