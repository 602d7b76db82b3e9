#pragma once

#include <map>
#include <string>

#include "nilmix/sl2_module.hpp"

namespace nilmix {

/// Dimensions d_j(i) of the bigraded pieces g_j(i), j in {0,1}, i in Z. Zero cells are not stored.
class MixedGrading {
 public:
  MixedGrading() = default;
  /// Grid with d_j(i) = eigen_dim(M_j, i).
  static MixedGrading from_modules(const SL2Module& m0, const SL2Module& m1);

  long d(int j, int i) const;
  void add(int j, int i, long count);
  /// Largest i with d_j(i) != 0, or -1 for an empty row.
  int max_degree(int j) const;
  long row_total(int j) const;
  const std::map<int, long>& row(int j) const { return j == 0 ? d0_ : d1_; }

  friend bool operator==(const MixedGrading&, const MixedGrading&) = default;

 private:
  std::map<int, long> d0_, d1_;
};

/// Recovers M_j from the nonnegative half of a row: mult(R_i) = d_j(i) - d_j(i+2).
SL2Module module_from_row(const MixedGrading& g, int j);

}  // namespace nilmix
