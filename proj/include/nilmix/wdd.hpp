#pragma once

#include <map>
#include <string>
#include <vector>

#include "nilmix/root_system.hpp"

namespace nilmix {

/// Weighted Dynkin diagram: labels alpha_i(h) of a dominant characteristic, indexed as in RootSystem.
struct WeightedDynkinDiagram {
  SimpleType type;
  std::vector<int> labels;

  /// Throws InvalidInput unless there is one label per node and all labels are in {0,1,2}.
  static WeightedDynkinDiagram make(SimpleType type, std::vector<int> labels);

  std::vector<int> zeros() const;
  int zero_count() const;
  bool has_isolated_zeros() const;
  bool is_even() const;

  /// "(2,0,2,0,2,0)".
  std::string label_string() const;

  friend bool operator==(const WeightedDynkinDiagram&, const WeightedDynkinDiagram&) = default;
};

/// Dimensions d(i) of the h-eigenspaces of g for the characteristic with these labels
/// (the labels need not lie in {0,1,2}; any dominant weighting is accepted).
std::map<int, long> eigenvalue_distribution(SimpleType t, const std::vector<int>& labels);

/// Moves a weighting of the simple roots to the dominant chamber by simple reflections.
std::vector<int> dominant_labels(const RootSystem& rs, std::vector<int> values);

struct CentralizerDims {
  long total = 0;
  long red = 0;
  long nil = 0;
  friend bool operator==(const CentralizerDims&, const CentralizerDims&) = default;
};

/// dim g^e = d(0)+d(1), dim of the reductive part = d(0)-d(2), nilradical = d(1)+d(2).
CentralizerDims centralizer_dims_from_wdd(const WeightedDynkinDiagram& w);

}  // namespace nilmix
