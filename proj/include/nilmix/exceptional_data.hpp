#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nilmix/reductive.hpp"
#include "nilmix/sl2_module.hpp"
#include "nilmix/wdd.hpp"

namespace nilmix {

/// Static record of a nilpotent orbit in an exceptional Lie algebra.
struct ExceptionalOrbit {
  SimpleType type;
  std::string label;
  WeightedDynkinDiagram wdd;
  long dim_centralizer = 0;
  ReductiveAlgebra red;
  long dim_nil = 0;
  /// Known divisibility, where the dataset records it.
  std::optional<bool> divisible;
  std::string source;
};

/// Static record of an involution of an exceptional Lie algebra, with the sl2-decomposition of
/// g0 and g1 for e regular in g0. Node indices are 1-based as in the JSON form.
struct ExceptionalInvolution {
  SimpleType type;
  std::string g0;
  bool inner = true;
  std::vector<int> black;
  std::vector<std::pair<int, int>> arrows;
  std::string regular_orbit;
  SL2Module m0;
  SL2Module m1;
  std::string source;
};

/// Version tag of the shipped dataset.
std::string_view exceptional_dataset_version();
/// The shipped dataset as JSON text (schema documented in the README).
std::string_view exceptional_dataset_json();

const std::vector<ExceptionalOrbit>& exceptional_orbits();
const std::vector<ExceptionalInvolution>& exceptional_involutions();

/// Throws LookupFailure listing the known labels of the type.
const ExceptionalOrbit& exceptional_lookup(SimpleType t, std::string_view label);

}  // namespace nilmix
