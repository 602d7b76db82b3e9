#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nilmix/reductive.hpp"
#include "nilmix/wdd.hpp"

namespace nilmix {

/// Weakly decreasing sequence of positive integers.
class Partition {
 public:
  Partition() = default;
  /// Sorts the parts into decreasing order; throws InvalidInput on non-positive parts.
  explicit Partition(std::vector<int> parts);
  /// Accepts "(5,3,1)", "5,3,1", "[5 3 1]" and exponent notation "(3^2,1)".
  static Partition parse(std::string_view text);

  const std::vector<int>& parts() const { return parts_; }
  int total() const;
  std::size_t size() const { return parts_.size(); }
  Partition dual() const;
  /// part -> multiplicity
  std::map<int, int> multiplicities() const;
  int multiplicity(int k) const;
  bool all_odd() const;
  bool same_parity() const;

  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

/// All partitions of n in reverse lexicographic order.
std::vector<Partition> partitions_of(int n);

enum class Ambient { SL, SO, SP };

std::string ambient_prefix(Ambient a);

/// Nilpotent orbit in sl_n, so_n or sp_n, given by the Jordan type on the natural module.
struct ClassicalOrbit {
  Ambient ambient = Ambient::SL;
  Partition lambda;

  /// Throws InvalidInput when lambda does not label an orbit of the ambient algebra.
  static ClassicalOrbit make(Ambient a, Partition lambda);
  static bool is_valid(Ambient a, const Partition& lambda);

  int n() const { return lambda.total(); }
  /// "sl6", "so9", "sp8" (matrix size).
  std::string ambient_name() const;

  friend bool operator==(const ClassicalOrbit&, const ClassicalOrbit&) = default;
};

/// All orbits of the given ambient with natural module of dimension n.
std::vector<ClassicalOrbit> orbits_of(Ambient a, int n);

/// Simple type of sl_n/so_n/sp_n (n is the matrix size), or nullopt for sl_1, so_1, so_2, so_4.
std::optional<SimpleType> ambient_simple_type(Ambient a, int n);
long ambient_dimension(Ambient a, int n);

/// Springer-Steinberg recipe. Throws Unsupported when the ambient is not simple.
WeightedDynkinDiagram wdd_from_partition(const ClassicalOrbit& o);

/// Eigenvalues of h on the natural module, in decreasing order.
std::vector<int> characteristic_values(const Partition& lambda);

bool is_even(const ClassicalOrbit& o);
CentralizerDims centralizer_dims(const ClassicalOrbit& o);
ReductiveAlgebra reductive_type(const ClassicalOrbit& o);
bool is_distinguished(const ClassicalOrbit& o);
bool is_almost_distinguished(const ClassicalOrbit& o);

bool is_divisible(const ClassicalOrbit& o);
/// Orbit with characteristic h/2. Throws PreconditionViolation if o is not divisible and
/// Unsupported for sp (see matrix_oracle::sp_half_orbit).
ClassicalOrbit half_orbit(const ClassicalOrbit& o);

}  // namespace nilmix
