#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "nilmix/root_system.hpp"

namespace nilmix {

/// Matrix families used to describe fixed-point subalgebras and centralisers.
enum class MatrixFamily { SL, GL, SO, SP };

/// A reductive Lie algebra up to isomorphism: simple factors plus a central torus.
///
/// Classical factors are canonicalised on insertion (so_3 = A1, so_4 = 2A1, so_6 = A3,
/// sp_4 = B2, gl_k = A_{k-1} + t1, and so on), so equality means isomorphism.
class ReductiveAlgebra {
 public:
  ReductiveAlgebra() = default;

  ReductiveAlgebra& add_simple(SimpleType t);
  ReductiveAlgebra& add_torus(int dim);
  /// Adds sl_n, gl_n, so_n or sp_n (n is the matrix size; sp needs n even).
  ReductiveAlgebra& add_matrix(MatrixFamily f, int n);
  ReductiveAlgebra& add(const ReductiveAlgebra& other);

  /// Parses "A5+A1", "D5+t1", "0", "C3+A1", "2A1". Matrix names such as "so_8" are not accepted here.
  static ReductiveAlgebra parse(std::string_view text);

  const std::vector<SimpleType>& simple_factors() const { return simple_; }
  int center_dim() const { return torus_; }
  long dimension() const;
  int rank() const;

  bool is_zero() const { return simple_.empty() && torus_ == 0; }
  bool is_toral() const { return simple_.empty(); }
  bool is_semisimple() const { return torus_ == 0; }

  /// Canonical text such as "D6+A1", "A2+A2+t1", "t2" or "0".
  std::string to_string() const;

  friend bool operator==(const ReductiveAlgebra&, const ReductiveAlgebra&) = default;

 private:
  void normalise();

  std::vector<SimpleType> simple_;
  int torus_ = 0;
};

/// Canonical simple type for a possibly degenerate Cartan name, e.g. C2 -> B2, D3 -> A3.
/// D2 is not simple and is rejected here; use ReductiveAlgebra::add_matrix.
SimpleType canonical_simple(Family f, int rank);

}  // namespace nilmix
