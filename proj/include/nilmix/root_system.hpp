#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace nilmix {

enum class Family { A, B, C, D, E, F, G };

char family_letter(Family f);

/// A simple Lie algebra given by its Cartan type.
///
/// Validity: A_r (r >= 1), B_r and C_r (r >= 2), D_r (r >= 4), E_6..E_8, F_4, G_2.
/// Low-rank coincidences (D_3 = A_3 and so on) must be spelled in their canonical form.
struct SimpleType {
  Family family = Family::A;
  int rank = 1;

  /// Throws InvalidInput when (family, rank) is not a valid simple type.
  static SimpleType make(Family family, int rank);
  /// Parses "E6", "A5", "d8" (case-insensitive letter followed by the rank).
  static SimpleType parse(std::string_view text);

  std::string name() const;
  long dimension() const;
  bool is_exceptional() const { return family >= Family::E; }

  friend bool operator==(const SimpleType&, const SimpleType&) = default;
  friend auto operator<=>(const SimpleType&, const SimpleType&) = default;
};

/// Types of rank <= max_rank in a fixed order; classical types start at their minimal valid rank.
std::vector<SimpleType> all_simple_types(int max_rank);

using Coeffs = std::vector<int>;

/// A root written in the basis of simple roots.
struct Root {
  Coeffs coeffs;

  int height() const;
  bool is_positive() const;
  Root operator-() const;

  friend bool operator==(const Root&, const Root&) = default;
  friend auto operator<=>(const Root&, const Root&) = default;
};

Root operator+(const Root& a, const Root& b);

/// Irreducible reduced root system with a fixed base.
///
/// Simple roots are numbered as follows (1-based in all text output):
/// A, B, C, D follow Bourbaki (B_r: alpha_r short; C_r: alpha_r long; D_r: fork at alpha_{r-2}).
/// E_r: chain alpha_1..alpha_{r-1}, with alpha_r attached to alpha_{r-3}.
/// F_4: alpha_1, alpha_2 short, alpha_3, alpha_4 long. G_2: alpha_1 short.
class RootSystem {
 public:
  explicit RootSystem(SimpleType type);

  const SimpleType& type() const { return type_; }
  int rank() const { return type_.rank; }
  long dimension() const;

  /// Positive roots ordered by height, then lexicographically.
  const std::vector<Root>& positive_roots() const { return positive_; }
  const Root& simple_root(int i) const { return positive_[static_cast<std::size_t>(i)]; }
  const Root& highest_root() const { return positive_.back(); }

  /// Symmetric invariant form on simple roots; the shortest root has squared length 1 or 2.
  int form(int i, int j) const { return form_[idx(i, j)]; }
  /// Cartan integer <alpha_i, alpha_j^vee>.
  int cartan(int i, int j) const;
  bool is_long(int i) const;
  bool adjacent(int i, int j) const { return i != j && form(i, j) != 0; }
  std::vector<int> neighbours(int i) const;

  int inner(const Coeffs& a, const Coeffs& b) const;
  /// <a, b^vee> = 2(a,b)/(b,b) for a root b.
  int pairing(const Coeffs& a, const Coeffs& b) const;

  std::optional<std::size_t> find_positive(const Coeffs& c) const;
  bool is_root(const Coeffs& c) const;

 private:
  std::size_t idx(int i, int j) const { return static_cast<std::size_t>(i * type_.rank + j); }

  SimpleType type_;
  std::vector<int> form_;
  std::vector<Root> positive_;
};

/// Shared immutable instance per type.
const RootSystem& root_system(SimpleType t);

int coxeter_number(const RootSystem& rs);

/// Maximal number of pairwise non-adjacent nodes, by the closed formula.
int kappa_direct(SimpleType t);
/// Number of positive roots of height floor((c+1)/2), c the Coxeter number.
int kappa_root_count(const RootSystem& rs);

/// Roots of height i (negative roots for i < 0); empty for i = 0.
std::vector<Root> principal_layer(const RootSystem& rs, int i);

/// Index of the node used for the extra simple root of the even-height subsystem:
/// the branch node for D/E, the long simple root adjacent to a short one for B/F/G.
int beta_centre_node(const RootSystem& rs);

/// The height-4 root completing the height-2 roots to a base of the even-height subsystem.
/// Throws PreconditionViolation for types A and C (and B_2 = C_2).
Root beta_root(const RootSystem& rs);

}  // namespace nilmix
