#pragma once

#include <map>
#include <string>
#include <string_view>

namespace nilmix {

/// Finite-dimensional sl2-module up to isomorphism: highest weight k (module R_k of
/// dimension k+1) mapped to its multiplicity.
///
/// Multiplicities are kept strictly positive; zero entries are erased.
class SL2Module {
 public:
  SL2Module() = default;
  static SL2Module irreducible(int k, long long mult = 1);
  /// Parses "R2+R6+2*R10", "0" or "" (the zero module).
  static SL2Module parse(std::string_view text);

  long long multiplicity(int k) const;
  const std::map<int, long long>& terms() const { return mult_; }
  long long dimension() const;
  /// Number of irreducible summands.
  long long length() const;
  int max_weight() const;
  bool empty() const { return mult_.empty(); }
  bool all_even() const;
  bool all_odd() const;

  SL2Module& operator+=(const SL2Module& other);
  SL2Module scaled(long long factor) const;
  /// Removes other; throws PreconditionViolation if other is not a submodule.
  SL2Module minus(const SL2Module& other) const;

  std::string to_string() const;

  friend SL2Module operator+(SL2Module a, const SL2Module& b) { return a += b; }
  friend bool operator==(const SL2Module&, const SL2Module&) = default;

 private:
  std::map<int, long long> mult_;
};

SL2Module tensor(const SL2Module& a, const SL2Module& b);
SL2Module sym2(const SL2Module& a);
SL2Module alt2(const SL2Module& a);

/// Dimension of the i-eigenspace of h.
long long eigen_dim(const SL2Module& m, int i);

enum class SignRule { EvenPlus, OddFlip };

/// sum_k (-1)^k mult(R_{2k}) (EvenPlus) or its negative (OddFlip).
/// Throws PreconditionViolation if an odd highest weight is present.
long long signed_count(const SL2Module& m, SignRule rule);

}  // namespace nilmix
