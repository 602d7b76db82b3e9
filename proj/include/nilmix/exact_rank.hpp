#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace nilmix {

/// Dense integer matrix, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows * cols), 0) {}
  static IntMatrix identity(int n);
  static IntMatrix unit(int n, int r, int c);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  long long& operator()(int r, int c) { return a_[static_cast<std::size_t>(r * cols_ + c)]; }
  long long operator()(int r, int c) const { return a_[static_cast<std::size_t>(r * cols_ + c)]; }
  const std::vector<long long>& data() const { return a_; }

  IntMatrix transpose() const;
  bool is_zero() const;
  std::string to_string() const;

  IntMatrix& operator+=(const IntMatrix& o);
  IntMatrix& operator-=(const IntMatrix& o);
  friend IntMatrix operator+(IntMatrix a, const IntMatrix& b) { return a += b; }
  friend IntMatrix operator-(IntMatrix a, const IntMatrix& b) { return a -= b; }
  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator*(long long s, IntMatrix a);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<long long> a_;
};

IntMatrix commutator(const IntMatrix& a, const IntMatrix& b);
/// Block diagonal sum.
IntMatrix direct_sum(const IntMatrix& a, const IntMatrix& b);

/// Exact rank of the span of the given vectors (all of equal length). Fraction-free elimination
/// in 128-bit arithmetic, redone with arbitrary precision if an intermediate overflows.
int exact_rank(const std::vector<std::vector<long long>>& rows);
int exact_rank(const IntMatrix& m);

}  // namespace nilmix
