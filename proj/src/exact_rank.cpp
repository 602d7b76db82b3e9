#include "nilmix/exact_rank.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace nilmix {

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::unit(int n, int r, int c) {
  IntMatrix m(n, n);
  m(r, c) = 1;
  return m;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool IntMatrix::is_zero() const {
  for (long long v : a_)
    if (v) return false;
  return true;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  for (int r = 0; r < rows_; ++r) {
    os << '[';
    for (int c = 0; c < cols_; ++c) os << (c ? " " : "") << (*this)(r, c);
    os << "]\n";
  }
  return os.str();
}

IntMatrix& IntMatrix::operator+=(const IntMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix size mismatch");
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
  return *this;
}

IntMatrix& IntMatrix::operator-=(const IntMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix size mismatch");
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
  return *this;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix size mismatch");
  IntMatrix c(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      const long long v = a(i, k);
      if (!v) continue;
      for (int j = 0; j < b.cols_; ++j) c(i, j) += v * b(k, j);
    }
  return c;
}

IntMatrix operator*(long long s, IntMatrix a) {
  for (auto& v : a.a_) v *= s;
  return a;
}

IntMatrix commutator(const IntMatrix& a, const IntMatrix& b) { return a * b - b * a; }

IntMatrix direct_sum(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix m(a.rows() + b.rows(), a.cols() + b.cols());
  for (int r = 0; r < a.rows(); ++r)
    for (int c = 0; c < a.cols(); ++c) m(r, c) = a(r, c);
  for (int r = 0; r < b.rows(); ++r)
    for (int c = 0; c < b.cols(); ++c) m(a.rows() + r, a.cols() + c) = b(r, c);
  return m;
}

namespace {

using Big = boost::multiprecision::cpp_int;

// Bareiss elimination; T must support exact division. Returns nullopt on overflow (int128 only).
template <class T>
std::optional<int> bareiss(std::vector<std::vector<T>> m) {
  const std::size_t rows = m.size();
  if (rows == 0) return 0;
  const std::size_t cols = m[0].size();
  T prev = 1;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[rank]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      for (std::size_t k = c + 1; k < cols; ++k) {
        if constexpr (std::is_same_v<T, __int128>) {
          __int128 x, y;
          if (__builtin_mul_overflow(m[rank][c], m[r][k], &x) || __builtin_mul_overflow(m[r][c], m[rank][k], &y) ||
              __builtin_sub_overflow(x, y, &x))
            return std::nullopt;
          m[r][k] = x / prev;
        } else {
          m[r][k] = (m[rank][c] * m[r][k] - m[r][c] * m[rank][k]) / prev;
        }
      }
      m[r][c] = 0;
    }
    prev = m[rank][c];
    ++rank;
  }
  return static_cast<int>(rank);
}

template <class T>
std::vector<std::vector<T>> convert(const std::vector<std::vector<long long>>& rows) {
  std::vector<std::vector<T>> out;
  out.reserve(rows.size());
  for (const auto& r : rows) out.emplace_back(r.begin(), r.end());
  return out;
}

}  // namespace

int exact_rank(const std::vector<std::vector<long long>>& rows) {
  for (const auto& r : rows)
    if (r.size() != rows.front().size()) throw std::invalid_argument("exact_rank: ragged rows");
  if (auto r = bareiss(convert<__int128>(rows))) return *r;
  return *bareiss(convert<Big>(rows));
}

int exact_rank(const IntMatrix& m) {
  std::vector<std::vector<long long>> rows(static_cast<std::size_t>(m.rows()));
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) rows[static_cast<std::size_t>(r)].push_back(m(r, c));
  return exact_rank(rows);
}

}  // namespace nilmix
