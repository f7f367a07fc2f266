#pragma once

// Small dense exact-arithmetic matrix helpers: multiplication, inverse,
// rank, and fraction-free (Bareiss) pivot selection for integer matrices.
// Sizes here are tiny (at most a few hundred rows), so plain Gauss-Jordan
// over normalized rationals is the right tool.

#include "hyperoct/rational.hpp"

#include <stdexcept>
#include <vector>

namespace hyperoct {

using RatMat = std::vector<std::vector<Rational>>;
using IMat = std::vector<std::vector<long long>>;

inline RatMat rat_identity(int k) {
  RatMat m(k, std::vector<Rational>(k, Rational(0)));
  for (int i = 0; i < k; ++i) m[i][i] = 1;
  return m;
}

inline RatMat rat_from_int(const IMat& a) {
  RatMat m(a.size());
  for (size_t i = 0; i < a.size(); ++i) m[i].assign(a[i].begin(), a[i].end());
  return m;
}

inline RatMat rat_mul(const RatMat& a, const RatMat& b) {
  const size_t rows = a.size(), inner = b.size(), cols = b.empty() ? 0 : b[0].size();
  RatMat c(rows, std::vector<Rational>(cols, Rational(0)));
  for (size_t i = 0; i < rows; ++i)
    for (size_t k = 0; k < inner; ++k) {
      if (a[i][k] == 0) continue;
      for (size_t j = 0; j < cols; ++j)
        if (b[k][j] != 0) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

inline bool rat_is_identity(const RatMat& a) {
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a[i].size(); ++j)
      if (a[i][j] != Rational(i == j ? 1 : 0)) return false;
  return true;
}

// Gauss-Jordan inverse; throws on a singular input.
inline RatMat rat_inverse(const RatMat& a) {
  const int k = static_cast<int>(a.size());
  RatMat m = a;
  RatMat inv = rat_identity(k);
  for (int col = 0; col < k; ++col) {
    int pivot = -1;
    for (int r = col; r < k; ++r)
      if (m[r][col] != 0) { pivot = r; break; }
    if (pivot < 0) throw std::runtime_error("rat_inverse: singular matrix");
    std::swap(m[pivot], m[col]);
    std::swap(inv[pivot], inv[col]);
    const Rational p = m[col][col];
    for (int j = 0; j < k; ++j) { m[col][j] /= p; inv[col][j] /= p; }
    for (int r = 0; r < k; ++r) {
      if (r == col || m[r][col] == 0) continue;
      const Rational f = m[r][col];
      for (int j = 0; j < k; ++j) {
        m[r][j] -= f * m[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

inline int rat_rank(RatMat m) {
  const int rows = static_cast<int>(m.size());
  const int cols = rows == 0 ? 0 : static_cast<int>(m[0].size());
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (m[r][col] != 0) { pivot = r; break; }
    if (pivot < 0) continue;
    std::swap(m[pivot], m[rank]);
    for (int r = rank + 1; r < rows; ++r) {
      if (m[r][col] == 0) continue;
      const Rational f = m[r][col] / m[rank][col];
      for (int j = col; j < cols; ++j) m[r][j] -= f * m[rank][j];
    }
    ++rank;
  }
  return rank;
}

// Fraction-free elimination on an integer matrix. Returns the row index
// chosen as pivot for each column, in column order; throws if some column
// has no pivot (rank-deficient columns).
inline std::vector<int> bareiss_pivot_rows(std::vector<std::vector<BigInt>> m) {
  const int rows = static_cast<int>(m.size());
  const int cols = rows == 0 ? 0 : static_cast<int>(m[0].size());
  std::vector<int> row_of(rows);
  for (int i = 0; i < rows; ++i) row_of[i] = i;
  std::vector<int> pivots;
  BigInt prev = 1;
  int rank = 0;
  for (int col = 0; col < cols; ++col) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (m[r][col] != 0) { pivot = r; break; }
    if (pivot < 0) throw std::runtime_error("bareiss: no pivot for column " + std::to_string(col));
    std::swap(m[pivot], m[rank]);
    std::swap(row_of[pivot], row_of[rank]);
    for (int r = rank + 1; r < rows; ++r) {
      for (int j = col + 1; j < cols; ++j)
        m[r][j] = (m[rank][col] * m[r][j] - m[r][col] * m[rank][j]) / prev;
      m[r][col] = 0;
    }
    prev = m[rank][col];
    pivots.push_back(row_of[rank]);
    ++rank;
  }
  return pivots;
}

}  // namespace hyperoct
