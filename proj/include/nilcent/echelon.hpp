#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "nilcent/matrix.hpp"

namespace nilcent {

// Elimination here is positional: the pivot of each column is the first
// nonzero entry at or below the current row. Arithmetic is exact, so no
// magnitude heuristics are needed and the output is reproducible.

template <class K>
struct Echelon {
  Matrix<K> reduced;                 ///< reduced row echelon form
  std::vector<std::size_t> pivots;  ///< pivot column of each nonzero row
};

template <class K>
Echelon<K> reduced_row_echelon(Matrix<K> m) {
  using Scalar = typename K::value_type;
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t r = row;
    while (r < m.rows() && m(r, col).is_zero()) ++r;
    if (r == m.rows()) continue;
    if (r != row) {
      for (std::size_t c = col; c < m.cols(); ++c) std::swap(m(r, c), m(row, c));
    }
    const Scalar inv = m(row, col).inverse();
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col).is_zero()) continue;
      const Scalar f = m(i, col);
      for (std::size_t c = col; c < m.cols(); ++c) {
        if (!m(row, c).is_zero()) m(i, c) -= f * m(row, c);
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(m), std::move(pivots)};
}

/// Rank by forward elimination only.
template <class K>
std::size_t rank(Matrix<K> m) {
  using Scalar = typename K::value_type;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t r = row;
    while (r < m.rows() && m(r, col).is_zero()) ++r;
    if (r == m.rows()) continue;
    if (r != row) {
      for (std::size_t c = col; c < m.cols(); ++c) std::swap(m(r, c), m(row, c));
    }
    const Scalar inv = m(row, col).inverse();
    for (std::size_t i = row + 1; i < m.rows(); ++i) {
      if (m(i, col).is_zero()) continue;
      const Scalar f = m(i, col) * inv;
      for (std::size_t c = col + 1; c < m.cols(); ++c) {
        if (!m(row, c).is_zero()) m(i, c) -= f * m(row, c);
      }
    }
    ++row;
  }
  return row;
}

template <class K>
struct RankNullspace {
  std::size_t rank = 0;
  std::vector<Vector<K>> nullspace;  ///< one vector per free column, in column order
};

/// Rank and a kernel basis read off the reduced echelon form: the vector
/// for free column f has a 1 in position f, zeros in the other free
/// positions, and minus the reduced column entries in the pivot positions.
template <class K>
RankNullspace<K> rank_and_nullspace(const Matrix<K>& m) {
  const K& field = m.field();
  auto [reduced, pivots] = reduced_row_echelon(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;

  RankNullspace<K> out;
  out.rank = pivots.size();
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vector<K> v(m.cols(), field.zero());
    v[f] = field.one();
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -reduced(r, f);
    out.nullspace.push_back(std::move(v));
  }
  return out;
}

/// A solution x of m x = b, or nullopt when b is not in the column space.
template <class K>
std::optional<Vector<K>> solve(const Matrix<K>& m, const Vector<K>& b) {
  if (b.size() != m.rows()) {
    throw PreconditionError(PreconditionError::Kind::DimensionMismatch, "right-hand side length mismatch");
  }
  Matrix<K> aug(m.field(), m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = b[r];
  }
  auto [reduced, pivots] = reduced_row_echelon(std::move(aug));
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
  Vector<K> x(m.cols(), m.field().zero());
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = reduced(r, m.cols());
  return x;
}

template <class K>
std::optional<Matrix<K>> inverse(const Matrix<K>& m) {
  require_square(m);
  const std::size_t n = m.rows();
  Matrix<K> aug(m.field(), n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = m.field().one();
  }
  auto [reduced, pivots] = reduced_row_echelon(std::move(aug));
  if (pivots.size() < n || (n > 0 && pivots[n - 1] != n - 1)) return std::nullopt;
  Matrix<K> inv(m.field(), n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = reduced(r, n + c);
  }
  return inv;
}

template <class K>
typename K::value_type determinant(Matrix<K> m) {
  using Scalar = typename K::value_type;
  require_square(m);
  const std::size_t n = m.rows();
  Scalar det = m.field().one();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t r = col;
    while (r < n && m(r, col).is_zero()) ++r;
    if (r == n) return m.field().zero();
    if (r != col) {
      for (std::size_t c = col; c < n; ++c) std::swap(m(r, c), m(col, c));
      det = -det;
    }
    det *= m(col, col);
    const Scalar inv = m(col, col).inverse();
    for (std::size_t i = col + 1; i < n; ++i) {
      if (m(i, col).is_zero()) continue;
      const Scalar f = m(i, col) * inv;
      for (std::size_t c = col + 1; c < n; ++c) {
        if (!m(col, c).is_zero()) m(i, c) -= f * m(col, c);
      }
    }
  }
  return det;
}

/// Incrementally grown subspace. Stored rows are normalized at their pivot
/// and reduced against every earlier row, so reducing a vector by the rows
/// in insertion order clears all pivot positions.
template <class K>
class SpanBuilder {
 public:
  using Scalar = typename K::value_type;

  SpanBuilder(K field, std::size_t ambient) : field_(std::move(field)), ambient_(ambient) {}

  std::size_t dimension() const { return rows_.size(); }
  std::size_t ambient() const { return ambient_; }

  /// v minus its projection along the stored pivots.
  Vector<K> reduce(Vector<K> v) const {
    if (v.size() != ambient_) {
      throw PreconditionError(PreconditionError::Kind::DimensionMismatch, "vector length mismatch in span");
    }
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      const std::size_t p = pivots_[k];
      if (v[p].is_zero()) continue;
      const Scalar f = v[p];
      const Vector<K>& row = rows_[k];
      for (std::size_t c = 0; c < ambient_; ++c) {
        if (!row[c].is_zero()) v[c] -= f * row[c];
      }
    }
    return v;
  }

  bool contains(const Vector<K>& v) const { return is_zero_vector<K>(reduce(v)); }

  /// Adds v to the span; returns false (and changes nothing) if v is already in it.
  bool insert(const Vector<K>& v) {
    Vector<K> r = reduce(v);
    std::size_t p = 0;
    while (p < ambient_ && r[p].is_zero()) ++p;
    if (p == ambient_) return false;
    const Scalar inv = r[p].inverse();
    for (auto& x : r) x *= inv;
    rows_.push_back(std::move(r));
    pivots_.push_back(p);
    return true;
  }

 private:
  K field_;
  std::size_t ambient_;
  std::vector<Vector<K>> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace nilcent
