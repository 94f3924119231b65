#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "nilcent/error.hpp"

namespace nilcent {

template <class K>
using Vector = std::vector<typename K::value_type>;

/// Dense row-major matrix over the field K.
template <class K>
class Matrix {
 public:
  using Scalar = typename K::value_type;

  Matrix(K field, std::size_t rows, std::size_t cols)
      : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, field_.zero()) {}

  Matrix(K field, std::size_t rows, std::size_t cols, std::vector<Scalar> entries)
      : field_(std::move(field)), rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows_ * cols_) {
      throw PreconditionError(PreconditionError::Kind::DimensionMismatch, "entry count does not match shape");
    }
  }

  static Matrix identity(const K& field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
    return m;
  }

  /// Matrix whose columns are the given vectors (all of length `rows`).
  static Matrix from_columns(const K& field, std::size_t rows, const std::vector<Vector<K>>& cols) {
    Matrix m(field, rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (cols[j].size() != rows) {
        throw PreconditionError(PreconditionError::Kind::DimensionMismatch, "column length mismatch");
      }
      for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    }
    return m;
  }

  const K& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  const std::vector<Scalar>& entries() const { return data_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector<K> column(std::size_t c) const {
    Vector<K> v;
    v.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
    return v;
  }

  bool is_zero() const {
    for (const auto& x : data_) {
      if (!x.is_zero()) return false;
    }
    return true;
  }

  Matrix transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    }
    return t;
  }

  /// Entrywise image under a field map; `target` is the codomain field.
  template <class L, class F>
  Matrix<L> map(const L& target, F&& f) const {
    std::vector<typename L::value_type> out;
    out.reserve(data_.size());
    for (const auto& x : data_) out.push_back(f(x));
    return Matrix<L>(target, rows_, cols_, std::move(out));
  }

  Matrix& operator+=(const Matrix& o) {
    check_same_shape(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    check_same_shape(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
  }
  Matrix& operator*=(const Scalar& s) {
    for (auto& x : data_) x *= s;
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const Scalar& s) { return a *= s; }
  friend Matrix operator*(const Scalar& s, Matrix a) { return a *= s; }
  friend Matrix operator-(Matrix a) {
    for (auto& x : a.data_) x = -x;
    return a;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) {
      throw PreconditionError(PreconditionError::Kind::DimensionMismatch,
                              "cannot multiply " + a.shape() + " by " + b.shape());
    }
    Matrix out(a.field_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Scalar& x = a(i, k);
        if (x.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          const Scalar& y = b(k, j);
          if (!y.is_zero()) out(i, j) += x * y;
        }
      }
    }
    return out;
  }

  friend Vector<K> operator*(const Matrix& a, const Vector<K>& v) {
    if (a.cols_ != v.size()) {
      throw PreconditionError(PreconditionError::Kind::DimensionMismatch, "matrix-vector size mismatch");
    }
    Vector<K> out(a.rows_, a.field_.zero());
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (!a(i, k).is_zero() && !v[k].is_zero()) out[i] += a(i, k) * v[k];
      }
    }
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  std::string shape() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

 private:
  void check_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) {
      throw PreconditionError(PreconditionError::Kind::DimensionMismatch,
                              "shape mismatch: " + shape() + " vs " + o.shape());
    }
  }

  K field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> data_;
};

template <class K>
void require_square(const Matrix<K>& m, const char* what = "matrix") {
  if (!m.is_square()) {
    throw PreconditionError(PreconditionError::Kind::NotSquare, std::string(what) + " must be square, got " + m.shape());
  }
}

/// m^e by repeated squaring.
template <class K>
Matrix<K> power(Matrix<K> m, unsigned long long e) {
  require_square(m);
  Matrix<K> acc = Matrix<K>::identity(m.field(), m.rows());
  while (e > 0) {
    if (e & 1ULL) acc = acc * m;
    e >>= 1ULL;
    if (e > 0) m = m * m;
  }
  return acc;
}

/// [a, b] = ab - ba
template <class K>
Matrix<K> commutator(const Matrix<K>& a, const Matrix<K>& b) {
  return a * b - b * a;
}

template <class K>
bool is_zero_vector(const Vector<K>& v) {
  for (const auto& x : v) {
    if (!x.is_zero()) return false;
  }
  return true;
}

/// Unit coordinate vector e_i of length n.
template <class K>
Vector<K> unit_vector(const K& field, std::size_t n, std::size_t i) {
  Vector<K> v(n, field.zero());
  v[i] = field.one();
  return v;
}

}  // namespace nilcent
