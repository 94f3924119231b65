#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nilcent/echelon.hpp"
#include "nilcent/matrix.hpp"
#include "nilcent/partition.hpp"

namespace nilcent {

/// Least n >= 0 with A^n = 0, or nullopt when A^{dim V} != 0.
template <class K>
std::optional<std::size_t> nilpotency_index(const Matrix<K>& a) {
  require_square(a);
  if (a.rows() == 0) return 0;
  Matrix<K> p = a;
  for (std::size_t k = 1; k <= a.rows(); ++k) {
    if (p.is_zero()) return k;
    if (k < a.rows()) p = p * a;
  }
  return std::nullopt;
}

template <class K>
bool is_nilpotent(const Matrix<K>& a) {
  return nilpotency_index(a).has_value();
}

template <class K>
void require_nilpotent(const Matrix<K>& a, const std::string& what = "operator") {
  if (!is_nilpotent(a)) throw PreconditionError(PreconditionError::Kind::NotNilpotent, what + " is not nilpotent");
}

/// mu(A; v) = min{n >= 0 : A^n v = 0}.
template <class K>
std::size_t exponent(const Matrix<K>& a, Vector<K> v) {
  require_square(a);
  std::size_t n = 0;
  while (!is_zero_vector<K>(v)) {
    if (n > a.rows()) throw PreconditionError(PreconditionError::Kind::NotNilpotent, "operator is not nilpotent");
    v = a * v;
    ++n;
  }
  return n;
}

/// r_k = rank(A^k) for k = 0, 1, ... up to the first zero.
template <class K>
std::vector<std::size_t> rank_sequence(const Matrix<K>& a) {
  require_square(a);
  std::vector<std::size_t> ranks{a.rows()};
  Matrix<K> p = a;
  while (ranks.back() > 0) {
    const std::size_t r = rank(p);
    if (r == ranks.back()) throw PreconditionError(PreconditionError::Kind::NotNilpotent, "operator is not nilpotent");
    ranks.push_back(r);
    if (r > 0) p = p * a;
  }
  return ranks;
}

/// Jordan type from ranks: #{i : lambda_i >= k} = rank(A^{k-1}) - rank(A^k).
template <class K>
Partition partition_of(const Matrix<K>& a) {
  const auto ranks = rank_sequence(a);
  std::vector<std::size_t> counts;
  for (std::size_t k = 1; k < ranks.size(); ++k) counts.push_back(ranks[k - 1] - ranks[k]);
  return Partition::from_conjugate(counts);
}

/// An A-basis: chain tops v_1..v_n with exponents lambda_i = mu(v_i) weakly
/// decreasing, such that the chain vectors A^j v_i (0 <= j < lambda_i) form
/// a basis. Columns of the chain matrix are ordered by chain, then by power.
template <class K>
class ChainBasis {
 public:
  using Scalar = typename K::value_type;

  /// Validates the tops and builds the chain matrix. Throws
  /// PreconditionError(BadPartition) if the exponents are not weakly
  /// decreasing and (NotIndependent) if the chain vectors are not a basis.
  static ChainBasis from_tops(Matrix<K> op, std::vector<Vector<K>> tops) {
    require_square(op, "chain operator");
    std::vector<std::size_t> lambda;
    std::vector<Vector<K>> columns;
    for (const auto& v : tops) {
      Vector<K> w = v;
      std::size_t mu = 0;
      while (!is_zero_vector<K>(w)) {
        columns.push_back(w);
        w = op * w;
        if (++mu > op.rows()) throw PreconditionError(PreconditionError::Kind::NotNilpotent, "operator is not nilpotent");
      }
      if (mu == 0) throw PreconditionError(PreconditionError::Kind::NotIndependent, "chain top is zero");
      if (!lambda.empty() && mu > lambda.back()) {
        throw PreconditionError(PreconditionError::Kind::BadPartition, "chain exponents are not weakly decreasing");
      }
      lambda.push_back(mu);
    }
    if (columns.size() != op.rows()) {
      throw PreconditionError(PreconditionError::Kind::NotIndependent,
                              "chains have " + std::to_string(columns.size()) + " vectors, dimension is " +
                                  std::to_string(op.rows()));
    }
    Matrix<K> cm = Matrix<K>::from_columns(op.field(), op.rows(), columns);
    auto inv = inverse(cm);
    if (!inv) throw PreconditionError(PreconditionError::Kind::NotIndependent, "chain vectors are linearly dependent");
    return ChainBasis(std::move(op), std::move(tops), Partition(std::move(lambda)), std::move(cm), std::move(*inv));
  }

  const Matrix<K>& op() const { return op_; }
  const std::vector<Vector<K>>& tops() const { return tops_; }
  const Partition& exponents() const { return lambda_; }
  const Matrix<K>& chain_matrix() const { return chain_; }
  const Matrix<K>& chain_inverse() const { return inverse_; }

  std::size_t dimension() const { return op_.rows(); }
  std::size_t chain_count() const { return tops_.size(); }
  /// Column of A^0 v_i in the chain matrix.
  std::size_t offset(std::size_t i) const { return offsets_[i]; }
  /// Chain index of each chain-matrix column.
  std::size_t chain_of_column(std::size_t c) const { return column_chain_[c]; }

 private:
  ChainBasis(Matrix<K> op, std::vector<Vector<K>> tops, Partition lambda, Matrix<K> chain, Matrix<K> inv)
      : op_(std::move(op)), tops_(std::move(tops)), lambda_(std::move(lambda)), chain_(std::move(chain)),
        inverse_(std::move(inv)) {
    std::size_t off = 0;
    for (std::size_t i = 0; i < lambda_.length(); ++i) {
      offsets_.push_back(off);
      for (std::size_t j = 0; j < lambda_[i]; ++j) column_chain_.push_back(i);
      off += lambda_[i];
    }
  }

  Matrix<K> op_;
  std::vector<Vector<K>> tops_;
  Partition lambda_;
  Matrix<K> chain_;
  Matrix<K> inverse_;
  std::vector<std::size_t> offsets_;
  std::vector<std::size_t> column_chain_;
};

/// Canonical A-basis. Works down the kernel filtration ker A^{k-1} ⊂ ker A^k
/// from the top level; at level k the new tops are the reduced-echelon kernel
/// vectors of A^k that are independent of ker A^{k-1} plus the level-k
/// vectors of the chains already found.
template <class K>
ChainBasis<K> chain_basis(const Matrix<K>& a) {
  const auto index = nilpotency_index(a);
  if (!index) throw PreconditionError(PreconditionError::Kind::NotNilpotent, "operator is not nilpotent");
  const std::size_t n = a.rows();
  const K& field = a.field();

  // powers[k] = A^k
  std::vector<Matrix<K>> powers{Matrix<K>::identity(field, n)};
  for (std::size_t k = 1; k <= *index; ++k) powers.push_back(powers.back() * a);

  std::vector<Vector<K>> tops;
  std::vector<std::size_t> lengths;
  for (std::size_t k = *index; k >= 1; --k) {
    SpanBuilder<K> span(field, n);
    for (const auto& v : rank_and_nullspace(powers[k - 1]).nullspace) span.insert(v);
    for (std::size_t i = 0; i < tops.size(); ++i) {
      span.insert(powers[lengths[i] - k] * tops[i]);
    }
    for (const auto& v : rank_and_nullspace(powers[k]).nullspace) {
      if (span.insert(v)) {
        tops.push_back(v);
        lengths.push_back(k);
      }
    }
  }
  return ChainBasis<K>::from_tops(a, std::move(tops));
}

/// Coefficients c_{l,j} with w = sum_j sum_l c_{l,j} A^l v_j.
template <class K>
struct ChainCoordinates {
  std::vector<Vector<K>> by_chain;  ///< by_chain[j][l] = c_{l,j}

  const typename K::value_type& coefficient(std::size_t power, std::size_t chain) const {
    return by_chain[chain][power];
  }
};

template <class K>
ChainCoordinates<K> expand_in_chains(const ChainBasis<K>& basis, const Vector<K>& w) {
  const Vector<K> flat = basis.chain_inverse() * w;
  ChainCoordinates<K> out;
  for (std::size_t j = 0; j < basis.chain_count(); ++j) {
    const auto first = flat.begin() + static_cast<std::ptrdiff_t>(basis.offset(j));
    out.by_chain.emplace_back(first, first + static_cast<std::ptrdiff_t>(basis.exponents()[j]));
  }
  return out;
}

/// Replaces one chain top by B v_i, where B commutes with A, is nilpotent,
/// and its weight-zero part satisfies B_0 v_i != 0 (weights taken from the
/// grading of `basis`). The replaced top is the smallest j != i with
/// lambda_j = lambda_i whose coefficient in B_0 v_i = sum a_j v_j is nonzero.
/// The result keeps the partition and mu(B v_i) = lambda_i.
template <class K>
ChainBasis<K> surgery_replace(const ChainBasis<K>& basis, const Matrix<K>& b, std::size_t i) {
  const Matrix<K>& a = basis.op();
  if (b.rows() != a.rows() || b.cols() != a.cols()) {
    throw PreconditionError(PreconditionError::Kind::DimensionMismatch, "B has the wrong shape");
  }
  if (i >= basis.chain_count()) throw PreconditionError(PreconditionError::Kind::BadIndex, "chain index out of range");
  if (!commutator(a, b).is_zero()) throw PreconditionError(PreconditionError::Kind::NotCommuting, "[A,B] != 0");
  require_nilpotent(b, "B");

  const auto& lambda = basis.exponents();
  const Vector<K> bv = b * basis.tops()[i];
  const auto coords = expand_in_chains(basis, bv);

  // weight of A^l v_j is -lambda_j + 1 + 2l; B_0 v_i keeps the weight of v_i.
  const long wi = 1 - static_cast<long>(lambda[i]);
  bool b0_nonzero = false;
  for (std::size_t j = 0; j < basis.chain_count(); ++j) {
    for (std::size_t l = 0; l < lambda[j]; ++l) {
      const long w = 1 - static_cast<long>(lambda[j]) + 2 * static_cast<long>(l);
      if (w == wi && !coords.coefficient(l, j).is_zero()) b0_nonzero = true;
    }
  }
  if (!b0_nonzero) {
    throw PreconditionError(PreconditionError::Kind::WeightZeroPartVanishes, "B_0 v_i = 0");
  }

  const std::size_t mu = exponent(a, bv);
  if (mu != lambda[i]) {
    throw std::logic_error("mu(B v_i) = " + std::to_string(mu) + " differs from lambda_i = " +
                           std::to_string(lambda[i]));
  }

  std::optional<std::size_t> target;
  for (std::size_t j = 0; j < basis.chain_count() && !target; ++j) {
    if (j != i && lambda[j] == lambda[i] && !coords.coefficient(0, j).is_zero()) target = j;
  }
  if (!target) throw std::logic_error("no chain of equal length with a nonzero weight-zero coefficient");

  std::vector<Vector<K>> tops = basis.tops();
  tops[*target] = bv;
  return ChainBasis<K>::from_tops(a, std::move(tops));
}

/// Vectors v_1..v_n with a proposed partition, not yet known to be an A-basis.
template <class K>
struct ChainCandidate {
  std::vector<Vector<K>> tops;
  Partition lambda;
};

/// Tests A^{lambda_j} v_j ∈ A^{lambda_j} V_{j-1} for every j, where V_l
/// is spanned by the first l candidate chains. Requires the candidate chain
/// vectors A^m v_i (m < lambda_i) to form a basis.
template <class K>
bool recognizes_partition(const Matrix<K>& a, const ChainCandidate<K>& cand) {
  require_square(a);
  const std::size_t n = a.rows();
  if (cand.tops.size() != cand.lambda.length() || cand.lambda.size() != n) {
    throw PreconditionError(PreconditionError::Kind::BadPartition, "candidate partition does not match the data");
  }
  std::vector<Vector<K>> columns;
  for (std::size_t i = 0; i < cand.tops.size(); ++i) {
    Vector<K> w = cand.tops[i];
    for (std::size_t m = 0; m < cand.lambda[i]; ++m) {
      columns.push_back(w);
      w = a * w;
    }
  }
  if (rank(Matrix<K>::from_columns(a.field(), n, columns)) != n) {
    throw PreconditionError(PreconditionError::Kind::NotIndependent, "candidate chain vectors are not a basis");
  }

  std::size_t prefix = 0;  // number of columns spanning V_{j-1}
  for (std::size_t j = 0; j < cand.tops.size(); ++j) {
    const Matrix<K> p = power(a, cand.lambda[j]);
    SpanBuilder<K> image(a.field(), n);
    for (std::size_t c = 0; c < prefix; ++c) image.insert(p * columns[c]);
    if (!image.contains(p * cand.tops[j])) return false;
    prefix += cand.lambda[j];
  }
  return true;
}

}  // namespace nilcent
