#pragma once

#include <map>
#include <vector>

#include "nilcent/nilpotent.hpp"

namespace nilcent {

/// Z-grading of V attached to an A-basis: A^j v_i has weight
/// -lambda_i + 1 + 2j. Equivalently the cocharacter associated to A
/// through this basis.
template <class K>
class Grading {
 public:
  explicit Grading(ChainBasis<K> basis) : basis_(std::move(basis)) {
    const auto& lambda = basis_.exponents();
    for (std::size_t i = 0; i < lambda.length(); ++i) {
      for (std::size_t j = 0; j < lambda[i]; ++j) {
        weights_.push_back(1 - static_cast<int>(lambda[i]) + 2 * static_cast<int>(j));
      }
    }
  }

  const ChainBasis<K>& basis() const { return basis_; }
  /// Weight of each chain-matrix column.
  const std::vector<int>& weights() const { return weights_; }

  /// m -> dim V(m), nonzero entries only.
  std::map<int, std::size_t> weight_space_dims() const {
    std::map<int, std::size_t> dims;
    for (int w : weights_) ++dims[w];
    return dims;
  }

  /// B written in chain coordinates, C^{-1} B C.
  Matrix<K> in_chain_coordinates(const Matrix<K>& b) const {
    return basis_.chain_inverse() * b * basis_.chain_matrix();
  }

 private:
  ChainBasis<K> basis_;
  std::vector<int> weights_;
};

template <class K>
Grading<K> cocharacter_from(ChainBasis<K> basis) {
  return Grading<K>(std::move(basis));
}

/// B = sum_m B_m with B_m V(j) ⊆ V(j+m). Only nonzero components are stored.
template <class K>
struct GradedDecomposition {
  Matrix<K> source;
  std::map<int, Matrix<K>> components;

  Matrix<K> component(int m) const {
    auto it = components.find(m);
    return it == components.end() ? Matrix<K>(source.field(), source.rows(), source.cols()) : it->second;
  }
};

template <class K>
GradedDecomposition<K> decompose(const Grading<K>& grading, const Matrix<K>& b) {
  const auto& basis = grading.basis();
  if (b.rows() != basis.dimension() || b.cols() != basis.dimension()) {
    throw PreconditionError(PreconditionError::Kind::DimensionMismatch, "endomorphism has the wrong shape");
  }
  const auto& w = grading.weights();
  const Matrix<K> bc = grading.in_chain_coordinates(b);
  std::map<int, Matrix<K>> chain_parts;
  for (std::size_t r = 0; r < bc.rows(); ++r) {
    for (std::size_t c = 0; c < bc.cols(); ++c) {
      if (bc(r, c).is_zero()) continue;
      const int m = w[r] - w[c];
      auto it = chain_parts.find(m);
      if (it == chain_parts.end()) it = chain_parts.emplace(m, Matrix<K>(b.field(), b.rows(), b.cols())).first;
      it->second(r, c) = bc(r, c);
    }
  }
  GradedDecomposition<K> out{b, {}};
  for (auto& [m, part] : chain_parts) {
    out.components.emplace(m, basis.chain_matrix() * part * basis.chain_inverse());
  }
  return out;
}

struct MembershipVerdict {
  bool in_parabolic = false;   ///< B_m = 0 for all m < 0
  bool in_levi_part = false;   ///< B_0 != 0
  bool in_radical_lie = false; ///< commutes and B_m = 0 for all m <= 0
  bool commutes = false;       ///< [A, B] = 0

  friend bool operator==(const MembershipVerdict&, const MembershipVerdict&) = default;
};

/// Membership of B in p(chi), and in Lie R_uC = c(A) ∩ (sum_{m>0} gl(V)(m)).
template <class K>
MembershipVerdict membership(const Grading<K>& grading, const Matrix<K>& b) {
  const auto& basis = grading.basis();
  if (b.rows() != basis.dimension() || b.cols() != basis.dimension()) {
    throw PreconditionError(PreconditionError::Kind::DimensionMismatch, "endomorphism has the wrong shape");
  }
  const auto& w = grading.weights();
  const Matrix<K> bc = grading.in_chain_coordinates(b);
  bool negative = false;
  bool zero_part = false;
  for (std::size_t r = 0; r < bc.rows(); ++r) {
    for (std::size_t c = 0; c < bc.cols(); ++c) {
      if (bc(r, c).is_zero()) continue;
      const int m = w[r] - w[c];
      negative = negative || m < 0;
      zero_part = zero_part || m == 0;
    }
  }
  MembershipVerdict v;
  v.commutes = commutator(basis.op(), b).is_zero();
  v.in_parabolic = !negative;
  v.in_levi_part = zero_part;
  v.in_radical_lie = v.commutes && !negative && !zero_part;
  return v;
}

}  // namespace nilcent
