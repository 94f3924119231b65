#pragma once

#include <map>
#include <optional>
#include <vector>

#include "nilcent/grading.hpp"

namespace nilcent {

/// ad(X) : B -> XB - BX on gl(V), as an n^2 x n^2 matrix acting on the
/// row-major flattening vec(B)[i*n + j] = B(i, j).
template <class K>
struct AdjointOperator {
  Matrix<K> source;
  Matrix<K> matrix;
};

template <class K>
AdjointOperator<K> build_adjoint(const Matrix<K>& x) {
  require_square(x);
  const std::size_t n = x.rows();
  Matrix<K> ad(x.field(), n * n, n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t row = i * n + j;
      for (std::size_t k = 0; k < n; ++k) {
        // (XB)_{ij} = sum_k X_{ik} B_{kj};  (BX)_{ij} = sum_k B_{ik} X_{kj}
        if (!x(i, k).is_zero()) ad(row, k * n + j) += x(i, k);
        if (!x(k, j).is_zero()) ad(row, i * n + k) -= x(k, j);
      }
    }
  }
  return {x, std::move(ad)};
}

template <class K>
Vector<K> flatten(const Matrix<K>& b) {
  return b.entries();
}

template <class K>
Matrix<K> unflatten(const K& field, std::size_t n, Vector<K> v) {
  return Matrix<K>(field, n, n, std::move(v));
}

struct LVerdict {
  /// ad(X)^m : gl(V)(-m) -> gl(V)(m) bijective for every m > 0, weights
  /// taken from Ad∘chi for the given X-basis.
  bool associated = false;
  /// Whether ad(X)^{p-1} = 0; absent in characteristic 0.
  std::optional<bool> ad_power_vanishes;
  /// (ad(X)^{p-1} = 0) ⇒ associated. False here is a counterexample.
  bool consistent = true;
  std::map<int, std::size_t> adjoint_weight_dims;  ///< m -> dim gl(V)(m)
  std::size_t ad_nilpotency_index = 0;
  int first_failing_weight = 0;  ///< smallest m > 0 where bijectivity fails, 0 if none
};

/// Weight of the matrix unit E_{rc} (chain coordinates) under Ad∘chi.
inline std::vector<int> adjoint_weights(const std::vector<int>& weights) {
  std::vector<int> out;
  out.reserve(weights.size() * weights.size());
  for (int wr : weights) {
    for (int wc : weights) out.push_back(wr - wc);
  }
  return out;
}

/// Partition an ad(X)-basis would need to produce the given weight
/// multiset: top weight m starts a chain of length m + 1, and the number of
/// such chains is dim(m) - dim(m + 2). nullopt if some count is negative or
/// the weights are not symmetric.
std::optional<Partition> partition_from_weights(const std::map<int, std::size_t>& dims);

/// Hypothesis (L) for the adjoint representation of gl(V): is Ad∘chi
/// associated with ad(X)? Over F_p the input must satisfy X^p = 0.
template <class K>
LVerdict check_L_condition(const Matrix<K>& x, const ChainBasis<K>& basis) {
  require_square(x);
  if (basis.op() != x) {
    throw PreconditionError(PreconditionError::Kind::DimensionMismatch, "chain basis is not an X-basis");
  }
  const std::uint32_t p = x.field().characteristic();
  if (p > 0 && !power(x, p).is_zero()) {
    throw PreconditionError(PreconditionError::Kind::HypothesisFailed, "X^p != 0");
  }
  const K& field = x.field();
  const std::size_t n = x.rows();
  const Grading<K> grading(basis);
  const std::vector<int> wts = adjoint_weights(grading.weights());

  LVerdict v;
  for (int w : wts) ++v.adjoint_weight_dims[w];

  // In chain coordinates X is the standard shift, so ad(X) can be applied to
  // matrix units directly.
  const Matrix<K> xc = grading.in_chain_coordinates(x);
  const AdjointOperator<K> ad = build_adjoint(xc);
  v.associated = true;
  for (const auto& [m, dim] : v.adjoint_weight_dims) {
    if (m <= 0) continue;
    std::vector<Vector<K>> images;
    for (std::size_t e = 0; e < wts.size(); ++e) {
      if (wts[e] != -m) continue;
      Vector<K> u = unit_vector(field, n * n, e);
      for (int k = 0; k < m; ++k) u = ad.matrix * u;
      images.push_back(std::move(u));
    }
    const auto dim_neg = images.size();
    const bool bijective = dim_neg == dim && rank(Matrix<K>::from_columns(field, n * n, images)) == dim;
    if (!bijective) {
      v.associated = false;
      v.first_failing_weight = m;
      break;
    }
  }

  const AdjointOperator<K> ad_x = build_adjoint(x);
  v.ad_nilpotency_index = nilpotency_index(ad_x.matrix).value_or(0);
  if (p > 0) {
    v.ad_power_vanishes = power(ad_x.matrix, p - 1).is_zero();
    v.consistent = !*v.ad_power_vanishes || v.associated;
  }
  return v;
}

}  // namespace nilcent
