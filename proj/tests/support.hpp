#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "nilcent/nilpotent.hpp"
#include "nilcent/random.hpp"
#include "nilcent/verifier.hpp"

namespace nilcent::testing {

/// Jordan block with ones on the superdiagonal.
template <class K>
Matrix<K> jordan_block(const K& f, std::size_t n) {
  Matrix<K> m(f, n, n);
  for (std::size_t i = 0; i + 1 < n; ++i) m(i, i + 1) = f.one();
  return m;
}

template <class K>
Matrix<K> direct_sum(const std::vector<Matrix<K>>& blocks) {
  const K& f = blocks.front().field();
  std::size_t n = 0;
  for (const auto& b : blocks) n += b.rows();
  Matrix<K> m(f, n, n);
  std::size_t off = 0;
  for (const auto& b : blocks) {
    for (std::size_t r = 0; r < b.rows(); ++r)
      for (std::size_t c = 0; c < b.cols(); ++c) m(off + r, off + c) = b(r, c);
    off += b.rows();
  }
  return m;
}

template <class K>
Matrix<K> jordan_matrix(const K& f, const std::vector<std::size_t>& parts) {
  std::vector<Matrix<K>> blocks;
  for (auto p : parts) blocks.push_back(jordan_block(f, p));
  return direct_sum(blocks);
}

/// Leibniz expansion; only for small n.
template <class K>
typename K::value_type leibniz_determinant(const Matrix<K>& m) {
  const std::size_t n = m.rows();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  auto total = m.field().zero();
  do {
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    auto term = m.field().one();
    for (std::size_t i = 0; i < n; ++i) term = term * m(i, perm[i]);
    total = inversions % 2 ? total - term : total + term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

/// Partition read off the ranks of A^k alone: the number of parts >= k is
/// rank A^{k-1} - rank A^k.
template <class K>
Partition partition_by_ranks(const Matrix<K>& a) {
  const std::size_t n = a.rows();
  std::vector<std::size_t> ranks{n};
  Matrix<K> p = Matrix<K>::identity(a.field(), n);
  while (ranks.back() > 0) {
    p = p * a;
    ranks.push_back(rank(p));
    if (ranks.size() > n + 2) throw std::runtime_error("not nilpotent");
  }
  std::vector<std::size_t> counts;
  for (std::size_t k = 1; k < ranks.size(); ++k) counts.push_back(ranks[k - 1] - ranks[k]);
  return Partition::from_conjugate(counts);
}

template <class K>
Matrix<K> random_matrix(const K& f, std::size_t r, std::size_t c, Rng& rng) {
  Matrix<K> m(f, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = random_scalar(f, rng);
  return m;
}

template <class K>
std::pair<Matrix<K>, Matrix<K>> random_invertible(const K& f, std::size_t n, Rng& rng) {
  for (;;) {
    Matrix<K> s = random_matrix(f, n, n, rng);
    if (auto inv = inverse(s)) return {s, *inv};
  }
}

/// S U S^{-1} with U strictly upper triangular of random density.
template <class K>
Matrix<K> random_nilpotent(const K& f, std::size_t n, Rng& rng) {
  Matrix<K> u(f, n, n);
  const std::uint64_t density = 1 + rng.below(4);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (rng.chance(density, 4)) u(i, j) = random_scalar(f, rng);
  const auto [s, si] = random_invertible(f, n, rng);
  return s * u * si;
}

inline long long binomial(long long m, long long j) {
  long long r = 1;
  for (long long k = 1; k <= j; ++k) r = r * (m - j + k) / k;
  return r;
}

}  // namespace nilcent::testing
