#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

using namespace nilcent;
using namespace nilcent::testing;

namespace {
const RationalField Q;
}

TEST_CASE("nilpotency index") {
  CHECK(nilpotency_index(Matrix<RationalField>(Q, 4, 4)) == std::optional<std::size_t>(1));
  CHECK(nilpotency_index(Matrix<RationalField>(Q, 0, 0)) == std::optional<std::size_t>(0));
  CHECK(nilpotency_index(jordan_block(Q, 5)) == std::optional<std::size_t>(5));
  CHECK_FALSE(nilpotency_index(Matrix<RationalField>::identity(Q, 3)).has_value());
  CHECK_THROWS_AS(partition_of(Matrix<RationalField>::identity(Q, 2)), PreconditionError);
  CHECK_THROWS_AS(nilpotency_index(Matrix<RationalField>(Q, 2, 3)), PreconditionError);
}

TEST_CASE("exponent of a vector") {
  const auto j3 = jordan_block(Q, 3);
  CHECK(exponent(j3, Vector<RationalField>(3, Q.zero())) == 0);
  CHECK(exponent(j3, unit_vector(Q, 3, 2)) == 3);
  CHECK(exponent(j3, unit_vector(Q, 3, 0)) == 1);

  const auto pair = example_pair(Q, 5);
  const auto a = pencil(pair.x, pair.y);
  const FunctionField<RationalField> ff(Q);
  Vector<FunctionField<RationalField>> w1(10, ff.zero());
  w1[0] = ff.one();
  CHECK(exponent(a, w1) == 6);
}

TEST_CASE("partitions of the example pencil") {
  CHECK(partition_of(Matrix<RationalField>(Q, 3, 3)) == Partition({1, 1, 1}));
  const auto over_q = example_pair(Q, 5);
  CHECK(partition_of(pencil(over_q.x, over_q.y)) == Partition({6, 4}));
  const PrimeField f5(5);
  const auto over_f5 = example_pair(f5, 5);
  CHECK(partition_of(pencil(over_f5.x, over_f5.y)) == Partition({5, 5}));
}

TEST_CASE("chain basis of small cases") {
  const auto a = jordan_matrix(Q, {3, 1});
  const auto basis = chain_basis(a);
  CHECK(basis.exponents() == Partition({3, 1}));
  CHECK(inverse(basis.chain_matrix()).has_value());
  CHECK(basis.chain_matrix() * basis.chain_inverse() == Matrix<RationalField>::identity(Q, 4));

  const FunctionField<RationalField> ff(Q);
  const auto j2 = jordan_block(Q, 2);
  const auto scaled = embed_over_function_field(j2) * (ff.one() + ff.t());
  const auto fb = chain_basis(scaled);
  CHECK(fb.exponents() == Partition({2}));
  CHECK(fb.chain_count() == 1);

  const auto empty = chain_basis(Matrix<RationalField>(Q, 0, 0));
  CHECK(empty.chain_count() == 0);
}

TEST_CASE("chain basis is deterministic and agrees with the rank oracle") {
  const PrimeField f7(7);
  Rng rng(7);
  for (int i = 0; i < 60; ++i) {
    const auto a = random_nilpotent(f7, 1 + rng.below(8), rng);
    const auto b1 = chain_basis(a);
    const auto b2 = chain_basis(a);
    CHECK(b1.chain_matrix() == b2.chain_matrix());
    CHECK(b1.exponents() == partition_by_ranks(a));
    CHECK(b1.exponents() == partition_of(a));
    // A maps each chain column to the next one and the last to zero.
    const auto& c = b1.chain_matrix();
    for (std::size_t col = 0; col < c.cols(); ++col) {
      const std::size_t ch = b1.chain_of_column(col);
      const bool last = col + 1 == b1.offset(ch) + b1.exponents()[ch];
      if (last) {
        CHECK(is_zero_vector<PrimeField>(a * c.column(col)));
      } else {
        CHECK(a * c.column(col) == c.column(col + 1));
      }
    }
  }
}

TEST_CASE("partition is a conjugation invariant") {
  Rng rng(8);
  const PrimeField f3(3);
  for (int i = 0; i < 40; ++i) {
    const std::size_t n = 1 + rng.below(7);
    const auto a = random_nilpotent(f3, n, rng);
    const auto [s, si] = random_invertible(f3, n, rng);
    CHECK(partition_of(s * a * si) == partition_of(a));
  }
}

TEST_CASE("exhaustive 2x2 and 3x3 nilpotent partitions over F_2") {
  // brute-force oracle: the partition is (n) iff A^{n-1} != 0, (1^n) iff A = 0
  const PrimeField f2(2);
  for (std::size_t n : {2U, 3U}) {
    std::size_t total = 1;
    for (std::size_t k = 0; k < n * n; ++k) total *= 2;
    std::size_t nilpotent = 0;
    for (std::size_t code = 0; code < total; ++code) {
      Matrix<PrimeField> a(f2, n, n);
      for (std::size_t k = 0; k < n * n; ++k) a(k / n, k % n) = f2.from_int(static_cast<long long>((code >> k) & 1U));
      if (!power(a, n).is_zero()) continue;
      ++nilpotent;
      const Partition p = chain_basis(a).exponents();
      CHECK(p.size() == n);
      if (a.is_zero()) {
        CHECK(p == Partition(std::vector<std::size_t>(n, 1)));
      } else if (!power(a, n - 1).is_zero()) {
        CHECK(p == Partition({n}));
      } else {
        CHECK(p == Partition({n - 1, 1}));
      }
    }
    // Fine-Herstein: q^{n(n-1)} nilpotent matrices
    CHECK(nilpotent == (n == 2 ? 4U : 64U));
  }
}

TEST_CASE("expand in chains") {
  const auto a = jordan_matrix(Q, {2, 1});
  const auto basis = chain_basis(a);
  const auto av1 = a * basis.tops()[0];
  const auto coords = expand_in_chains(basis, av1);
  for (std::size_t j = 0; j < basis.chain_count(); ++j)
    for (std::size_t l = 0; l < basis.exponents()[j]; ++l)
      CHECK(coords.coefficient(l, j) == (j == 0 && l == 1 ? Q.one() : Q.zero()));
  const auto zero = expand_in_chains(basis, Vector<RationalField>(3, Q.zero()));
  for (const auto& chain : zero.by_chain)
    for (const auto& c : chain) CHECK(c.is_zero());

  const PrimeField f5(5);
  Rng rng(9);
  for (int i = 0; i < 30; ++i) {
    const std::size_t n = 1 + rng.below(6);
    const auto m = random_nilpotent(f5, n, rng);
    const auto b = chain_basis(m);
    Vector<PrimeField> w;
    for (std::size_t k = 0; k < n; ++k) w.push_back(random_scalar(f5, rng));
    const auto cc = expand_in_chains(b, w);
    Vector<PrimeField> back(n, f5.zero());
    for (std::size_t j = 0; j < b.chain_count(); ++j) {
      auto v = b.tops()[j];
      for (std::size_t l = 0; l < b.exponents()[j]; ++l) {
        for (std::size_t k = 0; k < n; ++k) back[k] = back[k] + cc.coefficient(l, j) * v[k];
        v = m * v;
      }
    }
    CHECK(back == w);
  }
}

TEST_CASE("from_tops validation") {
  const auto j3 = jordan_block(Q, 3);
  CHECK_THROWS_AS(ChainBasis<RationalField>::from_tops(j3, {unit_vector(Q, 3, 1)}), PreconditionError);
  CHECK_THROWS_AS(ChainBasis<RationalField>::from_tops(j3, {Vector<RationalField>(3, Q.zero())}), PreconditionError);
  const auto a = jordan_matrix(Q, {1, 2});
  CHECK_THROWS_AS(ChainBasis<RationalField>::from_tops(a, {unit_vector(Q, 3, 0), unit_vector(Q, 3, 2)}), PreconditionError);
  CHECK_NOTHROW(ChainBasis<RationalField>::from_tops(a, {unit_vector(Q, 3, 2), unit_vector(Q, 3, 0)}));
}

TEST_CASE("surgery") {
  const auto a = jordan_matrix(Q, {2, 2});
  const auto basis = ChainBasis<RationalField>::from_tops(a, {unit_vector(Q, 4, 1), unit_vector(Q, 4, 3)});

  // B = A has B_0 = 0
  CHECK_THROWS_AS(surgery_replace(basis, a, 0), PreconditionError);
  // B maps chain 1 onto chain 2
  Matrix<RationalField> b(Q, 4, 4);
  b(2, 0) = Q.one();
  b(3, 1) = Q.one();
  CHECK(commutator(a, b).is_zero());
  const auto out = surgery_replace(basis, b, 0);
  CHECK(out.exponents() == basis.exponents());
  CHECK(out.tops()[1] == b * basis.tops()[0]);
  CHECK(out.tops()[0] == basis.tops()[0]);
  CHECK(exponent(a, b * basis.tops()[0]) == 2);

  CHECK_THROWS_AS(surgery_replace(basis, b, 5), PreconditionError);
  CHECK_THROWS_AS(surgery_replace(basis, Matrix<RationalField>::identity(Q, 4), 0), PreconditionError);
  Matrix<RationalField> noncommuting(Q, 4, 4);
  noncommuting(1, 0) = Q.one();
  CHECK_THROWS_AS(surgery_replace(basis, noncommuting, 0), PreconditionError);
}

TEST_CASE("recognizing a partition") {
  const auto a = jordan_matrix(Q, {2, 2});
  const auto basis = chain_basis(a);
  CHECK(recognizes_partition(a, ChainCandidate<RationalField>{basis.tops(), basis.exponents()}));

  const auto v1 = unit_vector(Q, 4, 1);
  auto v2 = unit_vector(Q, 4, 3);
  const auto av1 = a * v1;
  for (std::size_t k = 0; k < 4; ++k) v2[k] = v2[k] + av1[k];
  CHECK(recognizes_partition(a, ChainCandidate<RationalField>{{v1, v2}, Partition({2, 2})}));

  const auto j3 = jordan_block(Q, 3);
  bool rejected = false;
  try {
    rejected = !recognizes_partition(j3, ChainCandidate<RationalField>{{unit_vector(Q, 3, 2), unit_vector(Q, 3, 0)},
                                                                       Partition({2, 1})});
  } catch (const PreconditionError&) {
    rejected = true;
  }
  CHECK(rejected);

  // too few chain vectors
  CHECK_THROWS_AS(recognizes_partition(j3, ChainCandidate<RationalField>{{unit_vector(Q, 3, 2)}, Partition({2, 1})}),
                  PreconditionError);
}
