#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nilcent/grading.hpp"
#include "nilcent/adjoint.hpp"
#include "support.hpp"

using namespace nilcent;
using namespace nilcent::testing;

namespace {
const RationalField Q;
}

TEST_CASE("weights of a chain basis") {
  const auto g = cocharacter_from(chain_basis(jordan_matrix(Q, {3, 1})));
  CHECK(g.weights() == std::vector<int>{-2, 0, 2, 0});
  const auto dims = g.weight_space_dims();
  CHECK(dims.at(-2) == 1);
  CHECK(dims.at(0) == 2);
  CHECK(dims.at(2) == 1);
}

TEST_CASE("decomposition") {
  const auto a = jordan_matrix(Q, {3, 2});
  const auto g = cocharacter_from(chain_basis(a));
  const auto da = decompose(g, a);
  REQUIRE(da.components.size() == 1);
  CHECK(da.components.count(2) == 1);
  const auto di = decompose(g, Matrix<RationalField>::identity(Q, 5));
  REQUIRE(di.components.size() == 1);
  CHECK(di.components.count(0) == 1);
  CHECK(decompose(g, Matrix<RationalField>(Q, 5, 5)).components.empty());

  Rng rng(3);
  for (int i = 0; i < 30; ++i) {
    const auto b = random_matrix(Q, 5, 5, rng);
    const auto d = decompose(g, b);
    Matrix<RationalField> sum(Q, 5, 5);
    for (const auto& [m, c] : d.components) sum = sum + c;
    CHECK(sum == b);
  }
}

TEST_CASE("membership") {
  const auto a = jordan_matrix(Q, {3, 1});
  const auto g = cocharacter_from(chain_basis(a));
  const MembershipVerdict self = membership(g, a);
  CHECK(self.commutes);
  CHECK(self.in_parabolic);
  CHECK_FALSE(self.in_levi_part);
  CHECK(self.in_radical_lie);

  const MembershipVerdict id = membership(g, Matrix<RationalField>::identity(Q, 4));
  CHECK(id.commutes);
  CHECK(id.in_levi_part);
  CHECK_FALSE(id.in_radical_lie);

  const PrimeField f5(5);
  const auto pair = example_pair(f5, 5);
  const auto ap = pencil(pair.x, pair.y);
  const auto gp = cocharacter_from(chain_basis(ap));
  const MembershipVerdict x = membership(gp, embed_over_function_field(pair.x));
  CHECK(x.commutes);
  CHECK(x.in_levi_part);
  CHECK_FALSE(x.in_radical_lie);
}

TEST_CASE("commutant lies in the parabolic") {
  const PrimeField f7(7);
  Rng rng(5);
  for (int i = 0; i < 30; ++i) {
    const std::size_t n = 1 + rng.below(6);
    const auto a = random_nilpotent(f7, n, rng);
    const auto g = cocharacter_from(chain_basis(a));
    for (const auto& v : rank_and_nullspace(build_adjoint(a).matrix).nullspace) {
      const auto b = unflatten(f7, n, v);
      CHECK(membership(g, b).in_parabolic);
    }
  }
}

TEST_CASE("conjugating the basis conjugates the grading") {
  // weights only depend on the partition, so any conjugate gets the same weight dims
  const PrimeField f3(3);
  Rng rng(6);
  for (int i = 0; i < 20; ++i) {
    const std::size_t n = 2 + rng.below(5);
    const auto a = random_nilpotent(f3, n, rng);
    const auto [s, si] = random_invertible(f3, n, rng);
    CHECK(cocharacter_from(chain_basis(a)).weight_space_dims() ==
          cocharacter_from(chain_basis(s * a * si)).weight_space_dims());
  }
}
