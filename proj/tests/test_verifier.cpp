#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

using namespace nilcent;
using namespace nilcent::testing;

namespace {

const RationalField Q;

template <class K>
Matrix<K> e12(const K& f) {
  Matrix<K> m(f, 2, 2);
  m(0, 1) = f.one();
  return m;
}

}  // namespace

TEST_CASE("pair validation") {
  Matrix<RationalField> x(Q, 2, 2), y(Q, 2, 2);
  x(0, 1) = Q.one();
  y(1, 0) = Q.one();
  try {
    validate_pair(CommutingPair<RationalField>{x, y});
    FAIL("expected a precondition error");
  } catch (const PreconditionError& e) {
    CHECK(std::string(e.what()).find("[X,Y] != 0") != std::string::npos);
  }
  CHECK_THROWS_AS(validate_pair(CommutingPair<RationalField>{Matrix<RationalField>::identity(Q, 2), Matrix<RationalField>::identity(Q, 2)}),
                  PreconditionError);
  CHECK_THROWS_AS(validate_pair(CommutingPair<RationalField>{x, Matrix<RationalField>(Q, 3, 3)}), PreconditionError);
}

TEST_CASE("theorem check on the example") {
  const TheoremReport r = verify_theorem(example_pair(Q, 2));
  CHECK(r.hypothesis_ok);
  CHECK(r.partition_generic == Partition({3, 1}));
  CHECK(r.conclusion_holds);
  CHECK_FALSE(r.violates_theorem());

  const PrimeField f5(5);
  const TheoremReport m = verify_theorem(example_pair(f5, 5));
  CHECK_FALSE(m.hypothesis_ok);
  CHECK(m.partition_generic == Partition({5, 5}));
  CHECK_FALSE(m.x_verdict.in_radical_lie);
  CHECK_FALSE(m.violates_theorem());
}

TEST_CASE("theorem check with Y = 0") {
  const Matrix<RationalField> zero(Q, 3, 3);
  CHECK(verify_theorem(CommutingPair<RationalField>{zero, zero}).conclusion_holds);
  const TheoremReport r = verify_theorem(CommutingPair<RationalField>{jordan_block(Q, 3), zero});
  CHECK(r.hypothesis_ok);
  CHECK(r.x_verdict.in_radical_lie);
  CHECK_FALSE(r.y_verdict.in_levi_part);

  const PrimeField f3(3);
  const TheoremReport p = verify_theorem(CommutingPair<PrimeField>{jordan_block(f3, 3), Matrix<PrimeField>(f3, 3, 3)});
  CHECK_FALSE(p.hypothesis_ok);
}

TEST_CASE("exceptional locus") {
  const auto loc = exceptional_locus(CommutingPair<RationalField>{e12(Q), e12(Q)});
  CHECK(loc.polynomial.to_string() == "t + 1");
  REQUIRE(loc.roots.size() == 1);
  CHECK(loc.roots[0] == Q.from_int(-1));

  const auto none = exceptional_locus(CommutingPair<RationalField>{jordan_block(Q, 3), Matrix<RationalField>(Q, 3, 3)});
  CHECK(none.polynomial.degree() == 0);
  CHECK(none.roots.empty());

  const auto pair = example_pair(Q, 2);
  const auto scan = scan_p1(pair);
  for (const auto& s : scan.samples)
    if (!s.is_generic && !s.at_infinity) CHECK(exceptional_locus(pair).polynomial(*s.s).is_zero());
  CHECK(scan.locus_violations == 0);
}

TEST_CASE("scan over F_7") {
  const PrimeField f7(7);
  const auto r = scan_p1(CommutingPair<PrimeField>{e12(f7), e12(f7)});
  CHECK(r.samples.size() == 8);
  REQUIRE(r.exceptional_points.size() == 1);
  CHECK(r.exceptional_points[0] == f7.from_int(6));
  CHECK_FALSE(r.infinity_exceptional);
  CHECK(r.dominance_violations == 0);
  CHECK(r.generic_count() == 7);
  CHECK(r.projective_degree() == 1);
}

TEST_CASE("scan sees the point at infinity") {
  const PrimeField f11(11);
  const auto r = scan_p1(CommutingPair<PrimeField>{e12(f11), Matrix<PrimeField>(f11, 2, 2)});
  CHECK(r.infinity_exceptional);
  CHECK(r.infinity_multiplicity >= 1);
  CHECK(r.locus.polynomial.degree() == 0);
  CHECK(r.generic_count() == 11);
  CHECK(r.generic_count() + r.projective_degree() >= 12);
  CHECK(r.locus_violations == 0);
}

TEST_CASE("specializations agree with a brute-force pencil over F_5") {
  const PrimeField f5(5);
  Rng rng(12);
  for (int i = 0; i < 20; ++i) {
    const auto pair = commutant_sample(f5, 2 + rng.below(4), rng);
    const auto r = scan_p1(pair);
    for (const auto& s : r.samples) {
      const auto direct = s.at_infinity ? pair.y : pair.x + pair.y * *s.s;
      CHECK(s.partition == partition_by_ranks(direct));
    }
  }
}

TEST_CASE("generators") {
  const auto ex = example_pair(Q, 3);
  CHECK(ex.x == direct_sum(std::vector<Matrix<RationalField>>{jordan_block(Q, 3).transpose(), jordan_block(Q, 3).transpose()}));
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(ex.y(3 + i, i) == Q.one());
  }
  CHECK(ex.y.is_zero() == false);
  CHECK(power(ex.y, 2).is_zero());

  const PrimeField f7(7);
  PairGeneratorSpec spec;
  spec.kind = PairGeneratorSpec::Kind::CommutantSample;
  spec.dimension = 6;
  spec.seed = 42;
  const auto pair = generate_pair(f7, spec);
  CHECK_NOTHROW(validate_pair(pair));
  CHECK(pair.x.rows() == 6);
  const auto again = generate_pair(f7, spec);
  CHECK(again.x == pair.x);
  CHECK(again.y == pair.y);

  const PrimeField f3(3);
  spec.kind = PairGeneratorSpec::Kind::GroupAlgebra;
  spec.dimension = 9;
  spec.r = 2;
  const auto ga = generate_pair(f3, spec);
  CHECK(ga.x.rows() == 9);
  CHECK(commutator(ga.x, ga.y).is_zero());
  CHECK_FALSE(power(ga.x, 2).is_zero());
  CHECK(power(ga.x, 3).is_zero());
  CHECK(power(ga.y, 3).is_zero());

  spec.dimension = 8;
  CHECK_THROWS_AS(generate_pair(f3, spec), PreconditionError);
  CHECK_THROWS_AS(generate_pair(Q, spec), PreconditionError);

  spec.r = 1;
  spec.dimension = 3;
  const auto one = generate_pair(f3, spec);
  CHECK(commutator(one.x, one.y).is_zero());
}

TEST_CASE("group algebra pairs satisfy the theorem when the hypothesis holds") {
  Rng rng(13);
  for (std::uint32_t p : {2U, 3U}) {
    const PrimeField f(p);
    for (int i = 0; i < 10; ++i) {
      const auto pair = group_algebra_pair(f, p * p + 3, 2, rng);
      const TheoremReport r = verify_theorem(pair);
      CHECK_FALSE(r.violates_theorem());
    }
  }
}

TEST_CASE("stress suite") {
  StressOptions opt;
  opt.count = 200;
  opt.min_dim = 2;
  opt.max_dim = 8;
  opt.seed = 1;
  const StressSummary q = stress_suite(Q, opt);
  CHECK(q.pairs == 200);
  CHECK(q.concluded_true == 200);
  CHECK(q.dominance_failures == 0);
  CHECK(q.clean());

  const PrimeField f7(7);
  opt.max_dim = 6;
  const StressSummary p = stress_suite(f7, opt);
  CHECK(p.concluded_true == 200);
  CHECK(p.theorem_violations == 0);

  const PrimeField f5(5);
  StressOptions ex;
  ex.count = 5;
  ex.kind = PairGeneratorSpec::Kind::BlockShift;
  ex.d = 5;
  ex.require_hypothesis = false;
  const StressSummary e = stress_suite(f5, ex);
  CHECK(e.hypothesis_failed == 5);
  CHECK(e.failed_but_concluded == 0);
  CHECK(e.theorem_violations == 0);
}
