#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "nilcent/grading.hpp"
#include "nilcent/random.hpp"
#include "nilcent/rational_function.hpp"
#include "nilcent/roots.hpp"

namespace nilcent {

// ---------------------------------------------------------------------------
// Pencils over K(t)

/// M over K viewed over K(t) (constant entries).
template <class K>
Matrix<FunctionField<K>> embed_over_function_field(const Matrix<K>& m) {
  const FunctionField<K> ff(m.field());
  return m.template map<FunctionField<K>>(ff, [&](const typename K::value_type& x) { return ff.constant(x); });
}

/// A = X + tY over K(t).
template <class K>
Matrix<FunctionField<K>> pencil(const Matrix<K>& x, const Matrix<K>& y) {
  const FunctionField<K> ff(x.field());
  return embed_over_function_field(x) + embed_over_function_field(y) * ff.t();
}

/// Entrywise substitution t = s. Throws ArithmeticError(Pole) if any entry has a pole at s.
template <class K>
Matrix<K> specialize(const Matrix<FunctionField<K>>& m, const typename K::value_type& s) {
  const K& base = m.field().base();
  return m.template map<K>(base, [&](const RationalFunction<K>& f) { return f(s); });
}

// ---------------------------------------------------------------------------
// Commuting pairs

/// Nilpotent X, Y over K with [X, Y] = 0.
template <class K>
struct CommutingPair {
  Matrix<K> x;
  Matrix<K> y;

  std::size_t dimension() const { return x.rows(); }
  const K& field() const { return x.field(); }
};

/// Throws PreconditionError naming the first violated pair invariant.
template <class K>
void validate_pair(const CommutingPair<K>& pair) {
  require_square(pair.x, "X");
  require_square(pair.y, "Y");
  if (pair.x.rows() != pair.y.rows()) {
    throw PreconditionError(PreconditionError::Kind::DimensionMismatch, "pair invariant violated: X and Y differ in size");
  }
  if (!(pair.x.field() == pair.y.field())) {
    throw PreconditionError(PreconditionError::Kind::BadField, "pair invariant violated: X and Y over different fields");
  }
  if (!commutator(pair.x, pair.y).is_zero()) {
    throw PreconditionError(PreconditionError::Kind::NotCommuting, "pair invariant violated: [X,Y] != 0");
  }
  if (!is_nilpotent(pair.x)) throw PreconditionError(PreconditionError::Kind::NotNilpotent, "pair invariant violated: X is not nilpotent");
  if (!is_nilpotent(pair.y)) throw PreconditionError(PreconditionError::Kind::NotNilpotent, "pair invariant violated: Y is not nilpotent");
}

// ---------------------------------------------------------------------------
// Theorem check

struct TheoremReport {
  std::uint32_t characteristic = 0;
  bool hypothesis_ok = false;
  std::string hypothesis_reason;
  std::size_t pencil_nilpotency_index = 0;  ///< least n with (X + tY)^n = 0
  Partition partition_generic;             ///< partition of X + tY over K(t)
  MembershipVerdict x_verdict;
  MembershipVerdict y_verdict;
  bool conclusion_holds = false;  ///< X and Y both in Lie R_uC

  /// Hypothesis held but the conclusion failed: a counterexample.
  bool violates_theorem() const { return hypothesis_ok && !conclusion_holds; }
};

/// Builds A = X + tY over K(t), checks A^{p-1} = 0 when p > 0, and decides
/// whether X and Y lie in Lie R_uC for the centralizer C of A, using the
/// grading of the canonical A-basis.
template <class K>
TheoremReport verify_theorem(const CommutingPair<K>& pair) {
  validate_pair(pair);
  using FF = FunctionField<K>;
  const Matrix<FF> a = pencil(pair.x, pair.y);

  TheoremReport report;
  report.characteristic = pair.field().characteristic();
  const ChainBasis<FF> basis = chain_basis(a);
  report.partition_generic = basis.exponents();
  report.pencil_nilpotency_index = report.partition_generic.largest();

  const std::uint32_t p = report.characteristic;
  if (p == 0) {
    report.hypothesis_ok = true;
    report.hypothesis_reason = "characteristic 0";
  } else {
    const bool vanishes = power(a, p - 1).is_zero();
    // A^{p-1} = 0 exactly when the largest Jordan block has size <= p - 1.
    if (vanishes != (report.partition_generic.largest() <= p - 1)) {
      throw std::logic_error("A^{p-1} test disagrees with the partition of A");
    }
    report.hypothesis_ok = vanishes;
    report.hypothesis_reason = vanishes ? "A^" + std::to_string(p - 1) + " = 0 verified"
                                        : "A^" + std::to_string(p - 1) + " != 0 (nilpotency index " +
                                              std::to_string(report.pencil_nilpotency_index) + ")";
  }

  const Grading<FF> grading(basis);
  report.x_verdict = membership(grading, embed_over_function_field(pair.x));
  report.y_verdict = membership(grading, embed_over_function_field(pair.y));
  report.conclusion_holds = report.x_verdict.in_radical_lie && report.y_verdict.in_radical_lie;
  return report;
}

// ---------------------------------------------------------------------------
// Exceptional locus

template <class K>
struct LocusReport {
  Polynomial<K> polynomial;                     ///< monic
  std::vector<typename K::value_type> roots;    ///< distinct base-field roots
  std::vector<Polynomial<K>> unresolved;        ///< cofactor without base-field roots, if nonconstant
};

/// Clears denominators of a vector over K(t) and removes the content, so the
/// entries become coprime polynomials.
template <class K>
Vector<FunctionField<K>> primitive_part(const Vector<FunctionField<K>>& v) {
  if (v.empty()) return v;
  const K& base = v.front().base_field();
  Polynomial<K> den = Polynomial<K>::one(base);
  for (const auto& x : v) {
    const Polynomial<K>& d = x.denominator();
    den = den * (d / gcd(den, d));
  }
  Polynomial<K> content(base);
  std::vector<Polynomial<K>> nums;
  for (const auto& x : v) {
    nums.push_back(x.numerator() * (den / x.denominator()));
    content = gcd(content, nums.back());
  }
  Vector<FunctionField<K>> out;
  for (auto& n : nums) out.emplace_back(n / content);
  return out;
}

/// Candidate exceptional set on the affine chart a != 0 of P^1: the
/// determinant of the chain-vector matrix of the canonical (X + tY)-basis,
/// after each chain top is made a primitive polynomial vector. Away from its
/// roots the specialized chains stay an (X + sY)-basis with the generic
/// partition.
template <class K>
LocusReport<K> exceptional_locus(const CommutingPair<K>& pair) {
  validate_pair(pair);
  using FF = FunctionField<K>;
  const Matrix<FF> a = pencil(pair.x, pair.y);
  const ChainBasis<FF> basis = chain_basis(a);

  std::vector<Vector<FF>> tops;
  for (const auto& v : basis.tops()) tops.push_back(primitive_part<K>(v));
  const ChainBasis<FF> cleared = ChainBasis<FF>::from_tops(a, std::move(tops));
  const RationalFunction<K> det = determinant(cleared.chain_matrix());
  if (!det.is_polynomial()) throw std::logic_error("chain determinant of polynomial chains has a denominator");

  LocusReport<K> out{det.numerator().monic(), {}, {}};
  if (out.polynomial.is_zero()) out.polynomial = Polynomial<K>::one(pair.field());
  out.roots = find_roots(out.polynomial);
  Polynomial<K> rest = divide_out_roots(out.polynomial, out.roots);
  if (rest.degree() > 0) out.unresolved.push_back(rest);
  return out;
}

// ---------------------------------------------------------------------------
// Scan over P^1

template <class K>
struct PointSample {
  bool at_infinity = false;                 ///< the point (0:1), i.e. Y itself
  std::optional<typename K::value_type> s;  ///< the point (1:s)
  Partition partition;
  bool is_generic = false;
};

template <class K>
struct ScanReport {
  Partition generic_partition;
  std::vector<PointSample<K>> samples;
  std::vector<typename K::value_type> exceptional_points;  ///< finite s with a non-generic partition
  bool infinity_exceptional = false;
  LocusReport<K> locus;
  /// Order of vanishing at u = 0 of the locus of the swapped pencil Y + uX.
  std::size_t infinity_multiplicity = 0;
  std::size_t dominance_violations = 0;  ///< samples not dominated by the generic partition
  std::size_t locus_violations = 0;      ///< non-generic samples that are not locus roots

  /// Degree of the locus as a divisor on P^1.
  std::size_t projective_degree() const {
    return static_cast<std::size_t>(locus.polynomial.degree()) + infinity_multiplicity;
  }

  std::size_t generic_count() const {
    return static_cast<std::size_t>(
        std::count_if(samples.begin(), samples.end(), [](const auto& s) { return s.is_generic; }));
  }
};

/// Default sample set: every element of F_p when p <= 1000, else 0..1000;
/// the integers -20..20 over Q.
inline std::vector<Fp> default_sample_points(const PrimeField& f) {
  std::vector<Fp> pts;
  const std::uint32_t n = f.prime() <= 1000 ? f.prime() : 1001;
  for (std::uint32_t s = 0; s < n; ++s) pts.emplace_back(s, f.prime());
  return pts;
}
inline std::vector<Rational> default_sample_points(const RationalField&) {
  std::vector<Rational> pts;
  for (long s = -20; s <= 20; ++s) pts.emplace_back(s);
  return pts;
}

/// Partitions of aX + bY at (0:1) and at (1:s) for each sample s, compared
/// with the generic partition of X + tY, plus dominance and locus checks.
template <class K>
ScanReport<K> scan_p1(const CommutingPair<K>& pair, const std::vector<typename K::value_type>& points) {
  validate_pair(pair);
  using FF = FunctionField<K>;
  const Matrix<FF> a = pencil(pair.x, pair.y);

  ScanReport<K> report{partition_of(a), {}, {}, false, exceptional_locus(pair), 0, 0, 0};
  const LocusReport<K> swapped = exceptional_locus(CommutingPair<K>{pair.y, pair.x});
  while (swapped.polynomial.coeff(report.infinity_multiplicity).is_zero()) ++report.infinity_multiplicity;
  auto record = [&](PointSample<K> sample) {
    sample.is_generic = sample.partition == report.generic_partition;
    if (!sample.partition.dominated_by(report.generic_partition)) ++report.dominance_violations;
    if (!sample.is_generic) {
      if (sample.at_infinity) {
        report.infinity_exceptional = true;
        if (report.infinity_multiplicity == 0) ++report.locus_violations;
      } else {
        report.exceptional_points.push_back(*sample.s);
        if (!report.locus.polynomial(*sample.s).is_zero()) ++report.locus_violations;
      }
    }
    report.samples.push_back(std::move(sample));
  };

  record(PointSample<K>{true, std::nullopt, partition_of(pair.y), false});
  for (const auto& s : points) record(PointSample<K>{false, s, partition_of(specialize(a, s)), false});
  return report;
}

template <class K>
ScanReport<K> scan_p1(const CommutingPair<K>& pair) {
  return scan_p1(pair, default_sample_points(pair.field()));
}

// ---------------------------------------------------------------------------
// Pair generators

struct PairGeneratorSpec {
  enum class Kind { CommutantSample, GroupAlgebra, BlockShift };

  Kind kind = Kind::CommutantSample;
  std::size_t dimension = 4;  ///< exact size (commutant), upper bound (group algebra); unused for the example
  std::uint64_t seed = 0;
  std::size_t d = 2;  ///< block size of the example pair
  std::size_t r = 2;  ///< rank of the elementary abelian group
};

/// The pair X = X' ⊕ X' (X' regular nilpotent of size d, X' v_i = v_{i+1})
/// and Y(v, w) = (0, v) on V ⊕ V.
template <class K>
CommutingPair<K> example_pair(const K& field, std::size_t d) {
  const std::size_t n = 2 * d;
  Matrix<K> x(field, n, n);
  Matrix<K> y(field, n, n);
  for (std::size_t i = 0; i + 1 < d; ++i) {
    x(i + 1, i) = field.one();
    x(d + i + 1, d + i) = field.one();
  }
  for (std::size_t i = 0; i < d; ++i) y(d + i, i) = field.one();
  return {std::move(x), std::move(y)};
}

/// Random strictly upper-triangular X and a random element Y of its
/// strictly upper-triangular commutant.
template <class K>
CommutingPair<K> commutant_sample(const K& field, std::size_t n, Rng& rng) {
  static constexpr std::uint64_t kDensity[] = {1, 2, 3, 4};
  const std::uint64_t density = kDensity[rng.below(4)];
  Matrix<K> x(field, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (rng.chance(density, 4)) x(i, j) = random_nonzero_scalar(field, rng);
    }
  }
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) slots.emplace_back(i, j);
  }
  // column k of the commutator map is vec([X, E_{slot k}])
  Matrix<K> map(field, n * n, slots.size());
  for (std::size_t k = 0; k < slots.size(); ++k) {
    const auto [i, j] = slots[k];
    for (std::size_t r = 0; r < n; ++r) {
      if (!x(r, i).is_zero()) map(r * n + j, k) += x(r, i);  // X E_ij
    }
    for (std::size_t c = 0; c < n; ++c) {
      if (!x(j, c).is_zero()) map(i * n + c, k) -= x(j, c);  // E_ij X
    }
  }
  Matrix<K> y(field, n, n);
  for (const auto& b : rank_and_nullspace(map).nullspace) {
    const auto coeff = random_scalar(field, rng);
    if (coeff.is_zero()) continue;
    for (std::size_t k = 0; k < slots.size(); ++k) {
      if (!b[k].is_zero()) y(slots[k].first, slots[k].second) += coeff * b[k];
    }
  }
  return {std::move(x), std::move(y)};
}

/// Multiplication by g_1 - 1 and g_2 - 1 on a monomial quotient of
/// K[(Z/p)^r] = K[x_1..x_r]/(x_i^p) (x_i = g_i - 1). The quotient keeps all
/// monomials in x_1, x_2 (dimension >= p^2 when r >= 2) and a random
/// order ideal of the rest. For r = 1, Y is multiplication by g_1^k - 1.
template <class K>
CommutingPair<K> group_algebra_pair(const K& field, std::size_t max_dim, std::size_t r, Rng& rng) {
  const std::uint32_t p = field.characteristic();
  if (p == 0) throw PreconditionError(PreconditionError::Kind::Infeasible, "group-algebra pairs need characteristic p > 0");
  if (r == 0) throw PreconditionError(PreconditionError::Kind::Infeasible, "group rank r must be positive");
  using Mono = std::vector<std::size_t>;
  std::size_t full = 1;
  for (std::size_t i = 0; i < r && full <= max_dim; ++i) full *= p;
  const std::size_t floor_dim = r >= 2 ? static_cast<std::size_t>(p) * p : 1;
  if (max_dim < floor_dim) {
    throw PreconditionError(PreconditionError::Kind::Infeasible,
                            "dimension " + std::to_string(max_dim) + " < p^2 = " + std::to_string(floor_dim));
  }

  std::set<Mono> stair;
  if (r >= 2) {
    for (std::size_t a = 0; a < p; ++a) {
      for (std::size_t b = 0; b < p; ++b) {
        Mono m(r, 0);
        m[0] = a;
        m[1] = b;
        stair.insert(m);
      }
    }
  } else {
    stair.insert(Mono{0});
  }
  const std::size_t cap = std::min(max_dim, full);
  const std::size_t target = floor_dim + rng.below(cap - floor_dim + 1);
  while (stair.size() < target) {
    std::vector<Mono> addable;
    for (const auto& m : stair) {
      for (std::size_t i = 0; i < r; ++i) {
        Mono up = m;
        if (++up[i] >= p || stair.count(up) != 0) continue;
        bool closed = true;
        for (std::size_t k = 0; k < r && closed; ++k) {
          if (up[k] == 0) continue;
          Mono down = up;
          --down[k];
          closed = stair.count(down) != 0;
        }
        if (closed) addable.push_back(up);
      }
    }
    std::sort(addable.begin(), addable.end());
    addable.erase(std::unique(addable.begin(), addable.end()), addable.end());
    stair.insert(addable[rng.below(addable.size())]);
  }

  const std::vector<Mono> basis(stair.begin(), stair.end());
  const std::size_t n = basis.size();
  auto shift = [&](const Mono& by) {
    Matrix<K> m(field, n, n);
    for (std::size_t c = 0; c < n; ++c) {
      Mono target_mono = basis[c];
      for (std::size_t i = 0; i < r; ++i) target_mono[i] += by[i];
      const auto it = std::lower_bound(basis.begin(), basis.end(), target_mono);
      if (it != basis.end() && *it == target_mono) m(static_cast<std::size_t>(it - basis.begin()), c) = field.one();
    }
    return m;
  };
  Mono e1(r, 0);
  e1[0] = 1;
  Matrix<K> x = shift(e1);
  Matrix<K> y(field, n, n);
  if (r >= 2) {
    Mono e2(r, 0);
    e2[1] = 1;
    y = shift(e2);
  } else {
    // (1 + x)^k - 1 = sum_{j>=1} C(k, j) x^j
    const std::size_t k = 1 + rng.below(p - 1 == 0 ? 1 : p - 1);
    auto binom = field.one();
    for (std::size_t j = 1; j <= k; ++j) {
      binom = binom * field.from_int(static_cast<long long>(k - j + 1)) / field.from_int(static_cast<long long>(j));
      Mono ej(1, j);
      y += shift(ej) * binom;
    }
  }
  return {std::move(x), std::move(y)};
}

template <class K>
CommutingPair<K> generate_pair(const K& field, const PairGeneratorSpec& spec) {
  Rng rng(spec.seed);
  CommutingPair<K> pair = [&] {
    switch (spec.kind) {
      case PairGeneratorSpec::Kind::CommutantSample:
        return commutant_sample(field, spec.dimension, rng);
      case PairGeneratorSpec::Kind::GroupAlgebra:
        return group_algebra_pair(field, spec.dimension, spec.r, rng);
      case PairGeneratorSpec::Kind::BlockShift:
        break;
    }
    if (spec.d == 0) throw PreconditionError(PreconditionError::Kind::Infeasible, "example needs d >= 1");
    return example_pair(field, spec.d);
  }();
  validate_pair(pair);
  return pair;
}

// ---------------------------------------------------------------------------
// Stress runs

struct StressOptions {
  std::size_t count = 100;
  std::size_t min_dim = 2;
  std::size_t max_dim = 6;
  std::uint64_t seed = 0;
  PairGeneratorSpec::Kind kind = PairGeneratorSpec::Kind::CommutantSample;
  std::size_t d = 2;  ///< for the example kind
  std::size_t r = 2;  ///< for the group-algebra kind
  /// Resample (deterministically) until the pair meets the hypothesis.
  bool require_hypothesis = true;
  std::size_t max_attempts = 50;
};

struct StressSummary {
  std::size_t pairs = 0;
  std::size_t hypothesis_ok = 0;
  std::size_t concluded_true = 0;       ///< among hypothesis_ok
  std::size_t hypothesis_failed = 0;    ///< recorded, not an error
  std::size_t failed_but_concluded = 0; ///< hypothesis failed and conclusion still held
  std::size_t rejected = 0;             ///< resampled draws
  std::size_t dominance_failures = 0;   ///< partition of X or Y not dominated by the generic one
  std::size_t theorem_violations = 0;   ///< hypothesis_ok but conclusion false
  std::vector<std::string> notes;
  std::vector<Partition> partitions;    ///< generic partition per pair, in input order

  bool clean() const { return theorem_violations == 0 && dominance_failures == 0 && hypothesis_ok == concluded_true; }
};

template <class K>
StressSummary stress_suite(const K& field, const StressOptions& opt) {
  StressSummary sum;
  for (std::size_t i = 0; i < opt.count; ++i) {
    std::optional<CommutingPair<K>> pair;
    std::optional<TheoremReport> report;
    for (std::size_t attempt = 0; attempt < opt.max_attempts; ++attempt) {
      PairGeneratorSpec spec;
      spec.kind = opt.kind;
      spec.seed = derive_seed(derive_seed(opt.seed, i), attempt);
      spec.d = opt.d;
      spec.r = opt.r;
      Rng dim_rng(spec.seed ^ 0xd1dULL);
      spec.dimension = opt.min_dim + dim_rng.below(opt.max_dim - opt.min_dim + 1);
      pair = generate_pair(field, spec);
      report = verify_theorem(*pair);
      if (report->hypothesis_ok || !opt.require_hypothesis) break;
      ++sum.rejected;
    }
    ++sum.pairs;
    sum.partitions.push_back(report->partition_generic);
    if (report->hypothesis_ok) {
      ++sum.hypothesis_ok;
      if (report->conclusion_holds) {
        ++sum.concluded_true;
      } else {
        ++sum.theorem_violations;
        sum.notes.push_back("pair " + std::to_string(i) + ": hypothesis held, conclusion failed");
      }
    } else {
      ++sum.hypothesis_failed;
      if (report->conclusion_holds) ++sum.failed_but_concluded;
    }
    const Partition& g = report->partition_generic;
    if (!partition_of(pair->x).dominated_by(g) || !partition_of(pair->y).dominated_by(g)) {
      ++sum.dominance_failures;
      sum.notes.push_back("pair " + std::to_string(i) + ": endpoint partition not dominated by " + g.to_string());
    }
  }
  return sum;
}

}  // namespace nilcent
