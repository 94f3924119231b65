#pragma once

#include <vector>

#include "nilcent/polynomial.hpp"
#include "nilcent/prime_field.hpp"
#include "nilcent/rational.hpp"

namespace nilcent {

/// Distinct roots in F_p, ascending by residue. Exhaustive evaluation for
/// small p, otherwise gcd with t^p - t followed by equal-degree splitting.
std::vector<Fp> find_roots(const Polynomial<PrimeField>& f);

/// Distinct rational roots, ascending, by the rational root test on the
/// primitive integer multiple of f. Candidate divisors come from trial
/// division; a cofactor left above the trial bound is treated as prime, so
/// roots whose numerator or denominator needs it may be missed.
std::vector<Rational> find_roots(const Polynomial<RationalField>& f);

/// f with every linear factor (t - r), r in roots, divided out completely.
template <class K>
Polynomial<K> divide_out_roots(Polynomial<K> f, const std::vector<typename K::value_type>& roots) {
  const K& field = f.field();
  for (const auto& r : roots) {
    const Polynomial<K> lin(field, {-r, field.one()});
    for (;;) {
      auto [q, rem] = Polynomial<K>::divmod(f, lin);
      if (!rem.is_zero()) break;
      f = std::move(q);
    }
  }
  return f;
}

}  // namespace nilcent
