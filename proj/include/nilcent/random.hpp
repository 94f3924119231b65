#pragma once

#include <cstdint>
#include <random>

#include "nilcent/prime_field.hpp"
#include "nilcent/rational.hpp"

namespace nilcent {

/// Seeded generator. Draws use mt19937_64 output directly (not the
/// implementation-defined std distributions) so sequences are identical on
/// every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, bound).
  std::uint64_t below(std::uint64_t bound) { return bound == 0 ? 0 : engine_() % bound; }
  /// Uniform in [lo, hi].
  long long between(long long lo, long long hi) {
    return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }
  bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }

 private:
  std::mt19937_64 engine_;
};

/// Independent stream for item `index` of a run seeded with `seed`.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30U)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27U)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31U);
}

inline Rational random_scalar(const RationalField&, Rng& rng) { return Rational(static_cast<long>(rng.between(-3, 3))); }
inline Fp random_scalar(const PrimeField& f, Rng& rng) { return Fp(rng.below(f.prime()), f.prime()); }

template <class K>
typename K::value_type random_nonzero_scalar(const K& field, Rng& rng) {
  for (;;) {
    auto x = random_scalar(field, rng);
    if (!x.is_zero()) return x;
  }
}

}  // namespace nilcent
