#include "nilcent/roots.hpp"

#include <algorithm>
#include <set>

#include "nilcent/random.hpp"

namespace nilcent {

namespace {

constexpr std::uint32_t kExhaustiveBound = 1U << 16U;
constexpr unsigned long kTrialDivisionBound = 1000000UL;

void split_roots(const Polynomial<PrimeField>& g, Rng& rng, std::vector<Fp>& out) {
  const PrimeField& f = g.field();
  if (g.degree() <= 0) return;
  if (g.degree() == 1) {
    out.push_back(-g.monic().coeff(0));
    return;
  }
  const std::uint32_t p = f.prime();
  for (;;) {
    const Polynomial<PrimeField> shifted(f, {Fp(rng.below(p), p), f.one()});
    Polynomial<PrimeField> h = powmod(shifted, (static_cast<std::uint64_t>(p) - 1) / 2, g);
    h -= Polynomial<PrimeField>::one(f);
    const Polynomial<PrimeField> d = gcd(h, g);
    if (d.degree() > 0 && d.degree() < g.degree()) {
      split_roots(d, rng, out);
      split_roots(g / d, rng, out);
      return;
    }
  }
}

std::vector<mpz_class> prime_factors(mpz_class n) {
  std::vector<mpz_class> primes;
  if (n < 0) n = -n;
  for (unsigned long d = 2; d <= kTrialDivisionBound && d * d <= n; ++d) {
    if (mpz_divisible_ui_p(n.get_mpz_t(), d) == 0) continue;
    primes.emplace_back(d);
    while (mpz_divisible_ui_p(n.get_mpz_t(), d) != 0) n /= d;
  }
  if (n > 1) primes.push_back(n);
  return primes;
}

std::vector<mpz_class> divisors(const mpz_class& n) {
  std::vector<mpz_class> divs{mpz_class(1)};
  mpz_class m = abs(n);
  for (const auto& p : prime_factors(m)) {
    const std::size_t base = divs.size();
    mpz_class pk = p;
    while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t()) != 0) {
      m /= p;
      for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
      pk *= p;
    }
  }
  return divs;
}

}  // namespace

std::vector<Fp> find_roots(const Polynomial<PrimeField>& f) {
  if (f.is_zero()) throw PreconditionError(PreconditionError::Kind::BadIndex, "roots of the zero polynomial");
  const PrimeField& field = f.field();
  const std::uint32_t p = field.prime();
  std::vector<Fp> roots;
  if (f.degree() <= 0) return roots;
  if (p <= kExhaustiveBound) {
    for (std::uint32_t s = 0; s < p; ++s) {
      if (f(Fp(s, p)).is_zero()) roots.emplace_back(s, p);
    }
    return roots;
  }
  const Polynomial<PrimeField> t = Polynomial<PrimeField>::variable(field);
  const Polynomial<PrimeField> frob = powmod(t, p, f.monic()) - t;
  const Polynomial<PrimeField> g = gcd(frob, f);
  Rng rng(0x5eedULL);
  split_roots(g, rng, roots);
  std::sort(roots.begin(), roots.end(), [](const Fp& a, const Fp& b) { return a.residue() < b.residue(); });
  return roots;
}

std::vector<Rational> find_roots(const Polynomial<RationalField>& f) {
  if (f.is_zero()) throw PreconditionError(PreconditionError::Kind::BadIndex, "roots of the zero polynomial");
  std::set<Rational> roots;
  if (f.degree() <= 0) return {};

  // primitive integer multiple
  mpz_class lcm_den = 1;
  for (const auto& c : f.coefficients()) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.denominator().get_mpz_t());
  std::vector<mpz_class> ints;
  for (const auto& c : f.coefficients()) ints.push_back(c.numerator() * (lcm_den / c.denominator()));
  std::size_t low = 0;
  while (ints[low] == 0) ++low;
  if (low > 0) roots.insert(Rational(0));

  const mpz_class& constant = ints[low];
  const mpz_class& lead = ints.back();
  const auto nums = divisors(constant);
  const auto dens = divisors(lead);
  for (const auto& u : nums) {
    for (const auto& v : dens) {
      for (int sign : {1, -1}) {
        const Rational cand(mpz_class(sign * u), v);
        if (f(cand).is_zero()) roots.insert(cand);
      }
    }
  }
  return {roots.begin(), roots.end()};
}

}  // namespace nilcent
