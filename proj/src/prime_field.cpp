#include "nilcent/prime_field.hpp"

#include "nilcent/rational.hpp"

namespace nilcent {

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

Fp Fp::pow(std::uint64_t e) const {
  Fp base = *this;
  Fp acc(1, p_);
  while (e > 0) {
    if (e & 1U) acc *= base;
    base *= base;
    e >>= 1U;
  }
  return acc;
}

Fp Fp::inverse() const {
  if (r_ == 0) throw ArithmeticError(ArithmeticError::Kind::DivisionByZero, "inverse of zero in F_" + std::to_string(p_));
  // extended Euclid on (r, p)
  std::int64_t a = r_, b = p_, x0 = 1, x1 = 0;
  while (b != 0) {
    const std::int64_t q = a / b;
    std::int64_t tmp = a - q * b;
    a = b;
    b = tmp;
    tmp = x0 - q * x1;
    x0 = x1;
    x1 = tmp;
  }
  if (x0 < 0) x0 += p_;
  return Fp(static_cast<std::uint64_t>(x0), p_);
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p >= (1U << 31U) || !is_prime(p)) {
    throw PreconditionError(PreconditionError::Kind::BadField,
                            "modulus " + std::to_string(p) + " is not a prime below 2^31");
  }
}

Fp PrimeField::parse(std::string_view text) const {
  const Rational q = Rational::parse(text);
  const mpz_class num = q.numerator() % p_;
  const mpz_class den = q.denominator() % p_;
  const Fp n = from_int(num.get_si());
  const Fp d = from_int(den.get_si());
  if (d.is_zero()) {
    throw ArithmeticError(ArithmeticError::Kind::DivisionByZero,
                          "'" + std::string(text) + "' has a denominator divisible by " + std::to_string(p_));
  }
  return n / d;
}

}  // namespace nilcent
