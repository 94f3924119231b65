#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "nilcent/error.hpp"

namespace nilcent {

bool is_prime(std::uint32_t n);

/// Residue class modulo a prime p < 2^31. Every value remembers its modulus,
/// so mixing residues from different prime fields is detected at runtime.
class Fp {
 public:
  Fp(std::uint64_t residue, std::uint32_t p) : r_(static_cast<std::uint32_t>(residue % p)), p_(p) {}

  std::uint32_t residue() const { return r_; }
  std::uint32_t modulus() const { return p_; }

  bool is_zero() const { return r_ == 0; }
  bool is_one() const { return r_ == 1; }

  Fp inverse() const;
  Fp pow(std::uint64_t e) const;
  std::string to_string() const { return std::to_string(r_); }

  Fp& operator+=(const Fp& o) {
    check(o);
    r_ += o.r_;
    if (r_ >= p_) r_ -= p_;
    return *this;
  }
  Fp& operator-=(const Fp& o) {
    check(o);
    r_ = r_ >= o.r_ ? r_ - o.r_ : r_ + p_ - o.r_;
    return *this;
  }
  Fp& operator*=(const Fp& o) {
    check(o);
    r_ = static_cast<std::uint32_t>(static_cast<std::uint64_t>(r_) * o.r_ % p_);
    return *this;
  }
  Fp& operator/=(const Fp& o) {
    check(o);
    return *this *= o.inverse();
  }

  friend Fp operator+(Fp a, const Fp& b) { return a += b; }
  friend Fp operator-(Fp a, const Fp& b) { return a -= b; }
  friend Fp operator*(Fp a, const Fp& b) { return a *= b; }
  friend Fp operator/(Fp a, const Fp& b) { return a /= b; }
  friend Fp operator-(const Fp& a) { return Fp(a.r_ == 0 ? 0 : a.p_ - a.r_, a.p_); }

  friend bool operator==(const Fp& a, const Fp& b) {
    a.check(b);
    return a.r_ == b.r_;
  }

 private:
  void check(const Fp& o) const {
    if (o.p_ != p_) {
      throw ArithmeticError(ArithmeticError::Kind::FieldMismatch,
                            "mixed prime fields: F_" + std::to_string(p_) + " and F_" + std::to_string(o.p_));
    }
  }

  std::uint32_t r_;
  std::uint32_t p_;
};

/// The prime field F_p. Construction checks primality deterministically.
class PrimeField {
 public:
  using value_type = Fp;

  explicit PrimeField(std::uint32_t p);

  std::uint32_t prime() const { return p_; }

  Fp zero() const { return Fp(0, p_); }
  Fp one() const { return Fp(1, p_); }
  Fp from_int(long long n) const {
    const long long m = n % static_cast<long long>(p_);
    return Fp(static_cast<std::uint64_t>(m < 0 ? m + p_ : m), p_);
  }
  /// Integer or "a/b" read modulo p.
  Fp parse(std::string_view text) const;
  std::uint32_t characteristic() const { return p_; }
  std::string descriptor() const { return "fp:" + std::to_string(p_); }

  friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p_ == b.p_; }

 private:
  std::uint32_t p_;
};

}  // namespace nilcent
