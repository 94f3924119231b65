#pragma once

#include <string>
#include <utility>

#include "nilcent/error.hpp"
#include "nilcent/polynomial.hpp"

namespace nilcent {

/// Element of K(t) kept in canonical form: coprime numerator and monic
/// denominator, zero written as 0/1. Canonical form makes == a zero test.
template <class K>
class RationalFunction {
 public:
  using Scalar = typename K::value_type;
  using Poly = Polynomial<K>;

  explicit RationalFunction(const K& field) : num_(field), den_(Poly::one(field)) {}
  explicit RationalFunction(Poly num) : num_(std::move(num)), den_(Poly::one(num_.field())) {}
  RationalFunction(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

  const K& base_field() const { return num_.field(); }
  const Poly& numerator() const { return num_; }
  const Poly& denominator() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return den_.is_one() && num_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }

  RationalFunction inverse() const {
    if (is_zero()) throw ArithmeticError(ArithmeticError::Kind::DivisionByZero, "inverse of zero rational function");
    return RationalFunction(den_, num_);
  }

  /// Substitutes t = s; throws ArithmeticError::Pole when the denominator vanishes there.
  Scalar operator()(const Scalar& s) const {
    const Scalar d = den_(s);
    if (d.is_zero()) {
      throw ArithmeticError(ArithmeticError::Kind::Pole, "pole of " + to_string() + " at t = " + s.to_string());
    }
    return num_(s) / d;
  }

  std::string to_string(const std::string& var = "t") const {
    if (den_.is_one()) return num_.to_string(var);
    auto wrap = [&](const Poly& p) {
      const std::string s = p.to_string(var);
      const bool atomic = p.degree() <= 0 ? s.find('/') == std::string::npos && s.front() != '-'
                                          : s.find_first_of(" */") == std::string::npos && s.front() != '-';
      return atomic ? s : "(" + s + ")";
    };
    return wrap(num_) + "/" + wrap(den_);
  }

  RationalFunction& operator+=(const RationalFunction& o) {
    if (is_polynomial() && o.is_polynomial()) {
      num_ += o.num_;
      return *this;
    }
    if (den_ == o.den_) {
      num_ += o.num_;
      normalize();
      return *this;
    }
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
    normalize();
    return *this;
  }
  RationalFunction& operator-=(const RationalFunction& o) { return *this += -o; }
  RationalFunction& operator*=(const RationalFunction& o) {
    if (is_zero()) return *this;
    if (o.is_zero()) return *this = o;
    if (is_polynomial() && o.is_polynomial()) {
      num_ *= o.num_;
      return *this;
    }
    // cross-cancel before multiplying keeps the operands small
    const Poly g1 = gcd(num_, o.den_);
    const Poly g2 = gcd(o.num_, den_);
    num_ = (num_ / g1) * (o.num_ / g2);
    den_ = (den_ / g2) * (o.den_ / g1);
    make_monic();
    return *this;
  }
  RationalFunction& operator/=(const RationalFunction& o) { return *this *= o.inverse(); }

  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
  friend RationalFunction operator-(RationalFunction a) {
    a.num_ = -a.num_;
    return a;
  }

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  void normalize() {
    if (den_.is_zero()) {
      throw ArithmeticError(ArithmeticError::Kind::DivisionByZero, "rational function with zero denominator");
    }
    if (num_.is_zero()) {
      den_ = Poly::one(num_.field());
      return;
    }
    if (!den_.is_constant()) {
      const Poly g = gcd(num_, den_);
      if (!g.is_one()) {
        num_ = num_ / g;
        den_ = den_ / g;
      }
    }
    make_monic();
  }

  void make_monic() {
    const K& f = num_.field();
    if (den_.leading() == f.one()) return;
    const Scalar inv = den_.leading().inverse();
    num_ *= inv;
    den_ *= inv;
  }

  Poly num_;
  Poly den_;
};

/// The rational function field K(t) over a base field K.
template <class K>
class FunctionField {
 public:
  using value_type = RationalFunction<K>;
  using base_type = K;
  using Poly = Polynomial<K>;

  explicit FunctionField(K base) : base_(std::move(base)) {}

  const K& base() const { return base_; }

  value_type zero() const { return value_type(base_); }
  value_type one() const { return constant(base_.one()); }
  value_type from_int(long long n) const { return constant(base_.from_int(n)); }
  value_type constant(const typename K::value_type& c) const { return value_type(Poly::constant(base_, c)); }
  value_type t() const { return value_type(Poly::variable(base_)); }
  std::uint32_t characteristic() const { return base_.characteristic(); }
  std::string descriptor() const { return base_.descriptor() + "(t)"; }

  friend bool operator==(const FunctionField& a, const FunctionField& b) { return a.base_ == b.base_; }

 private:
  K base_;
};

}  // namespace nilcent
