#pragma once

#include <string>
#include <utility>
#include <vector>

#include "nilcent/error.hpp"

namespace nilcent {

/// Dense univariate polynomial over a field K, coefficients in ascending
/// degree. The zero polynomial has no coefficients; otherwise the leading
/// coefficient is nonzero.
template <class K>
class Polynomial {
 public:
  using Scalar = typename K::value_type;

  explicit Polynomial(K field) : field_(std::move(field)) {}
  Polynomial(K field, std::vector<Scalar> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) { trim(); }

  static Polynomial constant(const K& field, Scalar c) { return Polynomial(field, {std::move(c)}); }
  static Polynomial one(const K& field) { return constant(field, field.one()); }
  /// c * t^degree
  static Polynomial monomial(const K& field, Scalar c, std::size_t degree) {
    std::vector<Scalar> coeffs(degree + 1, field.zero());
    coeffs[degree] = std::move(c);
    return Polynomial(field, std::move(coeffs));
  }
  static Polynomial variable(const K& field) { return monomial(field, field.one(), 1); }

  const K& field() const { return field_; }
  const std::vector<Scalar>& coefficients() const { return c_; }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == field_.one(); }
  bool is_constant() const { return c_.size() <= 1; }

  Scalar coeff(std::size_t i) const { return i < c_.size() ? c_[i] : field_.zero(); }
  const Scalar& leading() const { return c_.back(); }

  Scalar operator()(const Scalar& x) const {
    Scalar acc = field_.zero();
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
      acc *= x;
      acc += *it;
    }
    return acc;
  }

  Polynomial monic() const {
    if (is_zero()) return *this;
    if (leading() == field_.one()) return *this;
    const Scalar inv = leading().inverse();
    return *this * inv;
  }

  Polynomial derivative() const {
    if (c_.size() <= 1) return Polynomial(field_);
    std::vector<Scalar> d;
    d.reserve(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * field_.from_int(static_cast<long long>(i)));
    return Polynomial(field_, std::move(d));
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), field_.zero());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), field_.zero());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  Polynomial& operator*=(const Scalar& s) {
    if (s.is_zero()) {
      c_.clear();
      return *this;
    }
    for (auto& x : c_) x *= s;
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Scalar& s) { return a *= s; }
  friend Polynomial operator-(Polynomial a) {
    for (auto& x : a.c_) x = -x;
    return a;
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial(a.field_);
    std::vector<Scalar> out(a.c_.size() + b.c_.size() - 1, a.field_.zero());
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    }
    return Polynomial(a.field_, std::move(out));
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  /// Quotient and remainder; throws on division by the zero polynomial.
  static std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw ArithmeticError(ArithmeticError::Kind::DivisionByZero, "polynomial division by zero");
    const K& f = a.field_;
    if (a.degree() < b.degree()) return {Polynomial(f), a};
    std::vector<Scalar> rem = a.c_;
    std::vector<Scalar> quot(a.c_.size() - b.c_.size() + 1, f.zero());
    const Scalar lead_inv = b.leading().inverse();
    const bool unit_lead = lead_inv == f.one();
    for (std::size_t k = quot.size(); k-- > 0;) {
      Scalar q = rem[k + b.c_.size() - 1];
      if (q.is_zero()) continue;
      if (!unit_lead) q *= lead_inv;
      for (std::size_t j = 0; j < b.c_.size(); ++j) rem[k + j] -= q * b.c_[j];
      quot[k] = std::move(q);
    }
    rem.resize(b.c_.size() - 1, f.zero());
    return {Polynomial(f, std::move(quot)), Polynomial(f, std::move(rem))};
  }

  friend Polynomial operator/(const Polynomial& a, const Polynomial& b) { return divmod(a, b).first; }
  friend Polynomial operator%(const Polynomial& a, const Polynomial& b) { return divmod(a, b).second; }

  /// Written in descending degree in the indeterminate `var`, e.g. "t^2 - 1/2*t + 3".
  /// The output re-parses with the matrix-file expression grammar.
  std::string to_string(const std::string& var = "t") const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t k = c_.size(); k-- > 0;) {
      const Scalar& c = c_[k];
      if (c.is_zero()) continue;
      std::string s = c.to_string();
      bool negative = !s.empty() && s.front() == '-';
      if (negative) s.erase(0, 1);
      if (out.empty()) {
        if (negative) out += "-";
      } else {
        out += negative ? " - " : " + ";
      }
      if (k == 0) {
        out += s;
        continue;
      }
      if (s != "1") out += s + "*";
      out += var;
      if (k > 1) out += "^" + std::to_string(k);
    }
    return out;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  K field_;
  std::vector<Scalar> c_;
};

/// Monic greatest common divisor (zero only when both inputs are zero).
template <class K>
Polynomial<K> gcd(Polynomial<K> a, Polynomial<K> b) {
  while (!b.is_zero()) {
    Polynomial<K> r = Polynomial<K>::divmod(a, b).second;
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

/// base^e mod m by repeated squaring.
template <class K, class Int>
Polynomial<K> powmod(Polynomial<K> base, Int e, const Polynomial<K>& m) {
  Polynomial<K> acc = Polynomial<K>::one(base.field()) % m;
  base = base % m;
  while (e > 0) {
    if (e % 2 == 1) acc = (acc * base) % m;
    base = (base * base) % m;
    e /= 2;
  }
  return acc;
}

}  // namespace nilcent
