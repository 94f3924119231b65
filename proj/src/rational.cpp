#include "nilcent/rational.hpp"

#include <cctype>

namespace nilcent {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

mpz_class parse_integer(std::string_view s) {
  s = trim(s);
  std::string digits(s);
  if (!digits.empty() && digits.front() == '+') digits.erase(0, 1);
  bool ok = !digits.empty();
  for (std::size_t i = 0; i < digits.size() && ok; ++i) {
    const char c = digits[i];
    ok = std::isdigit(static_cast<unsigned char>(c)) || (i == 0 && c == '-' && digits.size() > 1);
  }
  if (!ok) throw ParseError("not an integer: '" + std::string(s) + "'");
  return mpz_class(digits, 10);
}

}  // namespace

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw ArithmeticError(ArithmeticError::Kind::DivisionByZero, "rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational::Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  const std::string_view s = trim(text);
  if (const auto slash = s.find('/'); slash != std::string_view::npos) {
    const mpz_class den = parse_integer(s.substr(slash + 1));
    if (den == 0) throw ParseError("zero denominator: '" + std::string(s) + "'");
    return Rational(parse_integer(s.substr(0, slash)), den);
  }
  if (const auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view whole = s.substr(0, dot);
    const std::string_view frac = s.substr(dot + 1);
    bool negative = false;
    if (!whole.empty() && (whole.front() == '-' || whole.front() == '+')) {
      negative = whole.front() == '-';
      whole.remove_prefix(1);
    }
    const mpz_class w = whole.empty() ? mpz_class(0) : parse_integer(whole);
    const mpz_class f = frac.empty() ? mpz_class(0) : parse_integer(frac);
    if (w < 0 || f < 0) throw ParseError("malformed decimal: '" + std::string(s) + "'");
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    mpz_class num = w * scale + f;
    if (negative) num = -num;
    return Rational(num, scale);
  }
  return Rational(parse_integer(s), mpz_class(1));
}

Rational Rational::inverse() const {
  if (is_zero()) throw ArithmeticError(ArithmeticError::Kind::DivisionByZero, "inverse of zero rational");
  return Rational(mpq_class(1 / q_));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw ArithmeticError(ArithmeticError::Kind::DivisionByZero, "rational division by zero");
  q_ /= o.q_;
  return *this;
}

}  // namespace nilcent
