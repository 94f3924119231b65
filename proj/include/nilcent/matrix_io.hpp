#pragma once

#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "nilcent/matrix.hpp"
#include "nilcent/rational_function.hpp"

namespace nilcent {

/// "q", "fp:<p>", "q(t)" or "fp:<p>(t)".
struct FieldDescriptor {
  std::uint32_t prime = 0;  ///< 0 for Q
  bool function_field = false;

  static FieldDescriptor parse(std::string_view text);
  std::string to_string() const;
  FieldDescriptor base() const { return {prime, false}; }

  friend bool operator==(const FieldDescriptor&, const FieldDescriptor&) = default;
};

/// A matrix file before its entries are interpreted in a field:
/// {"field": ..., "rows": [[entry, ...], ...]}.
struct MatrixFile {
  FieldDescriptor field;
  std::vector<std::vector<std::string>> rows;

  std::size_t row_count() const { return rows.size(); }
  std::size_t col_count() const { return rows.empty() ? 0 : rows.front().size(); }
};

MatrixFile parse_matrix_json(const nlohmann::json& j);
MatrixFile read_matrix_file(const std::string& path);

namespace detail {

/// Recursive-descent reader for expressions in t over K:
///   expr  := term (('+' | '-') term)*
///   term  := unary (('*' | '/') unary | implicit-product)*
///   unary := ('-' | '+') unary | power
///   power := atom ('^' '-'? integer)?
///   atom  := number | 't' | '(' expr ')'
template <class K>
class ExpressionParser {
 public:
  using Value = RationalFunction<K>;

  ExpressionParser(std::string_view text, const FunctionField<K>& field) : s_(text), field_(field) {}

  Value parse() {
    Value v = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return v;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("bad expression '" + std::string(s_) + "': " + why);
  }

  Value expr() {
    Value v = term();
    for (;;) {
      if (peek('+')) {
        ++pos_;
        v += term();
      } else if (peek('-')) {
        ++pos_;
        v -= term();
      } else {
        return v;
      }
    }
  }

  Value term() {
    Value v = unary();
    for (;;) {
      if (peek('*')) {
        ++pos_;
        v *= unary();
      } else if (peek('/')) {
        ++pos_;
        const Value d = unary();
        if (d.is_zero()) throw ArithmeticError(ArithmeticError::Kind::DivisionByZero, "division by zero in '" + std::string(s_) + "'");
        v /= d;
      } else if (peek('t') || peek('(')) {
        v *= power();
      } else {
        return v;
      }
    }
  }

  Value unary() {
    if (peek('-')) {
      ++pos_;
      return -unary();
    }
    if (peek('+')) {
      ++pos_;
      return unary();
    }
    return power();
  }

  Value power() {
    Value base = atom();
    if (!peek('^')) return base;
    ++pos_;
    bool negative = false;
    if (peek('-')) {
      negative = true;
      ++pos_;
    }
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("exponent must be an integer");
    unsigned long e = std::stoul(std::string(s_.substr(start, pos_ - start)));
    Value acc = field_.one();
    while (e > 0) {
      if (e & 1UL) acc *= base;
      e >>= 1UL;
      if (e > 0) base *= base;
    }
    return negative ? acc.inverse() : acc;
  }

  Value atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end");
    const char c = s_[pos_];
    if (c == 't') {
      ++pos_;
      return field_.t();
    }
    if (c == '(') {
      ++pos_;
      Value v = expr();
      if (!peek(')')) fail("missing ')'");
      ++pos_;
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.')) ++pos_;
      return field_.constant(field_.base().parse(s_.substr(start, pos_ - start)));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  const FunctionField<K>& field_;
  std::size_t pos_ = 0;
};

}  // namespace detail

template <class K>
RationalFunction<K> parse_expression(std::string_view text, const FunctionField<K>& field) {
  return detail::ExpressionParser<K>(text, field).parse();
}

/// Interprets the file's entries in `field` (base field entries or, for a
/// function field, expressions in t).
template <class K>
Matrix<K> to_matrix(const MatrixFile& file, const K& field) {
  const std::size_t rows = file.row_count();
  const std::size_t cols = file.col_count();
  std::vector<typename K::value_type> entries;
  entries.reserve(rows * cols);
  for (const auto& row : file.rows) {
    for (const auto& e : row) {
      if constexpr (requires { field.base(); }) {
        entries.push_back(parse_expression(e, field));
      } else {
        entries.push_back(field.parse(e));
      }
    }
  }
  return Matrix<K>(field, rows, cols, std::move(entries));
}

template <class K>
nlohmann::json matrix_to_json(const Matrix<K>& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).to_string());
    rows.push_back(std::move(row));
  }
  return {{"field", m.field().descriptor()}, {"rows", std::move(rows)}};
}

template <class K>
nlohmann::json vector_to_json(const Vector<K>& v) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& x : v) out.push_back(x.to_string());
  return out;
}

}  // namespace nilcent
