#include "nilcent/matrix_io.hpp"

#include <fstream>
#include <sstream>

#include "nilcent/prime_field.hpp"

namespace nilcent {

FieldDescriptor FieldDescriptor::parse(std::string_view text) {
  FieldDescriptor d;
  std::string_view s = text;
  if (s.size() >= 3 && s.substr(s.size() - 3) == "(t)") {
    d.function_field = true;
    s.remove_suffix(3);
  }
  if (s == "q") return d;
  if (s.substr(0, 3) == "fp:" && s.size() > 3) {
    const std::string digits(s.substr(3));
    if (digits.find_first_not_of("0123456789") == std::string::npos && digits.size() <= 10) {
      const unsigned long long p = std::stoull(digits);
      if (p < (1ULL << 31U) && is_prime(static_cast<std::uint32_t>(p))) {
        d.prime = static_cast<std::uint32_t>(p);
        return d;
      }
    }
  }
  throw PreconditionError(PreconditionError::Kind::BadField, "bad field descriptor '" + std::string(text) + "'");
}

std::string FieldDescriptor::to_string() const {
  std::string s = prime == 0 ? "q" : "fp:" + std::to_string(prime);
  return function_field ? s + "(t)" : s;
}

MatrixFile parse_matrix_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("field") || !j.contains("rows")) {
    throw ParseError("matrix file must be an object with \"field\" and \"rows\"");
  }
  if (!j["field"].is_string()) throw ParseError("\"field\" must be a string");
  MatrixFile file;
  file.field = FieldDescriptor::parse(j["field"].get<std::string>());
  const auto& rows = j["rows"];
  if (!rows.is_array()) throw ParseError("\"rows\" must be an array of arrays");
  for (const auto& row : rows) {
    if (!row.is_array()) throw ParseError("\"rows\" must be an array of arrays");
    std::vector<std::string> entries;
    for (const auto& e : row) {
      if (e.is_string()) {
        entries.push_back(e.get<std::string>());
      } else if (e.is_number_integer()) {
        entries.push_back(e.dump());
      } else {
        throw ParseError("matrix entries must be strings or integers, got " + e.dump());
      }
    }
    if (!file.rows.empty() && entries.size() != file.rows.front().size()) {
      throw ParseError("ragged matrix: rows have different lengths");
    }
    file.rows.push_back(std::move(entries));
  }
  return file;
}

MatrixFile read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(buf.str());
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("malformed JSON in '" + path + "': " + e.what());
  }
  return parse_matrix_json(j);
}

}  // namespace nilcent
