#include "odz/matrix_json.hpp"

#include <json.hpp>

#include "odz/error.hpp"

namespace odz {

using nlohmann::json;

namespace {

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

int read_n(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer())
    throw ParseError("matrix JSON needs an integer field \"n\"");
  int n = j["n"].get<int>();
  if (n < 1) throw ParseError("matrix JSON: n must be positive");
  return n;
}

const json& read_rows(const json& j, const char* field, int n) {
  if (!j.contains(field) || !j[field].is_array() || j[field].size() != static_cast<std::size_t>(n))
    throw ParseError(std::string("matrix JSON: \"") + field + "\" must be an array of " +
                     std::to_string(n) + " rows");
  for (const auto& row : j[field])
    if (!row.is_array() || row.size() != static_cast<std::size_t>(n))
      throw ParseError(std::string("matrix JSON: every row of \"") + field + "\" needs " +
                       std::to_string(n) + " entries");
  return j[field];
}

}  // namespace

std::string matrix_to_json(const DyadicMatrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.n(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.n(); ++j) row.push_back(to_string(m(i, j)));
    rows.push_back(row);
  }
  return json{{"n", m.n()}, {"entries", rows}}.dump();
}

DyadicMatrix matrix_from_json(const std::string& text) {
  json j = parse_json(text);
  int n = read_n(j);
  const json& rows = read_rows(j, "entries", n);
  DyadicMatrix m(n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      const json& x = rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
      if (x.is_string()) m(r, c) = parse_dyadic(x.get<std::string>());
      else if (x.is_number_integer()) m(r, c) = Dyadic(x.get<long>());
      else throw ParseError("matrix JSON: entry (" + std::to_string(r + 1) + "," +
                            std::to_string(c + 1) + ") is neither a dyadic string nor an integer");
    }
  return m;
}

std::string scaled_to_json(const ScaledMatrix& s) {
  json rows = json::array();
  for (int i = 0; i < s.n(); ++i) {
    json row = json::array();
    for (int j = 0; j < s.n(); ++j) {
      const mpz_class& x = s.at(i, j);
      if (x.fits_slong_p()) row.push_back(x.get_si());
      else row.push_back(x.get_str());  // beyond 64 bits: decimal string
    }
    rows.push_back(row);
  }
  return json{{"n", s.n()}, {"k", s.k()}, {"integral", rows}}.dump();
}

ScaledMatrix scaled_from_json(const std::string& text) {
  json j = parse_json(text);
  int n = read_n(j);
  if (!j.contains("k") || !j["k"].is_number_integer() || j["k"].get<long>() < 0)
    throw ParseError("scaled JSON needs a nonnegative integer field \"k\"");
  const json& rows = read_rows(j, "integral", n);
  std::vector<mpz_class> a;
  for (const auto& row : rows)
    for (const auto& x : row) {
      if (x.is_number_integer()) a.emplace_back(x.get<long>());
      else if (x.is_string()) {
        Dyadic d = parse_dyadic(x.get<std::string>());
        if (!d.is_integer()) throw ParseError("scaled JSON: integral entry '" + x.get<std::string>() + "' is not an integer");
        a.push_back(d.num());
      }
      else throw ParseError("scaled JSON: integral entries must be integers");
    }
  return ScaledMatrix(n, j["k"].get<unsigned long>(), std::move(a));
}

}  // namespace odz
