#include "tropcomm/matrix_io.hpp"

#include <fstream>
#include <sstream>

#include "tropcomm/errors.hpp"

namespace tropcomm {

using nlohmann::json;

TropMatrix matrix_from_strings(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::vector<TropScalar>> parsed;
  parsed.reserve(rows.size());
  for (const auto& row : rows) {
    std::vector<TropScalar> r;
    r.reserve(row.size());
    for (const auto& e : row) r.push_back(TropScalar::parse(e));
    parsed.push_back(std::move(r));
  }
  return TropMatrix::from_rows(parsed);
}

TropScalar scalar_from_json(const json& j) {
  if (j.is_string()) return TropScalar::parse(j.get<std::string>());
  if (j.is_number_integer()) return TropScalar(Rational(j.dump()));
  if (j.is_number_float()) return TropScalar(parse_rational(j.dump()));
  throw ParseError("matrix entry must be a string or number, got " + j.dump());
}

TropMatrix matrix_from_json(const json& j) {
  const json* rows = &j;
  if (j.is_object()) {
    if (!j.contains("entries")) throw ParseError("matrix object lacks \"entries\"");
    rows = &j.at("entries");
  }
  if (!rows->is_array() || rows->empty()) throw ParseError("matrix must be a non-empty array of rows");
  std::vector<std::vector<TropScalar>> parsed;
  for (const auto& row : *rows) {
    if (!row.is_array()) throw ParseError("matrix row must be an array");
    std::vector<TropScalar> r;
    for (const auto& e : row) r.push_back(scalar_from_json(e));
    parsed.push_back(std::move(r));
  }
  TropMatrix m;
  try {
    m = TropMatrix::from_rows(parsed);
  } catch (const SizeMismatch& e) {
    throw ParseError(std::string("matrix is not square: ") + e.what());
  }
  if (j.is_object() && j.contains("n")) {
    if (!j.at("n").is_number_integer() || j.at("n").get<std::size_t>() != m.size()) {
      throw ParseError("declared n does not match the entries");
    }
  }
  return m;
}

json matrix_to_json(const TropMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.size(); ++j) row.push_back(m(i, j).to_fraction_string());
    rows.push_back(std::move(row));
  }
  return json{{"n", m.size()}, {"entries", std::move(rows)}};
}

MatrixPair pair_from_json(const json& j) {
  if (!j.is_object() || !j.contains("A") || !j.contains("B")) {
    throw ParseError("pair file must be an object with \"A\" and \"B\"");
  }
  MatrixPair p{matrix_from_json(j.at("A")), matrix_from_json(j.at("B"))};
  if (p.a.size() != p.b.size()) throw ParseError("A and B have different sizes");
  if (j.contains("n") && (!j.at("n").is_number_integer() || j.at("n").get<std::size_t>() != p.a.size())) {
    throw ParseError("declared n does not match the matrices");
  }
  return p;
}

json pair_to_json(const MatrixPair& pair) {
  return json{{"n", pair.a.size()},
              {"A", matrix_to_json(pair.a).at("entries")},
              {"B", matrix_to_json(pair.b).at("entries")}};
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
}

std::string format_matrix(const TropMatrix& m) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < m.size(); ++i) {
    out << (i ? ", [" : "[");
    for (std::size_t j = 0; j < m.size(); ++j) out << (j ? ", " : "") << m(i, j).to_display_string();
    out << ']';
  }
  out << ']';
  return out.str();
}

}  // namespace tropcomm
