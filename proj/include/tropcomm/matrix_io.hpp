#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "tropcomm/matrix.hpp"

namespace tropcomm {

/// Builds a matrix from entry strings ("4.10", "41/10", "inf").
TropMatrix matrix_from_strings(const std::vector<std::vector<std::string>>& rows);

/// Accepts {"n": int, "entries": [[...]]} or a bare array of rows. Entries may be
/// strings, integers, or JSON decimals (read through their shortest decimal text).
TropMatrix matrix_from_json(const nlohmann::json& j);
nlohmann::json matrix_to_json(const TropMatrix& m);

TropScalar scalar_from_json(const nlohmann::json& j);

struct MatrixPair {
  TropMatrix a;
  TropMatrix b;
};

/// {"n": int, "A": matrix, "B": matrix}
MatrixPair pair_from_json(const nlohmann::json& j);
nlohmann::json pair_to_json(const MatrixPair& pair);

/// Reads and parses a JSON file; throws ParseError on I/O or syntax failure.
nlohmann::json read_json_file(const std::string& path);

/// Rows rendered with to_display_string, e.g. "[[0, 2], [1, 0]]".
std::string format_matrix(const TropMatrix& m);

}  // namespace tropcomm
