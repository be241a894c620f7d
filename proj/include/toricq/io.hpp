#pragma once

// JSON (de)serialization for fans, matrices, weight actions and monomial
// matrices.
//
//   fan:      {"rank": n, "rays": [[..], ..], "max_cones": [[ray indices], ..]}
//   matrix:   [[..], ..]  (row-major)
//   weights:  {"rank": r, "weights": [[..], ..]}  or a bare matrix
//   monomial: {"perm": [..], "scalars": ["p/q", ..]}
//
// Indices are 0-based. Integers may be JSON numbers or decimal strings.

#include <filesystem>
#include <string>

#include <json.hpp>

#include "toricq/fans.hpp"
#include "toricq/groups.hpp"

namespace toricq::io {

using nlohmann::json;

/// Throws InputError with line/column information on malformed JSON.
json parse_json_text(const std::string& text, const std::string& source);
json parse_json_file(const std::filesystem::path& path);

/// Text that starts with '[' or '{' is parsed inline, anything else is read
/// as a file path.
json parse_json_argument(const std::string& argument);

Integer integer_from_json(const json& j);
json integer_to_json(const Integer& x);
IntVector vector_from_json(const json& j);
json vector_to_json(const IntVector& v);
/// An empty list gives a 0 x `empty_cols` matrix.
IntMatrix matrix_from_json(const json& j, std::size_t empty_cols = 0);
json matrix_to_json(const IntMatrix& m);
json rational_to_json(const Rational& q);

Fan fan_from_json(const json& j);
json fan_to_json(const Fan& f);

WeightAction weights_from_json(const json& j);
MonomialMatrix monomial_from_json(const json& j);
json monomial_to_json(const MonomialMatrix& g);

}  // namespace toricq::io
