#include "toricq/io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

#include "toricq/errors.hpp"

namespace toricq::io {

json parse_json_text(const std::string& text, const std::string& source) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    // Translate the byte offset into a line/column pair.
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw InputError(source + ":" + std::to_string(line) + ":" + std::to_string(column) +
                     ": malformed JSON (byte " + std::to_string(e.byte) + ")");
  }
}

json parse_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_json_text(buf.str(), path.string());
}

json parse_json_argument(const std::string& argument) {
  auto first = argument.find_first_not_of(" \t\n");
  if (first != std::string::npos && (argument[first] == '[' || argument[first] == '{'))
    return parse_json_text(argument, "<argument>");
  return parse_json_file(argument);
}

Integer integer_from_json(const json& j) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Integer(j.get<unsigned long>());
    return Integer(j.get<long>());
  }
  if (j.is_string()) {
    Integer x;
    if (x.set_str(j.get<std::string>(), 10) != 0) throw InputError("not an integer: \"" + j.get<std::string>() + "\"");
    return x;
  }
  throw InputError("expected an integer, got " + j.dump());
}

json integer_to_json(const Integer& x) {
  if (x.fits_slong_p()) return json(x.get_si());
  return json(x.get_str());
}

IntVector vector_from_json(const json& j) {
  if (!j.is_array()) throw InputError("expected a list of integers, got " + j.dump());
  IntVector v;
  for (const auto& x : j) v.push_back(integer_from_json(x));
  return v;
}

json vector_to_json(const IntVector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(integer_to_json(x));
  return out;
}

IntMatrix matrix_from_json(const json& j, std::size_t empty_cols) {
  if (!j.is_array()) throw InputError("expected a matrix (list of rows), got " + j.dump());
  std::vector<IntVector> rows;
  for (const auto& r : j) rows.push_back(vector_from_json(r));
  if (rows.empty()) return IntMatrix(0, empty_cols);
  const std::size_t cols = rows.front().size();
  for (std::size_t i = 0; i < rows.size(); ++i)
    if (rows[i].size() != cols) throw InputError("matrix row " + std::to_string(i) + " has the wrong length");
  return IntMatrix::from_rows(cols, rows);
}

json matrix_to_json(const IntMatrix& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(vector_to_json(m.row(i)));
  return out;
}

json rational_to_json(const Rational& q) { return json(q.get_str()); }

namespace {

const json& require(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing key \"") + key + "\"");
  return j.at(key);
}

std::size_t count_from_json(const json& j, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 0)
    throw InputError(std::string(what) + " must be a non-negative integer");
  return j.get<std::size_t>();
}

}  // namespace

Fan fan_from_json(const json& j) {
  const std::size_t rank = count_from_json(require(j, "rank"), "rank");
  const json& jr = require(j, "rays");
  if (!jr.is_array()) throw InputError("\"rays\" must be a list");
  std::vector<IntVector> rays;
  for (const auto& r : jr) rays.push_back(vector_from_json(r));
  const json& jc = require(j, "max_cones");
  if (!jc.is_array()) throw InputError("\"max_cones\" must be a list");
  std::vector<std::vector<std::size_t>> cones;
  for (const auto& c : jc) {
    if (!c.is_array()) throw InputError("each maximal cone must be a list of ray indices");
    std::vector<std::size_t> idx;
    for (const auto& i : c) idx.push_back(count_from_json(i, "ray index"));
    cones.push_back(std::move(idx));
  }
  return Fan(rank, std::move(rays), cones);
}

json fan_to_json(const Fan& f) {
  json rays = json::array();
  for (const auto& r : f.rays()) rays.push_back(vector_to_json(r));
  json cones = json::array();
  for (const auto& c : f.max_cones()) cones.push_back(c.rays);
  return json{{"rank", f.rank()}, {"rays", rays}, {"max_cones", cones}};
}

WeightAction weights_from_json(const json& j) {
  if (j.is_array()) return WeightAction{matrix_from_json(j)};
  const std::size_t ambient = j.contains("ambient") ? count_from_json(j.at("ambient"), "ambient") : 0;
  IntMatrix w = matrix_from_json(require(j, "weights"), ambient);
  if (j.contains("rank") && count_from_json(j.at("rank"), "rank") != w.rows())
    throw InputError("\"rank\" does not match the number of weight rows");
  if (j.contains("ambient") && w.cols() != ambient)
    throw InputError("\"ambient\" does not match the number of weight columns");
  return WeightAction{std::move(w)};
}

MonomialMatrix monomial_from_json(const json& j) {
  const json& jp = require(j, "perm");
  if (!jp.is_array()) throw InputError("\"perm\" must be a list");
  std::vector<std::size_t> perm;
  for (const auto& p : jp) perm.push_back(count_from_json(p, "perm entry"));
  std::vector<Rational> scalars;
  if (j.contains("scalars")) {
    for (const auto& s : j.at("scalars")) {
      if (s.is_number_integer()) {
        scalars.emplace_back(integer_from_json(s));
      } else if (s.is_string()) {
        Rational q;
        if (q.set_str(s.get<std::string>(), 10) != 0 || q.get_den() == 0)
          throw InputError("not a rational number: \"" + s.get<std::string>() + "\"");
        q.canonicalize();
        scalars.push_back(q);
      } else {
        throw InputError("scalars must be \"p/q\" strings or integers");
      }
    }
  } else {
    scalars.assign(perm.size(), Rational(0));
  }
  try {
    return MonomialMatrix(std::move(perm), std::move(scalars));
  } catch (const Error& e) {
    throw InputError(e.what());
  }
}

json monomial_to_json(const MonomialMatrix& g) {
  json scalars = json::array();
  for (const auto& q : g.scalars()) scalars.push_back(rational_to_json(q));
  return json{{"perm", g.permutation()}, {"scalars", scalars}};
}

}  // namespace toricq::io
