#pragma once

#include <string>
#include <vector>

#include "toricq/fans.hpp"
#include "toricq/io.hpp"

namespace corpus {

inline std::string path(const std::string& name) { return std::string(TORICQ_TEST_DATA) + "/" + name + ".json"; }

inline toricq::Fan load(const std::string& name) { return toricq::io::fan_from_json(toricq::io::parse_json_file(path(name))); }

// Valid fans used by the property suites.
inline const std::vector<std::string>& fan_names() {
  static const std::vector<std::string> names{"a1",  "a2", "a3", "p1",   "p2",   "p1xp1",           "f0",
                                              "f1",  "f2", "f3", "quadric_cone", "p112", "p121", "bl0a2",
                                              "three_quadrants", "punctured_plane"};
  return names;
}

}  // namespace corpus
