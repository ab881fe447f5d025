#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "kss/io.hpp"

namespace kss::testing {

inline std::string data_file(const std::string& name) {
  return std::string(KSS_TEST_DATA) + "/" + name;
}

inline std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline io::json load(const std::string& name) { return io::parse(slurp(data_file(name))); }

inline Tableau T(int rank, std::vector<std::vector<Letter>> rows) {
  return Tableau(rank, std::move(rows));
}

inline Path example34_path() { return io::path_from_json(load("example34_path.json")); }
inline Path nonhighest_path() { return io::path_from_json(load("nonhighest_path.json")); }

}  // namespace kss::testing
