#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "aps/ingest.hpp"

namespace aps::testing {

inline std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline std::string fixture_path(const std::string& name) { return std::string(APS_FIXTURE_DIR) + "/" + name; }
inline std::string golden_path(const std::string& name) { return std::string(APS_GOLDEN_DIR) + "/" + name; }

inline const PerformanceMatrix& fixture_matrix() {
  static const PerformanceMatrix matrix =
      ingest::parse_table(read_text(fixture_path("ndcg10_results.csv")), ingest::TableFormat::Auto);
  return matrix;
}

}  // namespace aps::testing
