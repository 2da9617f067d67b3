#ifndef CUW_CONFIG_HPP
#define CUW_CONFIG_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "cuw/cu.hpp"
#include "cuw/ring.hpp"

namespace cuw {

struct WorkbenchConfig {
  std::vector<std::pair<std::string, std::string>> ring_specs;
  std::vector<std::pair<std::string, std::string>> pom_specs;
  int matrix_size = 2;
  int oracle_size = 2;
  uint64_t op_budget = Budget::kDefaultLimit;
  uint64_t seed = 0;
  std::vector<std::string> suites;
  std::string json_out;
  std::string dot_dir;
  bool timestamps = false;
};

// Sectioned key-value text: [rings] name = expr, [poms], [bounds], [suites]
// run = id, id, ..., [output]. '#' starts a comment.
WorkbenchConfig parse_config(const std::string& text);

// The bundled corpus configuration.
std::string default_config_text();

// PoM expression: nat | chain(n) | pom{n=..;zero=..;add=..;leq=..},
// products joined with '*'.
SimplePoM parse_pom_expr(const std::string& expr);

struct Corpus {
  std::vector<std::pair<std::string, RingPtr>> rings;
  std::vector<std::pair<std::string, SimplePoM>> poms;
};
Corpus build_corpus(const WorkbenchConfig& cfg);

}  // namespace cuw

#endif
