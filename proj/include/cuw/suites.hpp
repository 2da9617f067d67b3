#ifndef CUW_SUITES_HPP
#define CUW_SUITES_HPP

#include <json.hpp>

#include "cuw/config.hpp"

namespace cuw {

using json = nlohmann::ordered_json;

struct CheckRecord {
  std::string subject;
  std::string verdict;  // pass | fail | unknown
  json detail;          // structured evidence; replay entries live under
                        // detail["replay"] as {ring, s, y, t, x} quadruples
  double elapsed_ms = 0;
};

struct SuiteResult {
  std::string suite;
  std::vector<CheckRecord> checks;
  int pass = 0, fail = 0, unknown = 0;
  bool budget_hit = false;
};

const std::vector<std::string>& list_suites();

SuiteResult run_suite(const WorkbenchConfig& cfg, const Corpus& corpus,
                      const std::string& id);

// JSON encoding of matrices used by replay records
json mat_to_json(const RingMatrix& m);
RingMatrix mat_from_json(const RingPtr& R, const json& j);
json replay_entry(const SubordinationWitness& w, const RingMatrix& x,
                  const RingMatrix& y, const std::string& ring_name);

}  // namespace cuw

#endif
