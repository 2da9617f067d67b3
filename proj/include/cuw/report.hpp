#ifndef CUW_REPORT_HPP
#define CUW_REPORT_HPP

#include "cuw/ideals.hpp"
#include "cuw/suites.hpp"

namespace cuw {

// Versioned JSON report: { schema_version, config_digest, results: [...] }.
// Byte-identical across runs for the same config and seed (timestamps off).
std::string emit_json(const WorkbenchConfig& cfg, const std::string& config_text,
                      const std::vector<SuiteResult>& results);

// DOT rendering of an ideal lattice: one node per ideal labeled
// `name |size| [flags]`, directed edges along covering relations.
std::string emit_dot(const std::string& ring_name, const IdealLattice& lat);

// Re-verifies every replay record (s * y * t = x by multiplication) found in
// a JSON report; returns the number of confirmed records and throws on the
// first mismatch.
int replay_report(const std::string& report_json, const Corpus& corpus);

uint64_t fnv1a(const std::string& s);

}  // namespace cuw

#endif
