#include "cuw/report.hpp"

#include <sstream>

namespace cuw {

uint64_t fnv1a(const std::string& s) {
  uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string emit_json(const WorkbenchConfig& cfg, const std::string& config_text,
                      const std::vector<SuiteResult>& results) {
  json root;
  root["schema_version"] = 1;
  std::ostringstream digest;
  digest << std::hex << fnv1a(config_text);
  root["config_digest"] = digest.str();
  root["seed"] = cfg.seed;
  json rs = json::array();
  for (auto& r : results) {
    json checks = json::array();
    for (auto& c : r.checks) {
      json e{{"subject", c.subject}, {"verdict", c.verdict}, {"detail", c.detail}};
      if (cfg.timestamps) e["elapsed_ms"] = c.elapsed_ms;
      checks.push_back(std::move(e));
    }
    rs.push_back(json{{"suite", r.suite},
                      {"summary",
                       json{{"pass", r.pass}, {"fail", r.fail},
                            {"unknown", r.unknown}}},
                      {"checks", checks}});
  }
  root["results"] = rs;
  return root.dump(2) + "\n";
}

namespace {

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

}  // namespace

std::string emit_dot(const std::string& ring_name, const IdealLattice& lat) {
  std::ostringstream os;
  os << "digraph \"" << dot_escape(ring_name) << "\" {\n";
  os << "  rankdir=BT;\n";
  for (size_t i = 0; i < lat.ideals.size(); ++i) {
    const auto& f = lat.flags[i];
    std::string flags;
    if (f.decomposable) flags += "d";
    if (f.quasipure) flags += flags.empty() ? "qp" : " qp";
    if (f.pure) flags += flags.empty() ? "pure" : " pure";
    if (f.idempotent) flags += flags.empty() ? "idem" : " idem";
    os << "  n" << i << " [label=\"I" << i << " |" << lat.ideals[i].size()
       << "| [" << flags << "]\"];\n";
  }
  for (auto& [a, b] : lat.covers) os << "  n" << a << " -> n" << b << ";\n";
  os << "}\n";
  return os.str();
}

int replay_report(const std::string& report_json, const Corpus& corpus) {
  json root = json::parse(report_json);
  auto ring_by_name = [&](const std::string& name) -> RingPtr {
    for (auto& [n, R] : corpus.rings)
      if (R->name == name || n == name) return R;
    throw UnknownConstructor("replay: ring '" + name + "' not in the corpus");
  };
  int confirmed = 0;
  std::function<void(const json&)> walk = [&](const json& node) {
    if (node.is_object()) {
      if (node.contains("replay") && node["replay"].is_array()) {
        for (auto& r : node["replay"]) {
          RingPtr R = ring_by_name(r["ring"]);
          RingMatrix s = mat_from_json(R, r["s"]);
          RingMatrix y = mat_from_json(R, r["y"]);
          RingMatrix t = mat_from_json(R, r["t"]);
          RingMatrix x = mat_from_json(R, r["x"]);
          if (!meq(mat_mul(mat_mul(s, y), t), x))
            throw InternalError("replay record failed to verify");
          ++confirmed;
        }
      }
      for (auto& [k, v] : node.items())
        if (k != "replay") walk(v);
    } else if (node.is_array()) {
      for (auto& v : node) walk(v);
    }
  };
  walk(root);
  return confirmed;
}

}  // namespace cuw
