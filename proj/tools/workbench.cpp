#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>

#include "cuw/report.hpp"

using namespace cuw;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::string sanitize(const std::string& s) {
  std::string out;
  for (char c : s) out.push_back(std::isalnum((unsigned char)c) ? c : '_');
  return out;
}

int cmd_run(const std::string& config_path, std::vector<std::string> suite_ids,
            const std::string& json_out, const std::string& dot_dir,
            uint64_t seed, bool seed_set, int threads, bool timestamps,
            const std::string& replay) {
  std::string text =
      config_path.empty() ? default_config_text() : read_file(config_path);
  WorkbenchConfig cfg = parse_config(text);
  if (seed_set) cfg.seed = seed;
  if (!json_out.empty()) cfg.json_out = json_out;
  if (!dot_dir.empty()) cfg.dot_dir = dot_dir;
  if (timestamps) cfg.timestamps = true;
  if (!suite_ids.empty()) cfg.suites = suite_ids;

  Corpus corpus = build_corpus(cfg);

  if (!replay.empty()) {
    int confirmed = replay_report(read_file(replay), corpus);
    std::cout << "replayed " << confirmed << " witness records, all confirmed\n";
    return 0;
  }

  std::vector<SuiteResult> results(cfg.suites.size());
  if (threads > 1) {
    std::vector<std::future<SuiteResult>> futs;
    for (auto& id : cfg.suites)
      futs.push_back(std::async(std::launch::async, [&, id]() {
        return run_suite(cfg, corpus, id);
      }));
    for (size_t i = 0; i < futs.size(); ++i) results[i] = futs[i].get();
  } else {
    for (size_t i = 0; i < cfg.suites.size(); ++i)
      results[i] = run_suite(cfg, corpus, cfg.suites[i]);
  }

  int fails = 0, unknowns = 0;
  bool budget_hit = false;
  for (auto& r : results) {
    fails += r.fail;
    unknowns += r.unknown;
    budget_hit |= r.budget_hit;
    std::cout << r.suite << ": " << r.pass << " pass, " << r.fail << " fail, "
              << r.unknown << " unknown\n";
  }

  std::string report = emit_json(cfg, text, results);
  if (!cfg.json_out.empty()) {
    std::ofstream out(cfg.json_out, std::ios::binary);
    out << report;
    std::cout << "report written to " << cfg.json_out << "\n";
  }
  if (!cfg.dot_dir.empty()) {
    std::filesystem::create_directories(cfg.dot_dir);
    Budget budget(cfg.op_budget);
    for (auto& [name, R] : corpus.rings) {
      auto lat = build_lattice(R, budget);
      std::ofstream out(cfg.dot_dir + "/" + sanitize(name) + ".dot",
                        std::ios::binary);
      out << emit_dot(R->name, lat);
    }
    std::cout << "lattices written to " << cfg.dot_dir << "/\n";
  }
  if (fails > 0) return 1;
  if (budget_hit && unknowns > 0) return 3;
  return 0;
}

int cmd_describe(const std::string& name, const std::string& config_path) {
  std::string text =
      config_path.empty() ? default_config_text() : read_file(config_path);
  WorkbenchConfig cfg = parse_config(text);
  for (auto& [n, spec] : cfg.ring_specs) {
    if (n != name) continue;
    RingPtr R = build_ring(spec);
    std::cout << n << " = " << spec << "\n";
    std::cout << "size: " << R->size << "\n";
    std::cout << "unital: " << (R->unit ? "yes (unit " + R->ename(*R->unit) + ")"
                                        : "no") << "\n";
    AxiomReport rep = verify_ring_axioms(*R);
    std::cout << "axioms: " << (rep.all_pass() ? "all pass" : "FAILED")
              << (rep.exhaustive ? " (exhaustive)" : " (sampled)") << "\n";
    auto ideals = enumerate_ideals(R);
    std::cout << "two-sided ideals: " << ideals.size() << "\n";
    for (auto& I : ideals) std::cout << "  " << I.str() << "\n";
    return 0;
  }
  std::cerr << "no ring named '" << name << "' in the config\n";
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-model workbench for subordination semigroups of rings"};
  app.require_subcommand(1);

  std::string config_path, json_out, dot_dir, replay, ring_name;
  std::vector<std::string> suite_ids;
  uint64_t seed = 0;
  int threads = 1;
  bool timestamps = false;

  auto* run = app.add_subcommand("run", "run verification suites");
  run->add_option("--config", config_path, "config file (default: built-in corpus)");
  run->add_option("--suite", suite_ids, "suite id (repeatable)");
  run->add_option("--json", json_out, "write the JSON report here");
  run->add_option("--dot", dot_dir, "write ideal-lattice DOT files here");
  auto* seed_opt = run->add_option("--seed", seed, "sampling seed");
  run->add_option("--threads", threads, "run suites concurrently");
  run->add_flag("--timestamps", timestamps, "include timings in the report");
  run->add_option("--replay", replay, "re-verify witness records of a report");

  auto* ls = app.add_subcommand("list-suites", "print the suite registry");

  auto* describe = app.add_subcommand("describe-ring", "print ring details");
  describe->add_option("name", ring_name, "ring name from the config")->required();
  describe->add_option("--config", config_path, "config file");

  CLI11_PARSE(app, argc, argv);

  try {
    if (ls->parsed()) {
      for (auto& id : list_suites()) std::cout << id << "\n";
      return 0;
    }
    if (describe->parsed()) return cmd_describe(ring_name, config_path);
    return cmd_run(config_path, suite_ids, json_out, dot_dir, seed,
                   seed_opt->count() > 0, threads, timestamps, replay);
  } catch (const ParseError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const UnknownSuite& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const UnknownConstructor& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const SpecParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
