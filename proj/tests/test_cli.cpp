#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cuw/report.hpp"

using namespace cuw;

TEST_CASE("config parsing") {
  SUBCASE("minimal config") {
    auto cfg = parse_config(
        "[rings]\nz6 = zmod(6)\n[suites]\nrun = ideal-classes\n");
    CHECK(cfg.ring_specs.size() == 1);
    CHECK(cfg.suites == std::vector<std::string>{"ideal-classes"});
    CHECK(cfg.matrix_size == 2);
    CHECK(cfg.op_budget == Budget::kDefaultLimit);
  }
  SUBCASE("duplicate ring name") {
    CHECK_THROWS_AS(parse_config("[rings]\na = zmod(2)\na = zmod(3)\n"),
                    ParseError);
  }
  SUBCASE("unknown suite") {
    CHECK_THROWS_AS(parse_config("[suites]\nrun = no-such-suite\n"),
                    UnknownSuite);
  }
  SUBCASE("errors carry line info") {
    try {
      parse_config("[rings]\nbroken line without equals\n");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
  }
  SUBCASE("default config builds the full corpus") {
    auto cfg = parse_config(default_config_text());
    CHECK(cfg.ring_specs.size() == 13);
    CHECK(cfg.pom_specs.size() == 12);
    CHECK(cfg.suites.size() == 12);
    Corpus corpus = build_corpus(cfg);
    CHECK(corpus.rings.size() == 13);
    for (auto& [name, R] : corpus.rings)
      CHECK(verify_ring_axioms(*R).all_pass());
  }
}

TEST_CASE("pom expressions") {
  CHECK(parse_pom_expr("nat").factors.size() == 1);
  CHECK(parse_pom_expr("nat * nat").factors.size() == 2);
  auto c = parse_pom_expr("chain(4)");
  REQUIRE(c.factors.size() == 1);
  CHECK(c.factors[0].fin->size == 4);
  auto d = parse_pom_expr(
      "pom{n=2; zero=0; add=0,1,1,1; leq=1,1,0,1}");
  CHECK(d.factors[0].fin->size == 2);
  CHECK_THROWS_AS(parse_pom_expr("widget(3)"), UnknownConstructor);
}

TEST_CASE("suite registry") {
  CHECK(list_suites().size() == 12);
  auto cfg = parse_config("[rings]\nz4 = zmod(4)\n[suites]\nrun = thm-retract\n");
  Corpus corpus = build_corpus(cfg);
  auto res = run_suite(cfg, corpus, "thm-retract");
  CHECK(res.suite == "thm-retract");
  CHECK(res.fail == 0);
  CHECK(res.pass >= 1);
  CHECK_THROWS_AS(run_suite(cfg, corpus, "bogus"), UnknownSuite);
}

TEST_CASE("empty corpus gives an empty result") {
  auto cfg = parse_config("[suites]\nrun = thm-retract\n");
  Corpus corpus = build_corpus(cfg);
  auto res = run_suite(cfg, corpus, "thm-retract");
  CHECK(res.checks.empty());
  CHECK(res.pass + res.fail + res.unknown == 0);
}

TEST_CASE("json report") {
  auto cfg = parse_config(
      "[rings]\nz6 = zmod(6)\n[suites]\nrun = ring-classes\n");
  Corpus corpus = build_corpus(cfg);
  std::vector<SuiteResult> results{run_suite(cfg, corpus, "ring-classes")};
  std::string a = emit_json(cfg, "cfgtext", results);
  SUBCASE("schema fields present") {
    json root = json::parse(a);
    CHECK(root["schema_version"] == 1);
    CHECK(root.contains("config_digest"));
    CHECK(root["results"].size() == 1);
  }
  SUBCASE("byte-identical across two runs") {
    std::vector<SuiteResult> again{run_suite(cfg, corpus, "ring-classes")};
    CHECK(a == emit_json(cfg, "cfgtext", again));
  }
  SUBCASE("empty result set is valid") {
    std::string s = emit_json(cfg, "x", {});
    json root = json::parse(s);
    CHECK(root["results"].is_array());
    CHECK(root["results"].empty());
  }
}

TEST_CASE("dot output for zmod(6)") {
  Budget b;
  auto R = build_ring("zmod(6)");
  auto lat = build_lattice(R, b);
  std::string dot = emit_dot("zmod(6)", lat);
  CHECK(dot.find("digraph") != std::string::npos);
  // 4 nodes, 4 covering edges
  int nodes = 0, edges = 0;
  for (size_t pos = 0; (pos = dot.find("label=", pos)) != std::string::npos; ++pos)
    ++nodes;
  for (size_t pos = 0; (pos = dot.find(" -> ", pos)) != std::string::npos; ++pos)
    ++edges;
  CHECK(nodes == 4);
  CHECK(edges == 4);
  // determinism
  CHECK(dot == emit_dot("zmod(6)", build_lattice(R, b)));
}

TEST_CASE("replay confirms witness records") {
  auto cfg = parse_config(
      "[rings]\nevens16 = subring_nonunital(zmod(16), {2})\n"
      "[suites]\nrun = ring-classes\n");
  Corpus corpus = build_corpus(cfg);
  std::vector<SuiteResult> results{run_suite(cfg, corpus, "ring-classes")};
  std::string report = emit_json(cfg, "cfg", results);
  int confirmed = replay_report(report, corpus);
  CHECK(confirmed >= 1);  // the (8,2) comparability witness
  // corrupting a witness must be detected
  json root = json::parse(report);
  bool corrupted = false;
  for (auto& suite : root["results"])
    for (auto& check : suite["checks"])
      if (check["detail"].contains("replay") &&
          !check["detail"]["replay"].empty()) {
        auto& e = check["detail"]["replay"][0]["x"]["e"][0][0];
        e = ((int)e + 1) % 8;
        corrupted = true;
        break;
      }
  REQUIRE(corrupted);
  CHECK_THROWS_AS(replay_report(root.dump(), corpus), InternalError);
}
