#include "cuw/config.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace cuw {

namespace {

const std::set<std::string> kSuiteIds = {
    "ideal-classes", "thm-retract", "lemma-lift",   "block-lift",
    "ring-classes",  "chain-ops",   "qp-chains",    "s-closure",
    "dense-interp",  "intervals",   "cu-limits",    "sq-pairs"};

std::string strip(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

[[noreturn]] void fail(int line, int col, const std::string& msg) {
  throw ParseError("line " + std::to_string(line) + ", col " +
                   std::to_string(col) + ": " + msg);
}

}  // namespace

WorkbenchConfig parse_config(const std::string& text) {
  WorkbenchConfig cfg;
  std::istringstream in(text);
  std::string raw;
  std::string section;
  std::set<std::string> ring_names, pom_names;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = raw;
    size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = strip(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') fail(lineno, (int)line.size(), "unterminated section");
      section = line.substr(1, line.size() - 2);
      if (section != "rings" && section != "poms" && section != "bounds" &&
          section != "suites" && section != "output")
        fail(lineno, 1, "unknown section [" + section + "]");
      continue;
    }
    size_t eq = line.find('=');
    if (eq == std::string::npos) fail(lineno, 1, "expected key = value");
    std::string key = strip(line.substr(0, eq));
    std::string val = strip(line.substr(eq + 1));
    if (key.empty()) fail(lineno, 1, "empty key");
    if (section == "rings") {
      if (!ring_names.insert(key).second)
        fail(lineno, 1, "duplicate ring name '" + key + "'");
      cfg.ring_specs.push_back({key, val});
    } else if (section == "poms") {
      if (!pom_names.insert(key).second)
        fail(lineno, 1, "duplicate pom name '" + key + "'");
      cfg.pom_specs.push_back({key, val});
    } else if (section == "bounds") {
      try {
        if (key == "matrix_size") cfg.matrix_size = std::stoi(val);
        else if (key == "oracle_size") cfg.oracle_size = std::stoi(val);
        else if (key == "op_budget") cfg.op_budget = std::stoull(val);
        else if (key == "seed") cfg.seed = std::stoull(val);
        else fail(lineno, 1, "unknown bound '" + key + "'");
      } catch (const std::invalid_argument&) {
        fail(lineno, (int)eq + 2, "not a number: '" + val + "'");
      }
      if (cfg.matrix_size <= 0 || cfg.oracle_size <= 0)
        fail(lineno, 1, "bounds must be positive");
    } else if (section == "suites") {
      if (key != "run") fail(lineno, 1, "expected 'run = id, id, ...'");
      std::istringstream items(val);
      std::string id;
      while (std::getline(items, id, ',')) {
        id = strip(id);
        if (id.empty()) continue;
        if (!kSuiteIds.count(id)) throw UnknownSuite("unknown suite '" + id + "'");
        cfg.suites.push_back(id);
      }
    } else if (section == "output") {
      if (key == "json") cfg.json_out = val;
      else if (key == "dot_dir") cfg.dot_dir = val;
      else if (key == "timestamps") cfg.timestamps = val == "on" || val == "true";
      else fail(lineno, 1, "unknown output key '" + key + "'");
    } else {
      fail(lineno, 1, "key outside any section");
    }
  }
  if (cfg.suites.empty())
    cfg.suites.assign(kSuiteIds.begin(), kSuiteIds.end());
  return cfg;
}

// ---------------------------------------------------------------------------
// PoM expressions

namespace {

FinitePoM parse_pom_tables(const std::string& body) {
  // n=..; zero=..; add=..,..; leq=..,..
  FinitePoM m;
  m.name = "pom";
  std::istringstream in(body);
  std::string part;
  while (std::getline(in, part, ';')) {
    part = strip(part);
    if (part.empty()) continue;
    size_t eq = part.find('=');
    if (eq == std::string::npos)
      throw ParseError("pom{}: expected key=value, got '" + part + "'");
    std::string key = strip(part.substr(0, eq));
    std::string val = strip(part.substr(eq + 1));
    auto ints = [&]() {
      std::vector<int> out;
      std::istringstream vs(val);
      std::string tok;
      while (std::getline(vs, tok, ',')) out.push_back(std::stoi(strip(tok)));
      return out;
    };
    if (key == "n") m.size = std::stoi(val);
    else if (key == "zero") m.zero = std::stoi(val);
    else if (key == "add") m.add = ints();
    else if (key == "leq") {
      m.leq.clear();
      for (int v : ints()) m.leq.push_back((char)v);
    } else
      throw ParseError("pom{}: unknown key '" + key + "'");
  }
  if ((int)m.add.size() != m.size * m.size ||
      (int)m.leq.size() != m.size * m.size)
    throw ParseError("pom{}: table sizes do not match n");
  m.validate();
  return m;
}

SimplePoM::Factor parse_factor(const std::string& tok) {
  std::string t = strip(tok);
  if (t == "nat") return {std::nullopt};
  if (t.rfind("chain(", 0) == 0 && t.back() == ')') {
    int n = std::stoi(t.substr(6, t.size() - 7));
    if (n <= 0) throw ParseError("chain(n) needs n >= 1");
    return {chain_pom(n)};
  }
  if (t.rfind("pom{", 0) == 0 && t.back() == '}')
    return {parse_pom_tables(t.substr(4, t.size() - 5))};
  throw UnknownConstructor("unknown pom factor '" + t + "'");
}

}  // namespace

SimplePoM parse_pom_expr(const std::string& expr) {
  SimplePoM m;
  m.name = expr;
  std::string cur;
  int depth = 0;
  auto flush = [&]() {
    if (!strip(cur).empty()) m.factors.push_back(parse_factor(cur));
    cur.clear();
  };
  for (char c : expr) {
    if (c == '{' || c == '(') ++depth;
    if (c == '}' || c == ')') --depth;
    if (c == '*' && depth == 0) {
      flush();
      continue;
    }
    cur.push_back(c);
  }
  flush();
  if (m.factors.empty()) throw ParseError("empty pom expression");
  return m;
}

Corpus build_corpus(const WorkbenchConfig& cfg) {
  Corpus c;
  for (auto& [name, spec] : cfg.ring_specs) c.rings.push_back({name, build_ring(spec)});
  for (auto& [name, spec] : cfg.pom_specs) c.poms.push_back({name, parse_pom_expr(spec)});
  return c;
}

std::string default_config_text() {
  return R"(# bundled corpus
[rings]
z4 = zmod(4)
z6 = zmod(6)
z8 = zmod(8)
z12 = zmod(12)
z16 = zmod(16)
f2 = gf(2)
f3 = gf(3)
m2f2 = matrix(2, gf(2))
u2z2 = upper(2, zmod(2))
z2xz4 = product(zmod(2), zmod(4))
evens16 = subring_nonunital(zmod(16), {2})
null4 = zero_mult(4)
evens16plus = dorroh(subring_nonunital(zmod(16), {2}))

[poms]
c1 = chain(1)
c2 = chain(2)
c3 = chain(3)
c4 = chain(4)
c5 = chain(5)
c6 = chain(6)
c2xc2 = chain(2) * chain(2)
c2xc3 = chain(2) * chain(3)
c3xc3 = chain(3) * chain(3)
diamond = pom{n=4; zero=0; add=0,1,2,3,1,3,3,3,2,3,3,3,3,3,3,3; leq=1,1,1,1,0,1,0,1,0,0,1,1,0,0,0,1}
n1 = nat
n2 = nat * nat

[bounds]
matrix_size = 2
oracle_size = 2
op_budget = 100000000
seed = 0

[suites]
run = ideal-classes, thm-retract, lemma-lift, block-lift, ring-classes, chain-ops, qp-chains, s-closure, dense-interp, intervals, cu-limits, sq-pairs
)";
}

}  // namespace cuw
