#include "cuw/ring.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace cuw {

namespace {

std::atomic<uint64_t> g_next_ring_id{1};

uint64_t splitmix64(uint64_t& s) {
  uint64_t z = (s += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

RingPtr finalize(FiniteRing r) {
  r.id = g_next_ring_id.fetch_add(1);
  if (r.elem_names.empty()) {
    r.elem_names.resize(r.size);
    for (uint32_t i = 0; i < r.size; ++i) r.elem_names[i] = std::to_string(i);
  }
  auto sp = std::make_shared<FiniteRing>(std::move(r));
  AxiomReport rep = verify_ring_axioms(*sp);
  if (!rep.all_pass()) {
    std::string bad;
    for (auto& c : rep.checks)
      if (!c.pass) bad += (bad.empty() ? "" : ", ") + c.axiom;
    throw AxiomViolation("constructed ring '" + sp->name +
                         "' fails: " + bad);
  }
  return sp;
}

std::optional<elem> detect_unit(const FiniteRing& r) {
  for (elem e = 0; e < r.size; ++e) {
    bool ok = true;
    for (elem x = 0; x < r.size && ok; ++x)
      ok = r.mul(e, x) == x && r.mul(x, e) == x;
    if (ok) return e;
  }
  return std::nullopt;
}

}  // namespace

void RingMorphism::validate() const {
  const auto& S = *source;
  const auto& T = *target;
  if (map.size() != S.size)
    throw InternalError("morphism table size mismatch");
  if (map[S.zero] != T.zero) throw InternalError("morphism does not fix zero");
  for (elem a = 0; a < S.size; ++a)
    for (elem b = 0; b < S.size; ++b) {
      if (T.add(map[a], map[b]) != map[S.add(a, b)])
        throw InternalError("morphism not additive");
      if (T.mul(map[a], map[b]) != map[S.mul(a, b)])
        throw InternalError("morphism not multiplicative");
    }
  if (unital) {
    if (!S.unit || !T.unit || map[*S.unit] != *T.unit)
      throw InternalError("morphism flagged unital but does not map unit");
  }
}

uint32_t additive_exponent(const FiniteRing& R) {
  uint64_t e = 1;
  for (elem x = 0; x < R.size; ++x) {
    uint32_t ord = 1;
    elem acc = x;
    while (acc != R.zero) {
      acc = R.add(acc, x);
      ++ord;
    }
    e = std::lcm(e, (uint64_t)ord);
  }
  return (uint32_t)e;
}

AxiomReport verify_ring_axioms(const FiniteRing& R, uint64_t seed) {
  AxiomReport rep;
  const uint32_t q = R.size;
  auto check = [&](const std::string& name, bool pass,
                   std::vector<elem> wit = {}) {
    rep.checks.push_back({name, pass, std::move(wit)});
  };

  // Quadratic-or-cheaper axioms are always checked in full.
  {
    bool ok = true;
    std::vector<elem> w;
    for (elem a = 0; a < q && ok; ++a)
      for (elem b = 0; b < q && ok; ++b)
        if (R.add(a, b) != R.add(b, a)) { ok = false; w = {a, b}; }
    check("add_commutative", ok, w);
  }
  {
    bool ok = true;
    std::vector<elem> w;
    for (elem a = 0; a < q; ++a) {
      if (R.add(a, R.zero) != a || R.add(R.zero, a) != a) { ok = false; w = {a}; break; }
      if (R.add(a, R.neg(a)) != R.zero) { ok = false; w = {a}; break; }
    }
    check("add_identity_inverse", ok, w);
  }
  {
    bool ok = true;
    std::vector<elem> w;
    for (elem a = 0; a < q; ++a)
      if (R.mul(a, R.zero) != R.zero || R.mul(R.zero, a) != R.zero) {
        ok = false; w = {a}; break;
      }
    check("zero_annihilates", ok, w);
  }
  if (R.unit) {
    bool ok = true;
    std::vector<elem> w;
    for (elem a = 0; a < q; ++a)
      if (R.mul(*R.unit, a) != a || R.mul(a, *R.unit) != a) { ok = false; w = {a}; break; }
    check("unit_identity", ok, w);
  }

  auto triple_pass = [&](const char* which, elem a, elem b, elem c) -> bool {
    switch (which[0]) {
      case 'A':  // add associativity
        return R.add(R.add(a, b), c) == R.add(a, R.add(b, c));
      case 'M':  // mul associativity
        return R.mul(R.mul(a, b), c) == R.mul(a, R.mul(b, c));
      case 'L':  // left distributivity
        return R.mul(a, R.add(b, c)) == R.add(R.mul(a, b), R.mul(a, c));
      default:  // right distributivity
        return R.mul(R.add(a, b), c) == R.add(R.mul(a, c), R.mul(b, c));
    }
  };
  const char* names[4] = {"Add_associative", "Mul_associative",
                          "Left_distributive", "Right_distributive"};
  if (q <= 64) {
    for (auto* nm : names) {
      bool ok = true;
      std::vector<elem> w;
      for (elem a = 0; a < q && ok; ++a)
        for (elem b = 0; b < q && ok; ++b)
          for (elem c = 0; c < q && ok; ++c)
            if (!triple_pass(nm, a, b, c)) { ok = false; w = {a, b, c}; }
      check(nm, ok, w);
    }
  } else {
    rep.exhaustive = false;
    uint64_t s = seed ^ 0xc0ffee;
    for (auto* nm : names) {
      bool ok = true;
      std::vector<elem> w;
      for (uint32_t i = 0; i < 1000000 && ok; ++i) {
        elem a = (elem)(splitmix64(s) % q);
        elem b = (elem)(splitmix64(s) % q);
        elem c = (elem)(splitmix64(s) % q);
        if (!triple_pass(nm, a, b, c)) { ok = false; w = {a, b, c}; }
      }
      check(nm, ok, w);
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// constructors

RingPtr make_zmod(uint32_t n) {
  if (n == 0 || n > kMaxRingSize)
    throw SizeLimitExceeded("zmod(" + std::to_string(n) + ")");
  FiniteRing r;
  r.size = n;
  r.add_t.resize(n * n);
  r.neg_t.resize(n);
  r.mul_t.resize(n * n);
  for (uint32_t a = 0; a < n; ++a) {
    r.neg_t[a] = (elem)((n - a) % n);
    for (uint32_t b = 0; b < n; ++b) {
      r.add_t[a * n + b] = (elem)((a + b) % n);
      r.mul_t[a * n + b] = (elem)((a * b) % n);
    }
  }
  r.zero = 0;
  r.unit = (n == 1) ? std::optional<elem>(0) : std::optional<elem>(1);
  r.name = "zmod(" + std::to_string(n) + ")";
  r.meta = r.name;
  return finalize(std::move(r));
}

RingPtr make_zero_mult(uint32_t n) {
  if (n == 0 || n > kMaxRingSize)
    throw SizeLimitExceeded("zero_mult(" + std::to_string(n) + ")");
  FiniteRing r;
  r.size = n;
  r.add_t.resize(n * n);
  r.neg_t.resize(n);
  r.mul_t.assign(n * n, 0);
  for (uint32_t a = 0; a < n; ++a) {
    r.neg_t[a] = (elem)((n - a) % n);
    for (uint32_t b = 0; b < n; ++b) r.add_t[a * n + b] = (elem)((a + b) % n);
  }
  r.zero = 0;
  if (n == 1) r.unit = 0;
  r.name = "zero_mult(" + std::to_string(n) + ")";
  r.meta = r.name;
  return finalize(std::move(r));
}

namespace {

bool is_prime(uint32_t p) {
  if (p < 2) return false;
  for (uint32_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// Full k x k matrix ring over R; elements encoded mixed-radix over entries
// (row-major, first entry most significant).
RingPtr make_matrix(uint32_t k, const RingPtr& base, bool upper) {
  const uint32_t q = base->size;
  const uint32_t cells = upper ? k * (k + 1) / 2 : k * k;
  uint64_t sz = 1;
  for (uint32_t i = 0; i < cells; ++i) {
    sz *= q;
    if (sz > kMaxRingSize)
      throw SizeLimitExceeded("matrix ring over " + base->name);
  }
  const uint32_t n = (uint32_t)sz;

  // cell <-> (i,j) layout
  std::vector<std::pair<uint32_t, uint32_t>> pos;
  for (uint32_t i = 0; i < k; ++i)
    for (uint32_t j = upper ? i : 0; j < k; ++j) pos.push_back({i, j});

  auto decode = [&](uint32_t code) {
    std::vector<elem> m(k * k, base->zero);
    for (uint32_t c = cells; c-- > 0;) {
      m[pos[c].first * k + pos[c].second] = (elem)(code % q);
      code /= q;
    }
    return m;
  };
  auto encode = [&](const std::vector<elem>& m) {
    uint32_t code = 0;
    for (uint32_t c = 0; c < cells; ++c)
      code = code * q + m[pos[c].first * k + pos[c].second];
    return (elem)code;
  };

  FiniteRing r;
  r.size = n;
  r.add_t.resize((size_t)n * n);
  r.neg_t.resize(n);
  r.mul_t.resize((size_t)n * n);
  r.elem_names.resize(n);
  std::vector<std::vector<elem>> mats(n);
  for (uint32_t a = 0; a < n; ++a) mats[a] = decode(a);
  for (uint32_t a = 0; a < n; ++a) {
    std::vector<elem> nm(k * k);
    for (uint32_t c = 0; c < k * k; ++c) nm[c] = base->neg(mats[a][c]);
    r.neg_t[a] = encode(nm);
    std::ostringstream nameos;
    nameos << "[";
    for (uint32_t i = 0; i < k; ++i) {
      if (i) nameos << ";";
      for (uint32_t j = 0; j < k; ++j)
        nameos << (j ? " " : "") << base->ename(mats[a][i * k + j]);
    }
    nameos << "]";
    r.elem_names[a] = nameos.str();
    for (uint32_t b = 0; b < n; ++b) {
      std::vector<elem> s(k * k), p(k * k, base->zero);
      for (uint32_t c = 0; c < k * k; ++c) s[c] = base->add(mats[a][c], mats[b][c]);
      for (uint32_t i = 0; i < k; ++i)
        for (uint32_t j = 0; j < k; ++j) {
          elem acc = base->zero;
          for (uint32_t l = 0; l < k; ++l)
            acc = base->add(acc, base->mul(mats[a][i * k + l], mats[b][l * k + j]));
          p[i * k + j] = acc;
        }
      r.add_t[(size_t)a * n + b] = encode(s);
      r.mul_t[(size_t)a * n + b] = encode(p);
    }
  }
  r.zero = 0;
  if (base->unit) {
    std::vector<elem> id(k * k, base->zero);
    for (uint32_t i = 0; i < k; ++i) id[i * k + i] = *base->unit;
    r.unit = encode(id);
  }
  r.name = (upper ? "upper(" : "matrix(") + std::to_string(k) + ", " + base->name + ")";
  r.meta = r.name;
  return finalize(std::move(r));
}

RingPtr make_product(const RingPtr& A, const RingPtr& B) {
  uint64_t n64 = (uint64_t)A->size * B->size;
  if (n64 > kMaxRingSize) throw SizeLimitExceeded("product ring");
  uint32_t n = (uint32_t)n64, qb = B->size;
  FiniteRing r;
  r.size = n;
  r.add_t.resize((size_t)n * n);
  r.neg_t.resize(n);
  r.mul_t.resize((size_t)n * n);
  r.elem_names.resize(n);
  auto enc = [&](elem a, elem b) { return (elem)(a * qb + b); };
  for (elem a1 = 0; a1 < A->size; ++a1)
    for (elem b1 = 0; b1 < B->size; ++b1) {
      elem x = enc(a1, b1);
      r.neg_t[x] = enc(A->neg(a1), B->neg(b1));
      r.elem_names[x] = "(" + A->ename(a1) + "," + B->ename(b1) + ")";
      for (elem a2 = 0; a2 < A->size; ++a2)
        for (elem b2 = 0; b2 < B->size; ++b2) {
          elem y = enc(a2, b2);
          r.add_t[(size_t)x * n + y] = enc(A->add(a1, a2), B->add(b1, b2));
          r.mul_t[(size_t)x * n + y] = enc(A->mul(a1, a2), B->mul(b1, b2));
        }
    }
  r.zero = enc(A->zero, B->zero);
  if (A->unit && B->unit) r.unit = enc(*A->unit, *B->unit);
  r.name = "product(" + A->name + ", " + B->name + ")";
  r.meta = r.name;
  return finalize(std::move(r));
}

// Two-sided ideal closure of a generating set (element indices).
std::vector<elem> ideal_closure_of(const FiniteRing& R, std::vector<elem> gens) {
  std::vector<char> in(R.size, 0);
  std::vector<elem> work;
  auto push = [&](elem x) {
    if (!in[x]) { in[x] = 1; work.push_back(x); }
  };
  push(R.zero);
  for (elem g : gens) push(g);
  std::vector<elem> members{R.zero};
  for (size_t i = 0; i < work.size(); ++i) {
    elem w = work[i];
    push(R.neg(w));
    for (elem r = 0; r < R.size; ++r) {
      push(R.mul(r, w));
      push(R.mul(w, r));
    }
    for (size_t j = 0; j <= i; ++j) push(R.add(w, work[j]));
  }
  std::vector<elem> out;
  for (elem x = 0; x < R.size; ++x)
    if (in[x]) out.push_back(x);
  return out;
}

// Subring (no unit assumed) generated by gens: closure under add, neg, mul.
std::vector<elem> subring_closure_of(const FiniteRing& R, std::vector<elem> gens) {
  std::vector<char> in(R.size, 0);
  std::vector<elem> work;
  auto push = [&](elem x) {
    if (!in[x]) { in[x] = 1; work.push_back(x); }
  };
  push(R.zero);
  for (elem g : gens) push(g);
  for (size_t i = 0; i < work.size(); ++i) {
    elem w = work[i];
    push(R.neg(w));
    for (size_t j = 0; j <= i; ++j) {
      push(R.add(w, work[j]));
      push(R.mul(w, work[j]));
      push(R.mul(work[j], w));
    }
  }
  std::vector<elem> out;
  for (elem x = 0; x < R.size; ++x)
    if (in[x]) out.push_back(x);
  return out;
}

RingPtr make_subring(const RingPtr& base, const std::vector<elem>& gens,
                     const std::string& spec_text) {
  for (elem g : gens)
    if (g >= base->size)
      throw SpecParseError("generator index out of range in " + spec_text);
  std::vector<elem> carrier = subring_closure_of(*base, gens);
  uint32_t n = (uint32_t)carrier.size();
  std::vector<elem> back(base->size, 0);
  for (uint32_t i = 0; i < n; ++i) back[carrier[i]] = (elem)i;
  FiniteRing r;
  r.size = n;
  r.add_t.resize((size_t)n * n);
  r.neg_t.resize(n);
  r.mul_t.resize((size_t)n * n);
  r.elem_names.resize(n);
  for (uint32_t i = 0; i < n; ++i) {
    r.neg_t[i] = back[base->neg(carrier[i])];
    r.elem_names[i] = base->ename(carrier[i]);
    for (uint32_t j = 0; j < n; ++j) {
      r.add_t[(size_t)i * n + j] = back[base->add(carrier[i], carrier[j])];
      r.mul_t[(size_t)i * n + j] = back[base->mul(carrier[i], carrier[j])];
    }
  }
  r.zero = back[base->zero];
  r.name = spec_text;
  r.meta = spec_text;
  auto u = detect_unit(r);
  r.unit = u;
  return finalize(std::move(r));
}

}  // namespace

std::pair<RingPtr, RingMorphism> quotient_ring(const RingPtr& R,
                                               const std::vector<elem>& ideal) {
  // validate two-sided ideal
  std::vector<char> in(R->size, 0);
  for (elem x : ideal) in[x] = 1;
  if (!in[R->zero]) throw NotAnIdeal("ideal does not contain zero");
  for (elem a : ideal) {
    if (!in[R->neg(a)]) throw NotAnIdeal("not closed under negation");
    for (elem b : ideal)
      if (!in[R->add(a, b)]) throw NotAnIdeal("not closed under addition");
    for (elem r = 0; r < R->size; ++r)
      if (!in[R->mul(r, a)] || !in[R->mul(a, r)])
        throw NotAnIdeal("not closed under ring multiplication");
  }

  // cosets labeled by minimal representative, sorted by that representative
  std::vector<elem> rep(R->size);
  for (elem x = 0; x < R->size; ++x) {
    elem m = x;
    for (elem a : ideal) m = std::min(m, R->add(x, a));
    rep[x] = m;
  }
  std::vector<elem> reps;
  for (elem x = 0; x < R->size; ++x)
    if (rep[x] == x) reps.push_back(x);
  uint32_t n = (uint32_t)reps.size();
  std::vector<elem> label(R->size, 0);
  for (uint32_t i = 0; i < n; ++i) label[reps[i]] = (elem)i;

  FiniteRing r;
  r.size = n;
  r.add_t.resize((size_t)n * n);
  r.neg_t.resize(n);
  r.mul_t.resize((size_t)n * n);
  r.elem_names.resize(n);
  for (uint32_t i = 0; i < n; ++i) {
    r.neg_t[i] = label[rep[R->neg(reps[i])]];
    r.elem_names[i] = R->ename(reps[i]) + "+I";
    for (uint32_t j = 0; j < n; ++j) {
      r.add_t[(size_t)i * n + j] = label[rep[R->add(reps[i], reps[j])]];
      r.mul_t[(size_t)i * n + j] = label[rep[R->mul(reps[i], reps[j])]];
    }
  }
  r.zero = label[rep[R->zero]];
  if (R->unit) r.unit = label[rep[*R->unit]];
  else {
    auto u = detect_unit(r);
    r.unit = u;
  }
  r.name = R->name + "/I" + std::to_string(ideal.size());
  r.meta = "quotient(" + R->meta + ", |I|=" + std::to_string(ideal.size()) + ")";
  RingPtr Q = finalize(std::move(r));

  RingMorphism pi;
  pi.source = R;
  pi.target = Q;
  pi.map.resize(R->size);
  for (elem x = 0; x < R->size; ++x) pi.map[x] = label[rep[x]];
  pi.unital = R->unit && Q->unit ? pi.map[*R->unit] == *Q->unit : false;
  pi.validate();
  return {Q, pi};
}

std::pair<RingPtr, RingMorphism> unitalize(const RingPtr& R) {
  uint32_t e = additive_exponent(*R);
  uint64_t n64 = (uint64_t)e * R->size;
  if (n64 > kMaxRingSize) throw SizeLimitExceeded("dorroh(" + R->name + ")");
  uint32_t n = (uint32_t)n64, q = R->size;
  auto enc = [&](uint32_t m, elem a) { return (elem)(m * q + a); };
  // m*a computed by repeated addition (m < e is small)
  auto scl = [&](uint32_t m, elem a) {
    elem acc = R->zero;
    for (uint32_t i = 0; i < m; ++i) acc = R->add(acc, a);
    return acc;
  };
  FiniteRing r;
  r.size = n;
  r.add_t.resize((size_t)n * n);
  r.neg_t.resize(n);
  r.mul_t.resize((size_t)n * n);
  r.elem_names.resize(n);
  for (uint32_t m1 = 0; m1 < e; ++m1)
    for (elem a1 = 0; a1 < q; ++a1) {
      elem x = enc(m1, a1);
      r.neg_t[x] = enc((e - m1) % e, R->neg(a1));
      r.elem_names[x] = "(" + std::to_string(m1) + "," + R->ename(a1) + ")";
      for (uint32_t m2 = 0; m2 < e; ++m2)
        for (elem a2 = 0; a2 < q; ++a2) {
          elem y = enc(m2, a2);
          r.add_t[(size_t)x * n + y] = enc((m1 + m2) % e, R->add(a1, a2));
          elem prod = R->add(R->add(scl(m1, a2), scl(m2, a1)), R->mul(a1, a2));
          r.mul_t[(size_t)x * n + y] = enc((m1 * m2) % e, prod);
        }
    }
  r.zero = enc(0, R->zero);
  r.unit = enc(1 % e, R->zero);
  r.name = "dorroh(" + R->name + ")";
  r.meta = "dorroh(" + R->meta + ")";
  RingPtr D = finalize(std::move(r));

  RingMorphism emb;
  emb.source = R;
  emb.target = D;
  emb.map.resize(q);
  for (elem a = 0; a < q; ++a) emb.map[a] = enc(0, a);
  emb.unital = false;
  emb.validate();
  return {D, emb};
}

// ---------------------------------------------------------------------------
// constructor-expression parser

namespace {

struct Parser {
  const std::string& s;
  size_t i = 0;

  explicit Parser(const std::string& text) : s(text) {}

  void skip_ws() {
    while (i < s.size() && std::isspace((unsigned char)s[i])) ++i;
  }
  bool eat(char c) {
    skip_ws();
    if (i < s.size() && s[i] == c) { ++i; return true; }
    return false;
  }
  void expect(char c) {
    if (!eat(c))
      throw SpecParseError(std::string("expected '") + c + "' at offset " +
                           std::to_string(i) + " in '" + s + "'");
  }
  std::string ident() {
    skip_ws();
    size_t start = i;
    while (i < s.size() && (std::isalnum((unsigned char)s[i]) || s[i] == '_'))
      ++i;
    if (start == i)
      throw SpecParseError("expected identifier at offset " +
                           std::to_string(i) + " in '" + s + "'");
    return s.substr(start, i - start);
  }
  uint32_t number() {
    skip_ws();
    size_t start = i;
    while (i < s.size() && std::isdigit((unsigned char)s[i])) ++i;
    if (start == i)
      throw SpecParseError("expected number at offset " + std::to_string(i) +
                           " in '" + s + "'");
    return (uint32_t)std::stoul(s.substr(start, i - start));
  }
  std::vector<elem> gen_set() {
    expect('{');
    std::vector<elem> g;
    skip_ws();
    if (!eat('}')) {
      do {
        g.push_back((elem)number());
      } while (eat(','));
      expect('}');
    }
    return g;
  }

  RingPtr expr() {
    std::string name = ident();
    if (name == "zmod") {
      expect('('); uint32_t n = number(); expect(')');
      return make_zmod(n);
    }
    if (name == "gf") {
      expect('('); uint32_t p = number(); expect(')');
      if (!is_prime(p))
        throw SpecParseError("gf(p) requires prime p, got " + std::to_string(p));
      FiniteRing copy = *make_zmod(p);
      copy.name = "gf(" + std::to_string(p) + ")";
      copy.meta = copy.name;
      return finalize(std::move(copy));
    }
    if (name == "zero_mult") {
      expect('('); uint32_t n = number(); expect(')');
      return make_zero_mult(n);
    }
    if (name == "matrix" || name == "upper") {
      expect('('); uint32_t k = number(); expect(','); RingPtr b = expr(); expect(')');
      if (k == 0) throw SpecParseError(name + "(0, ..) is not a ring");
      return make_matrix(k, b, name == "upper");
    }
    if (name == "product") {
      expect('('); RingPtr a = expr(); expect(','); RingPtr b = expr(); expect(')');
      return make_product(a, b);
    }
    if (name == "dorroh") {
      expect('('); RingPtr a = expr(); expect(')');
      return unitalize(a).first;
    }
    if (name == "quotient") {
      expect('('); RingPtr a = expr(); expect(',');
      std::vector<elem> g = gen_set(); expect(')');
      for (elem x : g)
        if (x >= a->size) throw SpecParseError("generator out of range");
      auto I = ideal_closure_of(*a, g);
      return quotient_ring(a, I).first;
    }
    if (name == "subring_nonunital") {
      expect('('); RingPtr a = expr(); expect(',');
      std::vector<elem> g = gen_set(); expect(')');
      std::string text = "subring_nonunital(" + a->name + ", {";
      for (size_t k = 0; k < g.size(); ++k)
        text += (k ? "," : "") + std::to_string(g[k]);
      text += "})";
      return make_subring(a, g, text);
    }
    throw UnknownConstructor("unknown ring constructor '" + name + "'");
  }
};

}  // namespace

RingPtr build_ring(const std::string& spec) {
  Parser p(spec);
  RingPtr r = p.expr();
  p.skip_ws();
  if (p.i != spec.size())
    throw SpecParseError("trailing characters in '" + spec + "'");
  return r;
}

}  // namespace cuw
