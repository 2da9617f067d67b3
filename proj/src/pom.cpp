#include "cuw/pom.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace cuw {

void FinitePoM::validate() const {
  if (size <= 0) throw AxiomViolation("empty PoM");
  auto bad = [&](const std::string& what) {
    throw AxiomViolation("PoM '" + name + "': " + what);
  };
  for (int a = 0; a < size; ++a) {
    if (!le(a, a)) bad("order not reflexive");
    if (plus(a, zero) != a || plus(zero, a) != a) bad("zero not neutral");
    if (!le(zero, a)) bad("zero not least");
  }
  for (int a = 0; a < size; ++a)
    for (int b = 0; b < size; ++b) {
      if (plus(a, b) != plus(b, a)) bad("addition not commutative");
      if (le(a, b) && le(b, a) && a != b) bad("order not antisymmetric");
      for (int c = 0; c < size; ++c) {
        if (plus(plus(a, b), c) != plus(a, plus(b, c)))
          bad("addition not associative");
        if (le(a, b) && le(b, c) && !le(a, c)) bad("order not transitive");
        if (le(a, b) && !le(plus(a, c), plus(b, c)))
          bad("addition not monotone");
      }
    }
}

FinitePoM chain_pom(int n) {
  FinitePoM m;
  m.size = n;
  m.add.resize(n * n);
  m.leq.resize(n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      m.add[a * n + b] = std::min(a + b, n - 1);
      m.leq[a * n + b] = a <= b;
    }
  m.name = "chain(" + std::to_string(n) + ")";
  m.validate();
  return m;
}

FinitePoM product_pom(const FinitePoM& a, const FinitePoM& b) {
  FinitePoM m;
  m.size = a.size * b.size;
  m.add.resize(m.size * m.size);
  m.leq.resize(m.size * m.size);
  auto enc = [&](int x, int y) { return x * b.size + y; };
  for (int x1 = 0; x1 < a.size; ++x1)
    for (int y1 = 0; y1 < b.size; ++y1)
      for (int x2 = 0; x2 < a.size; ++x2)
        for (int y2 = 0; y2 < b.size; ++y2) {
          m.add[enc(x1, y1) * m.size + enc(x2, y2)] =
              enc(a.plus(x1, x2), b.plus(y1, y2));
          m.leq[enc(x1, y1) * m.size + enc(x2, y2)] =
              a.le(x1, x2) && b.le(y1, y2);
        }
  m.zero = enc(a.zero, b.zero);
  m.name = a.name + "x" + b.name;
  m.validate();
  return m;
}

void PomMorphism::validate(const FinitePoM& src, const FinitePoM& dst) const {
  if ((int)map.size() != src.size)
    throw AxiomViolation("morphism table size mismatch");
  if (map[src.zero] != dst.zero)
    throw AxiomViolation("morphism does not preserve zero");
  for (int a = 0; a < src.size; ++a)
    for (int b = 0; b < src.size; ++b) {
      if (map[src.plus(a, b)] != dst.plus(map[a], map[b]))
        throw AxiomViolation("morphism not additive");
      if (src.le(a, b) && !dst.le(map[a], map[b]))
        throw AxiomViolation("morphism not monotone");
    }
}

PomMorphism identity_morphism(const FinitePoM& M) {
  PomMorphism f;
  f.map.resize(M.size);
  for (int i = 0; i < M.size; ++i) f.map[i] = i;
  return f;
}

PomMorphism compose(const PomMorphism& g, const PomMorphism& f) {
  PomMorphism h;
  h.map.resize(f.map.size());
  for (size_t i = 0; i < f.map.size(); ++i) h.map[i] = g.map[f.map[i]];
  return h;
}

void PomSystem::validate() const {
  if (kind == Kind::FiniteChain) {
    if (objects.empty()) throw AxiomViolation("empty finite chain");
    for (auto& o : objects) o.validate();
    if (maps.size() + 1 != objects.size())
      throw AxiomViolation("finite chain maps/objects mismatch");
    for (size_t i = 0; i < maps.size(); ++i)
      maps[i].validate(objects[i], objects[i + 1]);
  } else {
    M.validate();
    f.validate(M, M);
  }
}

PomColimit pom_colimit(const PomSystem& sys, int stages) {
  sys.validate();
  PomColimit col;
  col.stages = stages;

  if (sys.kind == PomSystem::Kind::FiniteChain) {
    col.value = sys.objects.back();
    // composed maps object i -> top
    std::vector<PomMorphism> to_top(sys.objects.size());
    to_top.back() = identity_morphism(sys.objects.back());
    for (int i = (int)sys.objects.size() - 2; i >= 0; --i)
      to_top[i] = compose(to_top[i + 1], sys.maps[i]);
    for (auto& m : to_top) col.stage_maps.push_back(m.map);
    col.stages = (int)sys.objects.size();
    col.carrier.resize(col.value.size);
    for (int i = 0; i < col.value.size; ++i) col.carrier[i] = i;
    return col;
  }

  const FinitePoM& M = sys.M;
  const PomMorphism& f = sys.f;
  // L large enough that f^L lands in the stable image past all transients
  int L = stages + 2 * M.size;
  std::vector<std::vector<int>> pow(L + 1);
  pow[0] = identity_morphism(M).map;
  for (int i = 1; i <= L; ++i) {
    pow[i].resize(M.size);
    for (int x = 0; x < M.size; ++x) pow[i][x] = f.map[pow[i - 1][x]];
  }
  // carrier: stable image elements
  std::set<int> img(pow[L].begin(), pow[L].end());
  col.carrier.assign(img.begin(), img.end());
  std::map<int, int> index;
  for (size_t i = 0; i < col.carrier.size(); ++i) index[col.carrier[i]] = (int)i;

  int n = (int)col.carrier.size();
  FinitePoM V;
  V.size = n;
  V.add.resize(n * n);
  V.leq.resize(n * n);
  V.name = "colim(" + M.name + ")";
  // addition: the stable image is closed under M's addition (f^L is a
  // monoid map); asymptotic order: a <= b iff f^m(a) <= f^m(b) for some m
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int s = M.plus(col.carrier[i], col.carrier[j]);
      auto it = index.find(s);
      if (it == index.end())
        throw InternalError("stable image not closed under addition");
      V.add[i * n + j] = it->second;
      bool le = false;
      for (int m = 0; m <= L && !le; ++m)
        le = M.le(pow[m][col.carrier[i]], pow[m][col.carrier[j]]);
      V.leq[i * n + j] = le;
    }
  V.zero = index.at(pow[L][M.zero]);
  V.validate();
  col.value = V;
  for (int k = 1; k <= stages; ++k) {
    std::vector<int> mu(M.size);
    for (int x = 0; x < M.size; ++x) mu[x] = index.at(pow[L - k][x]);
    col.stage_maps.push_back(mu);
  }
  return col;
}

std::optional<PomMorphism> factor_through_colimit(
    const PomSystem& sys, const PomColimit& col, const FinitePoM& N,
    const std::vector<PomMorphism>& cocone) {
  (void)sys;
  // exhaustive search over morphism tables colim -> N compatible with the
  // cocone; the colimit carrier is tiny
  int n = col.value.size;
  std::vector<int> h(n, 0);
  std::function<std::optional<PomMorphism>(int)> rec =
      [&](int pos) -> std::optional<PomMorphism> {
    if (pos == n) {
      PomMorphism cand{h};
      try {
        cand.validate(col.value, N);
      } catch (const AxiomViolation&) {
        return std::nullopt;
      }
      for (size_t k = 0; k < col.stage_maps.size() && k < cocone.size(); ++k)
        for (size_t x = 0; x < col.stage_maps[k].size(); ++x)
          if (h[col.stage_maps[k][x]] != cocone[k].map[x]) return std::nullopt;
      return cand;
    }
    for (h[pos] = 0; h[pos] < N.size; ++h[pos])
      if (auto r = rec(pos + 1)) return r;
    return std::nullopt;
  };
  return rec(0);
}

}  // namespace cuw
