#ifndef CUW_POM_HPP
#define CUW_POM_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cuw/errors.hpp"

namespace cuw {

// Finite positively ordered monoid: commutative monoid with a partial order
// in which 0 is the least element and addition is monotone.
struct FinitePoM {
  int size = 0;
  std::vector<int> add;   // size*size
  std::vector<char> leq;  // size*size
  int zero = 0;
  std::string name;

  int plus(int a, int b) const { return add[a * size + b]; }
  bool le(int a, int b) const { return leq[a * size + b] != 0; }
  void validate() const;
};

// chain {0 < 1 < ... < n-1} with addition truncated at the top
FinitePoM chain_pom(int n);
FinitePoM product_pom(const FinitePoM& a, const FinitePoM& b);

struct PomMorphism {
  std::vector<int> map;
  int operator()(int x) const { return map[x]; }
  // preserves addition, order, and the zero element
  void validate(const FinitePoM& src, const FinitePoM& dst) const;
};

PomMorphism identity_morphism(const FinitePoM& M);
PomMorphism compose(const PomMorphism& g, const PomMorphism& f);  // g after f

struct PomSystem {
  enum class Kind { FiniteChain, EndoChain };
  Kind kind = Kind::EndoChain;
  // FiniteChain: objects[0] -> objects[1] -> ... via maps[i]
  std::vector<FinitePoM> objects;
  std::vector<PomMorphism> maps;
  // EndoChain: M -> M -> ... via f
  FinitePoM M;
  PomMorphism f;

  void validate() const;
};

// Colimit in PoM. For an EndoChain the carrier is the stable image f^L(M)
// with x ~ y iff f^n(x) = f^n(y) and the asymptotic order.
struct PomColimit {
  FinitePoM value;
  // stage maps mu_k for k = 1..stages (tables M -> value carrier)
  std::vector<std::vector<int>> stage_maps;
  int stages = 0;
  // carrier elements as elements of the source M (EndoChain) or of the top
  // object (FiniteChain)
  std::vector<int> carrier;
};
PomColimit pom_colimit(const PomSystem& sys, int stages = 3);

// Universal property probe: given a cocone (g_k: M -> N with g_k = g_{k+1} o f),
// search a PoM-morphism h: colim -> N with h o mu_k = g_k for all k.
std::optional<PomMorphism> factor_through_colimit(
    const PomSystem& sys, const PomColimit& col, const FinitePoM& N,
    const std::vector<PomMorphism>& cocone);

}  // namespace cuw

#endif
