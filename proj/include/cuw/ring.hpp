#ifndef CUW_RING_HPP
#define CUW_RING_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cuw/errors.hpp"

namespace cuw {

using elem = uint16_t;

constexpr uint32_t kMaxRingSize = 4096;

// A finite (possibly non-unital) ring given by dense Cayley tables over the
// carrier {0, .., size-1}. Immutable after construction; share via RingPtr.
struct FiniteRing {
  uint64_t id = 0;
  uint32_t size = 0;
  std::vector<elem> add_t;  // size*size, row-major
  std::vector<elem> neg_t;  // size
  std::vector<elem> mul_t;  // size*size
  elem zero = 0;
  std::optional<elem> unit;
  std::string name;
  std::string meta;  // constructor expression this ring was built from
  std::vector<std::string> elem_names;

  elem add(elem a, elem b) const { return add_t[a * size + b]; }
  elem neg(elem a) const { return neg_t[a]; }
  elem mul(elem a, elem b) const { return mul_t[a * size + b]; }
  elem sub(elem a, elem b) const { return add(a, neg(b)); }
  const std::string& ename(elem a) const { return elem_names[a]; }
  bool is_unital() const { return unit.has_value(); }
};

using RingPtr = std::shared_ptr<const FiniteRing>;

struct RingElement {
  RingPtr ring;
  elem idx;
};

// Table-backed ring homomorphism source -> target.
struct RingMorphism {
  RingPtr source;
  RingPtr target;
  std::vector<elem> map;  // length source->size
  bool unital = false;

  elem operator()(elem a) const { return map[a]; }
  // Checks that add, mul and zero are preserved (and unit when flagged).
  void validate() const;
};

struct AxiomCheck {
  std::string axiom;
  bool pass = true;
  // witness triple (indices) on failure; unused entries stay 0
  std::vector<elem> witness;
};

struct AxiomReport {
  std::vector<AxiomCheck> checks;
  bool exhaustive = true;
  bool all_pass() const {
    for (auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

// Parses a constructor expression and builds the (validated) ring.
// Grammar: zmod(n) | gf(p) | matrix(k,R) | upper(k,R) | product(R,S) |
//          quotient(R,{g,..}) | subring_nonunital(R,{g,..}) | dorroh(R) |
//          zero_mult(n)
RingPtr build_ring(const std::string& spec);

// Exhaustive for size <= 64, otherwise 1e6 sampled triples plus the full
// quadratic abelian-group/annihilation checks.
AxiomReport verify_ring_axioms(const FiniteRing& R, uint64_t seed = 0);

uint32_t additive_exponent(const FiniteRing& R);

// Dorroh-style unitalization over Z/e where e is the additive exponent.
// Carrier (Z/e) x R with (m,a)(n,b) = (mn, mb+na+ab); embedding a -> (0,a).
std::pair<RingPtr, RingMorphism> unitalize(const RingPtr& R);

// Quotient by a validated two-sided ideal (element set). Cosets are labeled
// by their minimal representative; projection has kernel exactly I.
std::pair<RingPtr, RingMorphism> quotient_ring(const RingPtr& R,
                                               const std::vector<elem>& ideal);

// Internal constructors (exposed for tests).
RingPtr make_zmod(uint32_t n);
RingPtr make_zero_mult(uint32_t n);

}  // namespace cuw

#endif
