#ifndef CUW_CU_HPP
#define CUW_CU_HPP

#include "cuw/classes.hpp"
#include "cuw/pom.hpp"

namespace cuw {

// ---------------------------------------------------------------------------
// simple PoMs: products of finite PoMs and copies of N

struct SimplePoM {
  struct Factor {
    std::optional<FinitePoM> fin;  // empty = a copy of N
    bool is_nat() const { return !fin.has_value(); }
  };
  std::vector<Factor> factors;
  std::string name;
};

// Interval-semigroup element: per finite factor the maximum of a principal
// down-set (an element index), per N factor a value in N u {inf}.
using CuVal = int64_t;
constexpr CuVal kCuInf = -1;
using CuVec = std::vector<CuVal>;

inline bool natinf_le(CuVal a, CuVal b) { return b == kCuInf || (a != kCuInf && a <= b); }
inline CuVal natinf_add(CuVal a, CuVal b) {
  return (a == kCuInf || b == kCuInf) ? kCuInf : a + b;
}

// The interval semigroup Lambda_sigma(M): finite factors contribute
// themselves (all intervals are principal), N factors contribute N u {inf};
// way-below is <= on finite factors and "finite and <=" on N u {inf}.
struct LambdaSigma {
  SimplePoM base;

  int arity() const { return (int)base.factors.size(); }
  bool leq(const CuVec& a, const CuVec& b) const;
  CuVec add(const CuVec& a, const CuVec& b) const;
  bool wb(const CuVec& a, const CuVec& b) const;
  CuVec zero() const;
  bool is_compact(const CuVec& a) const { return wb(a, a); }
  // enumerates a value grid: finite factors in full, N factors {0..cap, inf}
  std::vector<CuVec> grid(CuVal cap) const;
};
LambdaSigma lambda_sigma(const SimplePoM& M);

// compacts map: the compact elements form a sub-PoM isomorphic to M; returns
// the isomorphism as (element of M) -> CuVec together with verification
struct CompactsIso {
  std::vector<CuVec> to_cu;  // indexed by M-grid position
  bool verified = false;
};
CompactsIso compacts_isomorphism(const LambdaSigma& S, CuVal nat_cap = 6);

// ---------------------------------------------------------------------------
// finite Cu structures (tables; for finite PoMs way-below equals the order)

struct FiniteCu {
  FinitePoM pom;
  std::vector<char> wb;
  std::string name;
  bool le(int a, int b) const { return pom.le(a, b); }
  int plus(int a, int b) const { return pom.plus(a, b); }
  bool way_below(int a, int b) const { return wb[a * pom.size + b] != 0; }
};
FiniteCu finite_cu(const FinitePoM& M);

// ---------------------------------------------------------------------------
// axiom checking

struct CuAxiomCheck {
  std::string axiom;
  bool pass = true;
  std::string witness;
};
struct CuAxiomReport {
  std::vector<CuAxiomCheck> checks;
  bool all_pass() const {
    for (auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

CuAxiomReport check_cu_axioms(const FiniteCu& S);

// Symbolic (N u inf)^k model with override hooks used by mutation tests.
struct NatInfModel {
  int k = 1;
  std::string name = "(N+inf)^k";
  CuVal grid_cap = 8;
  // overrides; when absent the honest structure is used
  std::function<bool(const CuVec&, const CuVec&)> leq_hook;
  std::function<bool(const CuVec&, const CuVec&)> wb_hook;
  // sup of the canonical increasing sequence with the given divergence mask
  std::function<CuVec(const CuVec&, const std::vector<char>&)> sup_hook;

  bool leq(const CuVec& a, const CuVec& b) const;
  CuVec add(const CuVec& a, const CuVec& b) const;
  bool wb(const CuVec& a, const CuVec& b) const;
  CuVec sup(const CuVec& base, const std::vector<char>& diverges) const;
};
CuAxiomReport check_cu_axioms(const NatInfModel& S);

// ---------------------------------------------------------------------------
// ideals and quotients

struct FiniteCuIdeal {
  std::vector<int> elems;
  std::vector<char> member;
};
std::vector<FiniteCuIdeal> cu_ideals(const FiniteCu& S);

struct FiniteCuQuotient {
  FiniteCu value;
  std::vector<int> cls;          // S -> quotient index
  std::vector<char> aux;         // auxiliary relation prec_J
  CuAxiomReport o1_o4;           // O1/O4 re-checked on the quotient
};
FiniteCuQuotient cu_quotient(const FiniteCu& S, const FiniteCuIdeal& J);

// symbolic side: ideals of (N+inf)^k are coordinate-mask products
struct NatInfIdeal {
  std::vector<char> full;  // true: that coordinate carries all of N+inf
};
std::vector<NatInfIdeal> natinf_ideals(int k, CuVal verify_cap = 4);
// quotient by a mask ideal: projection onto the non-full coordinates;
// returns the list of kept coordinates and verifies the order iso on a grid
struct NatInfQuotient {
  std::vector<int> kept;
  bool iso_verified = false;
};
NatInfQuotient natinf_quotient(int k, const NatInfIdeal& J, CuVal cap = 5);

// ---------------------------------------------------------------------------
// SQ pairs (S, W)

struct SQPairFin {
  FinitePoM S;
  std::vector<char> prec;  // auxiliary relation table
  std::vector<char> W;     // submonoid mask
  std::string name;
};

// honest prec for a finite Q-semigroup: the order itself
SQPairFin make_sq_pair(const FinitePoM& S, std::vector<char> W);

struct SQValidation {
  bool ok = true;
  std::vector<std::string> issues;
};
SQValidation sq_validate(const SQPairFin& P);

std::vector<FiniteCuIdeal> sq_ideals(const SQPairFin& P);
bool sq_cofinal(const SQPairFin& P, const FiniteCuIdeal& I);

struct SQQuotient {
  FiniteCu value;                  // S/I
  std::vector<int> cls;            // S -> S/I
  std::vector<char> Wq;            // image of W in S/I
  bool order_embeds = false;       // W/(I cap W) embeds in S/I
};
SQQuotient sq_quotient(const SQPairFin& P, const FiniteCuIdeal& I);

// exactness of 0 -> (I, I cap W) -> (S, W) -> (S/I, W/I cap W) -> 0 via the
// Im/ker comparison on both components
struct SQExactness {
  bool first_exact = false;
  bool second_exact = false;
};
SQExactness sq_exact(const SQPairFin& P, const FiniteCuIdeal& I);

// ---------------------------------------------------------------------------
// Cu limits

struct CuLimitReport {
  bool cond_a = false, cond_b = false, cond_c = false;
  std::string detail;
  bool pass() const { return cond_a && cond_b && cond_c; }
};
// EndoChain system of finite Cu structures (Lambda_sigma of finite PoMs)
// against a candidate limit with stage maps.
CuLimitReport check_cu_limit(const FiniteCu& object, const PomMorphism& step,
                             const FiniteCu& candidate,
                             const std::vector<std::vector<int>>& stage_maps,
                             int stages);

// ---------------------------------------------------------------------------
// truncated W(R)

struct TruncatedW {
  RingPtr ring;
  int bound = 0;
  std::vector<RingMatrix> reps;        // class representatives (trimmed)
  std::vector<std::vector<int>> order; // leq between classes
  std::vector<std::vector<int>> add;   // class sum or -1 when out of range
  std::string match;                   // "N(trunc k)" | "unknown"
};
TruncatedW truncated_w(const RingPtr& R, int N, Budget& budget);

}  // namespace cuw

#endif
