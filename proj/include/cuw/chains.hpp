#ifndef CUW_CHAINS_HPP
#define CUW_CHAINS_HPP

#include "cuw/classes.hpp"
#include "cuw/ideals.hpp"
#include "cuw/matrix.hpp"

namespace cuw {

// S-membership certificates: terms[n] = y[n] * terms[n+1] * terms[n], and
// last = tail_y * last * last for the repeated tail.
struct SWitnesses {
  std::vector<RingMatrix> y;  // size terms-1
  RingMatrix tail_y;
};

// Finitely presented <=_1-increasing sequence with a RepeatLast tail: the
// represented infinite sequence is terms[0], .., terms[n-1], last, last, ...
struct ChainSequence {
  RingPtr ring;
  std::vector<RingMatrix> terms;
  std::vector<SubordinationWitness> links;  // terms[i] <=_1 terms[i+1]
  SubordinationWitness tail;                // last <=_1 last
  std::optional<SWitnesses> s;

  size_t len() const { return terms.size(); }
  const RingMatrix& term(size_t i) const {
    return i < terms.size() ? terms[i] : terms.back();
  }
  const RingMatrix& last() const { return terms.back(); }
  bool s_certified() const { return s.has_value(); }
};

// Validates subordination links and the RepeatLast tail by witness search.
ChainSequence make_chain(const RingPtr& R, std::vector<RingMatrix> terms,
                         Budget& budget);

// Replays every stored witness by multiplication.
void validate_chain(const ChainSequence& c);

// Attaches S-membership witnesses (solved per link, and for the tail).
ChainSequence certify_s_membership(ChainSequence c, Budget& budget);

// Rebuilds S-witnesses with entries inside I for a chain whose terms lie in
// M(I), via y' = y_{n+1} * y_{n+2} * x_{n+2}.
SWitnesses rewitness_in_ideal(const ChainSequence& c, const Ideal& I);

enum class ChainRel { Le, Equiv, Prec };

struct ChainRelationVerdict {
  bool holds = false;
  // forward witnesses: per term of the left chain, a witness against the
  // dominating term of the right chain (index recorded)
  std::vector<SubordinationWitness> witnesses;
  int dominating_index = -1;
  int failing_index = -1;
};

// Under RepeatLast tails, le and prec coincide (the uniform dominating index
// is the last); both entry points are kept to preserve the relation split.
ChainRelationVerdict chain_rel(const ChainSequence& a, const ChainSequence& b,
                               ChainRel rel, Budget& budget);

// Componentwise direct sum after padding both chains to one square size;
// preserves S-certificates blockwise.
ChainSequence chain_add(const ChainSequence& a, const ChainSequence& b,
                        Budget& budget);

// Diagonal supremum of a <=-increasing family.
ChainSequence chain_sup(const std::vector<ChainSequence>& family,
                        Budget& budget);

// Constructive content of quasipureness: x = r * c_1 with an S(I)-certified
// chain (c_n) and x <=_1 c_1 witnessed.
struct QuasipureChain {
  RingMatrix r;                 // x = r * chain.terms[0]
  ChainSequence chain;          // S(I)-certified, terms over I
  SubordinationWitness sub_x;   // x <=_1 chain.terms[0]
};
QuasipureChain quasipure_chain(const Ideal& I, const RingMatrix& x, int length,
                               Budget& budget);

// S(R) closure under suprema of (weakly) increasing sequences, executed on
// an increasing family: builds the twisted chain (x * d terms), certifies it
// in S(R), and checks it is equivalent to the diagonal supremum.
struct SClosureResult {
  ChainSequence twisted;
  ChainSequence diagonal;
  bool equivalent = false;
};
SClosureResult s_closure_check(const std::vector<ChainSequence>& family,
                               Budget& budget);

// Interpolant chains z_m with z_m prec z_{m+1} prec [c] and sup z_m ~ c.
struct InterpolationResult {
  std::vector<ChainSequence> interpolants;
  bool prec_verified = false;
  bool sup_equiv_verified = false;
};
// use_normal_route: builds interpolants through normal_chain witnesses and
// requires the chain normalized (terms[n+1]*terms[n] = terms[n]); otherwise
// uses density interpolation.
InterpolationResult interpolate_dense(const ChainSequence& c,
                                      bool use_normal_route, Budget& budget);

bool chain_is_normalized(const ChainSequence& c);

}  // namespace cuw

#endif
