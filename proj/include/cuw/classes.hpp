#ifndef CUW_CLASSES_HPP
#define CUW_CLASSES_HPP

#include "cuw/matrix.hpp"

namespace cuw {

// Verdict for the bounded ring-class checkers. Quantifiers over M_infinity
// are truncated at the size bound, so positive results are "up to bound"
// unless a structural shortcut upgrades them, and negative results carry a
// `conclusive` flag (a weak-s-unitality counterexample is conclusive; a
// dense/left-normal failure is only relative to the witness bound).
struct ClassVerdict {
  enum class Status { Holds, FailsWithCounterexample, HoldsUpToBound };
  Status status = Status::HoldsUpToBound;
  int bound = 0;
  bool conclusive = false;
  std::vector<RingMatrix> counterexample;
  std::string note;

  bool positive() const { return status != Status::FailsWithCounterexample; }
};

ClassVerdict is_weakly_s_unital(const RingPtr& R, int B, Budget& budget,
                                uint64_t seed = 0);

// Dense: every x <=_1 y admits z with x <=_1 z <=_1 y (z of size <= B+1,
// generated as s*y*t). Unital and idempotent rings short-circuit to Holds.
ClassVerdict is_dense(const RingPtr& R, int B, Budget& budget,
                      uint64_t seed = 0);

ClassVerdict is_left_normal(const RingPtr& R, int B, Budget& budget,
                            uint64_t seed = 0);

// Witness pair (d, e) with a = d*a, d = e*d, e = c*e, searched at the size
// of the (padded) inputs. Assumes a = b*a and b = c*b.
std::optional<std::pair<RingMatrix, RingMatrix>> left_normal_witness(
    const RingMatrix& a, const RingMatrix& b, const RingMatrix& c,
    Budget& budget);

// Sequence d_1..d_N with a = d_1*a, d_n = d_{n+1}*d_n, d_n = c*d_n.
std::vector<RingMatrix> normal_chain(const RingMatrix& a, const RingMatrix& b,
                                     const RingMatrix& c, int length,
                                     Budget& budget);

// Interpolant z with x <=_1 z <=_1 y, searched over z = s*y*t up to size
// bound; returns z plus witnesses for both comparisons.
struct Interpolant {
  RingMatrix z;
  SubordinationWitness below;  // x <= z
  SubordinationWitness above;  // z <= y
};
std::optional<Interpolant> find_interpolant(const RingMatrix& x,
                                            const RingMatrix& y, int size_bound,
                                            Budget& budget);

// True when span(R*R) = R; upgrades is_dense to Holds.
bool ring_is_idempotent(const FiniteRing& R);

}  // namespace cuw

#endif
