#ifndef CUW_QUOTIENT_HPP
#define CUW_QUOTIENT_HPP

#include "cuw/chains.hpp"
#include "cuw/ideals.hpp"

namespace cuw {

// Quotient ring R/I with the projection and a canonical coset lift
// (minimal representative).
struct QuotientContext {
  RingPtr ring;      // R
  Ideal ideal;       // I
  RingPtr quot;      // R/I
  RingMorphism proj;
  std::vector<elem> lift;  // quot element -> representative in R

  RingMatrix project(const RingMatrix& m) const;
  RingMatrix lift_matrix(const RingMatrix& m) const;
};
QuotientContext make_quotient_context(const RingPtr& R, const Ideal& I);

// pi(x) <=_1 pi(y) lifts to x <=_1 y + z with z over I.
struct LiftCertificate {
  RingMatrix z;                // over I
  SubordinationWitness wit;    // for x <= direct_sum(y, z)
};
LiftCertificate lift_subordination(const QuotientContext& q,
                                   const RingMatrix& x, const RingMatrix& y,
                                   Budget& budget);

// Block lift of an S-sequence along the quotient map. Stage data follows
// the explicit matrices X_n (diagonal S_n block and s_{1,n} row) and Y_{n+1}
// (with the r_n * y_{2,n} corner); the stage identity
// Y_{n+1} X_{n+1} X_n = X_n is verified exactly.
struct BlockLiftInput {
  QuotientContext q;
  std::vector<RingMatrix> x;   // lifted terms x_1..x_N over R
  std::vector<RingMatrix> y;   // y_2..y_{N+1}: y_{n+1} x_{n+1} x_n + z_n = x_n
  std::vector<RingMatrix> r;   // r_1..r_N: z_n = r_n * s_chain[n].terms[0]
  std::vector<ChainSequence> schain;  // S(I)-certified chains, one per stage
};
struct BlockLiftStage {
  RingMatrix X;
  RingMatrix Y;  // empty at stage 1
  int stage = 0;
};
std::vector<BlockLiftStage> block_lift(const BlockLiftInput& in,
                                       Budget& budget);

struct TransferReport {
  int monotone_checked = 0, monotone_failed = 0;
  int chains_lifted = 0, chains_failed = 0;
  int embeddings_checked = 0, embeddings_failed = 0;
  std::vector<std::string> failures;
  bool pass() const {
    return monotone_failed == 0 && chains_failed == 0 && embeddings_failed == 0;
  }
};
// Samples bounded data and checks the constructive ingredients of the
// quotient isomorphisms: monotonicity of pi, chain lifting through
// lift_subordination, and the order-embedding direction.
TransferReport transfer_report(const RingPtr& R, const Ideal& I, int max_size,
                               Budget& budget);

}  // namespace cuw

#endif
