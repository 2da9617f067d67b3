#ifndef CUW_IDEALS_HPP
#define CUW_IDEALS_HPP

#include <map>

#include "cuw/matrix.hpp"

namespace cuw {

enum class Sidedness { TwoSided, Left, Right };

struct Ideal {
  RingPtr ring;
  std::vector<elem> elems;   // sorted
  Sidedness sided = Sidedness::TwoSided;
  std::vector<char> member;  // size ring->size

  bool contains(elem x) const { return member[x]; }
  bool contains_all(const Ideal& other) const {
    for (elem x : other.elems)
      if (!member[x]) return false;
    return true;
  }
  bool same_elems(const Ideal& other) const { return elems == other.elems; }
  size_t size() const { return elems.size(); }
  std::string str() const;
};

// Validates closure properties for the requested sidedness.
Ideal make_ideal(const RingPtr& R, std::vector<elem> elems,
                 Sidedness sided = Sidedness::TwoSided);

// Smallest ideal of the requested sidedness containing gens.
Ideal ideal_generated_by(const RingPtr& R, const std::vector<elem>& gens,
                         Sidedness sided = Sidedness::TwoSided);

// Complete enumeration: principal ideals closed under pairwise sums.
std::vector<Ideal> enumerate_ideals(const RingPtr& R,
                                    Sidedness sided = Sidedness::TwoSided);

std::vector<elem> additive_span(const FiniteRing& R,
                                const std::vector<elem>& gens);
// additive span of {a*b : a in A, b in B}
std::vector<elem> product_span(const FiniteRing& R, const std::vector<elem>& A,
                               const std::vector<elem>& B);

bool is_pure(const Ideal& I);
bool is_idempotent(const Ideal& I);

// I^infinity: the eventually stable power, the largest idempotent ideal in I.
Ideal stable_power(const Ideal& I);

// span(R*I*R) with per-element certificates v = sum_k r_k*b_k*s_k.
struct SpanCert {
  std::vector<std::array<elem, 3>> terms;  // (r, b, s)
};
struct DecompCriterion {
  std::vector<elem> span;  // D(I)
  std::vector<char> span_member;
  bool holds = false;  // I subseteq D(I)
  std::map<elem, SpanCert> cert;
};
DecompCriterion decomposability_criterion(const RingPtr& R, const Ideal& I);

enum class TriBool { False, True, Unknown };

enum class ClassifyMode { Criterion, FgSearch, Oracle, Both, All };

struct OracleRecord {
  RingMatrix x;
  TriBool verdict = TriBool::Unknown;
  int exhausted_to = 0;  // negative verdicts exhausted candidate sizes <= this
};

struct DecompEvidence {
  bool verdict = false;          // module answer (criterion in Both mode)
  bool criterion_holds = false;
  std::vector<elem> span;
  std::vector<OracleRecord> oracle;
  bool oracle_ran = false;
  std::string note;
};

// mode Criterion | Oracle | Both. Both cross-validates and throws
// InternalError on any conclusive disagreement (build-stopping).
DecompEvidence is_decomposable(const Ideal& I, ClassifyMode mode,
                               int oracle_bound, Budget& budget);

struct QpEvidence {
  bool verdict = false;
  TriBool criterion = TriBool::Unknown;
  TriBool fgsearch = TriBool::Unknown;  // unital rings only
  std::vector<OracleRecord> oracle;
  bool oracle_ran = false;
  std::string note;
};

// mode Criterion | FgSearch | Oracle | All.
QpEvidence is_quasipure(const Ideal& I, ClassifyMode mode, int oracle_bound,
                        Budget& budget);

enum class LatticeOp { MeetD, JoinD, MeetQp, JoinQp };
Ideal lattice_op(const Ideal& I, const Ideal& J, LatticeOp which,
                 Budget& budget);

struct RetractReport {
  bool pass = true;
  int decomposable_count = 0;
  int quasipure_count = 0;
  std::vector<std::string> violations;
};
RetractReport check_retract(const RingPtr& R, Budget& budget);

// Two-sided ideal generated by the entries of an idempotent matrix over a
// unital ring; the result is asserted idempotent and quasipure.
Ideal trace_ideal(const RingMatrix& e, Budget& budget);

// Searches an idempotent matrix e with trace_ideal(e) = I (size 1 first,
// then larger, capped); nullopt means Unknown at the cap.
std::optional<RingMatrix> find_trace_idempotent(const Ideal& I, int size_cap,
                                                Budget& budget);

struct IdealLattice {
  RingPtr ring;
  std::vector<Ideal> ideals;
  std::vector<char> leq;      // containment, ideals.size()^2
  std::vector<int> meet_tab;  // intersection
  std::vector<int> join_tab;  // sum
  struct Flags {
    bool pure = false, idempotent = false, decomposable = false,
         quasipure = false;
  };
  std::vector<Flags> flags;
  std::vector<std::pair<int, int>> covers;

  int index_of(const Ideal& I) const;
};
IdealLattice build_lattice(const RingPtr& R, Budget& budget);

}  // namespace cuw

#endif
