#ifndef CUW_MATRIX_HPP
#define CUW_MATRIX_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cuw/ring.hpp"

namespace cuw {

// Rectangular matrix over a FiniteRing. Represents the M_infinity element
// obtained by padding with zeros, so all binary operations accept mismatched
// shapes and read out-of-range entries as zero.
struct RingMatrix {
  RingPtr ring;
  int rows = 0, cols = 0;
  std::vector<elem> e;  // row-major, rows*cols

  RingMatrix() = default;
  RingMatrix(RingPtr r, int n, int m)
      : ring(std::move(r)), rows(n), cols(m), e((size_t)n * m, ring->zero) {}

  elem at(int i, int j) const {
    return (i < rows && j < cols && i >= 0 && j >= 0) ? e[(size_t)i * cols + j]
                                                      : ring->zero;
  }
  elem& cell(int i, int j) { return e[(size_t)i * cols + j]; }

  bool is_zero() const {
    for (elem x : e)
      if (x != ring->zero) return false;
    return true;
  }
  bool is_square() const { return rows == cols; }
  std::string str() const;
};

RingMatrix mat_scalar(const RingPtr& R, elem x);              // 1x1
RingMatrix mat_zero(const RingPtr& R, int n, int m);
RingMatrix mat_identity(const RingPtr& R, int n);             // requires unit
RingMatrix mat_add(const RingMatrix& a, const RingMatrix& b);
RingMatrix mat_neg(const RingMatrix& a);
RingMatrix mat_sub(const RingMatrix& a, const RingMatrix& b);
RingMatrix mat_mul(const RingMatrix& a, const RingMatrix& b);
RingMatrix direct_sum(const RingMatrix& a, const RingMatrix& b);

// Equality as M_infinity elements (zero padding ignored).
bool meq(const RingMatrix& a, const RingMatrix& b);
bool mzero(const RingMatrix& a);
// Drop trailing zero rows/columns (canonical finite representative).
RingMatrix trim(const RingMatrix& a);
RingMatrix pad_square(const RingMatrix& a, int n);
// Places b's entries into a rows x cols frame (entries outside are dropped
// only if zero; throws otherwise).
RingMatrix reshape(const RingMatrix& a, int rows, int cols);

struct SubordinationWitness {
  RingMatrix left;   // s
  RingMatrix right;  // t
};

// Verifies s*y*t == x by multiplication.
bool witness_checks(const SubordinationWitness& w, const RingMatrix& x,
                    const RingMatrix& y);

// Decides x precsim_1 y: searches s,t over R with s*y*t = x.
// Enumerates t lexicographically over M_{cols(y) x cols(x)}(R) and solves
// for s row-by-row in the left R-module generated by the rows of y*t.
// Deterministic; returns the first witness found.
std::optional<SubordinationWitness> subordinate(const RingMatrix& x,
                                                const RingMatrix& y,
                                                Budget& budget);

bool equiv1(const RingMatrix& x, const RingMatrix& y, Budget& budget);

// Composition: witnesses for x<=y and y<=z compose to one for x<=z.
SubordinationWitness compose_witness(const SubordinationWitness& xy,
                                     const SubordinationWitness& yz,
                                     const RingMatrix& y, const RingMatrix& z);

// Per-entry subordination certificate x_ij = u * b * v.
struct EntryWitness {
  RingMatrix u, b, v;
};

// Block lemma, constructive: given per-entry certificates for an n x p
// matrix (row-major order), produces (U, B, V) with U*B*V = x and B the
// direct sum of the entry targets, via the 2x2 block recursion.
struct BlockWitness {
  RingMatrix u, b, v;
};
BlockWitness combine_entrywise(const RingPtr& R, int rows, int cols,
                               const std::vector<EntryWitness>& entries);

// Solves target = s * z for s over R (row-module membership with
// certificates); coefficient entries are restricted to `coeffs` when given.
std::optional<RingMatrix> solve_left_factor(
    const RingMatrix& target, const RingMatrix& z, Budget& budget,
    const std::vector<elem>* coeffs = nullptr);

// All matrices over a set of ring elements, lexicographic; used by bounded
// searches. Calls f on each; stops early when f returns true.
bool for_each_matrix(const RingPtr& R, int rows, int cols,
                     const std::vector<elem>& alphabet, Budget& budget,
                     const std::function<bool(const RingMatrix&)>& f);

bool entries_in(const RingMatrix& m, const std::vector<char>& member);

}  // namespace cuw

#endif
