#include "cuw/matrix.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <unordered_map>

namespace cuw {

std::string RingMatrix::str() const {
  std::ostringstream os;
  os << "(";
  for (int i = 0; i < rows; ++i) {
    if (i) os << "; ";
    for (int j = 0; j < cols; ++j) os << (j ? " " : "") << ring->ename(at(i, j));
  }
  os << ")";
  if (rows == 0 || cols == 0) os << "0";
  return os.str();
}

RingMatrix mat_scalar(const RingPtr& R, elem x) {
  RingMatrix m(R, 1, 1);
  m.e[0] = x;
  return m;
}

RingMatrix mat_zero(const RingPtr& R, int n, int m) { return RingMatrix(R, n, m); }

RingMatrix mat_identity(const RingPtr& R, int n) {
  if (!R->unit) throw InternalError("mat_identity on non-unital ring");
  RingMatrix m(R, n, n);
  for (int i = 0; i < n; ++i) m.cell(i, i) = *R->unit;
  return m;
}

static void require_same_ring(const RingMatrix& a, const RingMatrix& b) {
  if (a.ring->id != b.ring->id)
    throw RingMismatch("matrices over different rings");
}

RingMatrix mat_add(const RingMatrix& a, const RingMatrix& b) {
  require_same_ring(a, b);
  RingMatrix c(a.ring, std::max(a.rows, b.rows), std::max(a.cols, b.cols));
  for (int i = 0; i < c.rows; ++i)
    for (int j = 0; j < c.cols; ++j)
      c.cell(i, j) = a.ring->add(a.at(i, j), b.at(i, j));
  return c;
}

RingMatrix mat_neg(const RingMatrix& a) {
  RingMatrix c = a;
  for (auto& x : c.e) x = a.ring->neg(x);
  return c;
}

RingMatrix mat_sub(const RingMatrix& a, const RingMatrix& b) {
  return mat_add(a, mat_neg(b));
}

RingMatrix mat_mul(const RingMatrix& a, const RingMatrix& b) {
  require_same_ring(a, b);
  const auto& R = *a.ring;
  int inner = std::min(a.cols, b.rows);
  RingMatrix c(a.ring, a.rows, b.cols);
  for (int i = 0; i < a.rows; ++i)
    for (int j = 0; j < b.cols; ++j) {
      elem acc = R.zero;
      for (int k = 0; k < inner; ++k)
        acc = R.add(acc, R.mul(a.at(i, k), b.at(k, j)));
      c.cell(i, j) = acc;
    }
  return c;
}

RingMatrix direct_sum(const RingMatrix& a, const RingMatrix& b) {
  require_same_ring(a, b);
  RingMatrix c(a.ring, a.rows + b.rows, a.cols + b.cols);
  for (int i = 0; i < a.rows; ++i)
    for (int j = 0; j < a.cols; ++j) c.cell(i, j) = a.at(i, j);
  for (int i = 0; i < b.rows; ++i)
    for (int j = 0; j < b.cols; ++j) c.cell(a.rows + i, a.cols + j) = b.at(i, j);
  return c;
}

bool meq(const RingMatrix& a, const RingMatrix& b) {
  require_same_ring(a, b);
  int n = std::max(a.rows, b.rows), m = std::max(a.cols, b.cols);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j)
      if (a.at(i, j) != b.at(i, j)) return false;
  return true;
}

bool mzero(const RingMatrix& a) { return a.is_zero(); }

RingMatrix trim(const RingMatrix& a) {
  int n = 0, m = 0;
  for (int i = 0; i < a.rows; ++i)
    for (int j = 0; j < a.cols; ++j)
      if (a.at(i, j) != a.ring->zero) {
        n = std::max(n, i + 1);
        m = std::max(m, j + 1);
      }
  RingMatrix c(a.ring, n, m);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j) c.cell(i, j) = a.at(i, j);
  return c;
}

RingMatrix pad_square(const RingMatrix& a, int n) {
  RingMatrix c(a.ring, std::max({n, a.rows, a.cols}), std::max({n, a.rows, a.cols}));
  for (int i = 0; i < a.rows; ++i)
    for (int j = 0; j < a.cols; ++j) c.cell(i, j) = a.at(i, j);
  return c;
}

RingMatrix reshape(const RingMatrix& a, int rows, int cols) {
  for (int i = 0; i < a.rows; ++i)
    for (int j = 0; j < a.cols; ++j)
      if ((i >= rows || j >= cols) && a.at(i, j) != a.ring->zero)
        throw DimensionMismatch("reshape would drop a nonzero entry");
  RingMatrix c(a.ring, rows, cols);
  for (int i = 0; i < std::min(rows, a.rows); ++i)
    for (int j = 0; j < std::min(cols, a.cols); ++j) c.cell(i, j) = a.at(i, j);
  return c;
}

bool witness_checks(const SubordinationWitness& w, const RingMatrix& x,
                    const RingMatrix& y) {
  return meq(mat_mul(mat_mul(w.left, y), w.right), x);
}

SubordinationWitness compose_witness(const SubordinationWitness& xy,
                                     const SubordinationWitness& yz,
                                     const RingMatrix& y, const RingMatrix& z) {
  (void)y;
  (void)z;
  // x = s1*y*t1, y = s2*z*t2  =>  x = (s1*s2)*z*(t2*t1)
  return {mat_mul(xy.left, yz.left), mat_mul(yz.right, xy.right)};
}

bool entries_in(const RingMatrix& m, const std::vector<char>& member) {
  for (elem x : m.e)
    if (!member[x]) return false;
  return true;
}

bool for_each_matrix(const RingPtr& R, int rows, int cols,
                     const std::vector<elem>& alphabet, Budget& budget,
                     const std::function<bool(const RingMatrix&)>& f) {
  const size_t cells = (size_t)rows * cols;
  RingMatrix m(R, rows, cols);
  std::vector<size_t> digit(cells, 0);
  for (size_t c = 0; c < cells; ++c) m.e[c] = alphabet[0];
  for (;;) {
    budget.charge(cells);
    if (f(m)) return true;
    // increment little-endian on the last cell for lexicographic order on
    // the entry sequence read left-to-right
    size_t c = cells;
    while (c-- > 0) {
      if (++digit[c] < alphabet.size()) {
        m.e[c] = alphabet[digit[c]];
        break;
      }
      digit[c] = 0;
      m.e[c] = alphabet[0];
      if (c == 0) return false;
    }
    if (cells == 0) return false;
  }
}

// ---------------------------------------------------------------------------
// left R-module membership with certificates

namespace {

// BFS closure of {coeff * row_j(z)} under addition inside R^width, recording
// parents so coefficient matrices can be reconstructed.
struct RowModule {
  const FiniteRing& R;
  int width;
  std::vector<std::vector<elem>> rows;  // generator rows (rows of z)
  std::vector<elem> coeff_alphabet;

  // state -> (parent state, coeff, row index); state 0 is the zero vector
  std::unordered_map<uint64_t, std::tuple<uint64_t, elem, int>> seen;
  std::vector<uint64_t> frontier;
  bool packable;

  RowModule(const FiniteRing& ring, const RingMatrix& z,
            const std::vector<elem>* coeffs)
      : R(ring), width(z.cols) {
    for (int i = 0; i < z.rows; ++i) {
      std::vector<elem> r(width);
      for (int j = 0; j < width; ++j) r[j] = z.at(i, j);
      rows.push_back(std::move(r));
    }
    if (coeffs) coeff_alphabet = *coeffs;
    else {
      coeff_alphabet.resize(R.size);
      for (uint32_t i = 0; i < R.size; ++i) coeff_alphabet[i] = (elem)i;
    }
    int bits = 1;
    while ((1u << bits) < R.size) ++bits;
    packable = (size_t)bits * width <= 64;
  }

  uint64_t pack(const std::vector<elem>& v) const {
    int bits = 1;
    while ((1u << bits) < R.size) ++bits;
    uint64_t key = 0;
    for (int j = 0; j < width; ++j) key = (key << bits) | v[j];
    return key;
  }
  std::vector<elem> unpack(uint64_t key) const {
    int bits = 1;
    while ((1u << bits) < R.size) ++bits;
    std::vector<elem> v(width);
    for (int j = width; j-- > 0;) {
      v[j] = (elem)(key & ((1u << bits) - 1));
      key >>= bits;
    }
    return v;
  }

  // Grows the closure until `target` is found or the module is exhausted.
  bool contains(const std::vector<elem>& target, Budget& budget) {
    if (!packable) throw SizeLimitExceeded("row module state too wide");
    uint64_t tk = pack(target);
    if (seen.empty()) {
      std::vector<elem> zerov(width, R.zero);
      uint64_t zk = pack(zerov);
      seen.emplace(zk, std::make_tuple(zk, R.zero, -1));
      frontier.push_back(zk);
    }
    if (seen.count(tk)) return true;
    for (size_t qi = 0; qi < frontier.size(); ++qi) {
      uint64_t cur = frontier[qi];
      std::vector<elem> v = unpack(cur);
      for (int ri = 0; ri < (int)rows.size(); ++ri) {
        for (elem r : coeff_alphabet) {
          budget.charge(width * 2);
          std::vector<elem> nx(width);
          for (int j = 0; j < width; ++j)
            nx[j] = R.add(v[j], R.mul(r, rows[ri][j]));
          uint64_t nk = pack(nx);
          if (seen.emplace(nk, std::make_tuple(cur, r, ri)).second) {
            frontier.push_back(nk);
            if (nk == tk) return true;
          }
        }
      }
    }
    return seen.count(tk) != 0;
  }

  // Coefficient row (length = #rows of z) expressing target.
  std::vector<elem> coefficients(const std::vector<elem>& target) const {
    std::vector<elem> coeff(rows.size(), R.zero);
    uint64_t cur = pack(target);
    std::vector<elem> zerov(width, R.zero);
    uint64_t zk = pack(zerov);
    while (cur != zk) {
      auto it = seen.find(cur);
      auto [par, r, ri] = it->second;
      coeff[ri] = R.add(coeff[ri], r);
      cur = par;
    }
    return coeff;
  }
};

}  // namespace

std::optional<RingMatrix> solve_left_factor(const RingMatrix& target,
                                            const RingMatrix& z, Budget& budget,
                                            const std::vector<elem>* coeffs) {
  require_same_ring(target, z);
  // Columns of target beyond z's width must be zero.
  for (int i = 0; i < target.rows; ++i)
    for (int j = z.cols; j < target.cols; ++j)
      if (target.at(i, j) != target.ring->zero) return std::nullopt;

  RowModule mod(*target.ring, z, coeffs);
  RingMatrix s(target.ring, target.rows, z.rows);
  for (int i = 0; i < target.rows; ++i) {
    std::vector<elem> row(z.cols);
    for (int j = 0; j < z.cols; ++j) row[j] = target.at(i, j);
    if (!mod.contains(row, budget)) return std::nullopt;
    std::vector<elem> coeff = mod.coefficients(row);
    for (int j = 0; j < z.rows; ++j) s.cell(i, j) = coeff[j];
  }
  return s;
}

std::optional<SubordinationWitness> subordinate(const RingMatrix& x,
                                                const RingMatrix& y,
                                                Budget& budget) {
  require_same_ring(x, y);
  const RingPtr R = x.ring;
  const int n = std::max(1, x.rows), p = std::max(1, x.cols);
  const int ry = std::max(1, y.rows), cy = std::max(1, y.cols);

  if (x.is_zero())
    return SubordinationWitness{mat_zero(R, n, ry), mat_zero(R, cy, p)};
  if (y.is_zero()) return std::nullopt;
  if (R->unit && meq(x, y))
    return SubordinationWitness{mat_identity(R, n), mat_identity(R, p)};

  // cost guard: |R|^(cy*p) t-candidates
  {
    double est = 1;
    for (int i = 0; i < cy * p; ++i) {
      est *= R->size;
      if (est > (double)budget.remaining()) {
        throw BudgetExceeded("subordinate: t-enumeration |R|^" +
                             std::to_string(cy * p) + " exceeds budget");
      }
    }
  }

  // Per-column achievable-value prefilter: entry x_ik must lie in the
  // additive closure of { r * (y*t)_jk }, and (y*t)_jk ranges over the
  // additive closure of { y_jl * v : v in R } summed over l. A cheap
  // necessary condition: x's entries must lie in the additive closure of
  // R * (entries reachable from rows of y) which we approximate by
  // span(R * span(y entries * R)).
  std::vector<char> reach(R->size, 0);
  {
    std::vector<elem> stack;
    auto push = [&](elem v) {
      if (!reach[v]) { reach[v] = 1; stack.push_back(v); }
    };
    push(R->zero);
    for (int i = 0; i < y.rows; ++i)
      for (int j = 0; j < y.cols; ++j)
        for (elem v = 0; v < (elem)R->size; ++v) push(R->mul(y.at(i, j), v));
    for (size_t qi = 0; qi < stack.size(); ++qi) {
      elem w = stack[qi];
      for (elem r = 0; r < (elem)R->size; ++r) push(R->mul(r, w));
      for (size_t j = 0; j <= qi; ++j) push(R->add(w, stack[j]));
    }
    budget.charge((uint64_t)R->size * stack.size());
    for (elem v : x.e)
      if (!reach[v]) return std::nullopt;
  }

  std::vector<elem> full;
  full.resize(R->size);
  for (uint32_t i = 0; i < R->size; ++i) full[i] = (elem)i;

  std::optional<SubordinationWitness> found;
  for_each_matrix(R, cy, p, full, budget, [&](const RingMatrix& t) {
    RingMatrix z = mat_mul(y, t);  // ry x p
    budget.charge((uint64_t)ry * cy * p);
    // quick reject: each x entry must be reachable columnwise
    for (int j = 0; j < p; ++j) {
      std::vector<char> colreach(R->size, 0);
      std::vector<elem> stack;
      auto push = [&](elem v) {
        if (!colreach[v]) { colreach[v] = 1; stack.push_back(v); }
      };
      push(R->zero);
      for (int i = 0; i < ry; ++i)
        for (elem r = 0; r < (elem)R->size; ++r) push(R->mul(r, z.at(i, j)));
      for (size_t qi = 0; qi < stack.size(); ++qi)
        for (size_t l = 0; l <= qi; ++l) push(R->add(stack[qi], stack[l]));
      budget.charge(stack.size());
      for (int i = 0; i < n; ++i)
        if (!colreach[x.at(i, j)]) return false;
    }
    auto s = solve_left_factor(x, z, budget);
    if (s) {
      found = SubordinationWitness{*s, t};
      return true;
    }
    return false;
  });
  if (found && !witness_checks(*found, x, y))
    throw InternalError("subordinate produced an invalid witness");
  return found;
}

bool equiv1(const RingMatrix& x, const RingMatrix& y, Budget& budget) {
  return subordinate(x, y, budget).has_value() &&
         subordinate(y, x, budget).has_value();
}

// ---------------------------------------------------------------------------
// block lemma (2x2 recursion)

namespace {

RingMatrix hstack(const RingMatrix& a, const RingMatrix& b) {
  RingMatrix c(a.ring, std::max(a.rows, b.rows), a.cols + b.cols);
  for (int i = 0; i < a.rows; ++i)
    for (int j = 0; j < a.cols; ++j) c.cell(i, j) = a.at(i, j);
  for (int i = 0; i < b.rows; ++i)
    for (int j = 0; j < b.cols; ++j) c.cell(i, a.cols + j) = b.at(i, j);
  return c;
}

RingMatrix vstack(const RingMatrix& a, const RingMatrix& b) {
  RingMatrix c(a.ring, a.rows + b.rows, std::max(a.cols, b.cols));
  for (int i = 0; i < a.rows; ++i)
    for (int j = 0; j < a.cols; ++j) c.cell(i, j) = a.at(i, j);
  for (int i = 0; i < b.rows; ++i)
    for (int j = 0; j < b.cols; ++j) c.cell(a.rows + i, j) = b.at(i, j);
  return c;
}

// Combines four block certificates (each U*B*V = block of side `half`) into
// one for the 2x2 arrangement, exactly as in the four-corner factorization.
BlockWitness combine4(const RingPtr& R, int half, const BlockWitness& A,
                      const BlockWitness& B, const BlockWitness& C,
                      const BlockWitness& D) {
  auto zes = [&](int r, int c) { return mat_zero(R, r, c); };
  // U' = [ uA uB 0  0  ]
  //      [ 0  0  uC uD ]
  RingMatrix uTop = hstack(hstack(reshape(A.u, half, A.u.cols), B.u),
                           zes(half, C.u.cols + D.u.cols));
  RingMatrix uBot = hstack(zes(half, A.u.cols + B.u.cols),
                           hstack(reshape(C.u, half, C.u.cols), D.u));
  RingMatrix U = vstack(uTop, uBot);
  RingMatrix Bm = direct_sum(direct_sum(A.b, B.b), direct_sum(C.b, D.b));
  // V' = [ vA 0 ; 0 vB ; vC 0 ; 0 vD ]
  RingMatrix V = vstack(
      vstack(hstack(reshape(A.v, A.v.rows, half), zes(A.v.rows, half)),
             hstack(zes(B.v.rows, half), reshape(B.v, B.v.rows, half))),
      vstack(hstack(reshape(C.v, C.v.rows, half), zes(C.v.rows, half)),
             hstack(zes(D.v.rows, half), reshape(D.v, D.v.rows, half))));
  return {U, Bm, V};
}

}  // namespace

BlockWitness combine_entrywise(const RingPtr& R, int rows, int cols,
                               const std::vector<EntryWitness>& entries) {
  if ((size_t)rows * cols != entries.size())
    throw DimensionMismatch("combine_entrywise: wrong number of certificates");
  int side = 1;
  while (side < rows || side < cols) side *= 2;

  // level-0 certificates, padded with zero blocks outside the given shape
  std::vector<BlockWitness> level;
  for (int i = 0; i < side; ++i)
    for (int j = 0; j < side; ++j) {
      if (i < rows && j < cols) {
        const EntryWitness& w = entries[(size_t)i * cols + j];
        level.push_back({w.u, w.b, w.v});
      } else {
        level.push_back({mat_zero(R, 1, 0), mat_zero(R, 0, 0), mat_zero(R, 0, 1)});
      }
    }
  int dim = side, blk = 1;
  while (dim > 1) {
    std::vector<BlockWitness> next;
    for (int i = 0; i < dim; i += 2)
      for (int j = 0; j < dim; j += 2)
        next.push_back(combine4(R, blk, level[(size_t)i * dim + j],
                                level[(size_t)i * dim + j + 1],
                                level[(size_t)(i + 1) * dim + j],
                                level[(size_t)(i + 1) * dim + j + 1]));
    level = std::move(next);
    dim /= 2;
    blk *= 2;
  }
  return level[0];
}

}  // namespace cuw
