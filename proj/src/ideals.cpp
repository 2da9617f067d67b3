#include "cuw/ideals.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace cuw {

namespace {

std::vector<elem> closure_generic(const FiniteRing& R, std::vector<elem> seed,
                                  Sidedness sided, bool with_mult) {
  std::vector<char> in(R.size, 0);
  std::vector<elem> work;
  auto push = [&](elem x) {
    if (!in[x]) { in[x] = 1; work.push_back(x); }
  };
  push(R.zero);
  for (elem g : seed) push(g);
  for (size_t i = 0; i < work.size(); ++i) {
    elem w = work[i];
    push(R.neg(w));
    for (size_t j = 0; j <= i; ++j) push(R.add(w, work[j]));
    if (with_mult)
      for (elem r = 0; r < R.size; ++r) {
        if (sided != Sidedness::Right) push(R.mul(r, w));
        if (sided != Sidedness::Left) push(R.mul(w, r));
      }
  }
  std::vector<elem> out;
  for (elem x = 0; x < R.size; ++x)
    if (in[x]) out.push_back(x);
  return out;
}

std::vector<char> member_of(const FiniteRing& R, const std::vector<elem>& v) {
  std::vector<char> m(R.size, 0);
  for (elem x : v) m[x] = 1;
  return m;
}

std::vector<elem> ideal_alphabet(const Ideal& I) { return I.elems; }

}  // namespace

std::string Ideal::str() const {
  std::ostringstream os;
  os << "{";
  for (size_t i = 0; i < elems.size(); ++i)
    os << (i ? "," : "") << ring->ename(elems[i]);
  os << "}";
  return os.str();
}

Ideal make_ideal(const RingPtr& R, std::vector<elem> elems, Sidedness sided) {
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  Ideal I{R, elems, sided, member_of(*R, elems)};
  if (!I.member[R->zero]) throw NotAnIdeal("missing zero");
  for (elem a : elems) {
    if (!I.member[R->neg(a)]) throw NotAnIdeal("not closed under negation");
    for (elem b : elems)
      if (!I.member[R->add(a, b)]) throw NotAnIdeal("not closed under addition");
    for (elem r = 0; r < R->size; ++r) {
      if (sided != Sidedness::Right && !I.member[R->mul(r, a)])
        throw NotAnIdeal("not closed under left multiplication");
      if (sided != Sidedness::Left && !I.member[R->mul(a, r)])
        throw NotAnIdeal("not closed under right multiplication");
    }
  }
  return I;
}

Ideal ideal_generated_by(const RingPtr& R, const std::vector<elem>& gens,
                         Sidedness sided) {
  return make_ideal(R, closure_generic(*R, gens, sided, true), sided);
}

std::vector<Ideal> enumerate_ideals(const RingPtr& R, Sidedness sided) {
  if (R->size > kMaxRingSize) throw SizeLimitExceeded("enumerate_ideals");
  std::set<std::vector<elem>> seen;
  std::vector<Ideal> out;
  auto add = [&](Ideal I) {
    if (seen.insert(I.elems).second) out.push_back(std::move(I));
  };
  add(ideal_generated_by(R, {}, sided));
  for (elem x = 0; x < R->size; ++x) add(ideal_generated_by(R, {x}, sided));
  // close under pairwise sums until fixpoint; every ideal is a sum of
  // principal ideals, so this is exhaustive
  for (size_t i = 0; i < out.size(); ++i)
    for (size_t j = 0; j < i; ++j) {
      std::vector<elem> un = out[i].elems;
      un.insert(un.end(), out[j].elems.begin(), out[j].elems.end());
      add(make_ideal(R, additive_span(*R, un), sided));
    }
  std::sort(out.begin(), out.end(), [](const Ideal& a, const Ideal& b) {
    if (a.elems.size() != b.elems.size())
      return a.elems.size() < b.elems.size();
    return a.elems < b.elems;
  });
  return out;
}

std::vector<elem> additive_span(const FiniteRing& R,
                                const std::vector<elem>& gens) {
  return closure_generic(R, gens, Sidedness::TwoSided, false);
}

std::vector<elem> product_span(const FiniteRing& R, const std::vector<elem>& A,
                               const std::vector<elem>& B) {
  std::vector<elem> prods;
  for (elem a : A)
    for (elem b : B) prods.push_back(R.mul(a, b));
  return additive_span(R, prods);
}

bool is_pure(const Ideal& I) {
  if (I.sided != Sidedness::TwoSided)
    throw ClassPreconditionFailed("is_pure expects a two-sided ideal");
  const auto& R = *I.ring;
  for (elem y : I.elems) {
    bool found = false;
    for (elem s : I.elems)
      if (R.mul(s, y) == y) { found = true; break; }
    if (!found) return false;
  }
  return true;
}

bool is_idempotent(const Ideal& I) {
  auto sq = product_span(*I.ring, I.elems, I.elems);
  return sq == I.elems;
}

Ideal stable_power(const Ideal& I) {
  std::vector<elem> cur = I.elems;
  for (;;) {
    std::vector<elem> nxt = product_span(*I.ring, cur, I.elems);
    if (nxt == cur) break;
    cur = std::move(nxt);
  }
  return make_ideal(I.ring, cur, Sidedness::TwoSided);
}

DecompCriterion decomposability_criterion(const RingPtr& R, const Ideal& I) {
  DecompCriterion out;
  const auto& Rt = *R;
  // BFS over the additive closure of {r*b*s}, keeping one certificate per
  // reached element
  out.cert[Rt.zero] = SpanCert{};
  std::vector<elem> work{Rt.zero};
  // generators r*b*s, deduped by value (first representative wins)
  std::vector<std::array<elem, 3>> gens;
  std::set<elem> genvals;
  for (elem r = 0; r < Rt.size; ++r)
    for (elem b : I.elems)
      for (elem s = 0; s < Rt.size; ++s) {
        elem v = Rt.mul(Rt.mul(r, b), s);
        if (genvals.insert(v).second) gens.push_back({r, b, s});
      }
  for (size_t i = 0; i < work.size(); ++i) {
    elem w = work[i];
    for (auto& g : gens) {
      elem v = Rt.add(w, Rt.mul(Rt.mul(g[0], g[1]), g[2]));
      if (!out.cert.count(v)) {
        SpanCert c = out.cert[w];
        c.terms.push_back(g);
        out.cert[v] = std::move(c);
        work.push_back(v);
      }
    }
  }
  out.span = work;
  std::sort(out.span.begin(), out.span.end());
  out.span_member = member_of(Rt, out.span);
  out.holds = true;
  for (elem x : I.elems)
    if (!out.span_member[x]) { out.holds = false; break; }
  return out;
}

namespace {

// Definitional decomposability check for one x: search y in M_k(I)
// (candidate y = x first, then sizes 1..bound) with x <=_1 y.
OracleRecord decomp_oracle_one(const Ideal& I, const RingMatrix& x,
                               int bound, Budget& budget) {
  OracleRecord rec{x, TriBool::Unknown, 0};
  const RingPtr R = I.ring;
  try {
    // natural first candidate: x itself (covers weakly s-unital rings)
    RingMatrix self = pad_square(x, std::max(x.rows, x.cols));
    if (subordinate(x, self, budget)) {
      rec.verdict = TriBool::True;
      return rec;
    }
    for (int k = 1; k <= bound; ++k) {
      double space = 1;
      for (int i = 0; i < k * k; ++i) space *= I.elems.size();
      if (space > 300000) break;
      bool found = for_each_matrix(
          R, k, k, ideal_alphabet(I), budget,
          [&](const RingMatrix& y) { return subordinate(x, y, budget).has_value(); });
      if (found) {
        rec.verdict = TriBool::True;
        return rec;
      }
      rec.exhausted_to = k;
    }
    if (rec.exhausted_to == bound)
      rec.verdict = TriBool::False;  // exhausted all sizes <= bound
  } catch (const BudgetExceeded&) {
    rec.verdict = TriBool::Unknown;
  }
  return rec;
}

std::vector<RingMatrix> oracle_sample_space(const Ideal& I, Budget& budget) {
  std::vector<RingMatrix> xs;
  const RingPtr R = I.ring;
  for (elem v : I.elems) xs.push_back(mat_scalar(R, v));
  // 2x2 matrices over I: exhaustive when small, else a deterministic sample
  size_t total = I.elems.size() * I.elems.size();
  total *= total;
  Budget enumb(1ull << 62);
  if (total <= 256) {
    for_each_matrix(R, 2, 2, I.elems, enumb, [&](const RingMatrix& m) {
      xs.push_back(m);
      return false;
    });
  } else {
    size_t lex = 0;
    for_each_matrix(R, 2, 2, I.elems, enumb, [&](const RingMatrix& m) {
      xs.push_back(m);
      return ++lex >= 64;
    });
    uint64_t st = 0x0DDBA11 ^ I.elems.size();
    for (int i = 0; i < 64; ++i) {
      RingMatrix m(R, 2, 2);
      for (auto& v : m.e) {
        st += 0x9e3779b97f4a7c15ULL;
        uint64_t z = st;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        v = I.elems[(z ^ (z >> 27)) % I.elems.size()];
      }
      xs.push_back(m);
    }
  }
  (void)budget;
  return xs;
}

uint64_t oracle_slice(const RingMatrix& x, Budget& master) {
  bool scalar = x.rows <= 1 && x.cols <= 1;
  return std::min<uint64_t>(master.remaining(), scalar ? 20000000 : 200000);
}

}  // namespace

DecompEvidence is_decomposable(const Ideal& I, ClassifyMode mode,
                               int oracle_bound, Budget& budget) {
  if (I.sided != Sidedness::TwoSided)
    throw ClassPreconditionFailed("is_decomposable expects a two-sided ideal");
  DecompEvidence ev;
  DecompCriterion crit = decomposability_criterion(I.ring, I);
  ev.criterion_holds = crit.holds;
  ev.span = crit.span;

  if (mode == ClassifyMode::Criterion) {
    ev.verdict = crit.holds;
    ev.note = crit.holds ? "I lies in span(R*I*R)" : "span(R*I*R) misses I";
    return ev;
  }

  ev.oracle_ran = true;
  auto xs = oracle_sample_space(I, budget);
  bool any_false = false, all_true = true;
  for (auto& x : xs) {
    uint64_t slice = oracle_slice(x, budget);
    if (slice == 0) break;
    Budget sub(slice);
    OracleRecord rec = decomp_oracle_one(I, x, oracle_bound, sub);
    budget.try_charge(sub.used());
    ev.oracle.push_back(rec);
    if (rec.verdict == TriBool::False) any_false = true;
    if (rec.verdict != TriBool::True) all_true = false;

    // scalar-level cross-check against the span criterion
    if (x.rows == 1 && x.cols == 1 && rec.verdict != TriBool::Unknown) {
      bool in_span = crit.span_member[x.at(0, 0)];
      if (rec.verdict == TriBool::True && !in_span)
        throw InternalError(
            "build-stopping: oracle found a witness for a scalar outside "
            "span(R*I*R) in " + I.ring->name);
      if (rec.verdict == TriBool::False && in_span)
        throw InternalError(
            "build-stopping: oracle exhaustively refuted a scalar inside "
            "span(R*I*R) in " + I.ring->name);
    }
  }

  if (mode == ClassifyMode::Oracle) {
    if (any_false) { ev.verdict = false; return ev; }
    if (all_true && ev.oracle.size() == xs.size()) { ev.verdict = true; return ev; }
    throw BudgetExceeded("decomposability oracle inconclusive");
  }

  // Both: cross-validate ideal-level verdicts where the oracle is conclusive
  if (any_false && crit.holds)
    throw InternalError("build-stopping: criterion says decomposable but the "
                        "oracle conclusively refuted some x in " + I.str());
  if (all_true && ev.oracle.size() == xs.size() && !crit.holds)
    throw InternalError("build-stopping: criterion says non-decomposable but "
                        "the oracle verified every sampled x in " + I.str());
  ev.verdict = crit.holds;
  ev.note = "criterion verdict, oracle cross-validated";
  return ev;
}

namespace {

// Quasipure oracle for one x: search y in M_k(I) with s*y = y for some s
// over I and x <=_1 y.
OracleRecord qp_oracle_one(const Ideal& I, const RingMatrix& x, int bound,
                           Budget& budget) {
  OracleRecord rec{x, TriBool::Unknown, 0};
  const RingPtr R = I.ring;
  // one-step shape constraint: y = s*y with s over I forces every entry of
  // y into the additive span of I*I
  std::vector<elem> sq = product_span(*R, I.elems, I.elems);
  std::vector<char> sq_mask(R->size, 0);
  for (elem v : sq) sq_mask[v] = 1;
  try {
    // natural first candidate: x itself
    {
      RingMatrix self = pad_square(x, std::max(x.rows, x.cols));
      if (entries_in(self, sq_mask) &&
          solve_left_factor(self, self, budget, &I.elems) &&
          subordinate(x, self, budget)) {
        rec.verdict = TriBool::True;
        return rec;
      }
    }
    for (int k = 1; k <= bound; ++k) {
      double space = 1;
      for (int i = 0; i < k * k; ++i) space *= I.elems.size();
      if (space > 300000) break;  // leaves the verdict at the previous level
      bool found = for_each_matrix(R, k, k, I.elems, budget,
                                   [&](const RingMatrix& y) {
        if (!entries_in(y, sq_mask)) return false;
        auto s = solve_left_factor(y, y, budget, &I.elems);
        if (!s) return false;
        return subordinate(x, y, budget).has_value();
      });
      if (found) { rec.verdict = TriBool::True; return rec; }
      rec.exhausted_to = k;
    }
    if (rec.exhausted_to == bound) rec.verdict = TriBool::False;
  } catch (const BudgetExceeded&) {
    rec.verdict = TriBool::Unknown;
  }
  return rec;
}

}  // namespace

QpEvidence is_quasipure(const Ideal& I, ClassifyMode mode, int oracle_bound,
                        Budget& budget) {
  if (I.sided != Sidedness::TwoSided)
    throw ClassPreconditionFailed("is_quasipure expects a two-sided ideal");
  QpEvidence ev;
  const RingPtr R = I.ring;

  bool run_criterion = mode == ClassifyMode::Criterion || mode == ClassifyMode::All;
  bool run_fg = mode == ClassifyMode::FgSearch || mode == ClassifyMode::All;
  bool run_oracle = mode == ClassifyMode::Oracle || mode == ClassifyMode::All;

  if (run_criterion)
    ev.criterion = is_idempotent(I) ? TriBool::True : TriBool::False;

  if (run_fg) {
    if (!R->unit) {
      if (mode == ClassifyMode::FgSearch)
        throw FgSearchUnsupported("fgsearch requires a unital ring");
      ev.fgsearch = TriBool::Unknown;
    } else {
      // condition (ii) with X = I: left ideals J1 <= J2 <= I with I inside J1
      // and span(J2*J1) = J1
      auto lefts = enumerate_ideals(R, Sidedness::Left);
      auto inside_I = [&](const Ideal& J) {
        for (elem x : J.elems)
          if (!I.member[x]) return false;
        return true;
      };
      bool found = false;
      for (auto& J1 : lefts) {
        bool covers_X = true;  // X = I must lie in J1
        for (elem x : I.elems)
          if (!J1.member[x]) { covers_X = false; break; }
        if (!covers_X || !inside_I(J1)) continue;
        for (auto& J2 : lefts) {
          if (!J2.contains_all(J1) || !inside_I(J2)) continue;
          if (product_span(*R, J2.elems, J1.elems) == J1.elems) {
            found = true;
            break;
          }
        }
        if (found) break;
      }
      ev.fgsearch = found ? TriBool::True : TriBool::False;
    }
  }

  if (run_oracle) {
    ev.oracle_ran = true;
    auto xs = oracle_sample_space(I, budget);
    for (auto& x : xs) {
      uint64_t slice = oracle_slice(x, budget);
      if (slice == 0) break;
      Budget sub(slice);
      ev.oracle.push_back(qp_oracle_one(I, x, oracle_bound, sub));
      budget.try_charge(sub.used());
    }
  }

  // reconcile
  TriBool agreed = TriBool::Unknown;
  auto merge = [&](TriBool v, const char* who) {
    if (v == TriBool::Unknown) return;
    if (agreed == TriBool::Unknown) agreed = v;
    else if (agreed != v)
      throw InternalError(std::string("build-stopping: quasipure modes "
                                      "disagree (") + who + ") on " + I.str() +
                          " in " + R->name);
  };
  merge(ev.criterion, "criterion");
  merge(ev.fgsearch, "fgsearch");
  if (ev.oracle_ran) {
    bool any_false = false, all_true = !ev.oracle.empty();
    for (auto& r : ev.oracle) {
      if (r.verdict == TriBool::False) any_false = true;
      if (r.verdict != TriBool::True) all_true = false;
    }
    if (any_false) merge(TriBool::False, "oracle");
    else if (all_true && ev.oracle.size() >= I.elems.size())
      merge(TriBool::True, "oracle");
  }
  if (mode == ClassifyMode::Oracle && agreed == TriBool::Unknown)
    throw BudgetExceeded("quasipure oracle inconclusive");
  ev.verdict = agreed == TriBool::True;
  if (mode == ClassifyMode::Criterion) ev.verdict = ev.criterion == TriBool::True;
  if (mode == ClassifyMode::FgSearch) ev.verdict = ev.fgsearch == TriBool::True;
  return ev;
}

Ideal lattice_op(const Ideal& I, const Ideal& J, LatticeOp which,
                 Budget& budget) {
  if (I.ring->id != J.ring->id) throw RingMismatch("lattice_op");
  const RingPtr R = I.ring;
  bool qp = which == LatticeOp::MeetQp || which == LatticeOp::JoinQp;
  for (const Ideal* K : {&I, &J}) {
    if (qp) {
      if (!is_quasipure(*K, ClassifyMode::Criterion, 2, budget).verdict)
        throw ClassPreconditionFailed("lattice_op(qp) on non-quasipure ideal " +
                                      K->str());
    } else {
      if (!is_decomposable(*K, ClassifyMode::Criterion, 2, budget).verdict)
        throw ClassPreconditionFailed(
            "lattice_op(d) on non-decomposable ideal " + K->str());
    }
  }
  switch (which) {
    case LatticeOp::JoinD:
    case LatticeOp::JoinQp: {
      std::vector<elem> un = I.elems;
      un.insert(un.end(), J.elems.begin(), J.elems.end());
      return make_ideal(R, additive_span(*R, un));
    }
    case LatticeOp::MeetD: {
      std::vector<elem> inter;
      for (elem x : I.elems)
        if (J.member[x]) inter.push_back(x);
      auto D = decomposability_criterion(R, make_ideal(R, inter));
      return make_ideal(R, D.span);
    }
    case LatticeOp::MeetQp: {
      std::vector<elem> inter;
      for (elem x : I.elems)
        if (J.member[x]) inter.push_back(x);
      Ideal sp = stable_power(make_ideal(R, inter));
      auto D = decomposability_criterion(R, sp);
      return make_ideal(R, D.span);
    }
  }
  throw InternalError("unreachable");
}

RetractReport check_retract(const RingPtr& R, Budget& budget) {
  RetractReport rep;
  auto ideals = enumerate_ideals(R);
  std::vector<Ideal> lat_d, lat_qp;
  for (auto& I : ideals) {
    if (is_decomposable(I, ClassifyMode::Criterion, 2, budget).verdict)
      lat_d.push_back(I);
    if (is_quasipure(I, ClassifyMode::Criterion, 2, budget).verdict)
      lat_qp.push_back(I);
  }
  rep.decomposable_count = (int)lat_d.size();
  rep.quasipure_count = (int)lat_qp.size();

  auto psi = [&](const Ideal& I) { return stable_power(I); };

  // psi(phi(I)) = I for quasipure I
  for (auto& I : lat_qp)
    if (!psi(I).same_elems(I))
      rep.violations.push_back("psi(phi(I)) != I for I = " + I.str());
  // phi(psi(I)) <= I
  for (auto& I : lat_d) {
    Ideal p = psi(I);
    if (!I.contains_all(p))
      rep.violations.push_back("phi(psi(I)) not inside I for I = " + I.str());
  }
  // psi preserves infima
  for (auto& I : lat_d)
    for (auto& J : lat_d) {
      Ideal m = lattice_op(I, J, LatticeOp::MeetD, budget);
      Ideal lhs = psi(m);
      Ideal rhs = lattice_op(psi(I), psi(J), LatticeOp::MeetQp, budget);
      if (!lhs.same_elems(rhs))
        rep.violations.push_back("psi(meet_d) != meet_qp(psi,psi) at (" +
                                 I.str() + ", " + J.str() + ")");
    }
  // phi preserves suprema
  for (auto& I : lat_qp)
    for (auto& J : lat_qp) {
      Ideal a = lattice_op(I, J, LatticeOp::JoinQp, budget);
      Ideal b = lattice_op(I, J, LatticeOp::JoinD, budget);
      if (!a.same_elems(b))
        rep.violations.push_back("join_qp != join_d at (" + I.str() + ", " +
                                 J.str() + ")");
    }
  rep.pass = rep.violations.empty();
  return rep;
}

Ideal trace_ideal(const RingMatrix& e, Budget& budget) {
  const RingPtr R = e.ring;
  if (!R->unit)
    throw ClassPreconditionFailed("trace_ideal requires a unital ring");
  if (!meq(mat_mul(e, e), e)) throw NotIdempotent("e*e != e");
  std::vector<elem> entries(e.e.begin(), e.e.end());
  Ideal I = ideal_generated_by(R, entries);
  if (!is_idempotent(I))
    throw InternalError("trace ideal of an idempotent matrix is not idempotent");
  if (!is_quasipure(I, ClassifyMode::Criterion, 2, budget).verdict)
    throw InternalError("trace ideal fails the quasipure criterion");
  return I;
}

std::optional<RingMatrix> find_trace_idempotent(const Ideal& I, int size_cap,
                                                Budget& budget) {
  const RingPtr R = I.ring;
  if (!R->unit)
    throw ClassPreconditionFailed("trace-ideal search requires a unital ring");
  for (int k = 1; k <= size_cap; ++k) {
    std::optional<RingMatrix> found;
    try {
      for_each_matrix(R, k, k, I.elems, budget, [&](const RingMatrix& e) {
        if (!meq(mat_mul(e, e), e)) return false;
        std::vector<elem> entries(e.e.begin(), e.e.end());
        if (ideal_generated_by(R, entries).same_elems(I)) {
          found = e;
          return true;
        }
        return false;
      });
    } catch (const BudgetExceeded&) {
      return std::nullopt;
    }
    if (found) return found;
  }
  return std::nullopt;
}

int IdealLattice::index_of(const Ideal& I) const {
  for (size_t i = 0; i < ideals.size(); ++i)
    if (ideals[i].elems == I.elems) return (int)i;
  return -1;
}

IdealLattice build_lattice(const RingPtr& R, Budget& budget) {
  IdealLattice lat;
  lat.ring = R;
  lat.ideals = enumerate_ideals(R);
  size_t n = lat.ideals.size();
  lat.leq.assign(n * n, 0);
  lat.meet_tab.assign(n * n, -1);
  lat.join_tab.assign(n * n, -1);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      lat.leq[i * n + j] = lat.ideals[j].contains_all(lat.ideals[i]);
      std::vector<elem> inter;
      for (elem x : lat.ideals[i].elems)
        if (lat.ideals[j].member[x]) inter.push_back(x);
      lat.meet_tab[i * n + j] = lat.index_of(make_ideal(R, inter));
      std::vector<elem> un = lat.ideals[i].elems;
      un.insert(un.end(), lat.ideals[j].elems.begin(), lat.ideals[j].elems.end());
      lat.join_tab[i * n + j] = lat.index_of(make_ideal(R, additive_span(*R, un)));
    }
  for (auto& I : lat.ideals) {
    IdealLattice::Flags f;
    f.pure = is_pure(I);
    f.idempotent = is_idempotent(I);
    f.decomposable = is_decomposable(I, ClassifyMode::Criterion, 2, budget).verdict;
    f.quasipure = is_quasipure(I, ClassifyMode::Criterion, 2, budget).verdict;
    lat.flags.push_back(f);
  }
  // covering relations
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      if (i == j || !lat.leq[i * n + j]) continue;
      bool covered = true;
      for (size_t k = 0; k < n && covered; ++k) {
        if (k == i || k == j) continue;
        if (lat.leq[i * n + k] && lat.leq[k * n + j]) covered = false;
      }
      if (covered) lat.covers.push_back({(int)i, (int)j});
    }
  return lat;
}

}  // namespace cuw
