#include "cuw/chains.hpp"

#include <algorithm>

namespace cuw {

namespace {

int square_hull(const ChainSequence& c) {
  int d = 1;
  for (auto& t : c.terms) d = std::max({d, t.rows, t.cols});
  return d;
}

ChainSequence pad_chain(const ChainSequence& c, int d) {
  ChainSequence out;
  out.ring = c.ring;
  for (auto& t : c.terms) out.terms.push_back(pad_square(t, d));
  out.links = c.links;
  out.tail = c.tail;
  if (c.s) {
    SWitnesses s;
    for (auto& y : c.s->y) s.y.push_back(y);
    s.tail_y = c.s->tail_y;
    out.s = s;
  }
  return out;
}

}  // namespace

void validate_chain(const ChainSequence& c) {
  if (c.terms.empty()) throw NotAChain("empty chain");
  for (size_t i = 0; i + 1 < c.terms.size(); ++i)
    if (!witness_checks(c.links[i], c.terms[i], c.terms[i + 1]))
      throw NotAChain("link witness fails at index " + std::to_string(i));
  if (!witness_checks(c.tail, c.last(), c.last()))
    throw TailInadmissible("tail witness fails");
  if (c.s) {
    for (size_t i = 0; i + 1 < c.terms.size(); ++i) {
      RingMatrix rhs = mat_mul(mat_mul(c.s->y[i], c.terms[i + 1]), c.terms[i]);
      if (!meq(rhs, c.terms[i]))
        throw NotInS("S witness fails at index " + std::to_string(i));
    }
    RingMatrix rhs = mat_mul(mat_mul(c.s->tail_y, c.last()), c.last());
    if (!meq(rhs, c.last())) throw NotInS("tail S witness fails");
  }
}

ChainSequence make_chain(const RingPtr& R, std::vector<RingMatrix> terms,
                         Budget& budget) {
  if (terms.empty()) throw NotAChain("empty chain");
  ChainSequence c;
  c.ring = R;
  c.terms = std::move(terms);
  for (size_t i = 0; i + 1 < c.terms.size(); ++i) {
    auto w = subordinate(c.terms[i], c.terms[i + 1], budget);
    if (!w) throw NotAChain("terms[" + std::to_string(i) + "] is not below terms[" +
                            std::to_string(i + 1) + "]");
    c.links.push_back(*w);
  }
  auto tw = subordinate(c.last(), c.last(), budget);
  if (!tw)
    throw TailInadmissible("last term is not below itself; RepeatLast refused");
  c.tail = *tw;
  return c;
}

ChainSequence certify_s_membership(ChainSequence c, Budget& budget) {
  SWitnesses s;
  for (size_t i = 0; i + 1 < c.terms.size(); ++i) {
    RingMatrix prod = mat_mul(c.terms[i + 1], c.terms[i]);
    auto y = solve_left_factor(c.terms[i], prod, budget);
    if (!y)
      throw NotInS("no y with x_n = y*x_{n+1}*x_n at index " + std::to_string(i));
    s.y.push_back(*y);
  }
  RingMatrix sq = mat_mul(c.last(), c.last());
  auto ty = solve_left_factor(c.last(), sq, budget);
  if (!ty) throw NotInS("no y with x = y*x*x for the repeated tail");
  s.tail_y = *ty;
  c.s = std::move(s);
  validate_chain(c);
  return c;
}

SWitnesses rewitness_in_ideal(const ChainSequence& c, const Ideal& I) {
  if (!c.s) throw NotInS("rewitness_in_ideal needs an S-certified chain");
  for (auto& t : c.terms)
    if (!entries_in(t, I.member))
      throw HypothesisFailed("chain terms must lie in M(I)");
  auto yat = [&](size_t i) -> const RingMatrix& {
    return i + 1 < c.terms.size() ? c.s->y[i] : c.s->tail_y;
  };
  SWitnesses out;
  for (size_t i = 0; i + 1 < c.terms.size(); ++i) {
    // y' = y_{n+1} * (y_{n+2} * x_{n+2}) lands in M(I)
    RingMatrix y2x = mat_mul(yat(i + 1), c.term(i + 2));
    RingMatrix yp = mat_mul(yat(i), y2x);
    if (!entries_in(yp, I.member))
      throw InternalError("rewitnessed y not inside the ideal");
    RingMatrix rhs = mat_mul(mat_mul(yp, c.terms[i + 1]), c.terms[i]);
    if (!meq(rhs, c.terms[i]))
      throw InternalError("rewitnessed identity fails at " + std::to_string(i));
    out.y.push_back(yp);
  }
  RingMatrix yx = mat_mul(c.s->tail_y, c.last());
  RingMatrix yp = mat_mul(c.s->tail_y, yx);
  if (!entries_in(yp, I.member))
    throw InternalError("rewitnessed tail y not inside the ideal");
  if (!meq(mat_mul(mat_mul(yp, c.last()), c.last()), c.last()))
    throw InternalError("rewitnessed tail identity fails");
  out.tail_y = yp;
  return out;
}

ChainRelationVerdict chain_rel(const ChainSequence& a, const ChainSequence& b,
                               ChainRel rel, Budget& budget) {
  if (a.ring->id != b.ring->id) throw RingMismatch("chain_rel");
  auto one_way = [&](const ChainSequence& x, const ChainSequence& y) {
    ChainRelationVerdict v;
    v.dominating_index = (int)y.len() - 1;
    for (size_t i = 0; i < x.len(); ++i) {
      auto w = subordinate(x.terms[i], y.last(), budget);
      if (!w) {
        v.holds = false;
        v.failing_index = (int)i;
        v.witnesses.clear();
        return v;
      }
      v.witnesses.push_back(*w);
    }
    v.holds = true;
    return v;
  };
  switch (rel) {
    case ChainRel::Le:
    case ChainRel::Prec:
      // under RepeatLast the witnessing index is uniformly the last, so the
      // two relations coincide; both entry points are kept for future tails
      return one_way(a, b);
    case ChainRel::Equiv: {
      ChainRelationVerdict fwd = one_way(a, b);
      if (!fwd.holds) return fwd;
      ChainRelationVerdict bwd = one_way(b, a);
      if (!bwd.holds) {
        fwd.holds = false;
        fwd.failing_index = bwd.failing_index;
        return fwd;
      }
      return fwd;
    }
  }
  throw InternalError("unreachable");
}

ChainSequence chain_add(const ChainSequence& a, const ChainSequence& b,
                        Budget& budget) {
  if (a.ring->id != b.ring->id) throw RingMismatch("chain_add");
  // uniform square size per chain keeps the two block positions fixed along
  // the whole sequence, so witnesses combine blockwise
  int da = square_hull(a), db = square_hull(b);
  ChainSequence pa = pad_chain(a, da), pb = pad_chain(b, db);
  size_t n = std::max(pa.len(), pb.len());
  ChainSequence out;
  out.ring = a.ring;
  for (size_t i = 0; i < n; ++i)
    out.terms.push_back(direct_sum(pa.term(i), pb.term(i)));

  auto link_witness = [&](const ChainSequence& c, size_t i) {
    // within the stored range use stored links, beyond it the tail witness
    return i + 1 < c.len() ? c.links[i] : c.tail;
  };
  for (size_t i = 0; i + 1 < n; ++i) {
    SubordinationWitness wa = link_witness(pa, i), wb = link_witness(pb, i);
    SubordinationWitness w{
        direct_sum(pad_square(wa.left, da), pad_square(wb.left, db)),
        direct_sum(pad_square(wa.right, da), pad_square(wb.right, db))};
    if (!witness_checks(w, out.terms[i], out.terms[i + 1]))
      throw InternalError("blockwise link witness failed in chain_add");
    out.links.push_back(w);
  }
  out.tail = {direct_sum(pad_square(pa.tail.left, da), pad_square(pb.tail.left, db)),
              direct_sum(pad_square(pa.tail.right, da), pad_square(pb.tail.right, db))};
  if (!witness_checks(out.tail, out.terms.back(), out.terms.back()))
    throw InternalError("blockwise tail witness failed in chain_add");

  if (pa.s && pb.s) {
    SWitnesses s;
    auto yat = [&](const ChainSequence& c, size_t i) -> const RingMatrix& {
      return i + 1 < c.len() ? c.s->y[i] : c.s->tail_y;
    };
    for (size_t i = 0; i + 1 < n; ++i)
      s.y.push_back(direct_sum(pad_square(yat(pa, i), da), pad_square(yat(pb, i), db)));
    s.tail_y = direct_sum(pad_square(pa.s->tail_y, da), pad_square(pb.s->tail_y, db));
    out.s = std::move(s);
  }
  validate_chain(out);
  (void)budget;
  return out;
}

ChainSequence chain_sup(const std::vector<ChainSequence>& family,
                        Budget& budget) {
  if (family.empty()) throw NotIncreasing("empty family");
  if (family.size() == 1) return family[0];
  for (size_t i = 0; i + 1 < family.size(); ++i)
    if (!chain_rel(family[i], family[i + 1], ChainRel::Le, budget).holds)
      throw NotIncreasing("family is not <=-increasing at index " +
                          std::to_string(i));

  ChainSequence out;
  out.ring = family[0].ring;
  // greedy diagonal: the k-th selected term is the minimal-index term of
  // chain k dominating the previous selection
  RingMatrix prev;
  for (size_t k = 0; k < family.size(); ++k) {
    const ChainSequence& c = family[k];
    bool placed = false;
    for (size_t i = 0; i < c.len() && !placed; ++i) {
      if (k == 0) {
        out.terms.push_back(c.terms[i]);
        placed = true;
        break;
      }
      if (auto w = subordinate(prev, c.terms[i], budget)) {
        out.links.push_back(*w);
        out.terms.push_back(c.terms[i]);
        placed = true;
      }
    }
    if (!placed) {
      // RepeatLast guarantees the last term dominates; le was verified above
      auto w = subordinate(prev, c.last(), budget);
      if (!w) throw InternalError("diagonal selection failed despite le");
      out.links.push_back(*w);
      out.terms.push_back(c.last());
    }
    prev = out.terms.back();
  }
  // finish with the top chain's last term so the verified tail applies
  const ChainSequence& top = family.back();
  if (!meq(out.terms.back(), top.last())) {
    auto w = subordinate(out.terms.back(), top.last(), budget);
    if (!w) throw InternalError("diagonal top step failed despite le");
    out.links.push_back(*w);
    out.terms.push_back(top.last());
  }
  out.tail = top.tail;
  validate_chain(out);
  return out;
}

// ---------------------------------------------------------------------------
// quasipure chains

namespace {

struct QpStep {
  RingMatrix rho;    // w = rho * v, rho over I
  RingMatrix v;      // over I
  RingMatrix sigma;  // sigma * v = v, sigma over I
};

// One application of the quasipure factorization to target w; when
// `sub_from` is set the candidate must also dominate it under <=_1.
std::optional<QpStep> qp_step(const Ideal& I, const RingMatrix& w,
                              const RingMatrix* sub_from, Budget& budget) {
  const RingPtr R = I.ring;
  auto try_candidate = [&](const RingMatrix& v) -> std::optional<QpStep> {
    auto sigma = solve_left_factor(v, v, budget, &I.elems);
    if (!sigma) return std::nullopt;
    auto rho = solve_left_factor(w, v, budget, &I.elems);
    if (!rho) return std::nullopt;
    if (sub_from && !subordinate(*sub_from, v, budget)) return std::nullopt;
    return QpStep{*rho, v, *sigma};
  };
  if (w.is_zero()) {
    RingMatrix z = mat_zero(R, 1, 1);
    return QpStep{mat_zero(R, std::max(1, w.rows), 1), z, mat_zero(R, 1, 1)};
  }
  if (auto st = try_candidate(pad_square(w, std::max(w.rows, w.cols)))) return st;
  std::optional<QpStep> found;
  for (int k = 1; k <= 3 && !found; ++k) {
    try {
      for_each_matrix(R, k, k, I.elems, budget, [&](const RingMatrix& v) {
        if (v.is_zero()) return false;
        if (auto st = try_candidate(v)) {
          found = st;
          return true;
        }
        return false;
      });
    } catch (const BudgetExceeded&) {
      break;
    }
  }
  return found;
}

}  // namespace

QuasipureChain quasipure_chain(const Ideal& I, const RingMatrix& x, int length,
                               Budget& budget) {
  if (!entries_in(x, I.member))
    throw HypothesisFailed("quasipure_chain: x must lie in M(I)");
  const RingPtr R = I.ring;

  auto first = qp_step(I, x, &x, budget);
  if (!first)
    throw SearchExhausted(
        "quasipure factorization not found for x (contradicts quasipure "
        "classification)");
  QuasipureChain out;
  out.r = first->rho;
  auto sub = subordinate(x, first->v, budget);
  if (!sub) throw SearchExhausted("x is not below the first chain term");
  out.sub_x = *sub;

  std::vector<RingMatrix> terms{first->v};
  std::vector<RingMatrix> ys;  // ys[i]: terms[i] = ys[i]*terms[i+1]*terms[i]
  RingMatrix sigma = first->sigma;
  for (int n = 1; n < std::max(2, length); ++n) {
    auto st = qp_step(I, sigma, nullptr, budget);
    if (!st)
      throw SearchExhausted("quasipure factorization not found for sigma");
    ys.push_back(st->rho);  // sigma_{n} = rho_{n+1} * v_{n+1}
    terms.push_back(st->v);
    bool stabilized = meq(st->v, terms[terms.size() - 2]) && meq(st->sigma, sigma);
    sigma = st->sigma;
    if (stabilized && (int)terms.size() >= length) break;
  }

  ChainSequence c;
  c.ring = R;
  c.terms = terms;
  for (size_t i = 0; i + 1 < terms.size(); ++i) {
    // x_n = sigma_n x_n = (rho_{n+1} v_{n+1}) x_n gives both certificates
    RingMatrix rhs = mat_mul(mat_mul(ys[i], terms[i + 1]), terms[i]);
    if (!meq(rhs, terms[i]))
      throw InternalError("quasipure chain link identity failed");
    c.links.push_back(SubordinationWitness{ys[i], terms[i]});
  }
  // tail: v = y*v*v
  auto ty = solve_left_factor(c.last(), mat_mul(c.last(), c.last()), budget);
  if (!ty)
    throw SearchExhausted("quasipure chain tail is not S-certifiable");
  c.tail = SubordinationWitness{*ty, c.last()};
  SWitnesses s;
  s.y = ys;
  s.tail_y = *ty;
  c.s = std::move(s);
  validate_chain(c);
  out.chain = std::move(c);
  return out;
}

// ---------------------------------------------------------------------------
// closure of S(R) under suprema of increasing families

SClosureResult s_closure_check(const std::vector<ChainSequence>& family,
                               Budget& budget) {
  if (family.empty()) throw HypothesisFailed("empty family");
  for (auto& c : family)
    if (!c.s_certified())
      throw HypothesisFailed("family members must be S-certified");

  SClosureResult res;
  bool all_equal = true;
  for (size_t i = 1; i < family.size() && all_equal; ++i) {
    all_equal = family[i].len() == family[0].len();
    for (size_t j = 0; all_equal && j < family[0].len(); ++j)
      all_equal = meq(family[i].terms[j], family[0].terms[j]);
  }
  if (all_equal) {
    res.twisted = family[0];
    res.diagonal = family[0];
    res.equivalent = true;
    return res;
  }

  res.diagonal = chain_sup(family, budget);

  // picks P_m = last(F_m), extended twice into the top tail so the twisted
  // chain stabilizes; Q_m = P_m under RepeatLast, so the S-tail witness
  // plays the role of y_{l_m+1}
  size_t M = family.size();
  std::vector<RingMatrix> P, Y;
  for (size_t m = 0; m < M; ++m) {
    P.push_back(family[m].last());
    Y.push_back(family[m].s->tail_y);
  }
  for (int extra = 0; extra < 2; ++extra) {
    P.push_back(family.back().last());
    Y.push_back(family.back().s->tail_y);
  }
  // subordinations Q_m = P_m <=_1 P_{m+1} with witnesses (c_m, d_m)
  std::vector<RingMatrix> C, D;
  for (size_t m = 0; m + 1 < P.size(); ++m) {
    auto w = subordinate(P[m], P[m + 1], budget);
    if (!w) throw HypothesisFailed("interleaving subordination failed");
    C.push_back(w->left);
    D.push_back(w->right);
  }

  // twisted terms T_m = P_m * d_{m-1} with links
  // T_m = (Y_m c_m) * T_{m+1} * T_m
  ChainSequence tw;
  tw.ring = family[0].ring;
  SWitnesses s;
  for (size_t m = 1; m < P.size(); ++m)
    tw.terms.push_back(mat_mul(P[m], D[m - 1]));
  for (size_t i = 0; i + 1 < tw.terms.size(); ++i) {
    size_t m = i + 1;  // term index i corresponds to pick m = i+1
    RingMatrix W = mat_mul(Y[m], C[m]);
    RingMatrix rhs = mat_mul(mat_mul(W, tw.terms[i + 1]), tw.terms[i]);
    if (!meq(rhs, tw.terms[i]))
      throw InternalError("twisted chain identity failed at " +
                          std::to_string(i));
    s.y.push_back(W);
    tw.links.push_back(SubordinationWitness{W, tw.terms[i]});
  }
  // the two extended picks coincide, so the last link equation is the tail
  {
    size_t m = P.size() - 1;
    RingMatrix W = mat_mul(Y[m], C[m - 1]);
    RingMatrix tl = tw.terms.back();
    if (meq(mat_mul(mat_mul(W, tl), tl), tl)) {
      s.tail_y = W;
      tw.tail = SubordinationWitness{W, tl};
    } else {
      auto ty = solve_left_factor(tl, mat_mul(tl, tl), budget);
      if (!ty) throw HypothesisFailed("twisted chain tail not certifiable");
      s.tail_y = *ty;
      tw.tail = SubordinationWitness{*ty, tl};
    }
  }
  tw.s = std::move(s);
  validate_chain(tw);
  res.twisted = tw;
  res.equivalent =
      chain_rel(res.twisted, res.diagonal, ChainRel::Equiv, budget).holds;
  return res;
}

// ---------------------------------------------------------------------------
// density interpolation

bool chain_is_normalized(const ChainSequence& c) {
  for (size_t i = 0; i + 1 < c.len(); ++i)
    if (!meq(mat_mul(c.terms[i + 1], c.terms[i]), c.terms[i])) return false;
  return meq(mat_mul(c.last(), c.last()), c.last());
}

InterpolationResult interpolate_dense(const ChainSequence& c,
                                      bool use_normal_route, Budget& budget) {
  InterpolationResult res;
  const int K = 3;  // interpolants per stage
  size_t stages = std::max<size_t>(1, (c.len() + 1) / 2);

  if (use_normal_route) {
    if (!chain_is_normalized(c))
      throw HypothesisFailed(
          "normal-route interpolation needs x_{n+1} x_n = x_n");
    for (size_t m = 0; m < stages; ++m) {
      // stage uses (a, b, c) = (x_{2m}, x_{2m+1}, x_{2m+2})
      const RingMatrix& a = c.term(2 * m);
      const RingMatrix& b = c.term(2 * m + 1);
      const RingMatrix& cc = c.term(2 * m + 2);
      std::vector<RingMatrix> ds;
      try {
        ds = normal_chain(a, b, cc, K, budget);
      } catch (const WitnessNotFound&) {
        throw InterpolantNotFound(
            "normal_chain failed; left-normal verdict downgraded");
      }
      ChainSequence z;
      z.ring = c.ring;
      z.terms = ds;
      for (size_t i = 0; i + 1 < ds.size(); ++i) {
        // d_k = d_{k+1} d_k = d_{k+1} d_{k+1} d_k
        SubordinationWitness w{ds[i + 1], ds[i]};
        if (!witness_checks(w, ds[i], ds[i + 1]))
          throw InternalError("interpolant link witness failed");
        z.links.push_back(w);
      }
      auto tw = subordinate(ds.back(), ds.back(), budget);
      if (!tw)
        throw InterpolantNotFound("interpolant tail is not self-subordinate");
      z.tail = *tw;
      validate_chain(z);
      res.interpolants.push_back(std::move(z));
    }
  } else {
    for (size_t m = 0; m < stages; ++m) {
      const RingMatrix& lo = c.term(2 * m);
      const RingMatrix& hi = c.term(2 * m + 2);
      auto i1 = find_interpolant(lo, hi, 2, budget);
      if (!i1) throw InterpolantNotFound("no z with x <= z <= y");
      auto i2 = find_interpolant(i1->z, hi, 2, budget);
      if (!i2) throw InterpolantNotFound("no second interpolant");
      ChainSequence z;
      z.ring = c.ring;
      z.terms = {i1->z, i2->z};
      z.links.push_back(i2->below);
      auto tw = subordinate(i2->z, i2->z, budget);
      if (!tw) throw InterpolantNotFound("interpolant tail not admissible");
      z.tail = *tw;
      validate_chain(z);
      res.interpolants.push_back(std::move(z));
    }
  }

  // z_m prec z_{m+1} prec [c]
  res.prec_verified = true;
  for (size_t m = 0; m + 1 < res.interpolants.size(); ++m)
    if (!chain_rel(res.interpolants[m], res.interpolants[m + 1], ChainRel::Prec,
                   budget).holds)
      res.prec_verified = false;
  if (!res.interpolants.empty()) {
    if (!chain_rel(res.interpolants.back(), c, ChainRel::Prec, budget).holds)
      res.prec_verified = false;
  }

  // sup z_m ~ c
  if (res.interpolants.size() == 1) {
    res.sup_equiv_verified =
        chain_rel(res.interpolants[0], c, ChainRel::Equiv, budget).holds;
  } else {
    ChainSequence sup = chain_sup(res.interpolants, budget);
    res.sup_equiv_verified = chain_rel(sup, c, ChainRel::Equiv, budget).holds;
  }
  return res;
}

}  // namespace cuw
