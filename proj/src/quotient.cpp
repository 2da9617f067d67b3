#include "cuw/quotient.hpp"

#include <algorithm>

namespace cuw {

namespace {

RingMatrix hstack2(const RingMatrix& a, const RingMatrix& b) {
  RingMatrix c(a.ring, std::max(a.rows, b.rows), a.cols + b.cols);
  for (int i = 0; i < a.rows; ++i)
    for (int j = 0; j < a.cols; ++j) c.cell(i, j) = a.at(i, j);
  for (int i = 0; i < b.rows; ++i)
    for (int j = 0; j < b.cols; ++j) c.cell(i, a.cols + j) = b.at(i, j);
  return c;
}

RingMatrix vstack2(const RingMatrix& a, const RingMatrix& b) {
  RingMatrix c(a.ring, a.rows + b.rows, std::max(a.cols, b.cols));
  for (int i = 0; i < a.rows; ++i)
    for (int j = 0; j < a.cols; ++j) c.cell(i, j) = a.at(i, j);
  for (int i = 0; i < b.rows; ++i)
    for (int j = 0; j < b.cols; ++j) c.cell(a.rows + i, j) = b.at(i, j);
  return c;
}

uint64_t splitmix64(uint64_t& s) {
  uint64_t z = (s += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

RingMatrix QuotientContext::project(const RingMatrix& m) const {
  RingMatrix out(quot, m.rows, m.cols);
  for (size_t i = 0; i < m.e.size(); ++i) out.e[i] = proj(m.e[i]);
  return out;
}

RingMatrix QuotientContext::lift_matrix(const RingMatrix& m) const {
  RingMatrix out(ring, m.rows, m.cols);
  for (size_t i = 0; i < m.e.size(); ++i) out.e[i] = lift[m.e[i]];
  return out;
}

QuotientContext make_quotient_context(const RingPtr& R, const Ideal& I) {
  QuotientContext q;
  q.ring = R;
  q.ideal = I;
  auto [quot, proj] = quotient_ring(R, I.elems);
  q.quot = quot;
  q.proj = proj;
  q.lift.assign(quot->size, 0);
  std::vector<char> seen(quot->size, 0);
  for (elem x = 0; x < R->size; ++x)
    if (!seen[proj(x)]) {
      seen[proj(x)] = 1;
      q.lift[proj(x)] = x;  // minimal representative: first in element order
    }
  return q;
}

LiftCertificate lift_subordination(const QuotientContext& q,
                                   const RingMatrix& x, const RingMatrix& y,
                                   Budget& budget) {
  const RingPtr R = q.ring;
  RingMatrix px = q.project(x), py = q.project(y);
  auto wbar = subordinate(px, py, budget);
  if (!wbar)
    throw HypothesisFailed("pi(x) is not below pi(y) in the quotient");
  RingMatrix a = q.lift_matrix(wbar->left), b = q.lift_matrix(wbar->right);
  RingMatrix zp = mat_sub(x, mat_mul(mat_mul(a, y), b));
  if (!entries_in(zp, q.ideal.member))
    throw InternalError("lift residue escaped the ideal");

  LiftCertificate cert;
  if (zp.is_zero()) {
    cert.z = mat_zero(R, 1, 1);
    int n = std::max(1, x.rows), p = std::max(1, x.cols);
    cert.wit = {hstack2(a, mat_zero(R, n, 1)), vstack2(b, mat_zero(R, 1, p))};
  } else {
    // decomposability certificates for the entries of the residue, combined
    // by the block factorization into z' <=_1 z with z over I
    DecompCriterion crit = decomposability_criterion(R, q.ideal);
    std::vector<EntryWitness> certs;
    for (int i = 0; i < zp.rows; ++i)
      for (int j = 0; j < zp.cols; ++j) {
        elem v = zp.at(i, j);
        auto it = crit.cert.find(v);
        if (it == crit.cert.end())
          throw DecompositionWitnessNotFound(
              "entry " + R->ename(v) + " has no span(R*I*R) certificate; "
              "contradicts decomposable classification");
        const SpanCert& sc = it->second;
        int m = (int)sc.terms.size();
        RingMatrix u(R, 1, m), bm(R, m, m), vv(R, m, 1);
        for (int k = 0; k < m; ++k) {
          u.cell(0, k) = sc.terms[k][0];
          bm.cell(k, k) = sc.terms[k][1];
          vv.cell(k, 0) = sc.terms[k][2];
        }
        certs.push_back({u, bm, vv});
      }
    BlockWitness bw = combine_entrywise(R, zp.rows, zp.cols, certs);
    if (!meq(mat_mul(mat_mul(bw.u, bw.b), bw.v), zp))
      throw InternalError("block combination failed to reproduce the residue");
    cert.z = bw.b;
    cert.wit = {hstack2(a, bw.u), vstack2(b, bw.v)};
  }
  if (!entries_in(cert.z, q.ideal.member))
    throw InternalError("lift certificate z escaped the ideal");
  if (!witness_checks(cert.wit, x, direct_sum(y, cert.z)))
    throw InternalError("lift certificate does not replay");
  return cert;
}

// ---------------------------------------------------------------------------
// block lift

std::vector<BlockLiftStage> block_lift(const BlockLiftInput& in,
                                       Budget& budget) {
  const size_t N = in.x.size();
  if (N == 0) throw HypothesisFailed("no stages");
  if (in.y.size() + 1 != N || in.r.size() + 1 != N || in.schain.size() != N)
    throw HypothesisFailed("stage data sizes inconsistent");
  const RingPtr R = in.q.ring;
  const Ideal& I = in.q.ideal;

  // hypothesis check: z_n = x_n - y_{n+1} x_{n+1} x_n lies in M(I) and
  // factors as r_n * s_{1,n}
  for (size_t n = 0; n + 1 < N; ++n) {
    RingMatrix z = mat_sub(in.x[n], mat_mul(mat_mul(in.y[n], in.x[n + 1]), in.x[n]));
    if (!entries_in(z, I.member))
      throw HypothesisFailed("z_" + std::to_string(n + 1) + " escapes M(I)");
    RingMatrix rs = mat_mul(in.r[n], in.schain[n].terms[0]);
    if (!meq(z, rs))
      throw HypothesisFailed("z_" + std::to_string(n + 1) +
                             " != r_n * s_{1,n}");
  }
  for (auto& c : in.schain) {
    if (!c.s_certified()) throw HypothesisFailed("stage chain not S-certified");
    for (auto& t : c.terms)
      if (!entries_in(t, I.member))
        throw HypothesisFailed("stage chain leaves M(I)");
    validate_chain(c);
  }

  // common square block size
  int d = 1;
  auto take = [&](const RingMatrix& m) { d = std::max({d, m.rows, m.cols}); };
  for (auto& m : in.x) take(m);
  for (auto& m : in.y) take(m);
  for (auto& m : in.r) take(m);
  for (auto& c : in.schain) {
    for (auto& t : c.terms) take(t);
    if (c.s) {
      for (auto& t : c.s->y) take(t);
      take(c.s->tail_y);
    }
  }

  auto P = [&](const RingMatrix& m) { return pad_square(m, d); };
  // 1-based accessors with RepeatLast extension
  auto sterm = [&](size_t chain1, size_t m1) {
    return P(in.schain[chain1 - 1].term(m1 - 1));
  };
  auto swit = [&](size_t chain1, size_t M1) {
    // paper y_{M,j}: y with y * s_M * s_{M-1} = s_{M-1}; chain link M-2
    const ChainSequence& c = in.schain[chain1 - 1];
    size_t link = M1 - 2;
    return P(link < c.s->y.size() ? c.s->y[link] : c.s->tail_y);
  };

  auto place = [&](RingMatrix& big, int bi, int bj, const RingMatrix& blk) {
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) big.cell(bi * d + i, bj * d + j) = blk.at(i, j);
  };

  auto build_X = [&](size_t n1) {  // 1-based stage
    RingMatrix X(R, (int)(n1 + 1) * d, (int)n1 * d);
    place(X, 0, 0, P(in.x[n1 - 1]));
    for (size_t i = 0; i + 1 < n1; ++i)
      place(X, (int)(1 + i), (int)(1 + i), sterm(i + 1, n1 - i));
    place(X, (int)n1, 0, sterm(n1, 1));
    return X;
  };
  auto build_Y = [&](size_t n1) {  // Y_{n+1} for stage pair (n, n+1)
    RingMatrix Y(R, (int)(n1 + 1) * d, (int)(n1 + 2) * d);
    place(Y, 0, 0, P(in.y[n1 - 1]));
    place(Y, 0, (int)n1, mat_mul(P(in.r[n1 - 1]), swit(n1, 2)));
    for (size_t i = 0; i + 1 < n1; ++i)
      place(Y, (int)(1 + i), (int)(1 + i), swit(i + 1, n1 + 1 - i));
    place(Y, (int)n1, (int)n1, swit(n1, 2));
    return Y;
  };

  std::vector<BlockLiftStage> stages;
  for (size_t n = 1; n <= N; ++n) {
    BlockLiftStage st;
    st.stage = (int)n;
    st.X = build_X(n);
    st.Y = n >= 2 ? build_Y(n - 1) : mat_zero(R, 0, 0);
    stages.push_back(std::move(st));
  }
  // the lifted sequence satisfies the proof identity exactly
  for (size_t n = 1; n + 1 <= N; ++n) {
    RingMatrix lhs = mat_mul(stages[n].Y, mat_mul(stages[n].X, stages[n - 1].X));
    if (!meq(lhs, stages[n - 1].X))
      throw HypothesisFailed("stage identity Y_{n+1} X_{n+1} X_n = X_n fails "
                             "at n = " + std::to_string(n));
  }
  (void)budget;
  return stages;
}

// ---------------------------------------------------------------------------
// transfer report

TransferReport transfer_report(const RingPtr& R, const Ideal& I, int max_size,
                               Budget& budget) {
  TransferReport rep;
  QuotientContext q = make_quotient_context(R, I);
  const RingPtr Q = q.quot;

  // (a) pi is monotone: project witnesses and replay by multiplication
  for (elem x = 0; x < R->size; ++x)
    for (elem y = 0; y < R->size; ++y) {
      auto w = subordinate(mat_scalar(R, x), mat_scalar(R, y), budget);
      if (!w) continue;
      ++rep.monotone_checked;
      SubordinationWitness pw{q.project(w->left), q.project(w->right)};
      if (!witness_checks(pw, q.project(mat_scalar(R, x)),
                          q.project(mat_scalar(R, y)))) {
        ++rep.monotone_failed;
        rep.failures.push_back("projected witness fails at (" + R->ename(x) +
                               "," + R->ename(y) + ")");
      }
    }

  // (b) every <=_1-chain of length 3 in R/I lifts through iterated
  // lift_subordination
  int chains_budget = 200;
  for (elem q1 = 0; q1 < Q->size && chains_budget > 0; ++q1)
    for (elem q2 = 0; q2 < Q->size && chains_budget > 0; ++q2) {
      if (!subordinate(mat_scalar(Q, q1), mat_scalar(Q, q2), budget)) continue;
      for (elem q3 = 0; q3 < Q->size && chains_budget > 0; ++q3) {
        if (!subordinate(mat_scalar(Q, q2), mat_scalar(Q, q3), budget)) continue;
        --chains_budget;
        ++rep.chains_lifted;
        try {
          RingMatrix x1 = mat_scalar(R, q.lift[q1]);
          LiftCertificate c1 =
              lift_subordination(q, x1, mat_scalar(R, q.lift[q2]), budget);
          RingMatrix x2 = direct_sum(mat_scalar(R, q.lift[q2]), c1.z);
          LiftCertificate c2 =
              lift_subordination(q, x2, mat_scalar(R, q.lift[q3]), budget);
          RingMatrix x3 = direct_sum(mat_scalar(R, q.lift[q3]), c2.z);
          bool ok = witness_checks(c1.wit, x1, x2) &&
                    witness_checks(c2.wit, x2, x3) &&
                    meq(q.project(x3), pad_square(mat_scalar(Q, q3),
                                                  std::max(x3.rows, x3.cols)));
          if (!ok) throw InternalError("lifted chain fails to replay");
        } catch (const Error& e) {
          ++rep.chains_failed;
          rep.failures.push_back(std::string("chain lift failed: ") + e.what());
        }
      }
    }

  // (c) order-embedding direction on pairs of sizes <= max_size
  auto run_pair = [&](const RingMatrix& x, const RingMatrix& y) {
    RingMatrix px = q.project(x), py = q.project(y);
    if (!subordinate(px, py, budget)) return;
    ++rep.embeddings_checked;
    try {
      LiftCertificate c = lift_subordination(q, x, y, budget);
      if (!witness_checks(c.wit, x, direct_sum(y, c.z)))
        throw InternalError("certificate does not replay");
    } catch (const Error& e) {
      ++rep.embeddings_failed;
      rep.failures.push_back(std::string("embedding failed: ") + e.what());
    }
  };
  for (elem x = 0; x < R->size; ++x)
    for (elem y = 0; y < R->size; ++y)
      run_pair(mat_scalar(R, x), mat_scalar(R, y));
  if (max_size >= 2) {
    uint64_t st = 0x715EEDULL ^ R->size;
    for (int i = 0; i < 50; ++i) {
      RingMatrix x(R, 2, 2), y(R, 2, 2);
      for (auto& v : x.e) v = (elem)(splitmix64(st) % R->size);
      for (auto& v : y.e) v = (elem)(splitmix64(st) % R->size);
      run_pair(x, y);
    }
  }
  return rep;
}

}  // namespace cuw
