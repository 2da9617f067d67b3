#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cuw/quotient.hpp"

using namespace cuw;

namespace {

// Forward simulation of block-lift inputs: pick quotient terms and witnesses,
// lift them, and factor the residues through quasipure chains.
BlockLiftInput simulate(const RingPtr& R, const Ideal& I,
                        const std::vector<elem>& lifted_terms,
                        const std::vector<elem>& lifted_witnesses,
                        Budget& budget) {
  BlockLiftInput in;
  in.q = make_quotient_context(R, I);
  for (elem x : lifted_terms) in.x.push_back(mat_scalar(R, x));
  for (elem y : lifted_witnesses) in.y.push_back(mat_scalar(R, y));
  for (size_t n = 0; n + 1 < in.x.size(); ++n) {
    RingMatrix z =
        mat_sub(in.x[n], mat_mul(mat_mul(in.y[n], in.x[n + 1]), in.x[n]));
    if (z.is_zero()) {
      auto qc = quasipure_chain(I, mat_zero(R, 1, 1), 3, budget);
      in.r.push_back(mat_zero(R, 1, 1));
      in.schain.push_back(qc.chain);
    } else {
      auto qc = quasipure_chain(I, z, 3, budget);
      in.r.push_back(qc.r);
      in.schain.push_back(qc.chain);
    }
  }
  // the final stage only contributes its s_{1,N} row; any certified chain
  in.schain.push_back(quasipure_chain(I, mat_zero(R, 1, 1), 3, budget).chain);
  return in;
}

}  // namespace

TEST_CASE("lift_subordination over zmod(4), I = {0,2}") {
  Budget b;
  auto R = build_ring("zmod(4)");
  Ideal I = make_ideal(R, {0, 2});
  QuotientContext q = make_quotient_context(R, I);
  SUBCASE("x = [3], y = [1]") {
    auto c = lift_subordination(q, mat_scalar(R, 3), mat_scalar(R, 1), b);
    CHECK(entries_in(c.z, I.member));
    CHECK(witness_checks(c.wit, mat_scalar(R, 3),
                         direct_sum(mat_scalar(R, 1), c.z)));
  }
  SUBCASE("x = [2], y = [0]: realized as x below 0 + z") {
    auto c = lift_subordination(q, mat_scalar(R, 2), mat_zero(R, 1, 1), b);
    CHECK(entries_in(c.z, I.member));
    CHECK(witness_checks(c.wit, mat_scalar(R, 2),
                         direct_sum(mat_zero(R, 1, 1), c.z)));
    CHECK_FALSE(c.z.is_zero());
  }
  SUBCASE("x = 0 gives z = 0") {
    auto c = lift_subordination(q, mat_zero(R, 1, 1), mat_scalar(R, 1), b);
    CHECK(c.z.is_zero());
  }
  SUBCASE("hypothesis failure: pi(1) not below pi(0)") {
    CHECK_THROWS_AS(
        lift_subordination(q, mat_scalar(R, 1), mat_zero(R, 1, 1), b),
        HypothesisFailed);
  }
}

TEST_CASE("lift certificates on 2x2 data") {
  Budget b;
  auto R = build_ring("zmod(6)");
  Ideal I = make_ideal(R, {0, 3});
  QuotientContext q = make_quotient_context(R, I);
  RingMatrix x(R, 2, 2), y(R, 2, 2);
  x.e = {4, 3, 0, 2};
  y.e = {1, 0, 0, 2};
  RingMatrix px = q.project(x), py = q.project(y);
  if (subordinate(px, py, b)) {
    auto c = lift_subordination(q, x, y, b);
    CHECK(witness_checks(c.wit, x, direct_sum(y, c.z)));
    CHECK(entries_in(c.z, I.member));
  }
}

TEST_CASE("cumulative lift chain: w_n below w_{n+1}") {
  // iterated lifting produces cumulative blocks z_2, z_2+z_3, ... that stay
  // subordinate along the chain
  Budget b;
  auto R = build_ring("zmod(4)");
  Ideal I = make_ideal(R, {0, 2});
  QuotientContext q = make_quotient_context(R, I);
  RingMatrix x1 = mat_scalar(R, 3);
  auto c1 = lift_subordination(q, x1, mat_scalar(R, 1), b);
  RingMatrix x2 = direct_sum(mat_scalar(R, 1), c1.z);
  auto c2 = lift_subordination(q, x2, mat_scalar(R, 3), b);
  RingMatrix w1 = c1.z;
  RingMatrix w2 = direct_sum(c1.z, c2.z);
  CHECK(subordinate(w1, w2, b).has_value());
}

TEST_CASE("block_lift") {
  Budget b;
  SUBCASE("all-zero stages") {
    auto R = build_ring("zmod(6)");
    Ideal I = make_ideal(R, {0, 3});
    auto in = simulate(R, I, {0, 0, 0}, {0, 0}, b);
    auto stages = block_lift(in, b);
    CHECK(stages.size() == 3);
  }
  SUBCASE("single stage is vacuous") {
    auto R = build_ring("zmod(6)");
    Ideal I = make_ideal(R, {0, 3});
    BlockLiftInput in;
    in.q = make_quotient_context(R, I);
    in.x = {mat_scalar(R, 4)};
    in.schain = {quasipure_chain(I, mat_zero(R, 1, 1), 2, b).chain};
    auto stages = block_lift(in, b);
    CHECK(stages.size() == 1);
  }
  SUBCASE("zmod(6), I = {0,3}: lifted constant chains with residue") {
    auto R = build_ring("zmod(6)");
    Ideal I = make_ideal(R, {0, 3});
    // quotient terms all pi(1); lifts wander inside the coset 1+I = {1,4}
    for (elem a : {1, 4})
      for (elem c : {1, 4}) {
        auto in = simulate(R, I, {a, c, 1}, {1, 1}, b);
        auto stages = block_lift(in, b);
        CHECK(stages.size() == 3);
        for (size_t n = 1; n < stages.size(); ++n) {
          RingMatrix lhs = mat_mul(
              stages[n].Y, mat_mul(stages[n].X, stages[n - 1].X));
          CHECK(meq(lhs, stages[n - 1].X));
        }
      }
  }
  SUBCASE("upper(2,zmod(2)) with the right-column ideal") {
    auto R = build_ring("upper(2, zmod(2))");
    elem e22 = 0, one = *R->unit;
    for (elem x = 0; x < R->size; ++x)
      if (R->ename(x) == "[0 0;0 1]") e22 = x;
    Ideal I = ideal_generated_by(R, {e22});
    elem shifted = R->add(one, e22);  // unit + e22 lies over pi(1)
    auto in = simulate(R, I, {one, shifted, one}, {one, one}, b);
    auto stages = block_lift(in, b);
    CHECK(stages.size() == 3);
  }
  SUBCASE("hypothesis violation is reported") {
    auto R = build_ring("zmod(6)");
    Ideal I = make_ideal(R, {0, 3});
    auto in = simulate(R, I, {1, 1, 1}, {1, 1}, b);
    in.y[0] = mat_zero(R, 1, 1);  // residue 1 - 0 = 1 escapes I = {0,3}
    CHECK_THROWS_AS(block_lift(in, b), HypothesisFailed);
  }
}

TEST_CASE("transfer_report") {
  Budget b(Budget::kDefaultLimit * 4);
  SUBCASE("zmod(4), I = {0,2}: all checks pass") {
    auto R = build_ring("zmod(4)");
    auto rep = transfer_report(R, make_ideal(R, {0, 2}), 2, b);
    CHECK(rep.pass());
    CHECK(rep.monotone_checked > 0);
    CHECK(rep.chains_lifted > 0);
    CHECK(rep.embeddings_checked > 0);
  }
  SUBCASE("I = {0}: pi is the identity") {
    auto R = build_ring("zmod(4)");
    auto rep = transfer_report(R, make_ideal(R, {0}), 1, b);
    CHECK(rep.pass());
  }
  SUBCASE("I = R: everything lifts to zero-padded data") {
    auto R = build_ring("zmod(4)");
    auto rep = transfer_report(R, make_ideal(R, {0, 1, 2, 3}), 1, b);
    CHECK(rep.pass());
  }
}
