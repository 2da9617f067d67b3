#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cuw/ideals.hpp"

using namespace cuw;

namespace {

std::vector<std::vector<elem>> elem_sets(const std::vector<Ideal>& v) {
  std::vector<std::vector<elem>> out;
  for (auto& I : v) out.push_back(I.elems);
  return out;
}

Ideal ideal_of(const RingPtr& R, std::vector<elem> e) {
  return make_ideal(R, std::move(e));
}

}  // namespace

TEST_CASE("enumerate_ideals") {
  SUBCASE("zmod(6): four ideals") {
    auto R = build_ring("zmod(6)");
    auto got = elem_sets(enumerate_ideals(R));
    std::vector<std::vector<elem>> want{
        {0}, {0, 3}, {0, 2, 4}, {0, 1, 2, 3, 4, 5}};
    CHECK(got == want);
  }
  SUBCASE("zmod(4): three ideals") {
    auto R = build_ring("zmod(4)");
    auto got = elem_sets(enumerate_ideals(R));
    std::vector<std::vector<elem>> want{{0}, {0, 2}, {0, 1, 2, 3}};
    CHECK(got == want);
  }
  SUBCASE("gf(3): field has only the trivial ideals") {
    auto R = build_ring("gf(3)");
    CHECK(enumerate_ideals(R).size() == 2);
  }
  SUBCASE("matrix(2, gf(2)) is simple") {
    auto R = build_ring("matrix(2, gf(2))");
    CHECK(enumerate_ideals(R).size() == 2);
  }
}

TEST_CASE("is_pure") {
  SUBCASE("zmod(6), {0,2,4} is pure via s = 4") {
    auto R = build_ring("zmod(6)");
    CHECK(is_pure(ideal_of(R, {0, 2, 4})));
  }
  SUBCASE("upper(2,zmod(2)): the right-column ideal is not pure") {
    auto R = build_ring("upper(2, zmod(2))");
    // elements (0 b; 0 d): generated by e_22
    elem e22 = 0;
    for (elem x = 0; x < R->size; ++x)
      if (R->ename(x) == "[0 0;0 1]") e22 = x;
    Ideal target = ideal_generated_by(R, {e22});
    CHECK(target.size() == 4);
    CHECK_FALSE(is_pure(target));
    CHECK(is_idempotent(target));
  }
  SUBCASE("{0} is pure") {
    auto R = build_ring("zmod(4)");
    CHECK(is_pure(ideal_of(R, {0})));
  }
}

TEST_CASE("is_idempotent examples") {
  auto R4 = build_ring("zmod(4)");
  CHECK_FALSE(is_idempotent(ideal_of(R4, {0, 2})));
  auto R6 = build_ring("zmod(6)");
  CHECK(is_idempotent(ideal_of(R6, {0, 3})));
  CHECK(is_idempotent(ideal_of(R4, {0})));
}

TEST_CASE("stable_power") {
  auto R4 = build_ring("zmod(4)");
  CHECK(stable_power(ideal_of(R4, {0, 2})).elems == std::vector<elem>{0});
  auto R6 = build_ring("zmod(6)");
  CHECK(stable_power(ideal_of(R6, {0, 2, 4})).elems ==
        std::vector<elem>{0, 2, 4});
  // even ring: R^2 = {0,4,8,12}, R^3 = {0,8}, R^4 = {0}
  auto E = build_ring("subring_nonunital(zmod(16), {2})");
  std::vector<elem> all(E->size);
  for (elem i = 0; i < E->size; ++i) all[i] = i;
  CHECK(stable_power(ideal_of(E, all)).elems == std::vector<elem>{0});

  // largest idempotent ideal: equals the join of idempotent ideals inside I
  for (const char* spec : {"zmod(4)", "zmod(6)", "zmod(16)", "upper(2, zmod(2))"}) {
    auto R = build_ring(spec);
    auto ideals = enumerate_ideals(R);
    for (auto& I : ideals) {
      Ideal sp = stable_power(I);
      CHECK(is_idempotent(sp));
      CHECK(I.contains_all(sp));
      std::vector<elem> join_gens;
      for (auto& K : ideals)
        if (I.contains_all(K) && is_idempotent(K))
          join_gens.insert(join_gens.end(), K.elems.begin(), K.elems.end());
      CHECK(additive_span(*R, join_gens) == sp.elems);
    }
  }
}

TEST_CASE("decomposability") {
  Budget b;
  SUBCASE("unital ring: every ideal decomposable, cross-validated") {
    for (const char* spec : {"zmod(4)", "zmod(6)", "upper(2, zmod(2))"}) {
      auto R = build_ring(spec);
      for (auto& I : enumerate_ideals(R)) {
        Budget bb;
        auto ev = is_decomposable(I, ClassifyMode::Both, 2, bb);
        CHECK(ev.verdict);
      }
    }
  }
  SUBCASE("even ring as ideal of itself: span is {0,8}") {
    auto E = build_ring("subring_nonunital(zmod(16), {2})");
    std::vector<elem> all(E->size);
    for (elem i = 0; i < E->size; ++i) all[i] = i;
    auto ev = is_decomposable(ideal_of(E, all), ClassifyMode::Both, 2, b);
    CHECK_FALSE(ev.verdict);
    // span(R*I*R) = {0, 8}: indices 0 and 4 in the sorted even carrier
    CHECK(ev.span == std::vector<elem>{0, 4});
    CHECK(E->ename(4) == "8");
  }
  SUBCASE("{0} is decomposable") {
    auto R = build_ring("zero_mult(4)");
    auto ev = is_decomposable(ideal_of(R, {0}), ClassifyMode::Both, 2, b);
    CHECK(ev.verdict);
  }
  SUBCASE("zero_mult: nonzero ideals are not decomposable") {
    auto R = build_ring("zero_mult(4)");
    auto ev = is_decomposable(ideal_of(R, {0, 2}), ClassifyMode::Both, 3, b);
    CHECK_FALSE(ev.verdict);
    // the oracle is conclusive here: all products vanish
    bool saw_conclusive_false = false;
    for (auto& r : ev.oracle)
      if (r.verdict == TriBool::False) saw_conclusive_false = true;
    CHECK(saw_conclusive_false);
  }
}

TEST_CASE("quasipure") {
  Budget b;
  SUBCASE("zmod(4), {0,2} fails all modes") {
    auto R = build_ring("zmod(4)");
    auto ev = is_quasipure(ideal_of(R, {0, 2}), ClassifyMode::All, 2, b);
    CHECK_FALSE(ev.verdict);
    CHECK(ev.criterion == TriBool::False);
    CHECK(ev.fgsearch == TriBool::False);
  }
  SUBCASE("upper(2, zmod(2)): right-column ideal quasipure but not pure") {
    auto R = build_ring("upper(2, zmod(2))");
    elem e22 = 0;
    for (elem x = 0; x < R->size; ++x)
      if (R->ename(x) == "[0 0;0 1]") e22 = x;
    Ideal I = ideal_generated_by(R, {e22});
    auto ev = is_quasipure(I, ClassifyMode::All, 2, b);
    CHECK(ev.verdict);
    CHECK(ev.criterion == TriBool::True);
    CHECK(ev.fgsearch == TriBool::True);
    CHECK_FALSE(is_pure(I));
  }
  SUBCASE("{0} is quasipure in every mode") {
    auto R = build_ring("zmod(6)");
    auto ev = is_quasipure(ideal_of(R, {0}), ClassifyMode::All, 2, b);
    CHECK(ev.verdict);
  }
  SUBCASE("fgsearch rejects non-unital rings") {
    auto E = build_ring("subring_nonunital(zmod(16), {2})");
    CHECK_THROWS_AS(
        is_quasipure(ideal_of(E, {0, 4}), ClassifyMode::FgSearch, 2, b),
        FgSearchUnsupported);
  }
}

TEST_CASE("implications between classes on the corpus") {
  Budget b;
  for (const char* spec :
       {"zmod(4)", "zmod(6)", "zmod(8)", "gf(2)", "upper(2, zmod(2))",
        "product(zmod(2), zmod(4))"}) {
    auto R = build_ring(spec);
    CAPTURE(spec);
    for (auto& I : enumerate_ideals(R)) {
      bool pure = is_pure(I);
      bool idem = is_idempotent(I);
      bool qp = is_quasipure(I, ClassifyMode::Criterion, 2, b).verdict;
      bool dec = is_decomposable(I, ClassifyMode::Criterion, 2, b).verdict;
      if (pure) CHECK(qp);
      if (qp) CHECK(dec);
      if (idem) CHECK(dec);
    }
  }
}

TEST_CASE("lattice ops") {
  Budget b;
  auto R12 = build_ring("zmod(12)");
  SUBCASE("meet_d of {0,4,8} and {0,6} is {0}") {
    auto m = lattice_op(ideal_of(R12, {0, 4, 8}), ideal_of(R12, {0, 6}),
                        LatticeOp::MeetD, b);
    CHECK(m.elems == std::vector<elem>{0});
  }
  SUBCASE("join_d of {0,2,4} and {0,3} in zmod(6) is R") {
    auto R6 = build_ring("zmod(6)");
    auto j = lattice_op(ideal_of(R6, {0, 2, 4}), ideal_of(R6, {0, 3}),
                        LatticeOp::JoinD, b);
    CHECK(j.size() == 6);
  }
  SUBCASE("sandwich IJ <= meet_d <= intersection, all corpus pairs") {
    for (const char* spec : {"zmod(4)", "zmod(6)", "zmod(12)", "upper(2, zmod(2))"}) {
      auto R = build_ring(spec);
      auto ideals = enumerate_ideals(R);
      for (auto& I : ideals)
        for (auto& J : ideals) {
          auto prod = product_span(*R, I.elems, J.elems);
          auto m = lattice_op(I, J, LatticeOp::MeetD, b);
          for (elem x : prod) CHECK(m.member[x]);
          for (elem x : m.elems) CHECK((I.member[x] && J.member[x]));
        }
    }
  }
  SUBCASE("qp ops demand quasipure inputs") {
    auto R4 = build_ring("zmod(4)");
    CHECK_THROWS_AS(lattice_op(ideal_of(R4, {0, 2}), ideal_of(R4, {0}),
                               LatticeOp::MeetQp, b),
                    ClassPreconditionFailed);
  }
}

TEST_CASE("check_retract") {
  Budget b;
  SUBCASE("zmod(4): psi({0,2}) = {0}, all checks pass") {
    auto rep = check_retract(build_ring("zmod(4)"), b);
    CHECK(rep.pass);
    auto R = build_ring("zmod(4)");
    CHECK(stable_power(ideal_of(R, {0, 2})).elems == std::vector<elem>{0});
  }
  SUBCASE("zmod(6): all ideals idempotent, psi = id") {
    auto rep = check_retract(build_ring("zmod(6)"), b);
    CHECK(rep.pass);
    CHECK(rep.decomposable_count == 4);
    CHECK(rep.quasipure_count == 4);
  }
  SUBCASE("gf(2): trivial retract") {
    auto rep = check_retract(build_ring("gf(2)"), b);
    CHECK(rep.pass);
    CHECK(rep.decomposable_count == 2);
  }
  SUBCASE("zmod(16): five ideals, evens collapse to {0}") {
    auto R = build_ring("zmod(16)");
    auto rep = check_retract(R, b);
    CHECK(rep.pass);
    CHECK(rep.decomposable_count == 5);
    CHECK(rep.quasipure_count == 2);
    std::vector<elem> evens{0, 2, 4, 6, 8, 10, 12, 14};
    CHECK(stable_power(ideal_of(R, evens)).elems == std::vector<elem>{0});
  }
}

TEST_CASE("trace ideals") {
  Budget b;
  SUBCASE("upper(2,zmod(2)): e = (0 0; 0 1) spans the right-column ideal") {
    auto R = build_ring("upper(2, zmod(2))");
    elem e22 = 0;
    for (elem x = 0; x < R->size; ++x)
      if (R->ename(x) == "[0 0;0 1]") e22 = x;
    auto I = trace_ideal(mat_scalar(R, e22), b);
    CHECK(I.size() == 4);
    CHECK(is_idempotent(I));
    CHECK_FALSE(is_pure(I));
  }
  SUBCASE("identity matrix gives the full ring; zero gives {0}") {
    auto R = build_ring("gf(2)");
    CHECK(trace_ideal(mat_identity(R, 2), b).size() == R->size);
    CHECK(trace_ideal(mat_zero(R, 1, 1), b).elems == std::vector<elem>{0});
  }
  SUBCASE("non-idempotent matrix is rejected") {
    auto R = build_ring("zmod(4)");
    CHECK_THROWS_AS(trace_ideal(mat_scalar(R, 2), b), NotIdempotent);
  }
  SUBCASE("every quasipure ideal arises as a trace ideal (corpus)") {
    for (const char* spec : {"zmod(4)", "zmod(6)", "zmod(8)", "zmod(12)",
                             "upper(2, zmod(2))", "matrix(2, gf(2))"}) {
      auto R = build_ring(spec);
      CAPTURE(spec);
      for (auto& I : enumerate_ideals(R)) {
        Budget bb;
        if (!is_quasipure(I, ClassifyMode::Criterion, 2, bb).verdict) continue;
        auto e = find_trace_idempotent(I, (int)I.size(), bb);
        REQUIRE(e.has_value());
        CHECK(trace_ideal(*e, bb).same_elems(I));
      }
    }
  }
}

TEST_CASE("build_lattice shape for zmod(6)") {
  Budget b;
  auto lat = build_lattice(build_ring("zmod(6)"), b);
  CHECK(lat.ideals.size() == 4);
  CHECK(lat.covers.size() == 4);  // 0 < {0,3},{0,2,4} < R
  for (auto& f : lat.flags) {
    CHECK(f.decomposable);
    CHECK(f.quasipure);
  }
}
