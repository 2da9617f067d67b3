#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cuw/classes.hpp"

using namespace cuw;

TEST_CASE("weakly s-unital") {
  Budget b;
  SUBCASE("zmod(4) holds (unital)") {
    auto v = is_weakly_s_unital(build_ring("zmod(4)"), 2, b);
    CHECK(v.status == ClassVerdict::Status::Holds);
  }
  SUBCASE("even ring fails with x = [2]") {
    auto R = build_ring("subring_nonunital(zmod(16), {2})");
    auto v = is_weakly_s_unital(R, 2, b);
    CHECK(v.status == ClassVerdict::Status::FailsWithCounterexample);
    CHECK(v.conclusive);
    REQUIRE(v.counterexample.size() == 1);
    CHECK(R->ename(v.counterexample[0].at(0, 0)) == "2");
  }
  SUBCASE("zero_mult(4) fails on a nonzero scalar") {
    auto v = is_weakly_s_unital(build_ring("zero_mult(4)"), 2, b);
    CHECK(v.status == ClassVerdict::Status::FailsWithCounterexample);
    CHECK(v.conclusive);
  }
}

TEST_CASE("dense") {
  Budget b;
  SUBCASE("zmod(6) holds by reflexivity") {
    auto v = is_dense(build_ring("zmod(6)"), 2, b);
    CHECK(v.status == ClassVerdict::Status::Holds);
  }
  SUBCASE("zero_mult(4) holds (zero multiplication)") {
    auto v = is_dense(build_ring("zero_mult(4)"), 2, b);
    CHECK(v.status == ClassVerdict::Status::Holds);
  }
  SUBCASE("even ring: counterexample pair (8, 2)") {
    auto R = build_ring("subring_nonunital(zmod(16), {2})");
    auto v = is_dense(R, 2, b);
    CHECK(v.status == ClassVerdict::Status::FailsWithCounterexample);
    CHECK_FALSE(v.conclusive);  // relative to the interpolant bound
    REQUIRE(v.counterexample.size() == 2);
    CHECK(R->ename(v.counterexample[0].at(0, 0)) == "8");
    CHECK(R->ename(v.counterexample[1].at(0, 0)) == "2");
  }
}

TEST_CASE("left normal") {
  Budget b(Budget::kDefaultLimit * 4);
  SUBCASE("gf(2), gf(3), upper(2, zmod(2)) hold up to bound 2") {
    for (const char* spec : {"gf(2)", "gf(3)", "upper(2, zmod(2))"}) {
      CAPTURE(spec);
      auto v = is_left_normal(build_ring(spec), 2, b);
      CHECK(v.status == ClassVerdict::Status::HoldsUpToBound);
      CHECK(v.bound == 2);
    }
  }
  SUBCASE("zmod(4) scalar triple a=2, b=1, c=1 has witness d=e=1") {
    auto R = build_ring("zmod(4)");
    auto w = left_normal_witness(mat_scalar(R, 2), mat_scalar(R, 1),
                                 mat_scalar(R, 1), b);
    REQUIRE(w.has_value());
    CHECK(meq(mat_mul(w->first, mat_scalar(R, 2)), mat_scalar(R, 2)));
  }
}

TEST_CASE("normal_chain") {
  Budget b;
  SUBCASE("all-zero inputs give a zero chain") {
    auto R = build_ring("zmod(6)");
    auto z = mat_zero(R, 1, 1);
    auto ds = normal_chain(z, z, z, 4, b);
    CHECK(ds.size() == 4);
    for (auto& d : ds) CHECK(d.is_zero());
  }
  SUBCASE("zmod(6): a=b=c=3, the constant chain d=3 works") {
    auto R = build_ring("zmod(6)");
    auto three = mat_scalar(R, 3);
    auto ds = normal_chain(three, three, three, 3, b);
    CHECK(meq(mat_mul(ds[0], three), three));
    for (size_t i = 0; i + 1 < ds.size(); ++i)
      CHECK(meq(mat_mul(ds[i + 1], ds[i]), ds[i]));
    for (auto& d : ds) CHECK(meq(mat_mul(three, d), d));
  }
  SUBCASE("gf(2): rank-1 a with b = c = identity") {
    auto R = build_ring("gf(2)");
    RingMatrix a(R, 2, 2);
    a.cell(0, 0) = 1;
    auto one = mat_identity(R, 2);
    auto ds = normal_chain(a, one, one, 3, b);
    CHECK(ds.size() == 3);
    CHECK(meq(mat_mul(ds[0], a), a));
  }
  SUBCASE("hypothesis violation is rejected") {
    auto R = build_ring("zmod(4)");
    CHECK_THROWS_AS(normal_chain(mat_scalar(R, 1), mat_scalar(R, 2),
                                 mat_scalar(R, 1), 2, b),
                    HypothesisFailed);
  }
}

TEST_CASE("interpolant search") {
  Budget b;
  auto R = build_ring("zmod(6)");
  auto x = mat_scalar(R, 2), y = mat_scalar(R, 4);
  auto ip = find_interpolant(x, y, 2, b);
  REQUIRE(ip.has_value());
  CHECK(witness_checks(ip->below, x, ip->z));
  CHECK(witness_checks(ip->above, ip->z, y));
}
