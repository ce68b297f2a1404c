#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cqs/invariants.hpp>
#include <cqs/oracles.hpp>

#include <numeric>

using namespace cqs;

TEST_CASE("CyclicQuotient validation") {
  CHECK_NOTHROW(CyclicQuotient(2, 1));
  CHECK_NOTHROW(CyclicQuotient(19, 7));
  CHECK_THROWS_WITH_AS(CyclicQuotient(1, 1), "n must be >= 2", std::invalid_argument);
  CHECK_THROWS_WITH_AS(CyclicQuotient(5, 0), "q must satisfy 0 < q < n",
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(CyclicQuotient(5, 5), "q must satisfy 0 < q < n",
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(CyclicQuotient(4, 2), "gcd(n,q) must be 1", std::invalid_argument);
  CHECK(CyclicQuotient(19, 7).str() == "Y(19,7)");
}

TEST_CASE("invariants of Y(19,7)") {
  CqsInvariants inv = invariants(CyclicQuotient{19, 7});
  CHECK(inv.e == 6);
  CHECK(inv.a_chain == std::vector<Int>{2, 3, 2, 3});
  CHECK(inv.b_chain == std::vector<Int>{3, 4, 2});
  CHECK(inv.w_points ==
        std::vector<MVec>{{0, 1}, {1, 1}, {2, 1}, {5, 2}, {8, 3}, {19, 7}});
  CHECK(inv.v_points == std::vector<NVec>{{1, 0}, {0, 1}, {-1, 3}, {-4, 11}, {-7, 19}});
}

TEST_CASE("invariants of small singularities") {
  CqsInvariants a1 = invariants(CyclicQuotient{2, 1});
  CHECK(a1.e == 3);
  CHECK(a1.a_chain == std::vector<Int>{2});
  CHECK(a1.b_chain == std::vector<Int>{2});

  CqsInvariants y41 = invariants(CyclicQuotient{4, 1});
  CHECK(y41.e == 5);
  CHECK(y41.a_chain == std::vector<Int>{2, 2, 2});
  CHECK(y41.b_chain == std::vector<Int>{4});

  CqsInvariants y43 = invariants(CyclicQuotient{4, 3});
  CHECK(y43.e == 3);
  CHECK(y43.a_chain == std::vector<Int>{4});
  CHECK(y43.b_chain == std::vector<Int>{2, 2, 2});
}

TEST_CASE("w-recursion endpoints and duality sweep, n <= 100") {
  for (int n = 2; n <= 100; ++n) {
    for (int q = 1; q < n; ++q) {
      if (std::gcd(n, q) != 1) continue;
      CqsInvariants inv = invariants(CyclicQuotient{n, q});
      CHECK(inv.w_points.front() == MVec{0, 1});
      CHECK(inv.w_points[1] == MVec{1, 1});
      CHECK(inv.w_points.back() == MVec{n, q});
      CHECK(inv.v_points.front() == NVec{1, 0});
      CHECK(inv.v_points.back() == NVec{-q, n});
      CHECK(dual_chain(inv.b_chain) == inv.a_chain);
      CHECK(static_cast<int>(inv.w_points.size()) == inv.e);
    }
  }
}

TEST_CASE("normal form of cones") {
  CHECK(!normal_form(Cone{NVec{1, 0}, NVec{0, 1}}).has_value());
  CHECK(!normal_form(Cone{NVec{2, 1}, NVec{1, 1}}).has_value());

  auto nf = normal_form(Cone{NVec{1, 0}, NVec{-7, 19}});
  REQUIRE(nf.has_value());
  CHECK(*nf == CyclicQuotient{19, 7});

  // q is canonicalized to min(q, q^{-1} mod n): 7^{-1} = 11 mod 19
  auto nf2 = normal_form(Cone{NVec{1, 0}, NVec{-11, 19}});
  REQUIRE(nf2.has_value());
  CHECK(*nf2 == CyclicQuotient{19, 7});

  // invariance under a unimodular map: image of sigma under [[1,0],[1,1]]
  auto nf3 = normal_form(Cone{NVec{1, 1}, NVec{-7, 12}});
  REQUIRE(nf3.has_value());
  CHECK(*nf3 == CyclicQuotient{19, 7});
}

TEST_CASE("t_classify") {
  // Y(4,1): roof height 2 = roof length, so T with Milnor number 0
  TType t41 = t_classify(Cone{NVec{1, 0}, NVec{-1, 4}});
  CHECK(t41.kind == TType::Kind::t);
  CHECK(t41.milnor == 0);
  REQUIRE(t41.normal.has_value());
  CHECK(*t41.normal == CyclicQuotient{4, 1});

  // smooth cone
  TType sm = t_classify(Cone{NVec{1, 0}, NVec{5, 1}});
  CHECK(sm.kind == TType::Kind::smooth);
  CHECK(!sm.normal.has_value());
  CHECK(sm.is_t_or_smooth());

  // Y(19,7) itself is not a T-singularity
  TType nt = t_classify(Cone{NVec{1, 0}, NVec{-7, 19}});
  CHECK(nt.kind == TType::Kind::not_t);
  CHECK_FALSE(nt.is_t_or_smooth());

  // Y(4,3) is the Du Val A_3: roof height 1, length 4, Milnor number 3
  TType a3 = t_classify(Cone{NVec{1, 0}, NVec{-3, 4}});
  CHECK(a3.kind == TType::Kind::t);
  CHECK(a3.milnor == 3);
}

TEST_CASE("t_classify agrees with the KS family oracle, n <= 60") {
  for (int n = 2; n <= 60; ++n) {
    for (int q = 1; q < n; ++q) {
      if (std::gcd(n, q) != 1) continue;
      CyclicQuotient cq{n, q};
      TType t = t_classify(cone_of(cq));
      REQUIRE(t.kind != TType::Kind::smooth);  // n >= 2 is never smooth
      CHECK((t.kind == TType::Kind::t) == oracles::in_ks_family(cq));
    }
  }
}

TEST_CASE("t_classify is invariant under relabeling the generators") {
  TType a = t_classify(Cone{NVec{1, 0}, NVec{-3, 4}});
  TType b = t_classify(Cone{NVec{-3, 4}, NVec{1, 0}});
  CHECK(a.kind == b.kind);
  CHECK(a.milnor == b.milnor);
}
