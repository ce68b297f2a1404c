#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cqs/resolution.hpp>

#include <algorithm>
#include <numeric>

using namespace cqs;

TEST_CASE("minimal resolution of Y(19,7)") {
  Fan f = minimal_resolution(CyclicQuotient{19, 7});
  CHECK(f.rays == std::vector<NVec>{{1, 0}, {0, 1}, {-1, 3}, {-4, 11}, {-7, 19}});
  CHECK(f.interior_count() == 3);
  CHECK(self_intersections(f) == std::vector<Int>{3, 4, 2});
}

TEST_CASE("maximal resolution of Y(19,7)") {
  Fan f = maximal_resolution(CyclicQuotient{19, 7});
  CHECK(f.rays == std::vector<NVec>{{1, 0},
                                    {0, 1},
                                    {-1, 4},
                                    {-2, 7},
                                    {-1, 3},
                                    {-5, 14},
                                    {-4, 11},
                                    {-7, 19}});
  DiscrepancyData dd = discrepancies(f);
  CHECK(dd.r_vector == RVec{Rat(1), Rat(8, 19)});
  CHECK(dd.alphas ==
        std::vector<Rat>{1, Rat(8, 19), Rat(13, 19), Rat(18, 19), Rat(5, 19),
                         Rat(17, 19), Rat(12, 19), 1});
  // this particular maximal resolution happens to be smooth
  CHECK(self_intersections(f) == std::vector<Int>{4, 2, 1, 7, 1, 3});
}

TEST_CASE("crepant case Y(2,1): maximal is strictly below minimal") {
  CyclicQuotient a1{2, 1};
  CHECK(minimal_resolution(a1).rays == std::vector<NVec>{{1, 0}, {0, 1}, {-1, 2}});
  // the A_1 exceptional ray (0,1) sits on [R=1] (alpha = 1), so the
  // maximal resolution, which keeps 0 < alpha < 1 only, excludes it
  Fan maxi = maximal_resolution(a1);
  CHECK(maxi.rays == std::vector<NVec>{{1, 0}, {-1, 2}});
  CHECK(maxi == maximal_resolution_iterative(a1));
}

TEST_CASE("direct and iterative maximal resolutions agree, n <= 60") {
  for (int n = 2; n <= 60; ++n)
    for (int q = 1; q < n; ++q) {
      if (std::gcd(n, q) != 1) continue;
      CyclicQuotient cq{n, q};
      CHECK(maximal_resolution(cq) == maximal_resolution_iterative(cq));
    }
}

TEST_CASE("maximal resolution alphas and maximality, n <= 60") {
  for (int n = 2; n <= 60; ++n) {
    for (int q = 1; q < n; ++q) {
      if (std::gcd(n, q) != 1) continue;
      CyclicQuotient cq{n, q};
      Fan f = maximal_resolution(cq);
      DiscrepancyData dd = discrepancies(f);
      for (std::size_t j = 1; j + 1 < f.rays.size(); ++j) {
        CHECK(dd.alphas[j] > 0);
        CHECK(dd.alphas[j] < 1);
      }
      // maximality: every candidate ray not in the fan is either
      // non-primitive or not strictly interior to Delta
      NVec v0{1, 0}, vl{-q, n};
      NVec chord = vl - v0;
      for (Int x = std::min(Int(0), vl.x); x <= 1; ++x) {
        for (Int y = 0; y <= n; ++y) {
          NVec c{x, y};
          if (c.is_zero()) continue;
          if (std::find(f.rays.begin(), f.rays.end(), c) != f.rays.end()) continue;
          bool interior = det2(v0, c) > 0 && det2(c, vl) > 0 &&
                          det2(chord, c - v0) > 0;
          CHECK((!c.is_primitive() || !interior));
        }
      }
    }
  }
}

TEST_CASE("alpha recursion on full resolutions, n <= 60") {
  // alpha_{j-1} + alpha_{j+1} = c_j alpha_j whenever the fan is a chain
  // of smooth cones with multipliers c_j
  for (int n = 2; n <= 60; ++n) {
    for (int q = 1; q < n; ++q) {
      if (std::gcd(n, q) != 1) continue;
      Fan f = minimal_resolution(CyclicQuotient{n, q});
      DiscrepancyData dd = discrepancies(f);
      std::vector<Int> c = self_intersections(f);
      for (std::size_t j = 1; j + 1 < f.rays.size(); ++j)
        CHECK(dd.alphas[j - 1] + dd.alphas[j + 1] == Rat(c[j - 1]) * dd.alphas[j]);
    }
  }
}

TEST_CASE("self_intersections rejects non-smooth chains") {
  Fan f{CyclicQuotient{19, 7}, {{1, 0}, {0, 1}, {-7, 19}}};
  CHECK_THROWS_WITH_AS(self_intersections(f), "fan is not a chain of smooth cones",
                       std::domain_error);
}

TEST_CASE("discrepancies validates its fan") {
  Fan bad{CyclicQuotient{19, 7}, {{1, 0}}};
  CHECK_THROWS_AS(discrepancies(bad), std::invalid_argument);
  Fan unsorted{CyclicQuotient{19, 7}, {{0, 1}, {1, 0}, {-7, 19}}};
  CHECK_THROWS_AS(discrepancies(unsorted), std::invalid_argument);
}

TEST_CASE("roof_sign") {
  // flat roof: (1,0) + (-1,2) = 2*(0,1)
  Fan flat{CyclicQuotient{2, 1}, {{1, 0}, {0, 1}, {-1, 2}}};
  CHECK(roof_sign(flat, 1) == RoofSign::zero);

  // strictly concave at the minimal resolution of any n > q >= 1 with b_j >= 3
  Fan mini = minimal_resolution(CyclicQuotient{19, 7});
  CHECK(roof_sign(mini, 1) == RoofSign::positive);

  // strictly convex example: ray through a point beyond the chord of its
  // neighbors
  Fan conv{CyclicQuotient{5, 2}, {{1, 0}, {1, 1}, {-2, 5}}};
  CHECK(roof_sign(conv, 1) == RoofSign::negative);

  CHECK_THROWS_AS(roof_sign(flat, 0), std::out_of_range);
  CHECK_THROWS_AS(roof_sign(flat, 2), std::out_of_range);
}
