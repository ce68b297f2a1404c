#pragma once

#include <cqs/invariants.hpp>

namespace cqs {

/**
 * A subdivision of sigma given by an angle-ordered list of primitive rays
 * u^0,...,u^{s+1} with u^0 = (1,0) and u^{s+1} = (-q,n). Interior rays
 * correspond to exceptional divisors. Fans are value objects; equality is
 * ray-list equality.
 */
struct Fan {
  CyclicQuotient base;
  std::vector<NVec> rays;

  friend bool operator==(const Fan&, const Fan&) = default;
  std::size_t interior_count() const { return rays.size() < 2 ? 0 : rays.size() - 2; }
};

// Rays through the v^j: self-intersections -b_j, hence minimal.
Fan minimal_resolution(const CyclicQuotient& cq);

/**
 * The maximal (partial) resolution: boundary rays plus the rays through
 * all primitive interior lattice points of Delta = conv(0, v^0, v^{r+1}).
 * Every interior ray has discrepancy datum 0 < alpha < 1, and no further
 * ray can be added without breaking that.
 */
Fan maximal_resolution(const CyclicQuotient& cq);

/**
 * Independent construction for cross-checking: start from the minimal
 * resolution, keep splitting <u,v> at primitive(u+v) while the open cone
 * contains a point of int Delta, then drop interior rays sitting on the
 * line [R=1] (those have alpha = 1 and are blown down again in the
 * maximal resolution). Must agree with maximal_resolution.
 */
Fan maximal_resolution_iterative(const CyclicQuotient& cq);

/**
 * R is the unique rational point of M_R with <u^0,R> = <u^{s+1},R> = 1;
 * alpha_j = <u^j,R>. K = sum (alpha_j - 1) E_j.
 */
struct DiscrepancyData {
  RVec r_vector;
  std::vector<Rat> alphas;  // alpha_0 .. alpha_{s+1}
};

DiscrepancyData discrepancies(const Fan& f);

/**
 * The multipliers c_j in u^{j-1} + u^{j+1} = c_j u^j; the exceptional
 * curve E_j has self-intersection -c_j. Defined only when every u^{j-1} +
 * u^{j+1} is a multiple of u^j (a chain of smooth cones); throws
 * std::domain_error otherwise.
 */
std::vector<Int> self_intersections(const Fan& f);

// Sign of (E_j . K): positive / zero / negative according to the roof
// over the two cones at u^j being strictly concave, flat, or strictly
// convex.
enum class RoofSign { positive, zero, negative };

RoofSign roof_sign(const Fan& f, std::size_t j);

}  // namespace cqs
