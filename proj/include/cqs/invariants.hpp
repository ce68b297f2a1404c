#pragma once

#include <cqs/contfrac.hpp>
#include <cqs/lattice.hpp>

#include <optional>

namespace cqs {

/**
 * The cyclic quotient singularity Y(n,q), n >= 2, 0 < q < n, gcd(n,q) = 1;
 * the toric variety of the cone <(1,0), (-q,n)>.
 */
struct CyclicQuotient {
  Int n, q;

  CyclicQuotient(Int n_, Int q_);

  friend bool operator==(const CyclicQuotient&, const CyclicQuotient&) = default;
  std::string str() const { return "Y(" + n.str() + "," + q.str() + ")"; }
};

// sigma = <(1,0), (-q,n)>
Cone cone_of(const CyclicQuotient& cq);

/**
 * Singularity type of an arbitrary cone: nullopt for a smooth (index 1)
 * cone, otherwise the canonical (n, q) with q = min(q, q^{-1} mod n).
 * Inverse of cone_of up to lattice automorphism.
 */
std::optional<CyclicQuotient> normal_form(const Cone& c);

/**
 * The a/b/w/v data of Y(n,q):
 *   n/(n-q) = [a_2,...,a_{e-1}],  n/q = [b_1,...,b_r],
 *   w^1..w^e   Hilbert basis of the dual cone (w-recursion with the a's),
 *   v^0..v^{r+1} Hilbert basis of sigma (v-recursion with the b's),
 *   e = embedding dimension.
 */
struct CqsInvariants {
  CyclicQuotient cq;
  std::vector<Int> a_chain;  // a_2..a_{e-1}
  std::vector<Int> b_chain;  // b_1..b_r
  int e = 0;
  std::vector<MVec> w_points;  // w^1..w^e
  std::vector<NVec> v_points;  // v^0..v^{r+1}
};

CqsInvariants invariants(const CyclicQuotient& cq);

/**
 * T-singularity classification of a cone. T-cones are the cones over
 * rational intervals of integer length placed at height one: the roof
 * height d divides the roof length l, and the Milnor number is l/d - 1.
 */
struct TType {
  enum class Kind { smooth, t, not_t };

  Kind kind = Kind::smooth;
  Int milnor{-1};                       // only meaningful for kind == t
  std::optional<CyclicQuotient> normal; // empty iff smooth

  bool is_t_or_smooth() const { return kind != Kind::not_t; }
};

TType t_classify(const Cone& c);

}  // namespace cqs
