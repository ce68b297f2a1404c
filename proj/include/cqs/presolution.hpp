#pragma once

#include <cqs/resolution.hpp>

#include <string>
#include <vector>

namespace cqs {

/**
 * Per-cone data of a P-resolution. Cone tau^i is assigned to the Hilbert
 * basis element w^i; its roof is the segment from `left` to `right` on the
 * affine line [<.,w^i> = height]. Boundary records (i = 1 and i = e) and
 * records with k_i = a_i are degenerate (length 0).
 */
struct ConeRecord {
  int index = 0;  // i in 1..e
  MVec w;
  Int height{};  // q_i, the roof level of tau^i
  Int length{};  // l_i = (a_i - k_i) q_i
  NVec left, right;
  bool degenerate = false;
  bool boundary = false;
  TType ttype;   // meaningful only when not degenerate
  Int milnor{};  // a_i - k_i - 1; meaningful only when not degenerate
};

/**
 * A P-resolution of Y(n,q): the fan built from a zero chain k in K(Y),
 * together with the per-cone roof data of the construction.
 */
struct PResolutionRecord {
  CyclicQuotient base;
  Chain chain;
  QSequence qseq;
  Fan fan;
  std::vector<ConeRecord> cones;
};

/**
 * Re-derivation, from the finished record, of everything that makes it a
 * P-resolution: T-or-smooth cones, strictly concave roofs (relative
 * ampleness), domination by the maximal resolution, and the arithmetic
 * identities of the construction. Failures are reported, not thrown.
 */
struct VerificationReport {
  struct ConeCheck {
    int index = 0;
    bool ok = false;
    std::string detail;
  };

  std::vector<ConeCheck> cone_checks;          // T/smooth per non-degenerate cone
  std::vector<RoofSign> interior_ray_signs;    // one per interior fan ray
  bool ampleness = false;                      // all signs positive
  bool domination = false;                     // interior rays inside int Delta
  bool consistency = false;                    // heights, lengths, pairings
  bool pass = false;
  std::vector<std::string> failures;
};

/**
 * K(Y) = { k in K_{e-2} | k_i <= a_i }, lexicographically ordered.
 * Enumerated directly with the q-recursion (zero chains have q_i >= 1 for
 * 1 < i < e, which prunes the search); agrees with filtering
 * enumerate_zero_chains(e-2).
 */
std::vector<Chain> admissible_chains(const CyclicQuotient& cq);

/**
 * The direct construction: the vertex between tau^i and tau^{i+1} is the
 * unique lattice solution of <u,w^i> = q_i, <u,w^{i+1}> = q_{i+1}.
 * Throws std::invalid_argument for a chain outside K(Y).
 */
PResolutionRecord build_presolution(const CyclicQuotient& cq, const Chain& k);

VerificationReport verify_presolution(const PResolutionRecord& p);

// (i, mu_i) with mu_i = a_i - k_i - 1 for each non-degenerate interior cone.
std::vector<std::pair<int, Int>> milnor_numbers(const PResolutionRecord& p);

/**
 * The M-resolution: each tau^i subdivided into (a_i - k_i) cones of equal
 * roof length q_i. All cones are smooth or T with Milnor number 0; the
 * canonical divisor is relatively nef instead of ample.
 */
Fan m_resolution(const PResolutionRecord& p);

// One record per admissible chain, in lexicographic chain order.
std::vector<PResolutionRecord> enumerate_presolutions(const CyclicQuotient& cq);

}  // namespace cqs
