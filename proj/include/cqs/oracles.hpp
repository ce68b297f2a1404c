#pragma once

#include <cqs/invariants.hpp>

#include <vector>

namespace cqs::oracles {

// Brute-force cross-checks. None of these share code with the production
// paths they validate; they are deliberately slow and direct. Used by the
// test suites and by the CLI --verify flag.

/**
 * Hilbert basis by exhaustive enumeration: all lattice points of the
 * triangle conv(0, g0, g1) lying in the cone, minus those expressible as a
 * sum of two nonzero semigroup elements. Ordered from g0 toward g1.
 */
std::vector<NVec> brute_hilbert_basis(const Cone& c);
std::vector<MVec> brute_hilbert_basis(const DualCone& c);

/**
 * All zero chains of length m found by exhaustive search over tuples with
 * entries up to max_entry, testing "value 0 with positive proper tails"
 * by direct fraction arithmetic (no q-recursion). Sorted
 * lexicographically. Entries of zero chains of length m never exceed m+1.
 */
std::vector<Chain> exhaustive_zero_chains(int m, int max_entry);

/**
 * Membership of Y(n,q) in the Kollar/Shepherd-Barron family of
 * T-singularities: exists d,m,a >= 1 with gcd(a,m) = 1, n = d m^2 and
 * q == d m a - 1 (mod n), up to the q <-> q^{-1} identification.
 * Smooth does not arise here (n >= 2 by construction).
 */
bool in_ks_family(const CyclicQuotient& cq);

}  // namespace cqs::oracles
