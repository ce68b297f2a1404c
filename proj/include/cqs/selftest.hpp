#pragma once

#include <cqs/rational.hpp>

#include <iosfwd>

namespace cqs {

/**
 * Exhaustive desk-scale sweep over all Y(n,q) with n <= max_n: every
 * P-resolution is rebuilt and re-verified from scratch, the construction
 * identities are checked, the fast paths are compared against the
 * brute-force oracles, and the M-resolutions are validated. Prints one
 * line per section; returns true iff everything passed.
 */
bool run_selftest(int max_n, std::ostream& out);

}  // namespace cqs
