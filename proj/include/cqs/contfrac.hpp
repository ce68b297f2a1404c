#pragma once

#include <cqs/rational.hpp>

#include <array>
#include <optional>
#include <vector>

namespace cqs {

// Entries of a negative continued fraction, and zero chains (k_2,...,k_{e-1}).
using Chain = std::vector<Int>;

// Companion values q_1,...,q_e of a zero chain; length = chain length + 2.
using QSequence = std::vector<Int>;

// Result of evaluating a continued fraction: a rational, or "undefined"
// when some intermediate value hits zero before the last division.
// Enumeration has to probe many ill-defined chains, so this is a value,
// not an exception.
using CFValue = std::optional<Rat>;

/**
 * [c_1,...,c_r] := c_1 - 1/[c_2,...,c_r], evaluated right to left.
 * Returns nullopt iff a division by zero occurs.
 */
CFValue eval_cf(const std::vector<Int>& c);

/**
 * The unique expansion of x > 1 as [c_1,...,c_r] with all c_i >= 2,
 * by repeated ceiling-and-reciprocal.
 */
std::vector<Int> expand_hj(const Rat& x);

/**
 * True iff k lies in K_m: its continued fraction is defined, evaluates
 * to 0, and every proper tail evaluates to a positive rational
 * (equivalently, the q-sequence stays >= 1 strictly between its zero
 * endpoints). The tail condition is what matches the chains to polygon
 * triangulations; dropping it admits stray solutions like [2,1,1,1,1,2].
 */
bool is_zero_chain(const Chain& k);

/**
 * The q-sequence of a zero chain: q_1 = 0, q_2 = 1, q_{e-1} = 1, q_e = 0
 * and q_{i-1} + q_{i+1} = k_i q_i. Computed by the right-to-left recursion
 * and cross-checked against the left-to-right one. Throws
 * std::invalid_argument when k does not represent zero.
 */
QSequence q_sequence(const Chain& k);

/**
 * A full triangulation of a convex polygon. Vertices 0,...,sides-2 are
 * labeled P_2,...,P_{e-1} in order; the last vertex is P_*.
 */
struct Triangulation {
  int sides = 0;
  std::vector<std::array<int, 3>> triangles;  // vertex index triples

  std::vector<std::pair<int, int>> diagonals() const;
};

std::vector<Triangulation> enumerate_triangulations(int sides);

// k_i = number of triangles incident to vertex P_i (the P_* count is
// dropped). Always yields a zero chain.
Chain chain_from_triangulation(const Triangulation& t);

/**
 * K_m: all zero chains of length m, lexicographically sorted. Produced via
 * polygon triangulations; |K_m| = Catalan(m-1). K_1 = {(0)}.
 */
std::vector<Chain> enumerate_zero_chains(int m);

/**
 * Riemenschneider duality: if eval_cf(a) = n/(n-q) in lowest terms, the
 * result expands n/q. An involution (up to the a/b role swap).
 * All entries must be >= 2.
 */
std::vector<Int> dual_chain(const std::vector<Int>& a);

}  // namespace cqs
