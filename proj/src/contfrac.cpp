#include <cqs/contfrac.hpp>

#include <algorithm>
#include <map>
#include <set>

namespace cqs {

CFValue eval_cf(const std::vector<Int>& c) {
  if (c.empty()) throw std::invalid_argument("empty continued fraction");
  Rat acc(c.back());
  for (auto it = c.rbegin() + 1; it != c.rend(); ++it) {
    if (acc == 0) return std::nullopt;
    acc = Rat(*it) - 1 / acc;
  }
  return acc;
}

std::vector<Int> expand_hj(const Rat& x) {
  if (x <= 1) throw std::domain_error("HJ expansion requires value > 1");
  std::vector<Int> out;
  Rat cur = x;
  for (;;) {
    Int c = ceil_rat(cur);
    out.push_back(c);
    Rat rem = Rat(c) - cur;
    if (rem == 0) break;
    cur = 1 / rem;  // rem in (0,1), so cur > 1 and the next entry is >= 2
  }
  return out;
}

bool is_zero_chain(const Chain& k) {
  if (k.empty()) return false;
  if (k.size() == 1) return k[0] == 0;  // [k] = 0 forces k = 0
  // A plain "evaluates to 0" test is too weak: [1,0,0,1] and
  // [2,1,1,1,1,2] both evaluate to 0, yet neither corresponds to a
  // polygon triangulation -- their companion q-sequences leave the
  // positive range. Run the forward recursion q_1 = 0, q_2 = 1,
  // q_{i+1} = k_i q_i - q_{i-1} and demand q_i >= 1 strictly inside and
  // q_e = 0 at the end; the tail identity [k_i,..,k_{e-1}] = q_{i-1}/q_i
  // then forces the whole fraction to 0.
  Int q_prev = 0, q_cur = 1;
  for (std::size_t i = 0; i < k.size(); ++i) {
    Int q_next = k[i] * q_cur - q_prev;
    bool last = (i + 1 == k.size());
    if (last ? q_next != 0 : q_next < 1) return false;
    q_prev = std::move(q_cur);
    q_cur = std::move(q_next);
  }
  CFValue v = eval_cf(k);
  if (!v || *v != 0) throw internal_error("q-recursion and evaluation disagree on a chain");
  return true;
}

QSequence q_sequence(const Chain& k) {
  if (!is_zero_chain(k)) throw std::invalid_argument("chain does not represent zero");
  std::size_t e = k.size() + 2;
  QSequence q(e);
  // right-to-left: q_e = 0, q_{e-1} = 1, q_{i-1} = k_i q_i - q_{i+1}
  q[e - 1] = 0;
  q[e - 2] = 1;
  for (std::size_t i = e - 1; i >= 2; --i) q[i - 2] = k[i - 2] * q[i - 1] - q[i];
  if (q[0] != 0 || q[1] != 1)
    throw internal_error("q-sequence endpoints violated for a zero chain");
  // left-to-right recursion must yield the same values
  for (std::size_t i = 2; i <= e - 1; ++i)
    if (q[i - 2] + q[i] != k[i - 2] * q[i - 1])
      throw internal_error("q-sequence recursion mismatch");
  for (const Int& v : q)
    if (v < 0) throw internal_error("negative q-sequence value");
  return q;
}

std::vector<std::pair<int, int>> Triangulation::diagonals() const {
  std::set<std::pair<int, int>> edges;
  for (const auto& t : triangles) {
    auto add = [&](int a, int b) { edges.insert({std::min(a, b), std::max(a, b)}); };
    add(t[0], t[1]);
    add(t[1], t[2]);
    add(t[0], t[2]);
  }
  std::vector<std::pair<int, int>> out;
  for (const auto& [a, b] : edges) {
    bool boundary = (b - a == 1) || (a == 0 && b == sides - 1);
    if (!boundary) out.emplace_back(a, b);
  }
  return out;
}

namespace {

// Every triangulation of the polygon lo..hi contains exactly one triangle
// on the edge (lo,hi); enumerate its apex and recurse on both halves.
void enumerate_rec(int lo, int hi, std::vector<std::array<int, 3>> cur,
                   std::vector<std::vector<std::array<int, 3>>>& out) {
  if (hi - lo < 2) {
    out.push_back(std::move(cur));
    return;
  }
  for (int k = lo + 1; k < hi; ++k) {
    // triangle (lo, k, hi); then triangulate both sub-polygons
    std::vector<std::vector<std::array<int, 3>>> left;
    enumerate_rec(lo, k, {}, left);
    for (auto& l : left) {
      std::vector<std::vector<std::array<int, 3>>> right;
      enumerate_rec(k, hi, {}, right);
      for (auto& r : right) {
        auto combined = cur;
        combined.push_back({lo, k, hi});
        combined.insert(combined.end(), l.begin(), l.end());
        combined.insert(combined.end(), r.begin(), r.end());
        out.push_back(std::move(combined));
      }
    }
  }
}

}  // namespace

std::vector<Triangulation> enumerate_triangulations(int sides) {
  if (sides < 3) throw std::invalid_argument("polygon needs at least 3 vertices");
  std::vector<std::vector<std::array<int, 3>>> raw;
  enumerate_rec(0, sides - 1, {}, raw);
  std::vector<Triangulation> out;
  out.reserve(raw.size());
  for (auto& t : raw) out.push_back({sides, std::move(t)});
  return out;
}

Chain chain_from_triangulation(const Triangulation& t) {
  if (t.sides < 3 || static_cast<int>(t.triangles.size()) != t.sides - 2)
    throw std::invalid_argument("not a full triangulation");
  std::vector<Int> count(t.sides, 0);
  for (const auto& tri : t.triangles)
    for (int v : tri) count[v] += 1;
  // vertices 0..sides-2 are P_2..P_{e-1}; the count at P_* is discarded
  return Chain(count.begin(), count.end() - 1);
}

std::vector<Chain> enumerate_zero_chains(int m) {
  if (m < 1) throw std::invalid_argument("chain length must be >= 1");
  if (m == 1) return {Chain{Int(0)}};  // [k] = 0 forces k = 0
  std::set<Chain> found;
  for (const auto& t : enumerate_triangulations(m + 1)) {
    Chain k = chain_from_triangulation(t);
    if (!is_zero_chain(k)) throw internal_error("triangulation produced a non-zero chain");
    found.insert(std::move(k));
  }
  return {found.begin(), found.end()};
}

std::vector<Int> dual_chain(const std::vector<Int>& a) {
  for (const Int& e : a)
    if (e < 2) throw std::invalid_argument("dual_chain needs entries >= 2");
  Rat v = *eval_cf(a);  // always defined and > 1 for entries >= 2
  Int n = num(v);
  Int q = n - den(v);
  return expand_hj(Rat(n, q));
}

}  // namespace cqs
