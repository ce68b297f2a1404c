#include <cqs/selftest.hpp>

#include <cqs/oracles.hpp>
#include <cqs/presolution.hpp>
#include <cqs/resolution.hpp>

#include <algorithm>
#include <numeric>
#include <ostream>
#include <string>
#include <vector>

namespace cqs {

namespace {

// All the per-singularity checks for one Y(n,q); appends human-readable
// problems to `bad`.
void check_one(const CyclicQuotient& cq, std::vector<std::string>& bad) {
  auto note = [&](const std::string& what) {
    bad.push_back("Y(" + cq.n.str() + "," + cq.q.str() + "): " + what);
  };

  CqsInvariants inv = invariants(cq);

  // Hilbert bases against the brute-force oracle, both sides of the duality
  if (hilbert_basis(cone_of(cq)) != oracles::brute_hilbert_basis(cone_of(cq)))
    note("Hilbert basis of sigma differs from the oracle");
  if (hilbert_basis(dual_cone(cone_of(cq))) !=
      oracles::brute_hilbert_basis(dual_cone(cone_of(cq))))
    note("Hilbert basis of the dual cone differs from the oracle");

  // Riemenschneider duality: a-chain of n/(n-q) vs b-chain of n/q
  if (dual_chain(inv.b_chain) != inv.a_chain) note("chain duality broken");

  // minimal resolution: smooth, all alphas in (0,1]
  Fan mini = minimal_resolution(cq);
  std::vector<Int> b = self_intersections(mini);
  if (Chain(b.begin(), b.end()) != inv.b_chain)
    note("minimal resolution self-intersections are not the b-chain");
  for (const Rat& a : discrepancies(mini).alphas)
    if (a <= 0 || a > 1) note("minimal resolution has alpha outside (0,1]");

  // maximal resolution: both constructions agree, interior alphas in (0,1)
  Fan maxi = maximal_resolution(cq);
  if (!(maxi == maximal_resolution_iterative(cq)))
    note("direct and iterative maximal resolutions differ");
  DiscrepancyData dd = discrepancies(maxi);
  for (std::size_t j = 1; j + 1 < maxi.rays.size(); ++j)
    if (dd.alphas[j] <= 0 || dd.alphas[j] >= 1)
      note("maximal resolution has interior alpha outside (0,1)");

  // P-resolutions: verified, cones in the one-parameter smoothing family,
  // and the trivial chain reproduces the RDP resolution geometry
  std::vector<PResolutionRecord> pres = enumerate_presolutions(cq);
  if (pres.empty()) note("no P-resolution found");
  for (const PResolutionRecord& p : pres) {
    VerificationReport rep = verify_presolution(p);
    if (!rep.pass) {
      for (const std::string& fmsg : rep.failures) note("chain verification: " + fmsg);
      continue;
    }
    for (const ConeRecord& cr : p.cones) {
      if (cr.degenerate) continue;
      Cone c{cr.left, cr.right};
      auto nf = normal_form(c);
      if (nf && !oracles::in_ks_family(*nf))
        note("cone " + std::to_string(cr.index) + " is T but not in the KS family");
    }
    // M-resolution: only T0 or smooth cones, inserted rays sit flat on roofs
    Fan m = m_resolution(p);
    for (std::size_t j = 0; j + 1 < m.rays.size(); ++j) {
      TType t = t_classify(Cone{m.rays[j], m.rays[j + 1]});
      bool t0 = t.kind == TType::Kind::smooth ||
                (t.kind == TType::Kind::t && t.milnor == 0);
      if (!t0) note("M-resolution cone is neither smooth nor T0");
    }
    for (std::size_t j = 1; j + 1 < m.rays.size(); ++j) {
      bool on_fan = std::find(p.fan.rays.begin(), p.fan.rays.end(), m.rays[j]) !=
                    p.fan.rays.end();
      RoofSign s = roof_sign(m, j);
      if (on_fan ? s != RoofSign::positive : s != RoofSign::zero)
        note("M-resolution roof sign is wrong at " + m.rays[j].str());
    }
  }

  // the RDP chain (all interior roof heights 1) recovers the minimal
  // resolution as its M-resolution
  Chain rdp;
  if (inv.e == 3) {
    rdp = {Int(0)};
  } else {
    rdp.assign(static_cast<std::size_t>(inv.e - 2), Int(2));
    rdp.front() = 1;
    rdp.back() = 1;
  }
  if (!(m_resolution(build_presolution(cq, rdp)) == mini))
    note("RDP chain M-resolution differs from the minimal resolution");

  // admissible chains against the exhaustive zero-chain filter
  if (inv.e - 2 <= 8) {
    int m = inv.e - 2;
    int cap = 0;
    for (const Int& a : inv.a_chain) cap = std::max(cap, static_cast<int>(a));
    std::vector<Chain> expect;
    for (const Chain& k : oracles::exhaustive_zero_chains(m, cap)) {
      bool ok = true;
      for (std::size_t i = 0; i < k.size(); ++i)
        if (k[i] > inv.a_chain[i]) ok = false;
      if (ok) expect.push_back(k);
    }
    if (admissible_chains(cq) != expect)
      note("admissible chains differ from the exhaustive enumeration");
  }
}

}  // namespace

bool run_selftest(int max_n, std::ostream& out) {
  std::vector<std::string> bad;
  long long count = 0;
  for (int n = 2; n <= max_n; ++n) {
    for (int q = 1; q < n; ++q) {
      if (std::gcd(n, q) != 1) continue;
      check_one(CyclicQuotient{n, q}, bad);
      ++count;
    }
  }
  out << "checked " << count << " singularities with n <= " << max_n << "\n";
  if (bad.empty()) {
    out << "all checks passed\n";
    return true;
  }
  for (const std::string& msg : bad) out << "FAIL " << msg << "\n";
  out << bad.size() << " check(s) failed\n";
  return false;
}

}  // namespace cqs
