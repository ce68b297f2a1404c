#include <cqs/oracles.hpp>
#include <cqs/report.hpp>
#include <cqs/selftest.hpp>
#include <cqs/svg.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitInternal = 3;
constexpr int kExitUsage = 4;

cqs::CyclicQuotient make_cq(long long n, long long q) {
  return cqs::CyclicQuotient{cqs::Int(n), cqs::Int(q)};
}

cqs::Chain parse_chain(const std::string& s) {
  cqs::Chain k;
  std::istringstream is(s);
  std::string tok;
  while (std::getline(is, tok, ',')) {
    if (tok.empty()) throw std::invalid_argument("empty entry in chain '" + s + "'");
    k.emplace_back(tok);
  }
  if (k.empty()) throw std::invalid_argument("empty chain");
  return k;
}

// Forced brute-force cross-check of every fast path used for one Y(n,q).
void verify_against_oracles(const cqs::CyclicQuotient& cq) {
  using cqs::internal_error;
  if (cqs::hilbert_basis(cqs::cone_of(cq)) !=
      cqs::oracles::brute_hilbert_basis(cqs::cone_of(cq)))
    throw internal_error("Hilbert basis disagrees with the brute-force oracle");
  if (cqs::hilbert_basis(cqs::dual_cone(cqs::cone_of(cq))) !=
      cqs::oracles::brute_hilbert_basis(cqs::dual_cone(cqs::cone_of(cq))))
    throw internal_error("dual Hilbert basis disagrees with the brute-force oracle");
  if (!(cqs::maximal_resolution(cq) == cqs::maximal_resolution_iterative(cq)))
    throw internal_error("direct and iterative maximal resolutions disagree");
  cqs::CqsInvariants inv = cqs::invariants(cq);
  if (inv.e - 2 <= 8) {
    int cap = 0;
    for (const cqs::Int& a : inv.a_chain) cap = std::max(cap, static_cast<int>(a));
    std::vector<cqs::Chain> expect;
    for (const cqs::Chain& k : cqs::oracles::exhaustive_zero_chains(inv.e - 2, cap)) {
      bool ok = true;
      for (std::size_t i = 0; i < k.size(); ++i)
        if (k[i] > inv.a_chain[i]) ok = false;
      if (ok) expect.push_back(k);
    }
    if (cqs::admissible_chains(cq) != expect)
      throw internal_error("admissible chains disagree with the exhaustive search");
  }
  for (const cqs::PResolutionRecord& p : cqs::enumerate_presolutions(cq))
    if (!cqs::verify_presolution(p).pass)
      throw internal_error("a P-resolution failed re-verification");
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream os(out_path, std::ios::binary);
  if (!os) throw std::invalid_argument("cannot open output file '" + out_path + "'");
  os << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact invariants, resolutions and P-resolutions of cyclic quotient "
               "singularities Y(n,q)"};
  app.require_subcommand(1);

  long long n = 0, q = 0;
  std::string out_path;
  bool as_json = false, count_only = false, do_verify = false;
  std::string what = "minimal", chain_arg;

  auto add_nq = [&](CLI::App* sub) {
    sub->add_option("n", n, "order of the cyclic group")->required();
    sub->add_option("q", q, "weight, coprime to n, 0 < q < n")->required();
  };

  CLI::App* analyze = app.add_subcommand("analyze", "full report for Y(n,q)");
  add_nq(analyze);
  analyze->add_flag("--json", as_json, "emit the JSON report instead of text");
  analyze->add_flag("--verify", do_verify, "cross-check against the brute-force oracles");
  analyze->add_option("--out", out_path, "write to a file instead of stdout");

  CLI::App* chains = app.add_subcommand("chains", "admissible zero chains of Y(n,q)");
  add_nq(chains);
  chains->add_flag("--count", count_only, "print only the number of chains");
  chains->add_flag("--verify", do_verify, "re-verify the P-resolution of every chain");

  CLI::App* svg = app.add_subcommand("svg", "SVG picture of a resolution fan");
  add_nq(svg);
  svg->add_option("--what", what,
                  "minimal | maximal | presolution | mresolution; the chain may be "
                  "appended after a colon, e.g. presolution:1,3,1,2");
  svg->add_option("--chain", chain_arg, "comma-separated chain, e.g. 1,2,2,1");
  svg->add_flag("--verify", do_verify, "cross-check against the brute-force oracles");
  svg->add_option("--out", out_path, "write to a file instead of stdout");

  long long max_n = 25;
  CLI::App* selftest = app.add_subcommand("selftest", "sweep all Y(n,q) up to a bound");
  selftest->add_option("--max-n", max_n, "largest n to sweep (default 25)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int r = app.exit(e);
    return r == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*analyze) {
      cqs::CyclicQuotient cq = make_cq(n, q);
      if (do_verify) verify_against_oracles(cq);
      cqs::Json rep = cqs::build_report(cq);
      emit(as_json ? rep.dump(2) + "\n" : cqs::render_report_text(rep), out_path);
    } else if (*chains) {
      cqs::CyclicQuotient cq = make_cq(n, q);
      if (do_verify) verify_against_oracles(cq);
      auto ks = cqs::admissible_chains(cq);
      if (count_only) {
        std::cout << ks.size() << "\n";
      } else {
        bool all_ok = true;
        for (const cqs::Chain& k : ks) {
          std::string line;
          for (const cqs::Int& e : k) line += (line.empty() ? "" : " ") + e.str();
          if (do_verify) {
            bool ok = cqs::verify_presolution(cqs::build_presolution(cq, k)).pass;
            all_ok = all_ok && ok;
            line += ok ? "  verified" : "  FAILED";
          }
          std::cout << line << "\n";
        }
        if (do_verify && !all_ok) return kExitInternal;
      }
    } else if (*svg) {
      std::string kind = what;
      if (auto colon = kind.find(':'); colon != std::string::npos) {
        if (!chain_arg.empty())
          throw std::invalid_argument("give the chain either after ':' or via --chain");
        chain_arg = kind.substr(colon + 1);
        kind = kind.substr(0, colon);
      }
      cqs::SvgWhat w;
      if (kind == "minimal")
        w = cqs::SvgWhat::minimal;
      else if (kind == "maximal")
        w = cqs::SvgWhat::maximal;
      else if (kind == "presolution")
        w = cqs::SvgWhat::presolution;
      else if (kind == "mresolution")
        w = cqs::SvgWhat::mresolution;
      else
        throw std::invalid_argument("unknown picture kind '" + kind + "'");
      std::optional<cqs::Chain> k;
      if (!chain_arg.empty()) k = parse_chain(chain_arg);
      cqs::CyclicQuotient cq = make_cq(n, q);
      if (do_verify) verify_against_oracles(cq);
      emit(cqs::render_svg(cq, w, k), out_path);
    } else if (*selftest) {
      if (!cqs::run_selftest(static_cast<int>(max_n), std::cout)) return kExitInternal;
    }
  } catch (const cqs::internal_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitOk;
}
