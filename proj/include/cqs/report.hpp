#pragma once

#include <cqs/presolution.hpp>

#include <nlohmann/json.hpp>

namespace cqs {

using Json = nlohmann::ordered_json;

/**
 * Full JSON report for Y(n,q): invariants, minimal and maximal resolutions
 * with discrepancy data, every P-resolution with verification status, and
 * the derived M-resolutions. Deterministic: fixed key order, lexicographic
 * chain order, all integers as decimal strings, fractions as "p/q".
 * The schema ships in docs/report_schema.json.
 */
Json build_report(const CyclicQuotient& cq);

std::string render_report_text(const Json& report);

// Fans reconstructed from a report; parsing then rebuilding must
// reproduce the original fans exactly.
struct ReportFans {
  Fan minimal;
  Fan maximal;
  std::vector<Fan> presolutions;
  std::vector<Fan> m_resolutions;
};

ReportFans fans_from_report(const Json& report);

}  // namespace cqs
