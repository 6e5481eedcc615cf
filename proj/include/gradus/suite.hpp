#pragma once

#include <string>
#include <vector>

#include "gradus/groebner.hpp"
#include "gradus/series.hpp"

namespace gradus {

/// Outcome of one encoded identity. All checks are exact; a failing check
/// carries a printable nonzero witness.
struct CheckResult {
  std::string id;
  bool pass = false;
  std::string detail;
};

struct SuiteOptions {
  /// Test hook: perturbs one encoded relation so exactly one check fails.
  bool perturb = false;
};

// Encoded presentations.
Ideal build_AU();              // A*(U(2,3,2)), ring [x:1, y:1, z:1, b:2]
Ideal build_cohom();           // ring [a1:1, p1:1, p2:3, p3:2, a2:1, c2:2]
Ideal build_S0();              // ring [P1:1, P2:1, M:1], seven relations
Ideal build_VB(long d);        // six-generator ring, ten substituted relations

// Reference series.
RationalSeries series_s();     // (1+2T+4T^2+4T^3+2T^4+T^5)/(1-T)
RationalSeries series_coh();   // (1+T+2T^2+...+T^8)/((1-T^2)(1-T)^2)
RationalSeries series_strata();  // (1+3T+6T^2+3T^3+T^4)/(1-T)^2

// Check groups.
std::vector<CheckResult> hilbert_checks();
std::vector<CheckResult> exterior_bun_model(bool perturb = false);
std::vector<CheckResult> exterior_jxj_model();
std::vector<CheckResult> excision_and_hecke_checks();
std::vector<CheckResult> kappa_checks();

struct SuiteReport {
  std::vector<CheckResult> results;  // sorted by check id
  size_t failed = 0;
};

/// Runs every check; deterministic output order (sorted by id).
SuiteReport run_all(const SuiteOptions& options = {});

/// One line per check: "<check-id> <PASS|FAIL> [witness]", then
/// "total=<n> failed=<k>".
std::string render_report(const SuiteReport& report);

}  // namespace gradus
