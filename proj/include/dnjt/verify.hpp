/** @file verify.hpp
 *  Property suites over the whole pipeline. Each suite returns a report;
 *  the acceptance binary and the CLI verify command print them.
 */
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dnjt/regions.hpp"

namespace dnjt {

struct CheckReport {
  int id = 0;
  std::string name;
  long checks = 0;
  std::vector<std::string> failures;  // first few only
  long failure_count = 0;
  double seconds = 0;
  double limit = 0;      // seconds
  std::string note;

  bool passed() const { return failure_count == 0 && seconds < limit; }
};

CheckReport check_series_duality();
CheckReport check_path_series();
CheckReport check_det_identity();
CheckReport check_gv_cancellation();
CheckReport check_involutions();
CheckReport check_positive_sum();
/// Also hands back every HPair met along the way, for the graph suite.
CheckReport check_folding(std::vector<HPair>* pipeline = nullptr);
CheckReport check_tableaux();
CheckReport check_rule_equivalence();
/// Recomputes the folding pipeline when none is given.
CheckReport check_graph_lemmas(const std::vector<HPair>* pipeline = nullptr);
CheckReport check_unit_lemmas(std::uint64_t seed, int samples = 500);

/// Criteria 1..11 in order.
std::vector<CheckReport> run_acceptance(std::uint64_t seed);

std::string format_report(const CheckReport& r);

}  // namespace dnjt
