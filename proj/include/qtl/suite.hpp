#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qtl/quantale.hpp"

namespace qtl {

struct SuiteOptions {
  int max_size = 4;
  std::uint64_t seed = 0;
  /// Worker threads; 0 picks the hardware concurrency.
  int jobs = 0;
  /// Corrupts one multiplication table after validation, to prove the suite
  /// notices. Test hook; never exposed as a stable interface.
  bool inject_mutant = false;
};

struct CheckOutcome {
  std::string name;
  /// Number of (instance, spectrum/hom, ...) cases the check examined.
  std::int64_t cases = 0;
  std::int64_t failures = 0;
  /// True for purely observational entries that never fail the run.
  bool informational = false;
  /// Failure details, bounded per check; informational entries use them for
  /// their observations.
  std::vector<std::string> details;
};

struct Counterexample {
  std::string property;
  std::string selector;
  std::string detail;
  nlohmann::ordered_json quantale;
};

struct SuiteReport {
  int max_size = 0;
  std::uint64_t seed = 0;
  int quantale_count = 0;
  int spectrum_count = 0;
  int hom_count = 0;
  std::vector<CheckOutcome> checks;
  std::optional<Counterexample> first_counterexample;
  bool passed = false;
};

/// Re-derives the enumerated corpus up to max_size and runs every structural
/// cross-check and every claimed topological law over it, including the
/// homomorphism battery between small corpus instances. Deterministic for a
/// fixed (max_size, seed) regardless of the worker count.
SuiteReport run_suite(const SuiteOptions& opts = {});

nlohmann::ordered_json suite_report_to_json(const SuiteReport& r);
std::string suite_report_to_text(const SuiteReport& r);

}  // namespace qtl
