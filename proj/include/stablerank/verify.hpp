#pragma once

// Executable checks of the rank identities and inequalities on fixed anchors
// and seeded random instances. Failures are reported, never thrown, and each
// report carries its instance in the input-file grammar so it can be replayed
// through the CLI.
//
// Random instances are drawn uniformly over the bounded grid: every size
// parameter in [1, max], every entry uniform in its range, with rejection of
// degenerate draws (a zero generator, an exponent vector of the wrong degree)
// and deduplication. The generator is std::mt19937_64 reduced with `%`, so a
// seed and config reproduce identical instances on every platform.

#include "stablerank/rational.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace stablerank {

struct RandomInstanceConfig {
  std::uint64_t seed = 42;
  int cases = 200;
  int max_n = 3;
  int max_d = 4;
  int max_support = 5;
  int max_exponent = 6;
  int max_power = 3;

  /// Throws InputError if any bound is < 1.
  void validate() const;
};

/// Line between the files of a multi-file instance (a comment in the grammar).
inline constexpr const char* kInstanceSeparator = "# ----\n";

struct CheckReport {
  std::string check_name;
  int case_index = -1; // -1 for fixed anchors
  std::string instance;
  bool passed = false;
  std::string relation; // "=", "<=", "<", "iff"
  std::string lhs;
  std::string rhs;
  std::string witness;
  std::string note;
};

std::vector<CheckReport> check_symm_equals_multi(const RandomInstanceConfig& cfg);
std::vector<CheckReport> check_semistable_iff_rank(const RandomInstanceConfig& cfg);
std::vector<CheckReport> check_monomial_lct(const RandomInstanceConfig& cfg);
std::vector<CheckReport> check_ideal_props(const RandomInstanceConfig& cfg);
std::vector<CheckReport> check_lct_leq_rank_anchor();

struct SuiteTally {
  std::string check_name;
  int anchors = 0;
  int anchors_passed = 0;
  int cases = 0;        // random cases
  int cases_passed = 0; // cases whose every relation held
};

/// Groups reports by check and counts anchors and random cases separately.
std::vector<SuiteTally> tally(const std::vector<CheckReport>& reports);

/// Suite names accepted by run_suite: symm-multi, semistable, monomial-lct,
/// ideal-props, lct-anchor, all.
const std::vector<std::string>& suite_names();

/// Throws InputError for an unknown suite name.
std::vector<CheckReport> run_suite(const std::string& name, const RandomInstanceConfig& cfg);

} // namespace stablerank
