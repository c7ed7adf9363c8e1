#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace zfp {

enum class Suite { extremal, multiplicativity, hall, forts, ip, recognizability, closed_forms, conjectures, all };

std::optional<Suite> parse_suite(std::string_view name);
const char* suite_name(Suite suite) noexcept;

struct SweepConfig {
  /// Exhaustive labelled sweeps cover 1..min(max_n, 7); closed-form checks cover up to max_n.
  int max_n = 7;
  std::uint64_t seed = 1;
  unsigned jobs = 1;
  /// Random graphs for the conjecture probes.
  int random_graphs = 500;
  int random_min_n = 8;
  int random_max_n = 14;
  /// Random graphs for the fort-cover / zero forcing number comparison.
  int ip_random_graphs = 100;
  int ip_random_max_n = 14;
};

/// One failing (or, for conjectures, counterexample) graph.
struct Finding {
  std::string check;
  int n = 0;
  std::string graph6;
  std::string detail;
  bool conjecture = false;
};

struct CheckTally {
  std::string check;
  std::uint64_t checked = 0;
  std::uint64_t failed = 0;
  bool conjecture = false;
};

struct SweepReport {
  std::vector<CheckTally> tallies;
  /// Sorted by (check, n, graph6); at most a bounded number per check.
  std::vector<Finding> findings;
  std::uint64_t graphs = 0;

  /// Any non-conjecture check failed.
  bool theorem_failure() const;
  const CheckTally* tally(std::string_view check) const;
};

/// Runs every check that belongs to `suite`. Deterministic for a fixed config,
/// independent of `jobs`.
SweepReport run_suite(Suite suite, const SweepConfig& config);

/// JSON lines: one record per finding, then one summary record.
void write_report(std::ostream& out, Suite suite, const SweepReport& report);

}  // namespace zfp
