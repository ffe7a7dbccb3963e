#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace fixgraph::verify {

inline constexpr int kDefaultCap = 8;

struct Options {
  int n_max = kDefaultCap;
  std::optional<int> k;              // restrict every suite to this k
  std::vector<std::string> suites;   // empty selects all suites
};

/// The four suite names in execution order: oracle-equivalence, moments,
/// identities, bounds.
const std::vector<std::string>& suite_names();

/// Runs the selected suites, printing one [PASS]/[FAIL] line per suite with
/// a check count, plus a failure description on the first mismatch. Returns
/// true iff every suite passed. Throws std::invalid_argument on an unknown
/// suite name.
bool run(const Options& options, std::ostream& out);

}  // namespace fixgraph::verify
