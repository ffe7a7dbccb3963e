// End-to-end acceptance run: fourteen exact checks covering the eigenvalue
// machinery, its two independent oracles, the closed forms, and the CLI.
// Each criterion prints one line; any failure aborts with exit code 1.

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "fixgraph/excited.hpp"
#include "fixgraph/oracle.hpp"
#include "fixgraph/partition.hpp"
#include "fixgraph/spectra.hpp"
#include "fixgraph/tableaux.hpp"

using namespace fixgraph;

namespace {

// Always-on requirement: never compiled out in Release.
#define REQUIRE(cond, context)                                                     \
  do {                                                                             \
    if (!(cond)) {                                                                 \
      std::cerr << "[FAIL] " << __FILE__ << ":" << __LINE__ << "  " << (context)   \
                << "\n";                                                           \
      std::exit(1);                                                                \
    }                                                                              \
  } while (0)

void pass(int number, const std::string& summary) {
  std::cout << "[PASS] " << number << ". " << summary << "\n";
}

std::string at(int n, int k) {
  return "n=" + std::to_string(n) + " k=" + std::to_string(k);
}

std::string at(int n, int k, const Partition& lambda) {
  return at(n, k) + " lambda=" + lambda.to_string();
}

// 1. The excited-diagram formula and the character sums give the same
//    integer for every graph and every irreducible, at desk scale.
void criterion_1() {
  long comparisons = 0;
  for (int n = 1; n <= 7; ++n)
    for (int k = 0; k <= n - 1; ++k) {
      const GraphParams p(n, k);
      for (const Partition& lambda : partitions_of(n)) {
        REQUIRE(eigenvalue(lambda, p) == eigenvalue_via_characters(lambda, p), at(n, k, lambda));
        ++comparisons;
      }
    }
  pass(1, "excited-diagram eigenvalues equal character sums for all n <= 7 (" +
              std::to_string(comparisons) + " comparisons)");
}

// 2. The canonical worked example: (2,2,2,1)/(1,1) has exactly three
//    excited diagrams.
void criterion_2() {
  const ExcitedDiagramSet set = enumerate_excited(Partition({2, 2, 2, 1}), Partition({1, 1}));
  const std::set<Diagram> found(set.diagrams.begin(), set.diagrams.end());
  const std::set<Diagram> expected{Diagram({{1, 1}, {2, 1}}), Diagram({{1, 1}, {3, 2}}),
                                   Diagram({{2, 2}, {3, 2}})};
  REQUIRE(found == expected, "excited diagrams of (2,2,2,1)/(1,1)");
  REQUIRE(set.diagrams.size() == 3, "duplicate diagrams emitted");
  pass(2, "(2,2,2,1)/(1,1) yields exactly its three excited diagrams");
}

// 3. Skew counts from the excited-diagram formula match brute-force
//    enumeration for every subshape, up to 8 cells.
void criterion_3() {
  long shapes = 0;
  for (int n = 0; n <= 8; ++n)
    for (const Partition& lambda : partitions_of(n))
      for (int m = 0; m <= n; ++m)
        for (const Partition& mu : subpartitions_of_size(lambda, m)) {
          REQUIRE(syt_count(lambda, mu) == BigInt(enumerate_syt(lambda, mu).size()),
                  "skew count of " + lambda.to_string() + "/" + mu.to_string());
          ++shapes;
        }
  pass(3, "skew tableau counts match enumeration for all shapes with at most 8 cells (" +
              std::to_string(shapes) + " skew shapes)");
}

// 4. Straight counts from the hook length formula match enumeration.
void criterion_4() {
  for (int n = 0; n <= 7; ++n)
    for (const Partition& lambda : partitions_of(n))
      REQUIRE(syt_count(lambda) == BigInt(enumerate_syt(lambda).size()),
              "straight count of " + lambda.to_string());
  pass(4, "hook-length-formula counts match enumeration for all shapes with at most 7 cells");
}

// 5. The transposition-network closed form agrees with the general
//    formula at k = n-2, and its multiplicity lookup aggregates the
//    spectra correctly.
void criterion_5() {
  for (int n = 2; n <= 8; ++n)
    for (const Partition& lambda : partitions_of(n))
      REQUIRE(transposition_eigenvalue(lambda) == eigenvalue(lambda, GraphParams(n, n - 2)),
              "transposition closed form at " + lambda.to_string());
  for (int n = 2; n <= 6; ++n) {
    std::map<BigInt, BigInt> aggregated;
    BigInt largest = 0;
    for (const SpectrumEntry& entry : spectrum(GraphParams(n, n - 2))) {
      aggregated[entry.eigenvalue] += entry.multiplicity;
      if (entry.eigenvalue > largest) largest = entry.eigenvalue;
    }
    for (const auto& [value, total] : aggregated)
      REQUIRE(transposition_multiplicity(value, n) == total,
              "multiplicity aggregation at n=" + std::to_string(n));
    REQUIRE(transposition_multiplicity(largest + 1, n) == 0, "phantom eigenvalue");
  }
  pass(5, "transposition-network closed form and multiplicity aggregation agree (n <= 8)");
}

// 6. Every eigenvalue lies in [-degree/(n-k-1), degree].
void criterion_6() {
  for (int n = 2; n <= 7; ++n)
    for (int k = 0; k <= n - 2; ++k)
      REQUIRE(spectrum_within_interval(GraphParams(n, k)), at(n, k));
  pass(6, "all eigenvalues lie within [-degree/(n-k-1), degree] for n <= 7");
}

// 7. The lower end of that interval is attained exactly at k = n-2 and
//    k = n-4.
void criterion_7() {
  for (int n = 4; n <= 8; ++n)
    REQUIRE(least_eigenvalue_matches_bound(GraphParams(n, n - 2)), at(n, n - 2));
  for (int n = 5; n <= 8; ++n)
    REQUIRE(least_eigenvalue_matches_bound(GraphParams(n, n - 4)), at(n, n - 4));
  pass(7, "least eigenvalue attains -degree/(n-k-1) at k = n-2 and k = n-4 (n <= 8)");
}

// 8. The hook-shape closed form reproduces the general formula for every
//    hook, and the one-column line has magnitude (n-k-1)*C(n,k) with a
//    sign governed by the parity of n-k.
void criterion_8() {
  for (int n = 2; n <= 9; ++n)
    for (int k = 0; k <= n - 1; ++k)
      for (int m = 1; m < n; ++m) {
        bool agreed = true;
        try {
          hook_shape_eigenvalue(m, GraphParams(n, k));  // asserts agreement internally
        } catch (const std::logic_error&) {
          agreed = false;
        }
        REQUIRE(agreed, at(n, k) + " m=" + std::to_string(m));
      }
  for (int n = 1; n <= 9; ++n)
    for (int k = 0; k <= n - 1; ++k) {
      const BigInt value = eigenvalue(Partition(std::vector<int>(n, 1)), GraphParams(n, k));
      const BigInt magnitude = (n - k - 1) * binomial(n, k);
      REQUIRE(abs(value) == magnitude, "one-column magnitude at " + at(n, k));
      REQUIRE(value == ((n - k) % 2 == 0 ? -magnitude : magnitude),
              "one-column sign at " + at(n, k));
    }
  pass(8, "hook-shape closed form verified for all hooks with n <= 9, "
          "including the one-column sign behavior");
}

// 9. The excited hook sums reproduce the binomial coefficients.
void criterion_9() {
  for (int n = 0; n <= 8; ++n)
    for (const Partition& lambda : partitions_of(n))
      for (int k = 0; k <= n; ++k)
        REQUIRE(binomial_identity_holds(lambda, k), at(n, k, lambda));
  pass(9, "excited hook sums over subshapes reproduce C(n,k) for all n <= 8");
}

// 10. The all-integer route to the derangement-graph eigenvalues agrees
//     with the rational skew-count route.
void criterion_10() {
  for (int n = 0; n <= 8; ++n)
    for (const Partition& lambda : partitions_of(n))
      REQUIRE(derangement_eigenvalue(lambda) == derangement_eigenvalue_via_syt(lambda),
              "derangement eigenvalue routes at " + lambda.to_string());
  pass(10, "both derangement-eigenvalue routes agree for all n <= 8");
}

// 11. Degree recursions: corner removal and skew decomposition.
void criterion_11() {
  for (int n = 1; n <= 10; ++n)
    for (const Partition& lambda : partitions_of(n)) {
      BigInt branch = 0;
      const std::span<const int> parts = lambda.parts();
      for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i + 1 < parts.size() && parts[i] == parts[i + 1]) continue;  // not a corner
        std::vector<int> shrunk(parts.begin(), parts.end());
        if (--shrunk[i] == 0) shrunk.erase(shrunk.begin() + i);
        branch += syt_count(Partition(std::move(shrunk)));
      }
      REQUIRE(branch == syt_count(lambda), "corner recursion at " + lambda.to_string());
    }
  for (int n = 0; n <= 9; ++n)
    for (const Partition& lambda : partitions_of(n))
      for (int m = 0; m <= n; ++m) {
        BigInt decomposition = 0;
        for (const Partition& mu : subpartitions_of_size(lambda, m))
          decomposition += syt_count(lambda, mu) * syt_count(mu);
        REQUIRE(decomposition == syt_count(lambda),
                "skew decomposition at " + lambda.to_string() + ", m=" + std::to_string(m));
      }
  pass(11, "corner-removal recursion (n <= 10) and skew decomposition (n <= 9) hold");
}

// 12. Spectral moments equal n! times closed-walk counts obtained by pure
//     group-algebra convolution, with no character theory involved.
void criterion_12() {
  long comparisons = 0;
  for (int n = 1; n <= 6; ++n)
    for (int k = 0; k <= n - 1; ++k) {
      const GraphParams p(n, k);
      const std::vector<SpectrumEntry> entries = spectrum(p);
      for (int power = 1; power <= 3; ++power) {
        BigInt moment = 0;
        for (const SpectrumEntry& entry : entries) {
          BigInt term = entry.multiplicity;
          for (int i = 0; i < power; ++i) term *= entry.eigenvalue;
          moment += term;
        }
        REQUIRE(moment == factorial(n) * closed_walk_count(p, power),
                at(n, k) + " power=" + std::to_string(power));
        ++comparisons;
      }
    }
  pass(12, "spectral moments match convolution walk counts for n <= 6, powers 1..3 (" +
               std::to_string(comparisons) + " comparisons)");
}

// 13. Global sanity: multiplicities fill the group, the trace vanishes,
//     and the empty connection set gives the zero spectrum.
void criterion_13() {
  for (int n = 1; n <= 8; ++n)
    for (int k = 0; k <= n - 1; ++k) {
      BigInt total = 0, trace = 0;
      const std::vector<SpectrumEntry> entries = spectrum(GraphParams(n, k));
      for (const SpectrumEntry& entry : entries) {
        total += entry.multiplicity;
        trace += entry.multiplicity * entry.eigenvalue;
        if (k == n - 1) REQUIRE(entry.eigenvalue == 0, "zero spectrum at " + at(n, k));
      }
      REQUIRE(total == factorial(n), "multiplicity sum at " + at(n, k));
      REQUIRE(trace == 0, "trace at " + at(n, k));
    }
  pass(13, "multiplicities sum to n!, traces vanish, and k = n-1 gives the zero spectrum");
}

std::string run_cli(const std::string& args) {
  const std::string command = std::string(FIXGRAPH_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr, "popen failed");
  std::string output;
  char buffer[4096];
  std::size_t got = 0;
  while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) output.append(buffer, got);
  const int status = pclose(pipe);
  REQUIRE(WIFEXITED(status) && WEXITSTATUS(status) == 0, "command failed: " + command);
  return output;
}

// 14. The command-line spectrum output is byte-identical across repeated
//     runs and across thread counts, in every format.
void criterion_14() {
  for (const std::string format : {"", " --json", " --csv"}) {
    const std::string base = run_cli("spectrum 6 2" + format);
    REQUIRE(!base.empty(), "empty spectrum output");
    REQUIRE(base == run_cli("spectrum 6 2" + format), "repeated run differs" + format);
    REQUIRE(base == run_cli("spectrum 6 2 --threads 1" + format), "one-thread run differs");
    REQUIRE(base == run_cli("spectrum 6 2 --threads 8" + format), "max-thread run differs");
  }
  pass(14, "CLI spectrum output is byte-identical across runs and thread counts");
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10();
  criterion_11();
  criterion_12();
  criterion_13();
  criterion_14();
  std::cout << "All 14 acceptance criteria passed.\n";
  return 0;
}
