#include "verify.hpp"

#include <algorithm>
#include <functional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "fixgraph/excited.hpp"
#include "fixgraph/oracle.hpp"
#include "fixgraph/partition.hpp"
#include "fixgraph/spectra.hpp"
#include "fixgraph/tableaux.hpp"

namespace fixgraph::verify {

namespace {

struct Recorder {
  long checks = 0;
  std::string failure;  // first mismatch only; empty means all good

  template <typename Describe>
  void expect(bool condition, Describe&& describe) {
    ++checks;
    if (!condition && failure.empty()) failure = describe();
  }
};

bool selected_k(const Options& options, int k) {
  return !options.k || *options.k == k;
}

BigInt int_pow(const BigInt& base, int exponent) {
  BigInt result = 1;
  for (int i = 0; i < exponent; ++i) result *= base;
  return result;
}

std::vector<Partition> corner_removals(const Partition& lambda) {
  std::vector<Partition> removals;
  const std::span<const int> parts = lambda.parts();
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const bool corner = i + 1 == parts.size() || parts[i] > parts[i + 1];
    if (!corner) continue;
    std::vector<int> shrunk(parts.begin(), parts.end());
    if (--shrunk[i] == 0) shrunk.erase(shrunk.begin() + i);
    removals.emplace_back(std::move(shrunk));
  }
  return removals;
}

Recorder oracle_suite(const Options& options) {
  Recorder r;
  for (int n = 1; n <= options.n_max; ++n) {
    const std::vector<Partition> lambdas = partitions_of(n);
    for (int k = 0; k <= n - 1; ++k) {
      if (!selected_k(options, k)) continue;
      const GraphParams p(n, k);
      for (const Partition& lambda : lambdas)
        r.expect(eigenvalue(lambda, p) == eigenvalue_via_characters(lambda, p), [&] {
          std::ostringstream msg;
          msg << "n=" << n << " k=" << k << " lambda=" << lambda.to_string()
              << ": excited-diagram eigenvalue differs from the character sum";
          return msg.str();
        });
    }
  }
  return r;
}

Recorder moments_suite(const Options& options) {
  Recorder r;
  const int n_top = std::min(options.n_max, kWalkGroupCap);
  for (int n = 1; n <= n_top; ++n) {
    for (int k = 0; k <= n - 1; ++k) {
      if (!selected_k(options, k)) continue;
      const GraphParams p(n, k);
      const std::vector<SpectrumEntry> entries = spectrum(p);
      for (int power = 1; power <= 3; ++power) {
        BigInt moment = 0;
        for (const SpectrumEntry& entry : entries)
          moment += entry.multiplicity * int_pow(entry.eigenvalue, power);
        const BigInt walks = factorial(n) * closed_walk_count(p, power);
        r.expect(moment == walks, [&] {
          std::ostringstream msg;
          msg << "n=" << n << " k=" << k << " power=" << power << ": spectral moment "
              << moment << " != n! * closed walks " << walks;
          return msg.str();
        });
      }
    }
  }
  return r;
}

Recorder identities_suite(const Options& options) {
  Recorder r;
  for (int n = 0; n <= options.n_max; ++n) {
    const std::vector<Partition> lambdas = partitions_of(n);

    for (const Partition& lambda : lambdas) {
      r.expect(derangement_eigenvalue(lambda) == derangement_eigenvalue_via_syt(lambda), [&] {
        return "lambda=" + lambda.to_string() +
               ": the two derangement-eigenvalue routes disagree";
      });

      for (int k = 0; k <= n; ++k) {
        if (!selected_k(options, k)) continue;
        r.expect(binomial_identity_holds(lambda, k), [&] {
          std::ostringstream msg;
          msg << "lambda=" << lambda.to_string() << " k=" << k
              << ": excited/hook sum does not equal C(n,k)";
          return msg.str();
        });
      }

      if (n >= 1) {
        BigInt branch_sum = 0;
        for (const Partition& shrunk : corner_removals(lambda)) branch_sum += syt_count(shrunk);
        r.expect(branch_sum == syt_count(lambda), [&] {
          return "lambda=" + lambda.to_string() + ": corner-removal recursion broken";
        });
      }

      for (int m = 0; m <= n; ++m) {
        BigInt decomposition = 0;
        for (const Partition& mu : subpartitions_of_size(lambda, m))
          decomposition += syt_count(lambda, mu) * syt_count(mu);
        r.expect(decomposition == syt_count(lambda), [&] {
          std::ostringstream msg;
          msg << "lambda=" << lambda.to_string() << " m=" << m
              << ": skew decomposition does not sum to the straight count";
          return msg.str();
        });
      }

      if (n >= 2) {
        r.expect(transposition_eigenvalue(lambda) == eigenvalue(lambda, GraphParams(n, n - 2)),
                 [&] {
                   return "lambda=" + lambda.to_string() +
                          ": transposition closed form differs from the general formula";
                 });
      }
    }

    for (int k = 0; n >= 1 && k <= n - 1; ++k) {
      if (!selected_k(options, k)) continue;
      const GraphParams p(n, k);
      r.expect(eigenvalue(Partition({n}), p) == connection_set_size(p), [&] {
        std::ostringstream msg;
        msg << "n=" << n << " k=" << k << ": trivial eigenvalue is not the degree";
        return msg.str();
      });
      for (int m = 1; n >= 2 && m < n; ++m) {
        bool agreed = true;
        std::string what;
        try {
          hook_shape_eigenvalue(m, p);  // asserts agreement internally
        } catch (const std::logic_error& e) {
          agreed = false;
          what = e.what();
        }
        r.expect(agreed, [&] {
          std::ostringstream msg;
          msg << "n=" << n << " k=" << k << " m=" << m << ": " << what;
          return msg.str();
        });
      }
    }
  }
  return r;
}

Recorder bounds_suite(const Options& options) {
  Recorder r;
  for (int n = 1; n <= options.n_max; ++n) {
    const std::vector<Partition> lambdas = partitions_of(n);
    for (int k = 0; k <= n - 1; ++k) {
      if (!selected_k(options, k)) continue;
      const GraphParams p(n, k);
      const std::vector<SpectrumEntry> entries = spectrum(p);
      const BigInt degree = connection_set_size(p);

      BigInt multiplicity_sum = 0, trace = 0;
      const BigInt* least = &entries.front().eigenvalue;
      for (const SpectrumEntry& entry : entries) {
        multiplicity_sum += entry.multiplicity;
        trace += entry.multiplicity * entry.eigenvalue;
        if (entry.eigenvalue < *least) least = &entry.eigenvalue;
      }
      r.expect(multiplicity_sum == factorial(n), [&] {
        std::ostringstream msg;
        msg << "n=" << n << " k=" << k << ": multiplicities do not sum to n!";
        return msg.str();
      });
      r.expect(trace == 0, [&] {
        std::ostringstream msg;
        msg << "n=" << n << " k=" << k << ": adjacency trace is not zero";
        return msg.str();
      });

      for (std::size_t i = 0; i < entries.size(); ++i) {
        const BigInt cap = binomial(n, k) * max_abs_derangement_eigenvalue(lambdas[i], k);
        r.expect(abs(entries[i].eigenvalue) <= cap, [&] {
          std::ostringstream msg;
          msg << "n=" << n << " k=" << k << " lambda=" << lambdas[i].to_string()
              << ": |eigenvalue| exceeds C(n,k) * max |subshape derangement eigenvalue|";
          return msg.str();
        });
      }

      if (k == n - 1) {
        for (const SpectrumEntry& entry : entries)
          r.expect(entry.eigenvalue == 0, [&] {
            std::ostringstream msg;
            msg << "n=" << n << ": empty connection set but nonzero eigenvalue on "
                << entry.lambda.to_string();
            return msg.str();
          });
        continue;  // the remaining bounds divide by n-k-1
      }

      r.expect(spectrum_within_interval(p), [&] {
        std::ostringstream msg;
        msg << "n=" << n << " k=" << k << ": an eigenvalue escapes [-degree/(n-k-1), degree]";
        return msg.str();
      });

      if (k == n - 2 || k == n - 4) {
        r.expect(least_eigenvalue_matches_bound(p), [&] {
          std::ostringstream msg;
          msg << "n=" << n << " k=" << k << ": least eigenvalue misses -degree/(n-k-1)";
          return msg.str();
        });
      }
      if (k == 0 && n >= 2) {
        r.expect(*least * (n - 1) == -degree, [&] {
          std::ostringstream msg;
          msg << "n=" << n << ": derangement graph least eigenvalue is not -degree/(n-1)";
          return msg.str();
        });
      }
    }
  }
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"oracle-equivalence", "moments", "identities",
                                              "bounds"};
  return names;
}

bool run(const Options& options, std::ostream& out) {
  std::vector<std::string> chosen = options.suites.empty() ? suite_names() : options.suites;
  for (const std::string& name : chosen)
    if (std::find(suite_names().begin(), suite_names().end(), name) == suite_names().end())
      throw std::invalid_argument("unknown check: " + name);

  bool all_passed = true;
  for (const std::string& name : suite_names()) {
    if (std::find(chosen.begin(), chosen.end(), name) == chosen.end()) continue;
    Recorder r;
    try {
      if (name == "oracle-equivalence")
        r = oracle_suite(options);
      else if (name == "moments")
        r = moments_suite(options);
      else if (name == "identities")
        r = identities_suite(options);
      else
        r = bounds_suite(options);
    } catch (const std::exception& e) {
      r.failure = std::string("unexpected exception: ") + e.what();
    }
    if (r.failure.empty()) {
      out << "[PASS] " << name << " (" << r.checks << " checks)\n";
    } else {
      out << "[FAIL] " << name << " (" << r.checks << " checks): " << r.failure << '\n';
      all_passed = false;
    }
  }
  return all_passed;
}

}  // namespace fixgraph::verify
