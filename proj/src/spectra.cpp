#include "fixgraph/spectra.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>

#include "fixgraph/excited.hpp"
#include "fixgraph/tableaux.hpp"

namespace fixgraph {

GraphParams::GraphParams(int n_, int k_) : n(n_), k(k_) {
  if (n < 1) throw std::invalid_argument("GraphParams: n must be at least 1");
  if (k < 0 || k > n - 1)
    throw std::invalid_argument("GraphParams: k must satisfy 0 <= k <= n-1 (got n=" +
                                std::to_string(n) + ", k=" + std::to_string(k) + ")");
}

BigInt derangement_count(int m) {
  if (m < 0) throw std::invalid_argument("derangement_count: negative argument");
  // D_m = (m-1)(D_{m-1} + D_{m-2}), D_0 = 1, D_1 = 0.
  BigInt prev2 = 1, prev1 = 0;
  if (m == 0) return prev2;
  for (int i = 2; i <= m; ++i) {
    BigInt current = (i - 1) * (prev1 + prev2);
    prev2 = std::move(prev1);
    prev1 = std::move(current);
  }
  return prev1;
}

BigInt connection_set_size(GraphParams p) {
  return binomial(p.n, p.k) * derangement_count(p.n - p.k);
}

namespace {

BigInt full_hook_product(const Partition& lambda) {
  return hook_product(diagram_of(lambda), lambda);
}

BigInt excited_hook_sum(const Partition& lambda, const Partition& mu) {
  BigInt sum = 0;
  for (const Diagram& d : enumerate_excited(lambda, mu).diagrams)
    sum += hook_product(d, lambda);
  return sum;  // zero when mu is not contained in lambda
}

// Per-subshape data shared across one spectrum computation: mu runs over
// all partitions of n-k, so its derangement eigenvalue and hook product
// are computed once and reused for every lambda.
struct SubshapeTerm {
  Partition mu;
  BigInt derangement_eigenvalue;
  BigInt hook_product;
};

std::vector<SubshapeTerm> subshape_terms(int m) {
  std::vector<SubshapeTerm> terms;
  for (Partition& mu : partitions_of(m)) {
    BigInt eta0 = derangement_eigenvalue(mu);
    BigInt hooks = full_hook_product(mu);
    terms.push_back({std::move(mu), std::move(eta0), std::move(hooks)});
  }
  return terms;
}

BigInt eigenvalue_from_terms(const Partition& lambda, const std::vector<SubshapeTerm>& terms) {
  BigRat accumulator = 0;
  for (const SubshapeTerm& term : terms) {
    if (!lambda.contains(term.mu)) continue;
    accumulator +=
        BigRat(term.derangement_eigenvalue * excited_hook_sum(lambda, term.mu),
               term.hook_product);
  }
  return require_integral(accumulator, "eigenvalue");
}

}  // namespace

BigInt derangement_eigenvalue(const Partition& lambda) {
  const int n = lambda.size();
  // Alternating excited-hook sums over the single-row subshapes (t),
  // including the empty one at t = 0. Rows longer than lambda_1 do not fit
  // and contribute nothing.
  BigInt total = 0;
  for (int t = 0; t <= lambda.part(1); ++t) {
    const Partition row = t == 0 ? Partition{} : Partition({t});
    const BigInt sum = excited_hook_sum(lambda, row);
    if ((n - t) % 2 == 0)
      total += sum;
    else
      total -= sum;
  }
  return total;
}

BigInt derangement_eigenvalue_via_syt(const Partition& lambda) {
  const int n = lambda.size();
  const BigInt degree = syt_count(lambda);
  BigRat accumulator = 0;
  for (int t = 0; t <= n; ++t) {
    const Partition row = t == 0 ? Partition{} : Partition({t});
    BigRat term(factorial(n) * syt_count(lambda, row), factorial(n - t) * degree);
    if ((n - t) % 2 == 0)
      accumulator += term;
    else
      accumulator -= term;
  }
  return require_integral(accumulator, "derangement_eigenvalue_via_syt");
}

BigInt eigenvalue(const Partition& lambda, GraphParams p) {
  if (lambda.size() != p.n)
    throw std::invalid_argument("eigenvalue: |lambda| = " + std::to_string(lambda.size()) +
                                " does not match n = " + std::to_string(p.n));
  std::vector<SubshapeTerm> terms;
  for (Partition& mu : subpartitions_of_size(lambda, p.n - p.k)) {
    BigInt eta0 = derangement_eigenvalue(mu);
    BigInt hooks = full_hook_product(mu);
    terms.push_back({std::move(mu), std::move(eta0), std::move(hooks)});
  }
  return eigenvalue_from_terms(lambda, terms);
}

std::vector<SpectrumEntry> spectrum(GraphParams p, int threads) {
  const std::vector<Partition> lambdas = partitions_of(p.n);
  const std::vector<SubshapeTerm> terms = subshape_terms(p.n - p.k);

  std::vector<SpectrumEntry> entries(lambdas.size());
  auto compute = [&](std::size_t i) {
    const Partition& lambda = lambdas[i];
    const BigInt degree = syt_count(lambda);
    entries[i] = {lambda, eigenvalue_from_terms(lambda, terms), degree * degree};
  };

  int workers = threads;
  if (workers <= 0) workers = static_cast<int>(std::thread::hardware_concurrency());
  workers = std::clamp<int>(workers, 1, static_cast<int>(lambdas.size()));

  if (workers == 1) {
    for (std::size_t i = 0; i < lambdas.size(); ++i) compute(i);
  } else {
    // Independent pure computations over shared immutable terms; each
    // entry lands in its own slot, so output order never depends on the
    // schedule.
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        for (std::size_t i = next.fetch_add(1); i < lambdas.size(); i = next.fetch_add(1))
          compute(i);
      });
    for (std::thread& t : pool) t.join();
  }
  return entries;
}

BigInt transposition_eigenvalue(const Partition& lambda) {
  const int n = lambda.size();
  if (n < 2)
    throw std::invalid_argument("transposition_eigenvalue: |lambda| must be at least 2");
  BigInt pair_sum = 0;
  for (int i = 1; lambda.contains_cell({i, i}); ++i) {
    const BigInt diagonal_hook = hook_length(lambda, {i, i});
    for (int j = i; lambda.contains_cell({j, j + 1}); ++j)
      pair_sum += diagonal_hook * hook_length(lambda, {j, j + 1});
  }
  return pair_sum - binomial(n, 2);
}

BigInt transposition_multiplicity(const BigInt& value, int n) {
  if (n < 2)
    throw std::invalid_argument("transposition_multiplicity: n must be at least 2");
  BigInt total = 0;
  for (const Partition& lambda : partitions_of(n)) {
    if (transposition_eigenvalue(lambda) != value) continue;
    const BigInt degree = syt_count(lambda);
    total += degree * degree;
  }
  return total;
}

BigRat hook_shape_eigenvalue(int first_part, GraphParams p) {
  const int n = p.n;
  const int k = p.k;
  const int m = first_part;
  if (m < 1 || m >= n)
    throw std::invalid_argument("hook_shape_eigenvalue: first part must satisfy 1 <= m < n");

  // Closed form for lambda = (m, 1^{n-m}): the subshapes of size n-k are
  // themselves hooks (s, 1^{n-k-s}), each carrying a single excited
  // diagram, which collapses the spectral sum to one term per s.
  BigRat sum = 0;
  for (int s = std::max(1, m - k); s <= std::min(m, n - k); ++s) {
    BigRat factor = BigRat(derangement_count(s));
    if (s % 2 != 0) factor = -factor;
    factor -= BigRat(n - k - s, n - k);
    sum += factor * binomial(n - k, s) * binomial(k, m - s);
  }
  BigRat value = sum * binomial(n, k) / binomial(n - 1, m - 1);
  if ((n - k) % 2 != 0) value = -value;

  std::vector<int> hook_parts{m};
  hook_parts.insert(hook_parts.end(), n - m, 1);
  const BigInt direct = eigenvalue(Partition(std::move(hook_parts)), p);
  if (value != BigRat(direct))
    throw std::logic_error("hook_shape_eigenvalue: closed form disagrees with eigenvalue()");
  require_integral(value, "hook_shape_eigenvalue");
  return value;
}

BigInt max_abs_derangement_eigenvalue(const Partition& lambda, int k) {
  if (k < 0 || k > lambda.size())
    throw std::invalid_argument("max_abs_derangement_eigenvalue: k must be in [0, |lambda|]");
  BigInt best = 0;
  bool first = true;
  for (const Partition& mu : subpartitions_of_size(lambda, lambda.size() - k)) {
    BigInt candidate = abs(derangement_eigenvalue(mu));
    if (first || candidate > best) {
      best = std::move(candidate);
      first = false;
    }
  }
  return best;
}

bool binomial_identity_holds(const Partition& lambda, int k) {
  if (k < 0 || k > lambda.size())
    throw std::invalid_argument("binomial_identity_holds: k must be in [0, |lambda|]");
  const int n = lambda.size();
  BigRat sum = 0;
  for (const Partition& mu : subpartitions_of_size(lambda, n - k))
    sum += BigRat(excited_hook_sum(lambda, mu), full_hook_product(mu));
  return sum == BigRat(binomial(n, k));
}

bool spectrum_within_interval(GraphParams p) {
  if (p.k > p.n - 2)
    throw std::invalid_argument(
        "spectrum_within_interval: k = n-1 is degenerate (empty connection set)");
  const BigInt degree = connection_set_size(p);
  const int scale = p.n - p.k - 1;
  for (const SpectrumEntry& entry : spectrum(p)) {
    // Cross-multiplied form of -degree/(n-k-1) <= eta <= degree.
    if (entry.eigenvalue * scale < -degree) return false;
    if (entry.eigenvalue > degree) return false;
  }
  return true;
}

bool least_eigenvalue_matches_bound(GraphParams p) {
  if (p.k != p.n - 2 && p.k != p.n - 4)
    throw std::invalid_argument(
        "least_eigenvalue_matches_bound: only defined for k = n-2 or k = n-4");
  const std::vector<SpectrumEntry> entries = spectrum(p);
  const BigInt* least = &entries.front().eigenvalue;
  for (const SpectrumEntry& entry : entries)
    if (entry.eigenvalue < *least) least = &entry.eigenvalue;
  return *least * (p.n - p.k - 1) == -connection_set_size(p);
}

}  // namespace fixgraph
