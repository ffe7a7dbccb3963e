#pragma once

#include <vector>

#include "fixgraph/numeric.hpp"
#include "fixgraph/partition.hpp"

namespace fixgraph {

// Parameters of the k-point fixing graph F(n,k): the Cayley graph on S_n
// whose connection set is the permutations fixing exactly k points.
struct GraphParams {
  int n;
  int k;
  /// Throws std::invalid_argument unless n >= 1 and 0 <= k <= n-1.
  GraphParams(int n, int k);
};

// One spectral line per irreducible character of S_n. Eigenvalues of
// F(n,k) are integers; the multiplicity is the squared character degree.
struct SpectrumEntry {
  Partition lambda;
  BigInt eigenvalue;
  BigInt multiplicity;
};

/// Number of fixed-point-free permutations of m points.
BigInt derangement_count(int m);

/// |S(n,k)| = C(n,k) * derangement_count(n-k); the regular degree of F(n,k).
BigInt connection_set_size(GraphParams p);

/// Eigenvalue of the derangement graph F(n,0) indexed by lambda, as the
/// alternating sum of excited-diagram hook products over single-row
/// subshapes. All-integer, no division.
BigInt derangement_eigenvalue(const Partition& lambda);

/// Same value computed through skew SYT counts in exact rational
/// arithmetic; the two routes cross-check each other.
BigInt derangement_eigenvalue_via_syt(const Partition& lambda);

/// Eigenvalue of F(n,k) indexed by lambda (which must have size p.n):
/// sum over subshapes mu of size n-k of
///   derangement_eigenvalue(mu) / hook_product([mu])
///     * sum of hook products over the excited diagrams of lambda/mu,
/// accumulated exactly and asserted integral.
BigInt eigenvalue(const Partition& lambda, GraphParams p);

/// Full spectrum of F(n,k), one entry per lambda of n in canonical order.
/// threads <= 0 means all available workers; the result is identical for
/// every thread count.
std::vector<SpectrumEntry> spectrum(GraphParams p, int threads = 0);

/// Eigenvalue of the transposition network F(n,n-2) by its closed form:
/// sum of h(i,i)*h(j,j+1) over diagonal/superdiagonal cell pairs with
/// i <= j, minus C(n,2). Requires |lambda| >= 2.
BigInt transposition_eigenvalue(const Partition& lambda);

/// Total multiplicity of `value` in the spectrum of the transposition
/// network on n points; zero when it is not an eigenvalue. Requires n >= 2.
BigInt transposition_multiplicity(const BigInt& value, int n);

/// Closed form for hook shapes lambda = (m, 1^{n-m}) with 1 <= m < n.
/// Returns the exact rational value of the closed form; asserts that it is
/// integral and agrees with eigenvalue() before returning.
BigRat hook_shape_eigenvalue(int first_part, GraphParams p);

/// max |derangement_eigenvalue(mu)| over subshapes mu of lambda of size
/// |lambda|-k. Requires 0 <= k <= |lambda|.
BigInt max_abs_derangement_eigenvalue(const Partition& lambda, int k);

/// Checks C(n,k) == sum over subshapes mu of size n-k of
/// (excited hook-product sum of lambda/mu) / hook_product([mu]), exactly.
bool binomial_identity_holds(const Partition& lambda, int k);

/// True iff every eigenvalue eta of F(n,k) satisfies
/// -|S(n,k)| <= eta*(n-k-1) and eta <= |S(n,k)|, in integer arithmetic.
/// Requires k <= n-2.
bool spectrum_within_interval(GraphParams p);

/// True iff the least eigenvalue times (n-k-1) equals -|S(n,k)| exactly.
/// Only defined for k == n-2 or k == n-4.
bool least_eigenvalue_matches_bound(GraphParams p);

}  // namespace fixgraph
