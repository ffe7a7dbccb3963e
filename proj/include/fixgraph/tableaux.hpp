#pragma once

#include <vector>

#include "fixgraph/numeric.hpp"
#include "fixgraph/partition.hpp"

namespace fixgraph {

/// Number of standard Young tableaux of shape lambda, by the hook length
/// formula. Also the degree of the irreducible character indexed by lambda.
BigInt syt_count(const Partition& lambda);

/// Number of standard Young tableaux of skew shape lambda/mu, by the
/// excited-diagram hook length formula. Zero when mu is not contained in
/// lambda.
BigInt syt_count(const Partition& lambda, const Partition& mu);

// A standard filling recorded as the cell holding 1, the cell holding 2, ...
using SytFilling = std::vector<Cell>;

inline constexpr int kSytEnumerationCap = 12;  // cells

/// Brute-force enumeration of all standard fillings of lambda/mu. Requires
/// mu contained in lambda and |lambda/mu| <= max_cells (the cap guards
/// against accidental combinatorial explosion); throws
/// std::invalid_argument otherwise.
std::vector<SytFilling> enumerate_syt(const Partition& lambda,
                                      const Partition& mu = {},
                                      int max_cells = kSytEnumerationCap);

}  // namespace fixgraph
