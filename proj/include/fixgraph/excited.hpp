#pragma once

#include <vector>

#include "fixgraph/numeric.hpp"
#include "fixgraph/partition.hpp"

namespace fixgraph {

// Every diagram reachable from [mu] inside [lambda] by excited moves.
// `diagrams` is empty iff mu is not contained in lambda; this empty-set
// convention is what makes the outer spectral sums come out right.
struct ExcitedDiagramSet {
  Partition lambda;
  Partition mu;
  std::vector<Diagram> diagrams;  // deduplicated, sorted by cell list
};

/// A cell u = (i,j) of d is active when (i+1,j), (i,j+1) and (i+1,j+1) all
/// lie in [lambda] and none lies in d. Throws std::invalid_argument unless
/// u is a cell of d and d sits inside [lambda].
bool is_active(const Diagram& d, Cell u, const Partition& lambda);

/// Excited move: replace u = (i,j) by (i+1,j+1). Throws
/// std::invalid_argument unless u is active in d with respect to lambda.
Diagram apply_move(const Diagram& d, Cell u, const Partition& lambda);

ExcitedDiagramSet enumerate_excited(const Partition& lambda, const Partition& mu);

/// Product of h_lambda(u) over the cells of d; 1 for the empty diagram.
/// Throws std::out_of_range if d has a cell outside [lambda].
BigInt hook_product(const Diagram& d, const Partition& lambda);

}  // namespace fixgraph
