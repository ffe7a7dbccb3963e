#pragma once

#include <span>
#include <vector>

#include "fixgraph/numeric.hpp"
#include "fixgraph/partition.hpp"
#include "fixgraph/spectra.hpp"

namespace fixgraph {

// Conjugacy class of S_n, indexed by its cycle type. fixed_points() is the
// number of parts equal to 1, i.e. the fixed-point count of every member.
class CycleType {
 public:
  explicit CycleType(Partition cycles);
  const Partition& cycles() const { return cycles_; }
  int degree() const { return cycles_.size(); }  // the n of S_n
  int fixed_points() const { return fixed_points_; }

 private:
  Partition cycles_;
  int fixed_points_ = 0;
};

/// Irreducible character value chi_lambda(beta) by the Murnaghan-Nakayama
/// border-strip recursion. Requires |lambda| == beta.degree().
BigInt character_value(const Partition& lambda, const CycleType& beta);

/// n! / (prod_j j^{m_j} m_j!) where m_j is the multiplicity of part j.
BigInt conjugacy_class_size(const CycleType& beta);

/// Eigenvalue of F(n,k) indexed by lambda via normalized character sums
/// over the connection set, one term per conjugacy class with exactly k
/// fixed points. Character-theoretic cross-check of eigenvalue().
BigInt eigenvalue_via_characters(const Partition& lambda, GraphParams p);

inline constexpr int kWalkGroupCap = 6;  // largest n for the convolution
inline constexpr int kWalkLengthCap = 4;

/// Number of closed walks of the given length at one vertex of F(n,k):
/// tuples over the connection set multiplying to the identity, computed by
/// group-algebra convolution with no character theory involved. Requires
/// n <= kWalkGroupCap and 1 <= length <= kWalkLengthCap.
BigInt closed_walk_count(GraphParams p, int length);

/// |{i : sigma(i) = i}| for a permutation given as 1-based images
/// (sigma maps i to sigma[i-1]). Throws std::invalid_argument unless sigma
/// is a bijection on [n].
int fixed_point_count(std::span<const int> sigma);

}  // namespace fixgraph
