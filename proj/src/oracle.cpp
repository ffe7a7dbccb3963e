#include "fixgraph/oracle.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <utility>

#include "fixgraph/tableaux.hpp"

namespace fixgraph {

CycleType::CycleType(Partition cycles) : cycles_(std::move(cycles)) {
  for (int part : cycles_.parts())
    if (part == 1) ++fixed_points_;
}

namespace {

// Murnaghan-Nakayama over beta-sets (first-column hook lengths). Removing a
// border strip of length ell is sliding one beta value down by ell into an
// unoccupied slot; the height sign is the parity of the values jumped over.
class CharacterEvaluator {
 public:
  explicit CharacterEvaluator(std::vector<int> cycles) : cycles_(std::move(cycles)) {}

  BigInt evaluate(const std::vector<int>& shape_parts, std::size_t cycle_index) {
    if (cycle_index == cycles_.size()) return 1;  // empty shape remains
    const auto key = std::make_pair(shape_parts, cycle_index);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    const int ell = cycles_[cycle_index];
    const int rows = static_cast<int>(shape_parts.size());
    std::vector<int> betas(rows);
    for (int i = 0; i < rows; ++i) betas[i] = shape_parts[i] + rows - 1 - i;

    BigInt total = 0;
    for (int i = 0; i < rows; ++i) {
      const int target = betas[i] - ell;
      if (target < 0) continue;
      if (std::find(betas.begin(), betas.end(), target) != betas.end()) continue;

      std::vector<int> moved = betas;
      moved[i] = target;
      std::sort(moved.begin(), moved.end(), std::greater<int>());

      int jumped = 0;
      for (int b : betas)
        if (target < b && b < betas[i]) ++jumped;

      std::vector<int> remaining;
      for (int r = 0; r < rows; ++r) {
        const int part = moved[r] - (rows - 1 - r);
        if (part > 0) remaining.push_back(part);
      }

      const BigInt sub = evaluate(remaining, cycle_index + 1);
      total += jumped % 2 == 0 ? sub : -sub;
    }
    memo_.emplace(key, total);
    return total;
  }

 private:
  std::vector<int> cycles_;
  std::map<std::pair<std::vector<int>, std::size_t>, BigInt> memo_;
};

}  // namespace

BigInt character_value(const Partition& lambda, const CycleType& beta) {
  if (lambda.size() != beta.degree())
    throw std::invalid_argument("character_value: |lambda| != degree of the cycle type");
  const std::span<const int> cycles = beta.cycles().parts();
  CharacterEvaluator evaluator(std::vector<int>(cycles.begin(), cycles.end()));
  const std::span<const int> parts = lambda.parts();
  return evaluator.evaluate(std::vector<int>(parts.begin(), parts.end()), 0);
}

BigInt conjugacy_class_size(const CycleType& beta) {
  BigInt centralizer = 1;
  int run_value = 0, run_length = 0;
  auto flush = [&] {
    for (int j = 1; j <= run_length; ++j) centralizer *= run_value * j;
  };
  for (int part : beta.cycles().parts()) {
    if (part == run_value) {
      ++run_length;
    } else {
      flush();
      run_value = part;
      run_length = 1;
    }
  }
  flush();
  return exact_div(factorial(beta.degree()), centralizer, "conjugacy_class_size");
}

BigInt eigenvalue_via_characters(const Partition& lambda, GraphParams p) {
  if (lambda.size() != p.n)
    throw std::invalid_argument("eigenvalue_via_characters: |lambda| != n");
  BigInt sum = 0;
  for (const Partition& cycles : partitions_of(p.n)) {
    CycleType beta(cycles);
    if (beta.fixed_points() != p.k) continue;
    sum += conjugacy_class_size(beta) * character_value(lambda, beta);
  }
  return exact_div(sum, syt_count(lambda), "eigenvalue_via_characters");
}

namespace {

int factorial_int(int n) {
  int result = 1;
  for (int i = 2; i <= n; ++i) result *= i;
  return result;
}

}  // namespace

BigInt closed_walk_count(GraphParams p, int length) {
  if (p.n > kWalkGroupCap)
    throw std::invalid_argument("closed_walk_count: n exceeds the group cap");
  if (length < 1 || length > kWalkLengthCap)
    throw std::invalid_argument("closed_walk_count: unsupported walk length");

  const int n = p.n;
  const int order = factorial_int(n);

  // All of S_n as 0-based image vectors, in lexicographic rank order.
  std::vector<std::vector<int>> perms;
  perms.reserve(order);
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 0);
  do {
    perms.push_back(images);
  } while (std::next_permutation(images.begin(), images.end()));

  std::map<std::vector<int>, int> rank;
  for (int r = 0; r < order; ++r) rank.emplace(perms[r], r);

  std::vector<int> connection;
  for (int r = 0; r < order; ++r) {
    int fixed = 0;
    for (int i = 0; i < n; ++i)
      if (perms[r][i] == i) ++fixed;
    if (fixed == p.k) connection.push_back(r);
  }

  // Convolve the indicator of the connection set with itself `length`
  // times; the identity coefficient counts the closed walks.
  std::vector<BigInt> current(order, 0);
  current[0] = 1;  // delta at the identity, which is lexicographically first
  std::vector<int> composed(n);
  for (int step = 0; step < length; ++step) {
    std::vector<BigInt> next(order, 0);
    for (int q = 0; q < order; ++q) {
      if (current[q] == 0) continue;
      for (int s : connection) {
        for (int i = 0; i < n; ++i) composed[i] = perms[q][perms[s][i]];
        next[rank.at(composed)] += current[q];
      }
    }
    current = std::move(next);
  }
  return current[0];  // identity has rank 0
}

int fixed_point_count(std::span<const int> sigma) {
  const int n = static_cast<int>(sigma.size());
  std::vector<bool> hit(n, false);
  for (int image : sigma) {
    if (image < 1 || image > n || hit[image - 1])
      throw std::invalid_argument("fixed_point_count: not a bijection on [n]");
    hit[image - 1] = true;
  }
  int fixed = 0;
  for (int i = 0; i < n; ++i)
    if (sigma[i] == i + 1) ++fixed;
  return fixed;
}

}  // namespace fixgraph
