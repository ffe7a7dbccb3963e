#include "fixgraph/tableaux.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

#include "fixgraph/excited.hpp"

namespace fixgraph {

namespace {

BigInt full_hook_product(const Partition& lambda) {
  return hook_product(diagram_of(lambda), lambda);
}

// The straight counts are requested over and over by the spectral sums;
// cache them per canonical part list. The lock keeps concurrent spectrum
// workers from observing partial entries.
BigInt straight_count_memoized(const Partition& lambda) {
  static std::mutex lock;
  static std::map<std::vector<int>, BigInt> cache;
  const std::vector<int> key(lambda.parts().begin(), lambda.parts().end());
  {
    std::scoped_lock guard(lock);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  BigInt value = exact_div(factorial(lambda.size()), full_hook_product(lambda), "syt_count");
  std::scoped_lock guard(lock);
  return cache.emplace(std::move(key), std::move(value)).first->second;
}

}  // namespace

BigInt syt_count(const Partition& lambda) { return straight_count_memoized(lambda); }

BigInt syt_count(const Partition& lambda, const Partition& mu) {
  if (!lambda.contains(mu)) return 0;
  // |lambda/mu|! * (sum of hook products over excited diagrams) divided by
  // the full hook product of lambda, as one exact division. Integrality
  // doubles as a correctness tripwire.
  const ExcitedDiagramSet excited = enumerate_excited(lambda, mu);
  BigInt hook_sum = 0;
  for (const Diagram& d : excited.diagrams) hook_sum += hook_product(d, lambda);
  const BigInt numerator = factorial(lambda.size() - mu.size()) * hook_sum;
  return exact_div(numerator, full_hook_product(lambda), "skew syt_count");
}

namespace {

struct SytSearch {
  std::vector<Cell> shape;  // row-major
  std::vector<bool> used;
  const Partition* mu = nullptr;
  SytFilling current;
  std::vector<SytFilling> found;

  bool in_shape(Cell c) const {
    // Inside [lambda] but not [mu]; the shape list is what remains.
    return std::ranges::binary_search(shape, c);
  }

  bool filled(Cell c) const {
    for (std::size_t i = 0; i < shape.size(); ++i)
      if (shape[i] == c) return used[i];
    return false;
  }

  // A cell may receive the next value when its left and upper neighbours
  // inside the skew shape are already filled.
  bool addable(std::size_t i) const {
    if (used[i]) return false;
    const Cell c = shape[i];
    const Cell left{c.row, c.col - 1};
    const Cell up{c.row - 1, c.col};
    if (in_shape(left) && !filled(left)) return false;
    if (in_shape(up) && !filled(up)) return false;
    return true;
  }

  void search() {
    if (current.size() == shape.size()) {
      found.push_back(current);
      return;
    }
    for (std::size_t i = 0; i < shape.size(); ++i) {
      if (!addable(i)) continue;
      used[i] = true;
      current.push_back(shape[i]);
      search();
      current.pop_back();
      used[i] = false;
    }
  }
};

}  // namespace

std::vector<SytFilling> enumerate_syt(const Partition& lambda, const Partition& mu,
                                      int max_cells) {
  if (!lambda.contains(mu))
    throw std::invalid_argument("enumerate_syt: mu is not contained in lambda");
  const int cells = lambda.size() - mu.size();
  if (cells > max_cells)
    throw std::invalid_argument("enumerate_syt: skew shape has " + std::to_string(cells) +
                                " cells, above the cap of " + std::to_string(max_cells));
  SytSearch search;
  const Diagram full = diagram_of(lambda);
  for (Cell c : full.cells())
    if (!mu.contains_cell(c)) search.shape.push_back(c);
  search.used.assign(search.shape.size(), false);
  search.current.reserve(search.shape.size());
  search.search();
  return std::move(search.found);
}

}  // namespace fixgraph
