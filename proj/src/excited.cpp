#include "fixgraph/excited.hpp"

#include <deque>
#include <set>
#include <stdexcept>

namespace fixgraph {

namespace {

// Activity test without the precondition checks; callers guarantee u in d
// and d inside [lambda].
bool active_unchecked(const Diagram& d, Cell u, const Partition& lambda) {
  const Cell below{u.row + 1, u.col};
  const Cell right{u.row, u.col + 1};
  const Cell diagonal{u.row + 1, u.col + 1};
  for (Cell c : {below, right, diagonal})
    if (!lambda.contains_cell(c) || d.contains(c)) return false;
  return true;
}

Diagram moved(const Diagram& d, Cell u) {
  std::vector<Cell> cells;
  cells.reserve(d.size());
  for (Cell c : d.cells())
    if (c != u) cells.push_back(c);
  cells.push_back({u.row + 1, u.col + 1});
  return Diagram(std::move(cells));
}

}  // namespace

bool is_active(const Diagram& d, Cell u, const Partition& lambda) {
  if (!d.contains(u)) throw std::invalid_argument("is_active: u is not a cell of d");
  for (Cell c : d.cells())
    if (!lambda.contains_cell(c))
      throw std::invalid_argument("is_active: d is not contained in [lambda]");
  return active_unchecked(d, u, lambda);
}

Diagram apply_move(const Diagram& d, Cell u, const Partition& lambda) {
  if (!is_active(d, u, lambda))
    throw std::invalid_argument("apply_move: cell (" + std::to_string(u.row) + "," +
                                std::to_string(u.col) + ") is not active");
  return moved(d, u);
}

ExcitedDiagramSet enumerate_excited(const Partition& lambda, const Partition& mu) {
  ExcitedDiagramSet result{lambda, mu, {}};
  if (!lambda.contains(mu)) return result;

  // Breadth-first closure from [mu]; diagrams are canonical, so the
  // visited set also deduplicates move orders.
  std::set<Diagram> seen;
  std::deque<const Diagram*> frontier;
  auto [start, inserted] = seen.insert(diagram_of(mu));
  frontier.push_back(&*start);
  while (!frontier.empty()) {
    const Diagram& d = *frontier.front();
    frontier.pop_front();
    for (Cell u : d.cells()) {
      if (!active_unchecked(d, u, lambda)) continue;
      auto [it, fresh] = seen.insert(moved(d, u));
      if (fresh) frontier.push_back(&*it);
    }
  }
  result.diagrams.assign(seen.begin(), seen.end());
  return result;
}

BigInt hook_product(const Diagram& d, const Partition& lambda) {
  BigInt product = 1;
  for (Cell u : d.cells()) product *= hook_length(lambda, u);
  return product;
}

}  // namespace fixgraph
