#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>
#include <vector>

#include "fixgraph/tableaux.hpp"

using namespace fixgraph;

namespace {

// First-principles validity check of one standard filling: the cells must
// be exactly the skew shape, and labels must increase to the right and
// downward wherever both neighbours lie in the shape.
bool valid_filling(const Partition& lambda, const Partition& mu, const SytFilling& filling) {
  std::map<Cell, int> label;
  for (std::size_t t = 0; t < filling.size(); ++t)
    if (!label.emplace(filling[t], static_cast<int>(t) + 1).second) return false;

  int shape_cells = 0;
  for (int i = 1; i <= lambda.length(); ++i)
    for (int j = 1; j <= lambda.part(i); ++j) {
      const Cell c{i, j};
      if (mu.contains_cell(c)) continue;
      ++shape_cells;
      if (!label.count(c)) return false;
      for (const Cell neighbour : {Cell{i, j + 1}, Cell{i + 1, j}}) {
        if (!lambda.contains_cell(neighbour) || mu.contains_cell(neighbour)) continue;
        if (label.count(neighbour) && label[neighbour] <= label[c]) return false;
      }
    }
  return shape_cells == static_cast<int>(filling.size());
}

BigInt catalan(int n) {
  BigInt c = binomial(2 * n, n);
  return c / (n + 1);
}

}  // namespace

TEST_CASE("straight counts by the hook length formula") {
  CHECK(syt_count(Partition{}) == 1);
  CHECK(syt_count(Partition({1})) == 1);
  CHECK(syt_count(Partition({6})) == 1);
  CHECK(syt_count(Partition({1, 1, 1, 1, 1})) == 1);
  CHECK(syt_count(Partition({2, 2})) == 2);
  CHECK(syt_count(Partition({3, 2})) == 5);
  CHECK(syt_count(Partition({2, 2, 1})) == 5);
  CHECK(syt_count(Partition({2, 2, 2, 1})) == 14);
  CHECK(syt_count(Partition({3, 3, 3})) == 42);
  CHECK(syt_count(Partition({4, 3, 2, 1})) == 768);
}

TEST_CASE("two-row rectangles count ballot sequences") {
  for (int n = 1; n <= 6; ++n) CHECK(syt_count(Partition({n, n})) == catalan(n));
}

TEST_CASE("conjugation preserves the count") {
  for (int n = 0; n <= 10; ++n)
    for (const Partition& lambda : partitions_of(n))
      CHECK(syt_count(lambda) == syt_count(lambda.conjugate()));
}

TEST_CASE("squared counts sum to the group order") {
  for (int n = 0; n <= 9; ++n) {
    BigInt total = 0;
    for (const Partition& lambda : partitions_of(n)) {
      const BigInt f = syt_count(lambda);
      total += f * f;
    }
    CHECK(total == factorial(n));
  }
}

TEST_CASE("skew counts") {
  CHECK(syt_count(Partition({2, 2, 2, 1}), Partition({1, 1})) == 9);
  CHECK(syt_count(Partition({3, 2}), Partition({1})) == 5);
  CHECK(syt_count(Partition({4, 4}), Partition({4})) == 1);
  CHECK(syt_count(Partition({2, 1}), Partition({3})) == 0);  // mu not contained
  for (int n = 0; n <= 7; ++n)
    for (const Partition& lambda : partitions_of(n)) {
      CHECK(syt_count(lambda, Partition{}) == syt_count(lambda));
      CHECK(syt_count(lambda, lambda) == 1);
    }
}

TEST_CASE("enumeration produces exactly the valid fillings, each once") {
  for (int n = 0; n <= 6; ++n)
    for (const Partition& lambda : partitions_of(n))
      for (int m = 0; m <= n; ++m)
        for (const Partition& mu : subpartitions_of_size(lambda, m)) {
          const std::vector<SytFilling> fillings = enumerate_syt(lambda, mu);
          std::set<SytFilling> distinct;
          for (const SytFilling& f : fillings) {
            CHECK(valid_filling(lambda, mu, f));
            distinct.insert(f);
          }
          CHECK(distinct.size() == fillings.size());
          CHECK(BigInt(fillings.size()) == syt_count(lambda, mu));
        }
}

TEST_CASE("enumeration guards") {
  CHECK_THROWS_AS(enumerate_syt(Partition({2, 1}), Partition({3})), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_syt(Partition({13})), std::invalid_argument);  // above the cap
  CHECK(enumerate_syt(Partition({13}), Partition{}, 13).size() == 1);
  CHECK(enumerate_syt(Partition{}).size() == 1);  // the empty filling
}
