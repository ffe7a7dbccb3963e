#include "fixgraph/partition.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace fixgraph {

namespace {

[[noreturn]] void bad_partition(const std::string& what) {
  throw std::invalid_argument("Partition: " + what);
}

int parse_int(std::string_view token, const char* what) {
  int value = 0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last)
    bad_partition(std::string("malformed ") + what + " '" + std::string(token) + "'");
  return value;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  return s;
}

}  // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) bad_partition("parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) bad_partition("parts must be weakly decreasing");
    size_ += parts_[i];
  }
}

Partition Partition::parse(std::string_view text) {
  std::vector<int> parts;
  std::string_view rest = trim(text);
  if (rest.empty()) return Partition{};
  while (true) {
    const std::size_t comma = rest.find(',');
    std::string_view token = trim(rest.substr(0, comma));
    if (token.empty()) bad_partition("empty component in '" + std::string(text) + "'");
    const std::size_t caret = token.find('^');
    int value = 0;
    int repeat = 1;
    if (caret == std::string_view::npos) {
      value = parse_int(token, "part");
    } else {
      value = parse_int(trim(token.substr(0, caret)), "part");
      repeat = parse_int(trim(token.substr(caret + 1)), "exponent");
      if (repeat < 1) bad_partition("exponent must be positive");
    }
    parts.insert(parts.end(), repeat, value);
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
  return Partition(std::move(parts));
}

int Partition::part(int i) const {
  if (i < 1) throw std::invalid_argument("Partition::part: index is 1-based");
  return i <= length() ? parts_[i - 1] : 0;
}

int Partition::conjugate_part(int j) const {
  if (j < 1) throw std::invalid_argument("Partition::conjugate_part: index is 1-based");
  int count = 0;
  for (int p : parts_) {
    if (p < j) break;  // parts are sorted
    ++count;
  }
  return count;
}

Partition Partition::conjugate() const {
  std::vector<int> cols;
  if (!parts_.empty()) {
    cols.reserve(parts_[0]);
    for (int j = 1; j <= parts_[0]; ++j) cols.push_back(conjugate_part(j));
  }
  return Partition(std::move(cols));
}

bool Partition::contains(const Partition& mu) const {
  if (mu.length() > length()) return false;
  for (int i = 0; i < mu.length(); ++i)
    if (mu.parts_[i] > parts_[i]) return false;
  return true;
}

bool Partition::contains_cell(Cell u) const {
  return u.row >= 1 && u.col >= 1 && u.row <= length() && u.col <= parts_[u.row - 1];
}

std::string Partition::to_string() const {
  std::string out;
  for (int i = 0; i < length(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

std::string Partition::to_exponent_string() const {
  std::string out;
  for (int i = 0; i < length();) {
    int j = i;
    while (j < length() && parts_[j] == parts_[i]) ++j;
    if (!out.empty()) out += ',';
    out += std::to_string(parts_[i]);
    if (j - i > 1) {
      out += '^';
      out += std::to_string(j - i);
    }
    i = j;
  }
  return out;
}

bool canonical_less(const Partition& a, const Partition& b) {
  return std::ranges::lexicographical_compare(a.parts(), b.parts(), std::greater<int>{});
}

Diagram::Diagram(std::vector<Cell> cells) : cells_(std::move(cells)) {
  for (Cell u : cells_)
    if (u.row < 1 || u.col < 1)
      throw std::invalid_argument("Diagram: cell coordinates are 1-based");
  std::ranges::sort(cells_);
  cells_.erase(std::unique(cells_.begin(), cells_.end()), cells_.end());
}

bool Diagram::contains(Cell u) const { return std::ranges::binary_search(cells_, u); }

Diagram diagram_of(const Partition& lambda) {
  std::vector<Cell> cells;
  cells.reserve(lambda.size());
  for (int i = 1; i <= lambda.length(); ++i)
    for (int j = 1; j <= lambda.part(i); ++j) cells.push_back({i, j});
  return Diagram(std::move(cells));
}

int hook_length(const Partition& lambda, Cell u) {
  if (!lambda.contains_cell(u))
    throw std::out_of_range("hook_length: cell (" + std::to_string(u.row) + "," +
                            std::to_string(u.col) + ") outside the diagram");
  return lambda.part(u.row) - u.row + lambda.conjugate_part(u.col) - u.col + 1;
}

namespace {

// Descending lexicographic enumeration: largest feasible first part first.
void emit_partitions(int remaining, int max_part, std::vector<int>& prefix,
                     std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(Partition(prefix));
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    prefix.push_back(p);
    emit_partitions(remaining - p, p, prefix, out);
    prefix.pop_back();
  }
}

// Same order, with the extra per-row cap mu_i <= lambda_i.
void emit_subpartitions(const Partition& lambda, int remaining, int row, int max_part,
                        std::vector<int>& prefix, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(Partition(prefix));
    return;
  }
  if (row > lambda.length()) return;
  for (int p = std::min({remaining, max_part, lambda.part(row)}); p >= 1; --p) {
    prefix.push_back(p);
    emit_subpartitions(lambda, remaining - p, row + 1, p, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw std::invalid_argument("partitions_of: negative argument");
  std::vector<Partition> out;
  std::vector<int> prefix;
  emit_partitions(n, n, prefix, out);
  return out;
}

std::vector<Partition> subpartitions_of_size(const Partition& lambda, int m) {
  if (m < 0 || m > lambda.size())
    throw std::invalid_argument("subpartitions_of_size: m must be in [0, |lambda|]");
  std::vector<Partition> out;
  std::vector<int> prefix;
  emit_subpartitions(lambda, m, 1, m, prefix, out);
  return out;
}

}  // namespace fixgraph
