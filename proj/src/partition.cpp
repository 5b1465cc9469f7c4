#include "clpart/partition.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace clpart {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw std::invalid_argument("parts must be weakly decreasing");
    }
  }
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::from_columns(std::span<const int> columns) {
  return Partition(std::vector<int>(columns.begin(), columns.end())).conjugate();
}

Partition Partition::conjugate() const {
  std::vector<int> mu;
  mu.reserve(static_cast<std::size_t>(largest()));
  for (int j = 1; j <= largest(); ++j) mu.push_back(column(j));
  return Partition(std::move(mu));
}

int Partition::column(int j) const {
  // parts_ is decreasing, so the parts >= j form a prefix.
  auto it = std::partition_point(parts_.begin(), parts_.end(), [j](int x) { return x >= j; });
  return static_cast<int>(it - parts_.begin());
}

long Partition::n_stat() const {
  long total = 0;
  for (std::size_t i = 0; i < parts_.size(); ++i) total += static_cast<long>(i) * parts_[i];
  return total;
}

int Partition::multiplicity(int i) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), i));
}

std::vector<int> Partition::multiplicities() const {
  std::vector<int> m(static_cast<std::size_t>(largest()), 0);
  for (int x : parts_) ++m[static_cast<std::size_t>(x - 1)];
  return m;
}

bool CanonicalOrder::operator()(const Partition& a, const Partition& b) const {
  if (a.size() != b.size()) return a.size() < b.size();
  auto pa = a.parts();
  auto pb = b.parts();
  return std::lexicographical_compare(pb.begin(), pb.end(), pa.begin(), pa.end());
}

std::vector<Partition> enumerate_partitions(int n) {
  if (n < 0) throw std::invalid_argument("partition size must be nonnegative");
  if (n > kEnumerationCap) {
    throw std::invalid_argument("partition enumeration is capped at n = " +
                                std::to_string(kEnumerationCap));
  }
  std::vector<Partition> out;
  if (n == 0) {
    out.emplace_back();
    return out;
  }
  // Successor in reverse lexicographic order: strip trailing ones, lower
  // the last part > 1 by one, and refill greedily with the freed amount.
  std::vector<int> a{n};
  while (true) {
    out.emplace_back(a);
    int ones = 0;
    while (!a.empty() && a.back() == 1) {
      a.pop_back();
      ++ones;
    }
    if (a.empty()) break;
    int k = --a.back();
    int rest = ones + 1;
    while (rest > 0) {
      int take = std::min(k, rest);
      a.push_back(take);
      rest -= take;
    }
  }
  return out;
}

std::string to_string(const Partition& lambda) {
  std::string s = "[";
  bool first = true;
  for (int x : lambda.parts()) {
    if (!first) s += ',';
    s += std::to_string(x);
    first = false;
  }
  s += ']';
  return s;
}

Partition parse_partition(std::string_view text) {
  auto trim = [](std::string_view v) {
    while (!v.empty() && (v.front() == ' ' || v.front() == '\t')) v.remove_prefix(1);
    while (!v.empty() && (v.back() == ' ' || v.back() == '\t')) v.remove_suffix(1);
    return v;
  };
  text = trim(text);
  if (text.size() < 2 || text.front() != '[' || text.back() != ']') {
    throw std::invalid_argument("partition must be written as [a,b,...]");
  }
  text = trim(text.substr(1, text.size() - 2));
  std::vector<int> parts;
  while (!text.empty()) {
    auto comma = text.find(',');
    std::string_view token = trim(text.substr(0, comma));
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
      throw std::invalid_argument("malformed partition part '" + std::string(token) + "'");
    }
    parts.push_back(value);
    if (comma == std::string_view::npos) break;
    text = text.substr(comma + 1);
    if (trim(text).empty()) throw std::invalid_argument("trailing comma in partition");
  }
  return Partition(std::move(parts));
}

}  // namespace clpart
