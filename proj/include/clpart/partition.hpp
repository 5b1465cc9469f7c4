#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace clpart {

/// An integer partition lambda_1 >= lambda_2 >= ... >= lambda_l > 0.
///
/// Stored as its part list. The empty partition is the trivial group.
/// Instances are immutable once constructed and validated.
class Partition {
 public:
  Partition() = default;

  // Throws std::invalid_argument unless the parts are positive and weakly
  // decreasing.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  // Partition whose conjugate has the given column heights. The heights
  // must be positive and weakly decreasing.
  static Partition from_columns(std::span<const int> columns);

  std::span<const int> parts() const { return parts_; }
  std::size_t length() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }
  int size() const { return size_; }
  int largest() const { return parts_.empty() ? 0 : parts_.front(); }

  // lambda_i with 1-based index; zero past the last part.
  int part(std::size_t i) const { return i >= 1 && i <= parts_.size() ? parts_[i - 1] : 0; }

  Partition conjugate() const;

  // lambda'_j: number of parts >= j, for j >= 1.
  int column(int j) const;

  // n(lambda) = sum_i (i - 1) lambda_i.
  long n_stat() const;

  // m_i(lambda): number of parts equal to i.
  int multiplicity(int i) const;

  // m_1, ..., m_{lambda_1}; entry k holds m_{k+1}.
  std::vector<int> multiplicities() const;

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

inline Partition conjugate(const Partition& lambda) { return lambda.conjugate(); }
inline long n_stat(const Partition& lambda) { return lambda.n_stat(); }
inline int multiplicity(const Partition& lambda, int i) { return lambda.multiplicity(i); }

/// Canonical order used by every table: by size, then reverse
/// lexicographic on parts ([2] before [1,1]).
struct CanonicalOrder {
  bool operator()(const Partition& a, const Partition& b) const;
};

inline constexpr int kEnumerationCap = 60;

// All partitions of n in reverse lexicographic order. Throws
// std::invalid_argument for n < 0 or n > kEnumerationCap.
std::vector<Partition> enumerate_partitions(int n);

// "[3,1,1]"; the empty partition is "[]".
std::string to_string(const Partition& lambda);

// Inverse of to_string. Whitespace around parts is tolerated.
Partition parse_partition(std::string_view text);

}  // namespace clpart
