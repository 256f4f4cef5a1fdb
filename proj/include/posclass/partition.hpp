#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "posclass/bigint.hpp"

namespace posclass {

/// A partition: weakly decreasing positive parts. Trailing zeros are
/// stripped on construction, so equal partitions compare equal.
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts);
  explicit Partition(std::vector<int> parts);

  /// Sorts arbitrary nonnegative parts into a partition.
  static Partition sorted(std::vector<int> parts);
  /// The k x m rectangle (m^k).
  static Partition rectangle(int k, int m);

  const std::vector<int>& parts() const noexcept { return parts_; }
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  int size() const noexcept { return size_; }
  bool empty() const noexcept { return parts_.empty(); }
  /// Part i (0-based); zero past the end.
  int operator[](int i) const noexcept {
    return i < length() ? parts_[static_cast<std::size_t>(i)] : 0;
  }

  bool contains(const Partition& other) const noexcept;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend std::strong_ordering operator<=>(const Partition& a,
                                          const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

Partition conjugate(const Partition& lambda);

/// lambda <= mu in dominance order. Throws SizeMismatch on unequal sizes.
bool dominance_leq(const Partition& lambda, const Partition& mu);

bool fits_in_rect(const Partition& lambda, int k, int m);

/// Complement of lambda in the k x m rectangle, rotated 180 degrees.
Partition complement(const Partition& lambda, int k, int m);

/// Number of standard Young tableaux of shape lambda (hook length formula).
BigInt syt_count(const Partition& lambda);

/// Number of semistandard tableaux of shape lambda and content mu.
BigInt kostka_number(const Partition& lambda, const Partition& mu);

/// All partitions of `size` with at most `max_parts` parts and largest part
/// at most `max_part` (negative bound = unbounded), in decreasing lex order.
std::vector<Partition> partitions_of(int size, int max_parts = -1,
                                     int max_part = -1);

/// Partitions obtained by adding one box to lambda.
std::vector<Partition> add_one_box(const Partition& lambda);

std::string format_partition(const Partition& lambda);
/// Parses "[2,1]" (brackets optional, "[]" is the empty partition).
Partition parse_partition(std::string_view text);

}  // namespace posclass
