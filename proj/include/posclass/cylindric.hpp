#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "posclass/diagram.hpp"

namespace posclass {

/// The region between two non-crossing closed NW -> SE lattice paths on the
/// cylinder C_{k,n-k}. Coordinates are matrix coordinates: rows grow
/// downward and (row, col) is identified with (row + k, col + n - k).
///
/// Each path is a word of length n in 'V' (row + 1) and 'H' (col + 1) with
/// k V's. The lower path starts at vertex (0, 0) and the upper path at
/// (0, offset). Row R then holds the cells with columns in [a_R, b_R),
/// where a_R and b_R are the columns of the two V steps in that row.
class CylindricSkewShape {
 public:
  /// Throws ParseError on bad letters, InvalidArgument on mismatched step
  /// counts or crossing paths.
  static CylindricSkewShape from_words(std::string lower, std::string upper, Int offset);
  /// From row intervals [a_R, b_R), R = 0..k-1; a and b must be
  /// nondecreasing with a_{k-1} <= a_0 + n - k and the same for b.
  static CylindricSkewShape from_row_intervals(int k, int n, std::vector<Int> a,
                                               std::vector<Int> b);
  /// "lower=VHVVHHVHH upper=HVHHVHVHV offset=1"
  static CylindricSkewShape parse(std::string_view text);

  int k() const noexcept { return k_; }
  int n() const noexcept { return n_; }
  int m() const noexcept { return n_ - k_; }
  const std::string& lower() const noexcept { return lower_; }
  const std::string& upper() const noexcept { return upper_; }
  Int offset() const noexcept { return offset_; }
  const std::vector<Int>& row_starts() const noexcept { return a_; }
  const std::vector<Int>& row_ends() const noexcept { return b_; }

  Int size() const;
  /// Cells on the (k, n-k) cylinder, rows 1..k and columns shifted by one.
  Diagram diagram() const;
  /// Injective on the torus: no row holds more than n - k cells.
  bool is_toric() const;

  /// Step labels. Lower steps are numbered 1..n from (0, 0), upper steps
  /// 1..n from (0, offset), extended by +n per period.
  Int lower_vertical_label(Int row) const;
  Int upper_vertical_label(Int row) const;
  Int lower_horizontal_label(Int column) const;
  Int upper_horizontal_label(Int column) const;

  /// Compares the path encoding, which fixes the step labels; the same
  /// cells drawn from another starting point compare unequal.
  friend bool operator==(const CylindricSkewShape&, const CylindricSkewShape&) = default;

 private:
  CylindricSkewShape() = default;

  int k_ = 0;
  int n_ = 0;
  std::string lower_;
  std::string upper_;
  Int offset_ = 0;
  std::vector<Int> a_;
  std::vector<Int> b_;
};

std::string format_shape(const CylindricSkewShape& shape);

}  // namespace posclass
