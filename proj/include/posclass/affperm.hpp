#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "posclass/diagram.hpp"
#include "posclass/partition.hpp"

namespace posclass {

using Int = std::int64_t;

/// A bijection f of Z with f(i + n) = f(i) + n, stored by its window
/// f(1), ..., f(n). Windows are kept unreduced; equality is window equality.
class AffinePermutation {
 public:
  /// Validates bijectivity. Throws DuplicateResidue or BadWindowSum.
  static AffinePermutation from_window(int n, std::vector<Int> values);
  static AffinePermutation identity(int n);
  /// tau^j : i -> i + j.
  static AffinePermutation tau_power(int n, Int j);
  /// s_i, swapping i + pn and i + 1 + pn. The index is read mod n.
  static AffinePermutation simple_reflection(int n, Int i);
  /// t_ij for i < j, i and j distinct mod n. Throws EqualResidues.
  static AffinePermutation transposition(int n, Int i, Int j);

  int n() const noexcept { return n_; }
  std::span<const Int> window() const noexcept { return window_; }
  const std::vector<Int>& window_vector() const noexcept { return window_; }

  /// f(i), extended quasi-periodically.
  Int operator()(Int i) const;

  friend bool operator==(const AffinePermutation&, const AffinePermutation&) = default;
  /// Orders by period, then lexicographically by window.
  friend std::strong_ordering operator<=>(const AffinePermutation& a,
                                          const AffinePermutation& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return a.window_ <=> b.window_;
  }

 private:
  AffinePermutation(int n, std::vector<Int> window)
      : n_(n), window_(std::move(window)) {}

  int n_ = 0;
  std::vector<Int> window_;
};

/// One period c_1, ..., c_n of the code c(f).
struct CodeVector {
  int n = 0;
  std::vector<Int> entries;
  friend bool operator==(const CodeVector&, const CodeVector&) = default;
};

/// (f o g)(i) = f(g(i)). Throws PeriodMismatch.
AffinePermutation compose(const AffinePermutation& f, const AffinePermutation& g);
AffinePermutation inverse(const AffinePermutation& f);
AffinePermutation tau_power(int n, Int j);

Int evaluate(const AffinePermutation& f, Int i);

/// Number of inversions (i, j), i in [1, n], i < j, f(i) > f(j).
Int length(const AffinePermutation& f);
/// Inversions of the window word f(1) ... f(n) alone.
Int window_inversions(const AffinePermutation& f);
CodeVector code(const AffinePermutation& f);
/// (1/n) * sum (f(i) - i).
Int av(const AffinePermutation& f);
/// f(i) - i over one period.
std::vector<Int> displacement(const AffinePermutation& f);

/// D(f) on the (n, n)-cylinder, rows in [1, n].
Diagram rothe_diagram(const AffinePermutation& f);

/// i <= f(i) <= i + n for all i.
bool is_bounded(const AffinePermutation& f);
/// k when f is in Bound(k, n); empty when f is not bounded.
std::optional<int> bounded_class(const AffinePermutation& f);
/// f in T * Bound(k, n), tested through the tau-shifted window.
bool in_t_bound(const AffinePermutation& f, int k);
/// The same predicate through row and column sizes of D(f).
bool diagram_within_bounds(const AffinePermutation& f, int k);
/// Same window after a shift by a power of tau on the left.
bool same_t_orbit(const AffinePermutation& f, const AffinePermutation& g);

/// f * t_ij. Throws EqualResidues when i = j mod n.
AffinePermutation right_multiply_t(const AffinePermutation& f, Int i, Int j);
/// g = f t_ij for some i < j and l(g) = l(f) + 1.
bool is_bruhat_cover(const AffinePermutation& f, const AffinePermutation& g);

/// Lexicographically maximal (r, s), 1 <= r < s <= n, f(r) > f(s).
std::optional<std::pair<int, int>> max_inversion(const AffinePermutation& f);
bool is_zero_grassmannian(const AffinePermutation& f);
/// Shape of a 0-Grassmannian f in Bound(k, n): sorted code of f tau^{-k}.
Partition grassmannian_shape(const AffinePermutation& f, int k);

/// (i, j) with i in [1, n], i < j < i + n, r in [i, j) mod n,
/// f covered by f t_ij and f t_ij bounded.
std::vector<std::pair<Int, Int>> bcov(const AffinePermutation& f, Int r);
/// {f t_ir : i < r, f covered by f t_ir} restricted to Bound(k, n).
std::vector<AffinePermutation> phi_minus_bounded(const AffinePermutation& f,
                                                 Int r, int k);
/// {f t_rj : j > r, f covered by f t_rj} restricted to Bound(k, n).
std::vector<AffinePermutation> phi_plus_bounded(const AffinePermutation& f,
                                                Int r, int k);

/// Every element of Bound(k, n), sorted by window.
std::vector<AffinePermutation> enumerate_bounded(int k, int n);

/// "5,2,7,4"
std::string format_window(const AffinePermutation& f);
/// Parses a comma-separated window; n is the number of entries.
AffinePermutation parse_window(std::string_view text);

}  // namespace posclass
