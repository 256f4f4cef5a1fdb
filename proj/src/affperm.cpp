#include "posclass/affperm.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <functional>
#include <numeric>

#include "posclass/error.hpp"
#include "posclass/int_math.hpp"

namespace posclass {

namespace {

void require_same_period(const AffinePermutation& f, const AffinePermutation& g) {
  if (f.n() != g.n())
    throw Error(ErrorCode::PeriodMismatch,
                "periods " + std::to_string(f.n()) + " and " + std::to_string(g.n()));
}

Int min_displacement(const AffinePermutation& f) {
  Int lo = f(1) - 1;
  for (int i = 2; i <= f.n(); ++i) lo = std::min(lo, f(i) - i);
  return lo;
}

// Calls visit(i, j) for every inversion with i in [1, n] and j > i.
template <typename Visit>
void for_each_inversion(const AffinePermutation& f, Visit visit) {
  const Int lo = min_displacement(f);
  for (Int i = 1; i <= f.n(); ++i) {
    const Int fi = f(i);
    const Int j_end = checked_sub(fi, lo);  // f(j) >= j + lo, so j < fi - lo
    for (Int j = i + 1; j < j_end; ++j)
      if (f(j) < fi) visit(i, j);
  }
}

}  // namespace

AffinePermutation AffinePermutation::from_window(int n, std::vector<Int> values) {
  if (n <= 0) throw Error(ErrorCode::InvalidArgument, "period must be positive");
  if (static_cast<int>(values.size()) != n)
    throw Error(ErrorCode::InvalidArgument,
                "window has " + std::to_string(values.size()) + " entries, expected " +
                    std::to_string(n));
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  Int excess = 0;
  for (int i = 0; i < n; ++i) {
    const auto r = static_cast<std::size_t>(floor_mod(values[static_cast<std::size_t>(i)], n));
    if (seen[r])
      throw Error(ErrorCode::DuplicateResidue,
                  "two window values are congruent to " + std::to_string(r) + " mod " +
                      std::to_string(n));
    seen[r] = true;
    excess = checked_add(excess, checked_sub(values[static_cast<std::size_t>(i)], i + 1));
  }
  if (floor_mod(excess, n) != 0)
    throw Error(ErrorCode::BadWindowSum, "sum of f(i) - i is not divisible by n");
  return AffinePermutation(n, std::move(values));
}

AffinePermutation AffinePermutation::identity(int n) { return tau_power(n, 0); }

AffinePermutation AffinePermutation::tau_power(int n, Int j) {
  if (n <= 0) throw Error(ErrorCode::InvalidArgument, "period must be positive");
  std::vector<Int> w(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = checked_add(i + 1, j);
  return AffinePermutation(n, std::move(w));
}

AffinePermutation AffinePermutation::simple_reflection(int n, Int i) {
  return transposition(n, i, i + 1);
}

AffinePermutation AffinePermutation::transposition(int n, Int i, Int j) {
  return right_multiply_t(identity(n), i, j);
}

Int AffinePermutation::operator()(Int i) const {
  const Int q = floor_div(i - 1, n_);
  const Int r = i - q * n_;  // in [1, n]
  return checked_add(window_[static_cast<std::size_t>(r - 1)], checked_mul(q, n_));
}

Int evaluate(const AffinePermutation& f, Int i) { return f(i); }

AffinePermutation compose(const AffinePermutation& f, const AffinePermutation& g) {
  require_same_period(f, g);
  std::vector<Int> w(static_cast<std::size_t>(f.n()));
  for (int i = 1; i <= f.n(); ++i) w[static_cast<std::size_t>(i - 1)] = f(g(i));
  return AffinePermutation::from_window(f.n(), std::move(w));
}

AffinePermutation inverse(const AffinePermutation& f) {
  const int n = f.n();
  std::vector<Int> w(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    const Int value = f(i);
    const Int q = floor_div(value - 1, n);
    const Int r = value - q * n;  // f(i - qn) = r
    w[static_cast<std::size_t>(r - 1)] = i - q * n;
  }
  return AffinePermutation::from_window(n, std::move(w));
}

AffinePermutation tau_power(int n, Int j) { return AffinePermutation::tau_power(n, j); }

Int length(const AffinePermutation& f) {
  Int count = 0;
  for_each_inversion(f, [&](Int, Int) { ++count; });
  return count;
}

Int window_inversions(const AffinePermutation& f) {
  Int count = 0;
  const auto w = f.window();
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j)
      if (w[i] > w[j]) ++count;
  return count;
}

CodeVector code(const AffinePermutation& f) {
  CodeVector c{f.n(), std::vector<Int>(static_cast<std::size_t>(f.n()), 0)};
  for_each_inversion(f, [&](Int i, Int) { ++c.entries[static_cast<std::size_t>(i - 1)]; });
  return c;
}

Int av(const AffinePermutation& f) {
  Int total = 0;
  for (int i = 1; i <= f.n(); ++i) total = checked_add(total, f(i) - i);
  return total / f.n();
}

std::vector<Int> displacement(const AffinePermutation& f) {
  std::vector<Int> out;
  for (int i = 1; i <= f.n(); ++i) out.push_back(f(i) - i);
  return out;
}

Diagram rothe_diagram(const AffinePermutation& f) {
  std::set<Cell> cells;
  for_each_inversion(f, [&](Int i, Int j) { cells.insert({i, f(j)}); });
  return Diagram::cylindric(f.n(), f.n(), cells);
}

bool is_bounded(const AffinePermutation& f) {
  for (int i = 1; i <= f.n(); ++i)
    if (f(i) < i || f(i) > i + f.n()) return false;
  return true;
}

std::optional<int> bounded_class(const AffinePermutation& f) {
  if (!is_bounded(f)) return std::nullopt;
  int k = 0;
  for (Int v : f.window())
    if (v > f.n()) ++k;
  return k;
}

bool in_t_bound(const AffinePermutation& f, int k) {
  const Int shift = k - av(f);
  for (int i = 1; i <= f.n(); ++i) {
    const Int g = checked_add(f(i), shift);
    if (g < i || g > i + f.n()) return false;
  }
  return true;
}

bool diagram_within_bounds(const AffinePermutation& f, int k) {
  const Diagram d = rothe_diagram(f);
  for (int size : d.row_sizes())
    if (size > f.n() - k) return false;
  for (int size : d.column_sizes())
    if (size > k) return false;
  return true;
}

bool same_t_orbit(const AffinePermutation& f, const AffinePermutation& g) {
  if (f.n() != g.n()) return false;
  const Int shift = g(1) - f(1);
  for (int i = 2; i <= f.n(); ++i)
    if (g(i) - f(i) != shift) return false;
  return true;
}

AffinePermutation right_multiply_t(const AffinePermutation& f, Int i, Int j) {
  const int n = f.n();
  if (floor_mod(i - j, n) == 0)
    throw Error(ErrorCode::EqualResidues,
                "t_ij needs i and j distinct mod n (" + std::to_string(i) + ", " +
                    std::to_string(j) + ")");
  std::vector<Int> w(f.window().begin(), f.window().end());
  for (int x = 1; x <= n; ++x) {
    if (floor_mod(x - i, n) == 0)
      w[static_cast<std::size_t>(x - 1)] = f(x - i + j);
    else if (floor_mod(x - j, n) == 0)
      w[static_cast<std::size_t>(x - 1)] = f(x - j + i);
  }
  return AffinePermutation::from_window(n, std::move(w));
}

bool is_bruhat_cover(const AffinePermutation& f, const AffinePermutation& g) {
  if (f.n() != g.n()) return false;
  if (length(g) != length(f) + 1) return false;
  // f^{-1} g must be a reflection t_ij: exactly two residues move, and they
  // swap with opposite displacements.
  const AffinePermutation h = compose(inverse(f), g);
  std::vector<int> moved;
  for (int x = 1; x <= h.n(); ++x)
    if (h(x) != x) moved.push_back(x);
  if (moved.size() != 2) return false;
  const Int a = moved[0];
  const Int b = moved[1];
  const Int da = h(a) - a;
  return h(b) - b == -da && floor_mod(a + da - b, h.n()) == 0;
}

std::optional<std::pair<int, int>> max_inversion(const AffinePermutation& f) {
  for (int r = f.n() - 1; r >= 1; --r)
    for (int s = f.n(); s > r; --s)
      if (f(r) > f(s)) return std::make_pair(r, s);
  return std::nullopt;
}

bool is_zero_grassmannian(const AffinePermutation& f) {
  for (int i = 1; i < f.n(); ++i)
    if (f(i) > f(i + 1)) return false;
  return true;
}

Partition grassmannian_shape(const AffinePermutation& f, int k) {
  if (bounded_class(f) != k)
    throw Error(ErrorCode::NotBounded,
                format_window(f) + " is not in Bound(" + std::to_string(k) + "," +
                    std::to_string(f.n()) + ")");
  if (!is_zero_grassmannian(f))
    throw Error(ErrorCode::NotZeroGrassmannian, format_window(f) + " has a descent");
  const AffinePermutation w = compose(f, tau_power(f.n(), -k));
  std::vector<int> parts;
  for (Int c : code(w).entries) parts.push_back(static_cast<int>(c));
  return Partition::sorted(std::move(parts));
}

namespace {

bool hits_residue(Int i, Int j, Int r, int n) {
  // [i, j) contains an integer congruent to r mod n.
  const Int first = i + floor_mod(r - i, n);
  return first < j;
}

}  // namespace

std::vector<std::pair<Int, Int>> bcov(const AffinePermutation& f, Int r) {
  const int n = f.n();
  const Int len = length(f);
  std::vector<std::pair<Int, Int>> out;
  for (Int i = 1; i <= n; ++i) {
    for (Int j = i + 1; j < i + n; ++j) {
      if (!hits_residue(i, j, r, n)) continue;
      if (f(i) > f(j)) continue;
      const AffinePermutation g = right_multiply_t(f, i, j);
      if (!is_bounded(g)) continue;
      if (length(g) == len + 1) out.emplace_back(i, j);
    }
  }
  return out;
}

namespace {

template <typename Range>
std::vector<AffinePermutation> bounded_covers(const AffinePermutation& f, int k,
                                              Range pairs) {
  const Int len = length(f);
  std::vector<AffinePermutation> out;
  for (const auto& [i, j] : pairs) {
    if (f(i) > f(j)) continue;
    AffinePermutation g = right_multiply_t(f, i, j);
    if (bounded_class(g) != k) continue;
    if (length(g) == len + 1) out.push_back(std::move(g));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<AffinePermutation> phi_minus_bounded(const AffinePermutation& f, Int r,
                                                 int k) {
  // A bounded f t_ir forces r - n < i.
  std::vector<std::pair<Int, Int>> pairs;
  for (Int i = r - f.n() + 1; i < r; ++i) pairs.emplace_back(i, r);
  return bounded_covers(f, k, pairs);
}

std::vector<AffinePermutation> phi_plus_bounded(const AffinePermutation& f, Int r,
                                                int k) {
  std::vector<std::pair<Int, Int>> pairs;
  for (Int j = r + 1; j < r + f.n(); ++j) pairs.emplace_back(r, j);
  return bounded_covers(f, k, pairs);
}

std::vector<AffinePermutation> enumerate_bounded(int k, int n) {
  std::vector<AffinePermutation> out;
  if (n <= 0 || k < 0 || k > n) return out;
  std::vector<Int> w(static_cast<std::size_t>(n));
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  std::function<void(int, int)> fill = [&](int i, int large) {
    if (i > n) {
      if (large == k) out.push_back(AffinePermutation::from_window(n, w));
      return;
    }
    for (Int v = i; v <= i + n; ++v) {
      const auto r = static_cast<std::size_t>(floor_mod(v, n));
      if (used[r]) continue;
      const int next_large = large + (v > n ? 1 : 0);
      if (next_large > k) continue;
      used[r] = true;
      w[static_cast<std::size_t>(i - 1)] = v;
      fill(i + 1, next_large);
      used[r] = false;
    }
  };
  fill(1, 0);
  std::sort(out.begin(), out.end());
  return out;
}

std::string format_window(const AffinePermutation& f) {
  std::string out;
  for (std::size_t i = 0; i < f.window().size(); ++i) {
    if (i) out += ",";
    out += std::to_string(f.window()[i]);
  }
  return out;
}

AffinePermutation parse_window(std::string_view text) {
  std::vector<Int> values;
  while (true) {
    const auto comma = text.find(',');
    std::string_view token = text.substr(0, comma);
    while (!token.empty() && std::isspace(static_cast<unsigned char>(token.front())))
      token.remove_prefix(1);
    while (!token.empty() && std::isspace(static_cast<unsigned char>(token.back())))
      token.remove_suffix(1);
    Int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size())
      throw Error(ErrorCode::ParseError, "bad window entry '" + std::string(token) + "'");
    values.push_back(value);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  const int n = static_cast<int>(values.size());
  return AffinePermutation::from_window(n, std::move(values));
}

}  // namespace posclass
