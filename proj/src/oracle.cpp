#include "posclass/oracle.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <set>

#include "posclass/error.hpp"
#include "posclass/int_math.hpp"

namespace posclass {

namespace {

std::string budget_message(const char* what, Int value, Int limit) {
  return std::string(what) + " " + std::to_string(value) + " exceeds budget " +
         std::to_string(limit);
}

// d_S^{-1} for every proper subset S of Z/nZ, indexed by bitmask.
const std::vector<std::optional<AffinePermutation>>& inverse_decreasing_table(int n) {
  static std::mutex mutex;
  static std::map<int, std::vector<std::optional<AffinePermutation>>> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  const std::uint32_t full = (1u << n) - 1;
  std::vector<std::optional<AffinePermutation>> table(full + 1);
  for (std::uint32_t mask = 0; mask < full; ++mask) {
    CyclicSubset s{n, {}};
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) s.members.push_back(i);
    table[mask] = inverse(cyclically_decreasing_from_subset(s));
  }
  return cache.emplace(n, std::move(table)).first->second;
}

AffinePermutation shift_to_zero(const AffinePermutation& f) {
  return compose(tau_power(f.n(), -av(f)), f);
}

}  // namespace

AffinePermutation cyclically_decreasing_from_subset(const CyclicSubset& s) {
  const int n = s.n;
  if (n <= 0) throw Error(ErrorCode::InvalidArgument, "period must be positive");
  std::vector<bool> in(static_cast<std::size_t>(n), false);
  for (int x : s.members) {
    if (x < 0 || x >= n || in[static_cast<std::size_t>(x)])
      throw Error(ErrorCode::InvalidArgument, "subset members must be distinct residues");
    in[static_cast<std::size_t>(x)] = true;
  }
  if (static_cast<int>(s.members.size()) == n)
    throw Error(ErrorCode::FullSubset, "the full residue set is not cyclically decreasing");
  int a = 0;
  while (in[static_cast<std::size_t>(a)]) ++a;
  AffinePermutation out = AffinePermutation::identity(n);
  for (int t = 1; t < n; ++t) {
    const int x = static_cast<int>(floor_mod(a - t, n));
    if (in[static_cast<std::size_t>(x)])
      out = compose(out, AffinePermutation::simple_reflection(n, x));
  }
  return out;
}

BigInt affine_stanley_monomial_coeff(const AffinePermutation& f,
                                     const std::vector<int>& content) {
  const AffinePermutation g0 = shift_to_zero(f);
  const int n = f.n();
  const Int total = length(g0);
  Int sum = 0;
  for (int part : content) {
    if (part < 0) throw Error(ErrorCode::InvalidArgument, "negative content entry");
    sum += part;
  }
  if (sum != total)
    throw Error(ErrorCode::SizeMismatch,
                "content sums to " + std::to_string(sum) + ", length is " +
                    std::to_string(total));
  const auto& table = inverse_decreasing_table(n);
  std::vector<std::vector<std::uint32_t>> masks_by_size(static_cast<std::size_t>(n));
  for (std::uint32_t mask = 0; mask + 1 < (1u << n); ++mask)
    masks_by_size[static_cast<std::size_t>(std::popcount(mask))].push_back(mask);

  std::map<std::pair<std::vector<Int>, std::size_t>, BigInt> memo;
  std::function<BigInt(const AffinePermutation&, Int, std::size_t)> count =
      [&](const AffinePermutation& g, Int len, std::size_t index) -> BigInt {
    if (index == content.size()) return len == 0 ? 1 : 0;
    const int part = content[index];
    if (part >= n) return 0;
    const auto key = std::make_pair(g.window_vector(), index);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    BigInt out = 0;
    for (std::uint32_t mask : masks_by_size[static_cast<std::size_t>(part)]) {
      const AffinePermutation rest = compose(*table[mask], g);
      const Int rest_len = length(rest);
      if (rest_len == len - part) out += count(rest, rest_len, index + 1);
    }
    memo.emplace(key, out);
    return out;
  };
  return count(g0, total, 0);
}

BigInt affine_stanley_monomial_coeff(const AffinePermutation& f, const Partition& mu) {
  return affine_stanley_monomial_coeff(f, mu.parts());
}

std::map<Partition, BigInt> affine_stanley_weight_table(const AffinePermutation& f, int k) {
  std::map<Partition, BigInt> table;
  for (const auto& mu : partitions_of(static_cast<int>(length(f)), k)) {
    BigInt c = affine_stanley_monomial_coeff(f, mu);
    if (c != 0) table.emplace(mu, std::move(c));
  }
  return table;
}

SchurVector affine_stanley_truncated(const AffinePermutation& f, int k,
                                     const OracleBudget& budget) {
  const Int len = length(f);
  if (len > budget.max_length)
    throw Error(ErrorCode::BudgetExceeded, budget_message("length", len, budget.max_length));
  if (k < 0 || k > f.n()) throw Error(ErrorCode::InvalidArgument, "k must lie in [0, n]");
  const auto table = affine_stanley_weight_table(f, k);

  // Coefficients are read at sorted contents only; check one rearrangement.
  for (const auto& [mu, c] : table) {
    std::vector<int> reversed(mu.parts().rbegin(), mu.parts().rend());
    if (reversed == mu.parts()) continue;
    if (affine_stanley_monomial_coeff(f, reversed) != c)
      throw Error(ErrorCode::NotSymmetric,
                  "coefficient at " + format_partition(mu) + " changes under reversal");
    break;
  }

  SchurVector out(k, f.n() - k);
  for (const auto& [lambda, c] : schur_expand_from_monomials(table, k))
    out.add_term(lambda, c);
  return out;
}

Partition lambda_max(const AffinePermutation& f) {
  return conjugate(Partition::sorted(rothe_diagram(f).column_sizes()));
}

BigInt reduced_word_count(const AffinePermutation& f) {
  std::map<std::vector<Int>, BigInt> memo;
  std::function<BigInt(const AffinePermutation&)> count =
      [&](const AffinePermutation& g) -> BigInt {
    if (length(g) == 0) return 1;
    if (auto it = memo.find(g.window_vector()); it != memo.end()) return it->second;
    BigInt out = 0;
    for (int i = 0; i < g.n(); ++i)
      if (g(i) > g(i + 1)) out += count(right_multiply_t(g, i, i + 1));
    memo.emplace(g.window_vector(), out);
    return out;
  };
  return count(shift_to_zero(f));
}

namespace {

struct TableauCells {
  std::vector<Cell> cells;
  // For each cell, constraints against other cells: (other, other must be
  // strictly greater) or (other, other must be at least as large).
  std::vector<std::vector<std::pair<std::size_t, bool>>> greater;
  std::vector<std::vector<std::pair<std::size_t, bool>>> smaller;
};

TableauCells tableau_cells(const CylindricSkewShape& shape) {
  TableauCells t;
  std::map<Cell, std::size_t> index;
  const int k = shape.k();
  const Int m = shape.m();
  for (int r = 0; r < k; ++r)
    for (Int c = shape.row_starts()[static_cast<std::size_t>(r)];
         c < shape.row_ends()[static_cast<std::size_t>(r)]; ++c) {
      index.emplace(Cell{r, c}, t.cells.size());
      t.cells.push_back({r, c});
    }
  auto canonical = [&](Int r, Int c) {
    const Int p = floor_div(r, k);
    return Cell{r - p * k, c - p * m};
  };
  t.greater.resize(t.cells.size());
  t.smaller.resize(t.cells.size());
  for (std::size_t i = 0; i < t.cells.size(); ++i) {
    const auto [r, c] = t.cells[i];
    // Rows weakly increase to the right.
    if (auto it = index.find({r, c + 1}); it != index.end()) {
      t.greater[i].push_back({it->second, false});
      t.smaller[it->second].push_back({i, false});
    }
    // Columns strictly increase upward.
    if (auto it = index.find(canonical(r - 1, c)); it != index.end()) {
      t.greater[i].push_back({it->second, true});
      t.smaller[it->second].push_back({i, true});
    }
  }
  return t;
}

}  // namespace

BigInt cylindric_tableau_count(const CylindricSkewShape& shape,
                               const std::vector<int>& content) {
  const TableauCells t = tableau_cells(shape);
  Int sum = 0;
  for (int c : content) sum += c;
  if (sum != static_cast<Int>(t.cells.size())) return 0;
  const int letters = static_cast<int>(content.size());
  std::vector<int> remaining = content;
  std::vector<int> value(t.cells.size(), 0);
  BigInt total = 0;
  std::function<void(std::size_t)> fill = [&](std::size_t i) {
    if (i == t.cells.size()) {
      ++total;
      return;
    }
    for (int v = 1; v <= letters; ++v) {
      if (remaining[static_cast<std::size_t>(v - 1)] == 0) continue;
      bool ok = true;
      for (const auto& [j, strict] : t.greater[i])
        if (value[j] && (strict ? value[j] <= v : value[j] < v)) ok = false;
      for (const auto& [j, strict] : t.smaller[i])
        if (value[j] && (strict ? value[j] >= v : value[j] > v)) ok = false;
      if (!ok) continue;
      value[i] = v;
      --remaining[static_cast<std::size_t>(v - 1)];
      fill(i + 1);
      ++remaining[static_cast<std::size_t>(v - 1)];
      value[i] = 0;
    }
  };
  fill(0);
  return total;
}

CylindricSchur cylindric_schur(const CylindricSkewShape& shape, const OracleBudget& budget) {
  const Int size = shape.size();
  if (size > budget.max_cylindric_cells)
    throw Error(ErrorCode::BudgetExceeded,
                budget_message("cell count", size, budget.max_cylindric_cells));
  const int k = shape.k();
  std::map<Partition, BigInt> table;
  for (const auto& mu : partitions_of(static_cast<int>(size), k)) {
    std::vector<int> content = mu.parts();
    content.resize(static_cast<std::size_t>(k), 0);
    BigInt c = cylindric_tableau_count(shape, content);
    if (c != 0) table.emplace(mu, std::move(c));
  }
  CylindricSchur out;
  out.terms = schur_expand_from_monomials(table, k);
  out.truncated = SchurVector(k, shape.m());
  for (const auto& [lambda, c] : out.terms) {
    if (!fits_in_rect(lambda, k, shape.m())) out.outside_rectangle = true;
    out.truncated.add_term(lambda, c);
  }
  return out;
}

namespace {

// Rank over Q of an integer matrix, by fraction-free elimination.
std::size_t integer_rank(std::vector<std::vector<BigInt>> rows) {
  std::size_t rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    const auto& p = rows[rank];
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][col] == 0) continue;
      const BigInt a = p[col];
      const BigInt b = rows[r][col];
      BigInt g = 0;
      for (std::size_t c = col; c < cols; ++c) {
        rows[r][c] = rows[r][c] * a - p[c] * b;
        g = gcd(g, rows[r][c]);
      }
      if (g > 1)
        for (std::size_t c = col; c < cols; ++c) rows[r][c] /= g;
    }
    ++rank;
  }
  return rank;
}

}  // namespace

std::map<Partition, BigInt> schur_module_character(const Diagram& d_in, int k,
                                                   const OracleBudget& budget) {
  const Diagram d = d_in.torus_image();
  const auto size = static_cast<Int>(d.size());
  if (size > budget.max_module_cells)
    throw Error(ErrorCode::BudgetExceeded,
                budget_message("cell count", size, budget.max_module_cells));
  if (k > 3) throw Error(ErrorCode::BudgetExceeded, "Schur module oracle needs k <= 3");
  if (k < 0) throw Error(ErrorCode::InvalidArgument, "k must be nonnegative");

  std::vector<Cell> cells(d.cells().begin(), d.cells().end());
  std::map<Cell, std::size_t> index;
  for (std::size_t i = 0; i < cells.size(); ++i) index[cells[i]] = i;
  std::vector<std::vector<std::size_t>> columns;
  for (const auto& [col, group] : d.columns()) {
    std::vector<std::size_t> ids;
    for (const auto& c : group) ids.push_back(index.at(c));
    if (static_cast<int>(ids.size()) > k) return {};
    columns.push_back(std::move(ids));
  }
  std::vector<std::vector<std::size_t>> rows;
  for (const auto& [row, group] : d.rows()) {
    std::vector<std::size_t> ids;
    for (const auto& c : group) ids.push_back(index.at(c));
    rows.push_back(std::move(ids));
  }

  // Column group as (cell map, sign) pairs.
  std::vector<std::pair<std::vector<std::size_t>, int>> column_group{
      {std::vector<std::size_t>(cells.size()), 1}};
  std::iota(column_group[0].first.begin(), column_group[0].first.end(), 0);
  for (const auto& col : columns) {
    std::vector<std::size_t> perm(col.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::pair<std::vector<std::size_t>, int>> next;
    do {
      int sign = 1;
      for (std::size_t i = 0; i < perm.size(); ++i)
        for (std::size_t j = i + 1; j < perm.size(); ++j)
          if (perm[i] > perm[j]) sign = -sign;
      for (const auto& [q, s] : column_group) {
        auto q2 = q;
        for (std::size_t i = 0; i < col.size(); ++i) q2[col[i]] = col[perm[i]];
        next.push_back({std::move(q2), s * sign});
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    column_group = std::move(next);
  }

  auto orbit_key = [&](const std::vector<int>& filling) {
    std::vector<int> key;
    for (const auto& row : rows) {
      std::vector<int> entries;
      for (std::size_t id : row) entries.push_back(filling[id]);
      std::sort(entries.begin(), entries.end());
      key.insert(key.end(), entries.begin(), entries.end());
      key.push_back(0);
    }
    return key;
  };

  std::map<Partition, BigInt> table;
  for (const auto& mu : partitions_of(static_cast<int>(size), k)) {
    std::vector<int> remaining = mu.parts();
    remaining.resize(static_cast<std::size_t>(k), 0);
    std::vector<int> filling(cells.size(), 0);
    std::vector<std::vector<int>> standard;
    // Column-strict fillings: each column gets an increasing set of letters.
    std::function<void(std::size_t, std::size_t, int)> fill = [&](std::size_t col,
                                                                  std::size_t pos, int low) {
      if (col == columns.size()) {
        standard.push_back(filling);
        return;
      }
      if (pos == columns[col].size()) {
        fill(col + 1, 0, 1);
        return;
      }
      for (int v = low; v <= k; ++v) {
        if (remaining[static_cast<std::size_t>(v - 1)] == 0) continue;
        --remaining[static_cast<std::size_t>(v - 1)];
        filling[columns[col][pos]] = v;
        fill(col, pos + 1, v + 1);
        ++remaining[static_cast<std::size_t>(v - 1)];
      }
    };
    fill(0, 0, 1);
    if (standard.empty()) continue;

    std::map<std::vector<int>, std::size_t> orbit_index;
    std::vector<std::map<std::size_t, BigInt>> sparse;
    for (const auto& t0 : standard) {
      std::map<std::size_t, BigInt> row;
      std::vector<int> moved(t0.size());
      for (const auto& [q, sign] : column_group) {
        for (std::size_t i = 0; i < t0.size(); ++i) moved[i] = t0[q[i]];
        const auto [it, inserted] = orbit_index.try_emplace(orbit_key(moved), orbit_index.size());
        row[it->second] += sign;
      }
      sparse.push_back(std::move(row));
    }
    std::vector<std::vector<BigInt>> dense(sparse.size(),
                                           std::vector<BigInt>(orbit_index.size(), 0));
    for (std::size_t r = 0; r < sparse.size(); ++r)
      for (const auto& [c, v] : sparse[r]) dense[r][c] = v;
    const std::size_t rank = integer_rank(std::move(dense));
    if (rank) table.emplace(mu, BigInt(rank));
  }
  return schur_expand_from_monomials(table, k);
}

std::vector<Permutation> k_bruhat_covers(const Permutation& w, int k) {
  std::vector<Permutation> out;
  const int n = static_cast<int>(w.size());
  for (int a = 1; a <= k; ++a)
    for (int b = k + 1; b <= n; ++b) {
      const int wa = w[static_cast<std::size_t>(a - 1)];
      const int wb = w[static_cast<std::size_t>(b - 1)];
      if (wa > wb) continue;
      bool cover = true;
      for (int c = a + 1; c < b && cover; ++c) {
        const int wc = w[static_cast<std::size_t>(c - 1)];
        if (wa < wc && wc < wb) cover = false;
      }
      if (cover) out.push_back(swap_positions(w, a, b));
    }
  return out;
}

namespace {

void require_same_size(const Permutation& u, const Permutation& v) {
  if (u.size() != v.size() || !is_permutation(u) || !is_permutation(v))
    throw Error(ErrorCode::InvalidArgument, "u and v must be permutations of the same [n]");
}

}  // namespace

BigInt count_maximal_chains(const Permutation& u, const Permutation& v, int k) {
  require_same_size(u, v);
  const int target = permutation_length(v);
  std::map<Permutation, BigInt> memo;
  std::function<BigInt(const Permutation&, int)> count = [&](const Permutation& w,
                                                            int len) -> BigInt {
    if (w == v) return 1;
    if (len >= target) return 0;
    if (auto it = memo.find(w); it != memo.end()) return it->second;
    BigInt out = 0;
    for (const auto& next : k_bruhat_covers(w, k)) out += count(next, len + 1);
    memo.emplace(w, out);
    return out;
  };
  return count(u, permutation_length(u));
}

bool is_k_bruhat_leq(const Permutation& u, const Permutation& v, int k) {
  return u == v || count_maximal_chains(u, v, k) > 0;
}

SchurVector chain_quasisym_schur(const Permutation& u, const Permutation& v, int k,
                                 ChainLabel labels, const OracleBudget& budget) {
  require_same_size(u, v);
  const int n = static_cast<int>(u.size());
  const int chain_length = permutation_length(v) - permutation_length(u);
  if (chain_length < 0 || !is_k_bruhat_leq(u, v, k))
    throw Error(ErrorCode::NotComparable,
                format_permutation(u) + " is not below " + format_permutation(v) +
                    " in the " + std::to_string(k) + "-Bruhat order");

  std::map<Permutation, bool> reach_memo;
  std::function<bool(const Permutation&)> reaches = [&](const Permutation& w) -> bool {
    if (w == v) return true;
    if (permutation_length(w) >= permutation_length(v)) return false;
    if (auto it = reach_memo.find(w); it != reach_memo.end()) return it->second;
    bool out = false;
    for (const auto& next : k_bruhat_covers(w, k))
      if (reaches(next)) {
        out = true;
        break;
      }
    reach_memo.emplace(w, out);
    return out;
  };

  std::map<std::uint32_t, BigInt> descent_sets;
  std::int64_t chains = 0;
  std::vector<int> word;
  std::function<void(const Permutation&)> walk = [&](const Permutation& w) {
    if (static_cast<int>(word.size()) == chain_length) {
      if (w != v) return;
      if (++chains > budget.max_chains)
        throw Error(ErrorCode::BudgetExceeded,
                    budget_message("chain count", chains, budget.max_chains));
      std::uint32_t des = 0;
      for (std::size_t i = 0; i + 1 < word.size(); ++i)
        if (word[i] > word[i + 1]) des |= 1u << (i + 1);
      descent_sets[des] += 1;
      return;
    }
    for (int a = 1; a <= k; ++a)
      for (int b = k + 1; b <= n; ++b) {
        const Permutation next = swap_positions(w, a, b);
        if (permutation_length(next) != permutation_length(w) + 1) continue;
        if (!reaches(next)) continue;
        word.push_back(labels == ChainLabel::Value ? w[static_cast<std::size_t>(b - 1)] : b);
        walk(next);
        word.pop_back();
      }
  };
  walk(u);

  const int vars = std::max(k, chain_length);
  std::map<Partition, BigInt> table;
  for (const auto& mu : partitions_of(chain_length, vars)) {
    std::uint32_t sums = 0;
    int partial = 0;
    for (int part : mu.parts()) {
      partial += part;
      if (partial < chain_length) sums |= 1u << partial;
    }
    BigInt c = 0;
    for (const auto& [des, count] : descent_sets)
      if ((des & ~sums) == 0) c += count;
    if (c != 0) table.emplace(mu, std::move(c));
  }
  SchurVector out(k, n - k);
  for (const auto& [lambda, c] : schur_expand_from_monomials(table, vars))
    out.add_term(lambda, c);
  return out;
}

}  // namespace posclass
