#include "posclass/bridge.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "posclass/error.hpp"
#include "posclass/oracle.hpp"

namespace posclass {

KBruhatInterval::KBruhatInterval(Permutation u, Permutation v, int k)
    : u_(std::move(u)), v_(std::move(v)), k_(k) {
  if (u_.size() != v_.size() || !is_permutation(u_) || !is_permutation(v_))
    throw Error(ErrorCode::InvalidArgument, "u and v must be permutations of the same [n]");
  if (k_ < 0 || k_ > n())
    throw Error(ErrorCode::InvalidArgument, "k must lie in [0, n]");
  if (!is_k_bruhat_leq(u_, v_, k_))
    throw Error(ErrorCode::NotComparable,
                format_permutation(u_) + " is not below " + format_permutation(v_) +
                    " in the " + std::to_string(k_) + "-Bruhat order");
}

KBruhatInterval KBruhatInterval::parse(std::string_view text) {
  std::optional<Permutation> u, v;
  std::optional<int> k;
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) {
    const auto eq = token.find('=');
    if (eq == std::string::npos)
      throw Error(ErrorCode::ParseError, "expected key=value, got '" + token + "'");
    const std::string key = token.substr(0, eq);
    const std::string value = token.substr(eq + 1);
    if (key == "u") {
      u = parse_permutation(value);
    } else if (key == "v") {
      v = parse_permutation(value);
    } else if (key == "k") {
      try {
        std::size_t used = 0;
        k = std::stoi(value, &used);
        if (used != value.size()) throw std::invalid_argument(value);
      } catch (const std::exception&) {
        throw Error(ErrorCode::ParseError, "bad k '" + value + "'");
      }
    } else {
      throw Error(ErrorCode::ParseError, "unknown interval key '" + key + "'");
    }
  }
  if (!u || !v || !k) throw Error(ErrorCode::ParseError, "interval needs u=, v= and k=");
  return KBruhatInterval(std::move(*u), std::move(*v), *k);
}

AffinePermutation g_kn(int k, int n) {
  std::vector<Int> w;
  for (int i = 1; i <= k; ++i) w.push_back(n + i);
  for (int i = k + 1; i <= n; ++i) w.push_back(i);
  return AffinePermutation::from_window(n, std::move(w));
}

AffinePermutation f_from_interval(const KBruhatInterval& interval) {
  const int n = interval.n();
  const int k = interval.k();
  const AffinePermutation f =
      compose(compose(to_affine(interval.u()), g_kn(k, n)), inverse(to_affine(interval.v())));
  const Int expected = static_cast<Int>(k) * (n - k) - permutation_length(interval.v()) +
                       permutation_length(interval.u());
  if (length(f) != expected || bounded_class(f) != k)
    throw Error(ErrorCode::InvariantViolation,
                "f_{u,v} = " + format_window(f) + " has the wrong length or class");
  return f;
}

std::map<Partition, BigInt> schubert_times_schur(const KBruhatInterval& interval,
                                                 const ExpandOptions& options) {
  const int n = interval.n();
  const int k = interval.k();
  const LsExpansion e = expand(f_from_interval(interval), k, n, options);
  std::map<Partition, BigInt> out;
  for (const auto& [mu, c] : e.result.terms()) out.emplace(complement(mu, k, n - k), c);
  return out;
}

Diagram young_diagram(const Partition& lambda) {
  std::set<Cell> cells;
  for (int i = 0; i < lambda.length(); ++i)
    for (int j = 1; j <= lambda[i]; ++j) cells.insert({i + 1, j});
  return Diagram::planar(std::move(cells));
}

Permutation grassmannian_permutation(const Partition& lambda, int k, int n) {
  if (k < 0 || k > n) throw Error(ErrorCode::InvalidArgument, "k must lie in [0, n]");
  if (!fits_in_rect(lambda, k, n - k))
    throw Error(ErrorCode::RectangleOverflow,
                format_partition(lambda) + " does not fit in a " + std::to_string(k) + "x" +
                    std::to_string(n - k) + " rectangle");
  Permutation w;
  std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
  for (int i = 1; i <= k; ++i) {
    const int value = i + lambda[k - i];
    w.push_back(value);
    used[static_cast<std::size_t>(value)] = true;
  }
  for (int value = 1; value <= n; ++value)
    if (!used[static_cast<std::size_t>(value)]) w.push_back(value);
  if (!equivalent(permutation_rothe_diagram(w), young_diagram(lambda)))
    throw Error(ErrorCode::InvariantViolation,
                "Rothe diagram of " + format_permutation(w) + " is not " +
                    format_partition(lambda));
  return w;
}

AffinePermutation f_from_cylindric_shape(const CylindricSkewShape& shape) {
  const int n = shape.n();
  const int k = shape.k();
  std::vector<Int> window(static_cast<std::size_t>(n));
  Int col = 0;
  Int row = 0;
  for (int t = 0; t < n; ++t) {
    if (shape.lower()[static_cast<std::size_t>(t)] == 'V') {
      window[static_cast<std::size_t>(t)] = shape.upper_vertical_label(row);
      ++row;
    } else {
      window[static_cast<std::size_t>(t)] = shape.upper_horizontal_label(col);
      ++col;
    }
  }
  const AffinePermutation raw = AffinePermutation::from_window(n, std::move(window));
  const AffinePermutation f = normalize_to_class(raw, k);
  if (bounded_class(f) != k)
    throw Error(ErrorCode::NormalizationFailed,
                "no shift of " + format_window(raw) + " lies in Bound(" + std::to_string(k) +
                    "," + std::to_string(n) + ")");
  if (shape.is_toric() && !equivalent(rothe_diagram(f), shape.diagram()))
    throw Error(ErrorCode::InvariantViolation,
                "Rothe diagram of " + format_window(f) + " is not equivalent to the shape");
  return f;
}

SchurVector toric_gw_expand(const CylindricSkewShape& shape, const ExpandOptions& options) {
  if (!shape.is_toric())
    throw Error(ErrorCode::NotToric, format_shape(shape) + " is not toric");
  const AffinePermutation f = f_from_cylindric_shape(shape);
  if (length(f) != shape.size())
    throw Error(ErrorCode::InvariantViolation, "length of f_Theta differs from |Theta|");
  return expand(f, shape.k(), shape.n(), options).result;
}

std::map<Partition, BigInt> three_row_decompose(const Diagram& d_in, int dim_v) {
  if (dim_v < 3) throw Error(ErrorCode::InvalidArgument, "dim V must be at least 3");
  const Diagram d = d_in.torus_image();
  const auto rows = d.rows();
  if (rows.size() > 3)
    throw Error(ErrorCode::TooManyRows,
                "diagram has " + std::to_string(rows.size()) + " nonempty rows");
  std::map<Int, int> row_index;
  for (const auto& [r, cells] : rows) row_index.emplace(r, static_cast<int>(row_index.size()));

  // Column types by occupied rows: [1], [1,2], [2], [2,3], [3], [1,3].
  std::array<Int, 6> type{};
  Int full = 0;
  for (const auto& [c, cells] : d.columns()) {
    unsigned mask = 0;
    for (const auto& cell : cells) mask |= 1u << row_index.at(cell.first);
    switch (mask) {
      case 0b001: ++type[0]; break;
      case 0b011: ++type[1]; break;
      case 0b010: ++type[2]; break;
      case 0b110: ++type[3]; break;
      case 0b100: ++type[4]; break;
      case 0b101: ++type[5]; break;
      case 0b111: ++full; break;
      default: break;
    }
  }
  const Int p = [&] {
    Int total = 0;
    for (Int t : type) total += t;
    return total;
  }();

  std::map<Partition, BigInt> out;
  auto emit = [&](const Partition& lambda, const BigInt& c) {
    std::vector<int> parts = lambda.parts();
    parts.resize(3, 0);
    for (int& x : parts) x += static_cast<int>(full);
    const Partition shifted = Partition::sorted(std::move(parts));
    if (shifted.length() <= dim_v) out[shifted] += c;
  };
  if (p == 0) {
    emit(Partition{}, 1);
    return out;
  }
  // Sorted columns, the type-six ones moved to rows 3 and 4, read as a
  // toric shape in C_{3,p}.
  const auto [t1, t2, t3, t4, t5, t6] = type;
  (void)t5;
  const std::vector<Int> a{1 - t6, 1 + t1, 1 + t1 + t2 + t3};
  const std::vector<Int> b{1 + t1 + t2, 1 + t1 + t2 + t3 + t4, 1 + p};
  const auto shape = CylindricSkewShape::from_row_intervals(3, static_cast<int>(3 + p), a, b);
  const SchurVector expansion = toric_gw_expand(shape);
  for (const auto& [lambda, c] : expansion.terms()) emit(lambda, c);
  return out;
}

}  // namespace posclass
