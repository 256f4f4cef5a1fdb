#include <doctest.h>

#include <random>

#include "posclass/bridge.hpp"
#include "posclass/error.hpp"
#include "posclass/oracle.hpp"
#include "support.hpp"

using namespace posclass;
namespace ts = testsupport;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::InvalidArgument;
}

std::vector<KBruhatInterval> all_intervals(int n) {
  std::vector<KBruhatInterval> out;
  for (int k = 1; k < n; ++k)
    for (const auto& u : all_permutations(n))
      for (const auto& v : all_permutations(n))
        if (is_k_bruhat_leq(u, v, k)) out.emplace_back(u, v, k);
  return out;
}

const char* kExampleShape = "lower=VHVVHHVHH upper=HVHHVHVHV offset=1";

}  // namespace

TEST_CASE("intervals") {
  const auto iv = KBruhatInterval::parse("u=2,4,3,1,5 v=2,4,5,1,3 k=3");
  CHECK(iv.n() == 5);
  CHECK(iv.k() == 3);
  CHECK(code_of([] { KBruhatInterval({2, 4, 3, 1, 5}, {4, 2, 3, 1, 5}, 3); }) ==
        ErrorCode::NotComparable);
  CHECK(code_of([] { KBruhatInterval::parse("u=1,2 v=1,2"); }) == ErrorCode::ParseError);

  const auto id = identity_permutation(4);
  CHECK(f_from_interval(KBruhatInterval(id, id, 2)).window_vector() == std::vector<Int>{5, 6, 3, 4});
  for (const auto& u : all_permutations(4)) {
    const auto f = f_from_interval(KBruhatInterval(u, u, 2));
    CHECK(length(f) == 4);
  }
}

TEST_CASE("cover shift formula") {
  for (const auto& iv : all_intervals(4)) {
    const int n = iv.n();
    const auto f = f_from_interval(iv);
    for (int i = 1; i <= iv.k(); ++i)
      for (int j = iv.k() + 1; j <= n; ++j) {
        const auto u2 = swap_positions(iv.u(), i, j);
        if (permutation_length(u2) != permutation_length(iv.u()) + 1) continue;
        if (!is_k_bruhat_leq(u2, iv.v(), iv.k())) continue;
        const auto f2 = f_from_interval(KBruhatInterval(u2, iv.v(), iv.k()));
        const Int vi = iv.v()[static_cast<std::size_t>(i - 1)];
        const Int vj = iv.v()[static_cast<std::size_t>(j - 1)];
        CHECK(f2 == right_multiply_t(f, vi - n, vj));
      }
  }
}

TEST_CASE("Schubert times Schur") {
  for (const auto& u : all_permutations(4)) {
    const auto c = schubert_times_schur(KBruhatInterval(u, u, 2));
    CHECK(c == std::map<Partition, BigInt>{{Partition{}, 1}});
  }
  for (const auto& iv : all_intervals(4)) {
    const auto c = schubert_times_schur(iv);
    BigInt total = 0;
    for (const auto& [lambda, coeff] : c) {
      CHECK(coeff > 0);
      total += coeff * syt_count(lambda);
    }
    CHECK(total == count_maximal_chains(iv.u(), iv.v(), iv.k()));
  }
}

TEST_CASE("poset injection and 0-Bruhat covers") {
  for (int k = 1; k < 4; ++k) {
    std::map<std::vector<Int>, std::pair<Permutation, Permutation>> seen;
    for (const auto& iv : all_intervals(4)) {
      if (iv.k() != k) continue;
      const auto f = f_from_interval(iv);
      // Equal windows must come from equivalent intervals, which share
      // u v^{-1}.
      auto [it, inserted] = seen.try_emplace(f.window_vector(), iv.u(), iv.v());
      if (!inserted) {
        const auto& [u0, v0] = it->second;
        const auto a = permutation_inverse(v0);
        const auto b = permutation_inverse(iv.v());
        Permutation x(4), y(4);
        for (int i = 0; i < 4; ++i) {
          x[static_cast<std::size_t>(i)] = u0[static_cast<std::size_t>(a[static_cast<std::size_t>(i)] - 1)];
          y[static_cast<std::size_t>(i)] = iv.u()[static_cast<std::size_t>(b[static_cast<std::size_t>(i)] - 1)];
        }
        CHECK(x == y);
      }
    }
  }
  // Bounded 0-Bruhat covers of f_{u,v} <-> k-Bruhat covers u < u' <=_k v.
  for (const auto& iv : all_intervals(4)) {
    const auto f = f_from_interval(iv);
    std::set<std::vector<Int>> from_kbruhat;
    for (const auto& u2 : k_bruhat_covers(iv.u(), iv.k()))
      if (is_k_bruhat_leq(u2, iv.v(), iv.k()))
        from_kbruhat.insert(f_from_interval(KBruhatInterval(u2, iv.v(), iv.k())).window_vector());
    std::set<std::vector<Int>> from_affine;
    for (Int i = 1; i <= 4; ++i)
      for (Int j = 1; j <= 4; ++j) {
        if (i == j) continue;
        const auto g = right_multiply_t(f, i - 4, j);
        if (length(g) == length(f) + 1 && bounded_class(g) == iv.k())
          from_affine.insert(g.window_vector());
      }
    CHECK(from_kbruhat == from_affine);
  }
}

TEST_CASE("Grassmannian permutations") {
  CHECK(grassmannian_permutation({}, 2, 4) == identity_permutation(4));
  CHECK(grassmannian_permutation(Partition{1}, 1, 2) == Permutation{2, 1});
  // Enumerate S_4 for the one with descent set {2} and sorted code (2,1).
  Permutation expected;
  for (const auto& w : all_permutations(4)) {
    bool descents_ok = true;
    for (int i = 1; i < 4; ++i)
      if ((w[static_cast<std::size_t>(i - 1)] > w[static_cast<std::size_t>(i)]) != (i == 2))
        descents_ok = false;
    if (!descents_ok) continue;
    std::vector<int> code;
    for (std::size_t i = 0; i < 4; ++i) {
      int c = 0;
      for (std::size_t j = i + 1; j < 4; ++j) c += w[i] > w[j];
      code.push_back(c);
    }
    if (Partition::sorted(code) == Partition{2, 1}) expected = w;
  }
  CHECK(grassmannian_permutation(Partition{2, 1}, 2, 4) == expected);
  CHECK(code_of([] { grassmannian_permutation(Partition{3}, 2, 4); }) ==
        ErrorCode::RectangleOverflow);
}

TEST_CASE("cylindric shapes") {
  const auto ex = CylindricSkewShape::parse(kExampleShape);
  CHECK(ex.k() == 4);
  CHECK(ex.n() == 9);
  CHECK(ex.size() == 12);
  CHECK(ex.is_toric());
  CHECK(ex.row_starts() == std::vector<Int>{0, 1, 1, 3});
  CHECK(ex.row_ends() == std::vector<Int>{2, 4, 5, 6});
  const auto redrawn = CylindricSkewShape::from_row_intervals(4, 9, {0, 1, 1, 3}, {2, 4, 5, 6});
  CHECK(redrawn.row_starts() == ex.row_starts());
  CHECK(redrawn.row_ends() == ex.row_ends());
  CHECK(toric_gw_expand(redrawn) == toric_gw_expand(ex));
  CHECK(code_of([] { CylindricSkewShape::parse("lower=VVHX upper=HHVV offset=0"); }) ==
        ErrorCode::ParseError);
  CHECK(code_of([] { CylindricSkewShape::parse("lower=HHVV upper=VVHH offset=0"); }) ==
        ErrorCode::InvalidArgument);
  CHECK(code_of([] { CylindricSkewShape::parse("lower=VVH upper=VHH offset=0"); }) ==
        ErrorCode::InvalidArgument);

  const auto f = f_from_cylindric_shape(ex);
  CHECK(f.window_vector() == std::vector<Int>{7, 4, 10, 12, 6, 8, 14, 9, 11});
  CHECK(bounded_class(f) == 4);
  CHECK(equivalent(rothe_diagram(f), ex.diagram()));

  const auto rect = CylindricSkewShape::parse("lower=VVHHH upper=HHHVV offset=0");
  const auto g = f_from_cylindric_shape(rect);
  CHECK(length(g) == 6);
  CHECK(toric_gw_expand(rect) == SchurVector::basis(2, 3, Partition{3, 3}));
}

TEST_CASE("toric pipeline against the tableau oracle") {
  CHECK(toric_gw_expand(CylindricSkewShape::parse(kExampleShape)) ==
        cylindric_schur(CylindricSkewShape::parse(kExampleShape)).truncated);
  // Every toric shape on C_{k,n-k}, k <= 3, n <= 6, plus random ones up to
  // n = 9, with at most 12 cells.
  int shapes = 0;
  auto check_shape = [&](const CylindricSkewShape& s) {
    if (!s.is_toric() || s.size() > 12) return;
    ++shapes;
    const auto oracle = cylindric_schur(s);
    CHECK_FALSE(oracle.outside_rectangle);
    CHECK(toric_gw_expand(s) == oracle.truncated);
  };
  for (int n = 2; n <= 6; ++n)
    for (int k = 1; k < n && k <= 3; ++k) {
      const Int m = n - k;
      std::vector<Int> a(static_cast<std::size_t>(k)), b(static_cast<std::size_t>(k));
      std::function<void(int)> pick_b = [&](int r) {
        if (r == k) {
          if (b.back() <= b.front() + m) check_shape(CylindricSkewShape::from_row_intervals(k, n, a, b));
          return;
        }
        const Int lo = std::max(a[static_cast<std::size_t>(r)], r ? b[static_cast<std::size_t>(r - 1)] : a[0]);
        for (Int x = lo; x <= a[static_cast<std::size_t>(r)] + m; ++x) {
          b[static_cast<std::size_t>(r)] = x;
          pick_b(r + 1);
        }
      };
      std::function<void(int)> pick_a = [&](int r) {
        if (r == k) {
          pick_b(0);
          return;
        }
        const Int lo = r ? a[static_cast<std::size_t>(r - 1)] : 0;
        for (Int x = lo; x <= m && (r > 0 || x == 0); ++x) {
          a[static_cast<std::size_t>(r)] = x;
          pick_a(r + 1);
        }
      };
      pick_a(0);
    }
  CHECK(shapes > 50);

  std::mt19937 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 5 + static_cast<int>(rng() % 5);
    const int k = 2 + static_cast<int>(rng() % 3);
    if (k >= n) continue;
    std::string lower(static_cast<std::size_t>(n), 'H'), upper(static_cast<std::size_t>(n), 'H');
    std::vector<int> pos(static_cast<std::size_t>(n));
    std::iota(pos.begin(), pos.end(), 0);
    std::shuffle(pos.begin(), pos.end(), rng);
    for (int i = 0; i < k; ++i) lower[static_cast<std::size_t>(pos[static_cast<std::size_t>(i)])] = 'V';
    std::shuffle(pos.begin(), pos.end(), rng);
    for (int i = 0; i < k; ++i) upper[static_cast<std::size_t>(pos[static_cast<std::size_t>(i)])] = 'V';
    for (Int offset = 0; offset <= n - k; ++offset) {
      try {
        check_shape(CylindricSkewShape::from_words(lower, upper, offset));
      } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::InvalidArgument);  // crossing paths
      }
    }
  }
}

TEST_CASE("planar skew shapes give skew Schur functions") {
  // (3,2)/(1) and (3,3,1)/(2,1) drawn as cylindric shapes in French
  // orientation, compared with brute-force skew tableaux.
  struct Case {
    std::vector<int> lambda, mu;
    int k, n;
  };
  for (const auto& c : {Case{{3, 2}, {1}, 2, 6}, Case{{3, 3, 1}, {2, 1}, 3, 7}, Case{{2, 2}, {}, 2, 4}}) {
    std::vector<Int> a, b;
    // Row R from the top is English row k - 1 - R.
    for (int r = c.k - 1; r >= 0; --r) {
      const auto row = static_cast<std::size_t>(r);
      a.push_back(row < c.mu.size() ? c.mu[row] : 0);
      b.push_back(row < c.lambda.size() ? c.lambda[row] : 0);
    }
    // French rows read bottom to top increase leftward; mirror columns.
    std::vector<Int> a2, b2;
    const Int width = c.n - c.k;
    for (std::size_t i = 0; i < a.size(); ++i) {
      a2.push_back(width - b[a.size() - 1 - i]);
      b2.push_back(width - a[a.size() - 1 - i]);
    }
    const auto shape = CylindricSkewShape::from_row_intervals(c.k, c.n, a2, b2);
    std::map<Partition, BigInt> expected_monomials;
    int size = 0;
    for (std::size_t i = 0; i < c.lambda.size(); ++i)
      size += c.lambda[i] - (i < c.mu.size() ? c.mu[i] : 0);
    for (const auto& alpha : ts::partitions(size, c.k)) {
      const auto count = ts::skew_ssyt_count(c.lambda, c.mu, alpha);
      if (count) expected_monomials[Partition(alpha)] = count;
    }
    const auto expected = schur_expand_from_monomials(expected_monomials, c.k);
    SchurVector want(c.k, c.n - c.k);
    for (const auto& [lambda, coeff] : expected) want.add_term(lambda, coeff);
    CHECK(toric_gw_expand(shape) == want);
    CHECK(cylindric_schur(shape).terms == expected);
  }
}

TEST_CASE("non-toric shapes") {
  const auto wrap = CylindricSkewShape::from_row_intervals(2, 4, {0, 0}, {2, 2});
  CHECK(wrap.is_toric());
  const auto bad = CylindricSkewShape::from_row_intervals(2, 4, {0, 1}, {3, 3});
  CHECK_FALSE(bad.is_toric());
  CHECK(code_of([&] { toric_gw_expand(bad); }) == ErrorCode::NotToric);
  CHECK(cylindric_schur(bad).terms.empty());
}

TEST_CASE("three-row decomposition") {
  // (3,2)/(1): rows {2,3} and {1,2}.
  const auto skew = Diagram::planar({{1, 2}, {1, 3}, {2, 1}, {2, 2}});
  CHECK(three_row_decompose(skew, 3) ==
        std::map<Partition, BigInt>{{Partition{3, 1}, 1}, {Partition{2, 2}, 1}});
  for (int size = 1; size <= 7; ++size)
    for (const auto& lambda : partitions_of(size, 3))
      CHECK(three_row_decompose(young_diagram(lambda), 4) ==
            std::map<Partition, BigInt>{{lambda, 1}});
  CHECK(code_of([] {
          three_row_decompose(Diagram::planar({{1, 1}, {2, 1}, {3, 1}, {4, 1}}), 3);
        }) == ErrorCode::TooManyRows);

  std::mt19937 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    std::set<Cell> cells;
    const int target = 1 + static_cast<int>(rng() % 6);
    while (static_cast<int>(cells.size()) < target)
      cells.insert({1 + static_cast<int>(rng() % 3), 1 + static_cast<int>(rng() % 5)});
    const Diagram d = Diagram::planar(cells);
    const auto base = three_row_decompose(d, 3);
    CHECK(base == schur_module_character(d, 3));
    // Adding a full column shifts every term by (1,1,1).
    auto with_column = cells;
    for (Int r = 1; r <= 3; ++r) with_column.insert({r, 99});
    std::map<Partition, BigInt> shifted;
    for (const auto& [lambda, c] : base) {
      std::vector<int> parts = lambda.parts();
      parts.resize(3, 0);
      for (int& x : parts) ++x;
      shifted[Partition(parts)] = c;
    }
    CHECK(three_row_decompose(Diagram::planar(with_column), 3) == shifted);
  }
}
