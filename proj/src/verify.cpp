#include "posclass/verify.hpp"

#include <random>

#include "posclass/bridge.hpp"
#include "posclass/error.hpp"
#include "posclass/lstree.hpp"
#include "posclass/oracle.hpp"

namespace posclass {

namespace {

std::string window_args(const AffinePermutation& f, int k) {
  return "--n " + std::to_string(f.n()) + " --k " + std::to_string(k) + " --window " +
         format_window(f);
}

bool affperm_invariants_hold(const AffinePermutation& f, int k) {
  const Diagram d = rothe_diagram(f);
  if (static_cast<Int>(d.size()) != length(f)) return false;
  if (rothe_diagram(inverse(f)) != d.transpose()) return false;
  const auto rows = d.rows();
  const auto c = code(f);
  for (int i = 1; i <= f.n(); ++i) {
    const auto it = rows.find(i % f.n());
    const Int size = it == rows.end() ? 0 : static_cast<Int>(it->second.size());
    if (size != c.entries[static_cast<std::size_t>(i - 1)]) return false;
  }
  if (av(f) != k || !d.is_toric()) return false;
  for (int j = 0; j <= k; ++j)
    if (in_t_bound(f, j) != diagram_within_bounds(f, j)) return false;
  const AffinePermutation shifted = compose(tau_power(f.n(), 3), f);
  return in_t_bound(shifted, k) && diagram_within_bounds(shifted, k);
}

struct BundledShape {
  const char* text;
};

constexpr BundledShape kBundledShapes[] = {
    {"lower=VHVVHHVHH upper=HVHHVHVHV offset=1"},
    {"lower=VVHHH upper=HHHVV offset=0"},
    {"lower=VHVHH upper=HVHHV offset=1"},
    {"lower=VHHVH upper=HVHVH offset=1"},
    {"lower=VHVHVH upper=HVHVHV offset=0"},
};

}  // namespace

VerifyReport run_verify(const VerifyOptions& options, std::ostream& log) {
  VerifyReport report;
  auto guarded = [&](const std::string& repro, auto&& check) {
    try {
      if (!check()) report.failures.push_back(repro);
    } catch (const Error& e) {
      report.failures.push_back(repro + " (" + e.what() + ")");
    }
  };

  std::int64_t checked = 0;
  for (int n = 1; n <= options.max_n; ++n)
    for (int k = 0; k <= n; ++k)
      for (const auto& f : enumerate_bounded(k, n)) {
        ++checked;
        guarded("affperm " + window_args(f, k), [&] { return affperm_invariants_hold(f, k); });
      }
  log << "affperm invariants: " << checked << " checked\n";

  checked = 0;
  for (int n = 1; n <= options.max_n; ++n)
    for (int k = 0; k <= n; ++k)
      for (const auto& f : enumerate_bounded(k, n)) {
        ++checked;
        guarded("oracle " + window_args(f, k), [&] {
          const SchurVector g = expand(f, k, n).result;
          return is_schur_positive(g) && !g.is_zero() && g == affine_stanley_truncated(f, k);
        });
      }
  report.permutations = checked;
  log << "oracle agreement: " << checked << " checked\n";

  checked = 0;
  for (int n = 1; n <= options.max_n; ++n)
    for (int k = 0; k <= n; ++k)
      for (const auto& f : enumerate_bounded(k, n)) {
        ++checked;
        guarded("omega " + window_args(f, k), [&] {
          const AffinePermutation g = normalize_to_class(inverse(f), n - k);
          return omega_dual(expand(f, k, n).result) == expand(g, n - k, n).result;
        });
      }
  log << "omega duality: " << checked << " checked\n";

  checked = 0;
  for (const auto& bundled : kBundledShapes) {
    ++checked;
    guarded(std::string("toric ") + bundled.text, [&] {
      const auto shape = CylindricSkewShape::parse(bundled.text);
      const CylindricSchur oracle = cylindric_schur(shape);
      return !oracle.outside_rectangle && toric_gw_expand(shape) == oracle.truncated;
    });
  }
  log << "toric shapes: " << checked << " checked\n";

  std::mt19937 rng(options.seed);
  for (int sample = 0; sample < options.three_row_samples; ++sample) {
    std::set<Cell> cells;
    const int target = std::uniform_int_distribution<int>(1, 7)(rng);
    while (static_cast<int>(cells.size()) < target)
      cells.insert({std::uniform_int_distribution<int>(1, 3)(rng),
                    std::uniform_int_distribution<int>(1, 5)(rng)});
    const Diagram d = Diagram::planar(cells);
    std::string repro = "three-row --diagram '";
    for (const auto& [r, c] : cells) repro += std::to_string(r) + ":" + std::to_string(c) + ";";
    repro += "'";
    guarded(repro, [&] { return three_row_decompose(d, 3) == schur_module_character(d, 3); });
  }
  log << "three-row diagrams: " << options.three_row_samples << " checked\n";
  return report;
}

}  // namespace posclass
