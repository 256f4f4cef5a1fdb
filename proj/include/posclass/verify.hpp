#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace posclass {

struct VerifyOptions {
  int max_n = 5;
  /// Random three-row diagrams compared against the rank oracle.
  int three_row_samples = 30;
  std::uint32_t seed = 1;
};

struct VerifyReport {
  /// Bounded affine permutations checked against the affine Stanley oracle.
  std::int64_t permutations = 0;
  /// One reproducing input per failed check.
  std::vector<std::string> failures;
  bool ok() const noexcept { return failures.empty(); }
};

/// Runs, in order: the affine permutation invariant sweep, oracle/main
/// agreement, omega duality, the toric pipeline on bundled shapes, and
/// three-row decomposition against the rank oracle. Progress goes to log.
VerifyReport run_verify(const VerifyOptions& options, std::ostream& log);

}  // namespace posclass
