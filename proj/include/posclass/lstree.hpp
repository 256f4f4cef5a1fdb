#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "posclass/affperm.hpp"
#include "posclass/schur_vector.hpp"

namespace posclass {

struct LsChildren {
  std::vector<AffinePermutation> plus;
  std::vector<AffinePermutation> minus;
};

/// Children of f in the bounded affine L-S tree: with (r, s) the maximal
/// inversion and h = f t_rs, plus = BPhi^-(h, r) and minus = BPhi^+(h, r)
/// without f. Both lists are sorted by window. Every child is checked
/// against the termination measure (window inversions, then lex order).
/// Throws NotBounded, or ZeroGrassmannianLeaf when f is a leaf.
LsChildren ls_children(const AffinePermutation& f, int k);

struct LsStats {
  /// Vertices of the full tree, repeated labels counted separately.
  std::int64_t node_count = 0;
  /// Distinct vertex labels, i.e. memo entries.
  std::int64_t distinct_nodes = 0;
  /// Edges on the longest root-to-leaf path.
  std::int64_t max_depth = 0;
  /// Child references resolved from an already computed label.
  std::int64_t memo_hits = 0;
};

struct LsExpansion {
  AffinePermutation f;  // the normalized root
  int k = 0;
  int n = 0;
  SchurVector result{0, 0};
  LsStats stats;
};

struct ExpandOptions {
  /// Worker threads for the root's subtrees. 1 runs single-threaded.
  int threads = 1;
};

/// Moves f into its T-orbit representative with av = k.
AffinePermutation normalize_to_class(const AffinePermutation& f, int k);

/// G_f in Lambda^{n-k}(k) as the signed sum over leaves of the tree.
/// A T-orbit representative is normalized first; throws NotBounded if the
/// result is not in Bound(k, n), PeriodMismatch if n differs from f's period.
LsExpansion expand(const AffinePermutation& f, int k, int n,
                   const ExpandOptions& options = {});

/// Preorder listing of the whole tree, one "+window" or "-window" line per
/// vertex with two spaces per depth; leaves end in " → leaf [shape]".
std::string trace(const AffinePermutation& f, int k, int n);

nlohmann::json expansion_to_json(const LsExpansion& e);

}  // namespace posclass
