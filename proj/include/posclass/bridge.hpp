#pragma once

#include <map>
#include <string>
#include <string_view>

#include "posclass/affperm.hpp"
#include "posclass/bigint.hpp"
#include "posclass/cylindric.hpp"
#include "posclass/diagram.hpp"
#include "posclass/lstree.hpp"
#include "posclass/partition.hpp"
#include "posclass/permutation.hpp"
#include "posclass/schur_vector.hpp"

namespace posclass {

/// [u, v]_k with u <=_k v in S_n.
class KBruhatInterval {
 public:
  /// Validates comparability by chain search. Throws NotComparable.
  KBruhatInterval(Permutation u, Permutation v, int k);
  /// "u=2,4,3,1,5 v=2,4,5,1,3 k=3"
  static KBruhatInterval parse(std::string_view text);

  int n() const noexcept { return static_cast<int>(u_.size()); }
  int k() const noexcept { return k_; }
  const Permutation& u() const noexcept { return u_; }
  const Permutation& v() const noexcept { return v_; }

 private:
  Permutation u_;
  Permutation v_;
  int k_;
};

/// g_{k,n} = (n+1) ... (n+k) (k+1) ... n.
AffinePermutation g_kn(int k, int n);

/// f_{u,v} = u g_{k,n} v^{-1}, checked to have length k(n-k) - l(v) + l(u).
AffinePermutation f_from_interval(const KBruhatInterval& interval);

/// lambda -> c^v_{u,w(lambda)}, read off the expansion of G_{f_{u,v}} at
/// the complement of lambda.
std::map<Partition, BigInt> schubert_times_schur(const KBruhatInterval& interval,
                                                 const ExpandOptions& options = {});

/// The k-Grassmannian permutation of S_n whose Rothe diagram is
/// equivalent to lambda. Throws RectangleOverflow.
Permutation grassmannian_permutation(const Partition& lambda, int k, int n);

/// f_Theta normalized into Bound(k, n), checked to have Rothe diagram
/// equivalent to Theta when Theta is toric. Throws NormalizationFailed.
AffinePermutation f_from_cylindric_shape(const CylindricSkewShape& shape);

/// Schur expansion of the toric Schur polynomial through the L-S tree.
/// Throws NotToric.
SchurVector toric_gw_expand(const CylindricSkewShape& shape,
                            const ExpandOptions& options = {});

/// Young diagram of lambda, rows 1..l and columns 1..lambda_i.
Diagram young_diagram(const Partition& lambda);

/// Schur expansion of ch V[D] for a planar diagram with at most three
/// nonempty rows, in dim_v >= 3 variables. Throws TooManyRows.
std::map<Partition, BigInt> three_row_decompose(const Diagram& d, int dim_v);

}  // namespace posclass
