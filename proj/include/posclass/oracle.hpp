#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "posclass/affperm.hpp"
#include "posclass/bigint.hpp"
#include "posclass/cylindric.hpp"
#include "posclass/diagram.hpp"
#include "posclass/partition.hpp"
#include "posclass/permutation.hpp"
#include "posclass/schur_vector.hpp"

namespace posclass {

/// Brute-force cross-checks. Everything here enumerates directly and is
/// only meant for small inputs; each entry point enforces a budget.

/// A proper subset of Z/nZ.
struct CyclicSubset {
  int n = 0;
  std::vector<int> members;  // residues in [0, n)
};

/// The cyclically decreasing product of {s_i : i in S}. Throws FullSubset.
AffinePermutation cyclically_decreasing_from_subset(const CyclicSubset& s);

/// Number of length-additive factorizations tau^{-av} f = f_1 ... f_p into
/// cyclically decreasing factors with l(f_i) = content[i]. The content may
/// be any composition. Throws SizeMismatch if it does not sum to l(f).
BigInt affine_stanley_monomial_coeff(const AffinePermutation& f,
                                     const std::vector<int>& content);
BigInt affine_stanley_monomial_coeff(const AffinePermutation& f, const Partition& mu);

/// Monomial coefficients of F~_f(x_1..x_k) at every partition of l(f)
/// with at most k parts (zero entries omitted).
std::map<Partition, BigInt> affine_stanley_weight_table(const AffinePermutation& f, int k);

struct OracleBudget {
  int max_length = 10;           // affine Stanley: l(f)
  int max_cylindric_cells = 14;  // cylindric tableaux
  int max_module_cells = 8;      // Schur module ranks
  std::int64_t max_chains = 200000;
};

/// trunc_{k,n-k} F~_f. Throws BudgetExceeded past max_length.
SchurVector affine_stanley_truncated(const AffinePermutation& f, int k,
                                     const OracleBudget& budget = {});

/// The partition whose columns are the sorted column sizes of D(f).
Partition lambda_max(const AffinePermutation& f);

/// Reduced words of tau^{-av} f, counted through right descents.
BigInt reduced_word_count(const AffinePermutation& f);

struct CylindricSchur {
  /// Schur expansion of s_Theta(x_1..x_k), every term with at most k rows.
  std::map<Partition, BigInt> terms;
  /// The same in Lambda^{n-k}(k).
  SchurVector truncated{0, 0};
  /// Some term does not fit in the k x (n-k) rectangle.
  bool outside_rectangle = false;
};

/// Number of semistandard cylindric tableaux of the shape with entries in
/// [1, k] and the given content.
BigInt cylindric_tableau_count(const CylindricSkewShape& shape,
                               const std::vector<int>& content);
CylindricSchur cylindric_schur(const CylindricSkewShape& shape,
                               const OracleBudget& budget = {});

/// ch V[D] in k variables from weight-space ranks of the Young symmetrizer.
/// Requires k <= 3 and |D| within budget (BudgetExceeded otherwise).
std::map<Partition, BigInt> schur_module_character(const Diagram& d, int k,
                                                   const OracleBudget& budget = {});

/// Maximal chains from u to v in the k-Bruhat order of S_n.
BigInt count_maximal_chains(const Permutation& u, const Permutation& v, int k);
bool is_k_bruhat_leq(const Permutation& u, const Permutation& v, int k);
/// w -> w t_ab for a <= k < b with l(w t_ab) = l(w) + 1.
std::vector<Permutation> k_bruhat_covers(const Permutation& w, int k);

enum class ChainLabel {
  Value,     // a cover w -> w t_ab is labelled w(b), i.e. t_ij w labelled j
  Position,  // labelled b
};

/// Sum over maximal chains of the fundamental quasisymmetric function of
/// the label descent set, expanded in Schur functions in Lambda^{n-k}(k).
SchurVector chain_quasisym_schur(const Permutation& u, const Permutation& v, int k,
                                 ChainLabel labels = ChainLabel::Value,
                                 const OracleBudget& budget = {});

}  // namespace posclass
