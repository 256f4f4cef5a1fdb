#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "posclass/affperm.hpp"
#include "posclass/diagram.hpp"

namespace posclass {

/// A permutation of [n] in one-line notation, values 1..n.
using Permutation = std::vector<int>;

bool is_permutation(const Permutation& w);
Permutation identity_permutation(int n);
int permutation_length(const Permutation& w);
Permutation permutation_inverse(const Permutation& w);
/// w t_ab: swap the entries in positions a and b (1-based).
Permutation swap_positions(Permutation w, int a, int b);
/// All of S_n in lexicographic order.
std::vector<Permutation> all_permutations(int n);
/// Planar Rothe diagram {(i, w(j)) : i < j, w(i) > w(j)}.
Diagram permutation_rothe_diagram(const Permutation& w);
/// The same bijection viewed in the affine group.
AffinePermutation to_affine(const Permutation& w);

/// "2,4,3,1,5", or digits only ("24315") when n <= 9.
Permutation parse_permutation(std::string_view text);
std::string format_permutation(const Permutation& w);

}  // namespace posclass
