#pragma once

#include "hm/covering.hpp"
#include "hm/group_ring.hpp"

#include <vector>

namespace hm {

/// Equivariant chain complex of a cover: one free generator per base cell
/// with the fiber cell at the identity coordinate as representative, deck
/// translates collected into group-ring coefficients. With `augment` the
/// result carries the rank-one trivial degree -1.
///
/// Throws std::logic_error if the deck action fails verification.
ZGComplex zg_complex_from_cover(const CoveringData& cov, bool augment = true);

/// Join of two augmented complexes over the same group. Degree ranks obey
/// the exact convolution r_m = sum_{i+j=m-1} r_i(A) * r_j(B) with the
/// augmentation counting as rank one in degree -1.
///
/// Realized by splicing B above A through A's fundamental cycle (the
/// generator of the top integral kernel, necessarily a norm multiple) and
/// filling up to the convolution ranks with contractible generator pairs;
/// the degree-(1,0) fillers attach to the first degree-0 generator so the
/// augmentation identity survives. Requires the lower factor to be an
/// algebraic sphere (top kernel of rank one, fixed by the group action).
ZGComplex algebraic_join(const ZGComplex& a, const ZGComplex& b);

/// n = 1: the augmented complex of the canonical cover of hm_skeleton(3);
/// n > 1: algebraic_join(hm_resolution(n-1), hm_resolution(1)).
ZGComplex hm_resolution(int n);

/// Integral group homology of the quaternion group in degrees
/// 0..max_degree, read off the coinvariants of hm_resolution(n).
/// max_degree above the certified exactness range 4n-2 is refused
/// (std::invalid_argument).
std::vector<HomologySignature> group_homology(int n, int max_degree);

/// Independent oracle: group homology of G via the normalized bar
/// resolution (tuples of non-identity elements, ranks (|G|-1)^k).
/// Modules above degree `max_bar_degree` are refused with BudgetExceeded;
/// degree d needs modules through d+1.
std::vector<HomologySignature> bar_resolution_oracle(const FiniteGroup& g, int max_degree,
                                                     int max_bar_degree = 4);

}  // namespace hm
