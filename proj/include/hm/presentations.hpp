#pragma once

#include "hm/chain_complex.hpp"
#include "hm/coset.hpp"
#include "hm/group.hpp"

#include <optional>
#include <vector>

namespace hm {

/// Searches for an assignment generators -> elements of G under which
/// every relation holds, the images generate G, and coset enumeration
/// certifies that the presented group has order |G|. Returns the first
/// assignment in lexicographic element order, or nullopt.
///
/// BudgetExceeded from the enumeration propagates.
std::optional<std::vector<int>> presentation_isomorphic_to(const Presentation& p,
                                                           const FiniteGroup& g,
                                                           int max_cosets = 10000);

/// Abelianization of the presented group: Smith normal form of the
/// relation exponent matrix, reported as free rank plus torsion.
HomologySignature abelianization(const Presentation& p);

}  // namespace hm
