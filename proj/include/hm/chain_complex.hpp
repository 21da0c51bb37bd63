#pragma once

#include "hm/integer_matrix.hpp"

#include <string>
#include <vector>

namespace hm {

/// Free chain complex of abelian groups: ranks r_0..r_d and boundary
/// matrices d_k of shape r_{k-1} x r_k (stored at boundaries[k-1]).
struct ChainComplex {
  std::vector<int> ranks;
  std::vector<IntegerMatrix> boundaries;

  int top_degree() const { return static_cast<int>(ranks.size()) - 1; }

  /// Throws std::invalid_argument unless shapes match and d d = 0.
  void validate() const;

  long long euler_characteristic() const;
};

/// Isomorphism type of a finitely generated abelian group: free rank plus
/// torsion coefficients in divisibility order (each > 1).
struct HomologySignature {
  long free_rank = 0;
  std::vector<Int> torsion;

  bool trivial() const { return free_rank == 0 && torsion.empty(); }
  bool operator==(const HomologySignature&) const = default;

  /// "Z^2 + Z/2 + Z/4" style rendering; "0" for the trivial group.
  std::string to_string() const;
};

/// Homology in every degree 0..d via Smith normal form.
std::vector<HomologySignature> homology(const ChainComplex& c);

/// Largest d with H_k = 0 for 1 <= k <= d (0 when H_1 is nonzero).
int exactness_range(const ChainComplex& c);

}  // namespace hm
