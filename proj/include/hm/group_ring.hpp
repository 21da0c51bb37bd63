#pragma once

#include "hm/chain_complex.hpp"
#include "hm/group.hpp"
#include "hm/integer_matrix.hpp"

#include <string>
#include <vector>

namespace hm {

/// Element of the integral group ring: a dense coefficient vector indexed
/// by group elements.
struct GroupRingElement {
  std::vector<Int> coeff;

  explicit GroupRingElement(int order = 0) : coeff(order) {}
  static GroupRingElement of_element(const FiniteGroup& g, int element, Int c = 1);
  static GroupRingElement norm(const FiniteGroup& g);  // sum of all elements

  bool is_zero() const;
  Int augmentation() const;
  GroupRingElement& add(const GroupRingElement& other, const Int& scale = 1);
  bool operator==(const GroupRingElement&) const = default;

  std::string to_string(const FiniteGroup& g) const;
};

GroupRingElement zg_mul(const FiniteGroup& g, const GroupRingElement& a, const GroupRingElement& b);

using ZGMatrix = std::vector<std::vector<GroupRingElement>>;  // [row][col]

/// Free chain complex over the group ring. Degrees run 0..d; an augmented
/// complex additionally has a rank-one degree -1 with trivial action, the
/// degree-0 boundary onto it being the all-ones augmentation row.
///
/// Boundary matrices are written for left modules, so composites multiply
/// entries in application order: (d_k . d_{k+1})[i][l] =
/// sum_j d_{k+1}[j][l] * d_k[i][j].
struct ZGComplex {
  FiniteGroup group;
  bool augmented = false;
  std::vector<int> ranks;            // degrees 0..d
  std::vector<ZGMatrix> boundaries;  // boundaries[k-1] = d_k, shape r_{k-1} x r_k

  int top_degree() const { return static_cast<int>(ranks.size()) - 1; }

  /// Shape checks, dd = 0 over the group ring, and the augmentation
  /// identity when augmented. Throws std::invalid_argument.
  void validate() const;
};

/// Composite entries of d_k followed by d_{k+1} (see ZGComplex docs).
ZGMatrix zg_compose(const FiniteGroup& g, const ZGMatrix& d_k, const ZGMatrix& d_k1);

/// Nested arrays of coefficient vectors: [[[c_1,...,c_|G|], ...], ...].
std::string zg_matrix_to_json(const ZGMatrix& m);

/// The underlying integer chain complex: each group-ring entry expands to
/// the |G| x |G| matrix of right multiplication on the group-element
/// basis, in the group's element order. Drops the augmentation degree.
ChainComplex restrict_to_z(const ZGComplex& r);

/// Coinvariants: every entry collapses to its augmentation (coefficient
/// sum); ranks are unchanged. Drops the augmentation degree.
ChainComplex coinvariants(const ZGComplex& r);

}  // namespace hm
