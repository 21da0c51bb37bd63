#pragma once

#include "hm/cubical.hpp"
#include "hm/group.hpp"

#include <string>
#include <vector>

namespace hm {

/// Assignment of a group element to every edge of a complex. Valid when
/// the two boundary paths of every square evaluate to the same element.
struct EdgeLabeling {
  FiniteGroup group;
  std::vector<int> labels;  // edge id -> element

  int label(int edge) const;

  /// Product of edge labels along a path, inverted on reversed steps;
  /// the empty path evaluates to the identity.
  int transport(const EdgePath& path) const;
};

/// x -> i, y -> j, z -> -k, w -> 1 over the quaternion group; requires the
/// complex's edges to be named among {x, y, z, w}.
EdgeLabeling standard_labeling(const CubicalComplex& c);

/// Every edge labeled with the identity of `g`.
EdgeLabeling identity_labeling(const CubicalComplex& c, const FiniteGroup& g);

struct LabelingViolation {
  int square;
  int left_value;
  int right_value;
};

struct LabelingReport {
  bool ok = true;
  std::vector<LabelingViolation> violations;
};

/// Checks that every square is balanced. Throws std::invalid_argument
/// naming the edge if one is unlabeled.
LabelingReport check_labeling(const CubicalComplex& c, const EdgeLabeling& phi);

}  // namespace hm
