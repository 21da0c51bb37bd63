#pragma once

#include "hm/cubical.hpp"
#include "hm/labeling.hpp"

#include <set>
#include <string>
#include <vector>

namespace hm {

/// A covering built from an edge labeling: cells of the total space are
/// (base cell, group element) pairs, the projection drops the group
/// coordinate, and the deck action multiplies it on the left.
struct CoveringData {
  CubicalComplex base;
  CubicalComplex total;
  FiniteGroup group;

  /// projection[dim][total cell] = base cell
  std::array<std::vector<int>, 4> projection;
  /// coordinate[dim][total cell] = group element
  std::array<std::vector<int>, 4> coordinate;
  /// action[g][dim][total cell] = image cell under the deck transformation g
  std::vector<std::array<std::vector<int>, 4>> action;

  /// Cell index of (base_cell, element); fibers are laid out contiguously
  /// in every dimension.
  int total_cell(int /*dim*/, int base_cell, int element) const {
    return base_cell * group.order + element;
  }

  /// Throws std::logic_error when the deck action is not a free,
  /// projection-compatible permutation action with regular fibers.
  void verify() const;
};

/// "(c, g)" rendered as "c.g" with a leading minus moved to a trailing
/// one, e.g. (a, -i) -> "a.i-".
std::string compound_name(const std::string& base, const std::string& element);

/// Total space of the cover determined by a balanced labeling: the edge
/// (p, q) runs (src p, q) -> (tgt p, q * phi(p)); squares and cubes lift
/// step by step along their boundary paths and offsets. Throws
/// std::invalid_argument (with the report embedded) if the labeling is
/// unbalanced.
CoveringData cover_complex(const CubicalComplex& c, const EdgeLabeling& phi);

/// Fundamental group presentation from a spanning tree: generators are
/// the non-tree edges, relations equate the two boundary words of every
/// square with tree edges deleted. Throws std::invalid_argument when the
/// complex is disconnected or the tree is not a spanning tree.
Presentation pi1_presentation(const CubicalComplex& c, const std::set<int>& tree);

}  // namespace hm
