#pragma once

#include "hm/chain_complex.hpp"
#include "hm/graph.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace hm {

/// A walk in the 1-skeleton: start vertex plus (edge, direction) steps,
/// direction -1 traversing the edge against its orientation.
struct EdgePath {
  struct Step {
    int edge;
    int dir;  // +1 or -1
    bool operator==(const Step&) const = default;
  };
  int start = 0;
  std::vector<Step> steps;
  bool operator==(const EdgePath&) const = default;
};

struct CellId {
  int dimension;
  int index;
  bool operator==(const CellId&) const = default;
};

/// Combinatorial cubical complex of dimension <= 3.
///
/// A square is a pair of parallel paths from a shared base corner to a
/// shared far corner; its chain boundary is left minus right. A cube
/// lists six (square, offset) faces, the offset running from the cube's
/// base vertex to the face's base corner. Face orientation signs are not
/// stored; they are solved from d2 . d3 = 0 when the chain complex is
/// extracted.
struct CubicalComplex {
  struct Edge {
    int source;
    int target;
    std::string name;
  };
  struct Square {
    int base;
    EdgePath left;
    EdgePath right;
    std::string name;
  };
  struct Face {
    int square;
    EdgePath offset;
    int orientation_hint = 0;  // 0 = none; +-1 biases the sign search
  };
  struct Cube {
    int base;
    std::array<Face, 6> faces;
    std::string name;
  };

  std::vector<std::string> vertex_names;
  std::vector<Edge> edges;
  std::vector<Square> squares;
  std::vector<Cube> cubes;

  int num_vertices() const { return static_cast<int>(vertex_names.size()); }
  std::array<int, 4> cell_counts() const;
  int dimension() const;

  /// Endpoint of the path; throws MalformedComplex if steps do not chain.
  int path_end(const EdgePath& p) const;

  /// Structural validation (index ranges, path compatibility, square and
  /// face endpoint conditions). Does not solve orientations.
  void validate() const;

  std::string to_json() const;
  std::string to_dot(const std::string& graph_name = "complex") const;
};

CubicalComplex complex_from_json(const std::string& json_text);

/// The k-skeleton of the quarter-turn identified cube: two vertices a, b,
/// four parallel edges x, y, z, w, three squares and one 3-cell.
CubicalComplex hm_skeleton(int k);

/// Boundary of the 4-cube built from {-,+}^4 coordinate words:
/// 16 vertices, 32 edges, 24 squares, 8 cubes.
CubicalComplex tesseract_boundary();

/// Chain complex with solved orientation signs. d1 = target - source,
/// d2 = left - right, d3 determined per cube by searching face signs with
/// d2 . d3 = 0 (first face in list order fixed positive, hints honored).
/// Throws MalformedComplex naming the cube when no signs work.
ChainComplex chain_complex(const CubicalComplex& c);

int euler_characteristic(const CubicalComplex& c);

/// Dimension-preserving cell bijection commuting with incidence
/// (unordered edge endpoints, square boundary edge multisets, cube face
/// multisets). Orientation-insensitive. Deterministic given input order.
struct CellBijection {
  std::vector<int> vertices, edges, squares, cubes;

  CellId map(CellId id) const;
};

/// True when the id names a cell of `c`.
bool contains(const CubicalComplex& c, CellId id);
std::optional<CellBijection> complex_isomorphic(const CubicalComplex& c1, const CubicalComplex& c2);

/// The 1-skeleton as a labeled graph, edge names as labels.
LabeledGraph one_skeleton(const CubicalComplex& c);

}  // namespace hm
