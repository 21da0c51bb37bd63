#pragma once

#include "hm/group.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace hm {

/// Directed multigraph with named vertices and labeled edges.
struct LabeledGraph {
  struct Edge {
    int source;
    int target;
    std::string label;
    bool operator==(const Edge&) const = default;
  };

  std::vector<std::string> vertex_names;
  std::vector<Edge> edges;

  int num_vertices() const { return static_cast<int>(vertex_names.size()); }

  std::string to_dot(const std::string& graph_name = "g") const;
};

/// Cayley graph of G on `gens`: one edge g -> g*s per element g and
/// generator s, labeled with the generator's name.
LabeledGraph cayley_graph(const FiniteGroup& g, const std::vector<int>& gens);

/// Directed (multi)graph isomorphism by backtracking with degree
/// refinement; honors labels when `respect_labels` is set. Returns a
/// vertex bijection g1 -> g2, deterministic given input order.
std::optional<std::vector<int>> graph_isomorphic(const LabeledGraph& g1, const LabeledGraph& g2,
                                                 bool respect_labels);

using EdgePredicate = std::function<bool(const LabeledGraph::Edge&)>;

/// Quotient by contracting every edge matching `predicate`. Contracted
/// edges disappear; other edges keep their endpoints' merge classes (an
/// edge may become a loop). Vertex names track the merged classes.
LabeledGraph contract_edges(const LabeledGraph& g, const EdgePredicate& predicate);

/// Removes every edge matching `predicate`.
LabeledGraph delete_edges(const LabeledGraph& g, const EdgePredicate& predicate);

}  // namespace hm
