#include "hm/graph.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace hm {

LabeledGraph cayley_graph(const FiniteGroup& g, const std::vector<int>& gens) {
  if (gens.empty()) throw std::invalid_argument("cayley_graph: empty generator list");
  for (int s : gens)
    if (s < 0 || s >= g.order) throw std::invalid_argument("cayley_graph: generator out of range");
  LabeledGraph out;
  out.vertex_names = g.names;
  for (int e = 0; e < g.order; ++e)
    for (int s : gens) out.edges.push_back({e, g.mul(e, s), g.names[s]});
  return out;
}

std::string LabeledGraph::to_dot(const std::string& graph_name) const {
  std::ostringstream os;
  os << "digraph \"" << graph_name << "\" {\n";
  for (const auto& name : vertex_names) os << "  \"" << name << "\";\n";
  for (const auto& e : edges)
    os << "  \"" << vertex_names[e.source] << "\" -> \"" << vertex_names[e.target] << "\" [label=\""
       << e.label << "\"];\n";
  os << "}\n";
  return os.str();
}

namespace {

// Multiset of labels on edges a -> b; empty label stands for "any" when
// labels are ignored.
using PairKey = std::pair<int, int>;

std::map<PairKey, std::vector<std::string>> adjacency(const LabeledGraph& g, bool respect_labels) {
  std::map<PairKey, std::vector<std::string>> adj;
  for (const auto& e : g.edges) adj[{e.source, e.target}].push_back(respect_labels ? e.label : "");
  for (auto& [k, labels] : adj) std::sort(labels.begin(), labels.end());
  return adj;
}

std::vector<std::string> vertex_signature(const LabeledGraph& g, int v, bool respect_labels) {
  std::vector<std::string> sig;
  for (const auto& e : g.edges) {
    if (e.source == v) sig.push_back("out:" + (respect_labels ? e.label : "") + (e.target == v ? ":loop" : ""));
    if (e.target == v && e.source != v) sig.push_back("in:" + (respect_labels ? e.label : ""));
  }
  std::sort(sig.begin(), sig.end());
  return sig;
}

struct IsoSearch {
  const std::map<PairKey, std::vector<std::string>>& adj1;
  const std::map<PairKey, std::vector<std::string>>& adj2;
  const std::vector<std::vector<int>>& candidates;
  int n;
  std::vector<int> mapping;
  std::vector<bool> used;

  // Edge multisets between u and every mapped vertex must agree with their
  // images, in both directions (u == w covers loops).
  bool consistent(int u, int v) const {
    for (int w = 0; w <= u; ++w) {
      if (mapping[w] < 0) continue;
      for (auto [a, b] : {PairKey{u, w}, PairKey{w, u}}) {
        PairKey image{a == u ? v : mapping[a], b == u ? v : mapping[b]};
        auto it1 = adj1.find({a, b});
        auto it2 = adj2.find(image);
        bool has1 = it1 != adj1.end();
        bool has2 = it2 != adj2.end();
        if (has1 != has2) return false;
        if (has1 && it1->second != it2->second) return false;
      }
    }
    return true;
  }

  bool run(int u) {
    if (u == n) return true;
    for (int v : candidates[u]) {
      if (used[v]) continue;
      mapping[u] = v;
      used[v] = true;
      if (consistent(u, v) && run(u + 1)) return true;
      mapping[u] = -1;
      used[v] = false;
    }
    return false;
  }
};

}  // namespace

std::optional<std::vector<int>> graph_isomorphic(const LabeledGraph& g1, const LabeledGraph& g2,
                                                 bool respect_labels) {
  if (g1.num_vertices() != g2.num_vertices() || g1.edges.size() != g2.edges.size())
    return std::nullopt;
  int n = g1.num_vertices();

  std::vector<std::vector<std::string>> sig2(n);
  for (int v = 0; v < n; ++v) sig2[v] = vertex_signature(g2, v, respect_labels);
  std::vector<std::vector<int>> candidates(n);
  for (int u = 0; u < n; ++u) {
    auto sig = vertex_signature(g1, u, respect_labels);
    for (int v = 0; v < n; ++v)
      if (sig == sig2[v]) candidates[u].push_back(v);
    if (candidates[u].empty()) return std::nullopt;
  }

  auto adj1 = adjacency(g1, respect_labels);
  auto adj2 = adjacency(g2, respect_labels);
  IsoSearch search{adj1, adj2, candidates, n, std::vector<int>(n, -1), std::vector<bool>(n, false)};
  if (!search.run(0)) return std::nullopt;
  return search.mapping;
}

LabeledGraph contract_edges(const LabeledGraph& g, const EdgePredicate& predicate) {
  int n = g.num_vertices();
  std::vector<int> parent(n);
  for (int i = 0; i < n; ++i) parent[i] = i;
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<bool> contracted(g.edges.size(), false);
  for (size_t i = 0; i < g.edges.size(); ++i) {
    if (!predicate(g.edges[i])) continue;
    contracted[i] = true;
    int a = find(g.edges[i].source), b = find(g.edges[i].target);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }

  std::vector<int> index(n, -1);
  LabeledGraph out;
  for (int v = 0; v < n; ++v)
    if (find(v) == v) {
      index[v] = out.num_vertices();
      out.vertex_names.push_back(g.vertex_names[v]);
    }
  for (int v = 0; v < n; ++v)
    if (find(v) != v) out.vertex_names[index[find(v)]] += "+" + g.vertex_names[v];
  for (size_t i = 0; i < g.edges.size(); ++i) {
    if (contracted[i]) continue;
    const auto& e = g.edges[i];
    out.edges.push_back({index[find(e.source)], index[find(e.target)], e.label});
  }
  return out;
}

LabeledGraph delete_edges(const LabeledGraph& g, const EdgePredicate& predicate) {
  LabeledGraph out;
  out.vertex_names = g.vertex_names;
  for (const auto& e : g.edges)
    if (!predicate(e)) out.edges.push_back(e);
  return out;
}

}  // namespace hm
