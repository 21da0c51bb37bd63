#include "hm/labeling.hpp"

#include <stdexcept>

namespace hm {

int EdgeLabeling::label(int edge) const {
  if (edge < 0 || edge >= static_cast<int>(labels.size()) || labels[edge] < 0)
    throw std::invalid_argument("labeling: edge " + std::to_string(edge) + " is unlabeled");
  return labels[edge];
}

int EdgeLabeling::transport(const EdgePath& path) const {
  int acc = group.identity;
  for (const auto& s : path.steps) {
    int l = label(s.edge);
    acc = group.mul(acc, s.dir > 0 ? l : group.inv(l));
  }
  return acc;
}

EdgeLabeling standard_labeling(const CubicalComplex& c) {
  EdgeLabeling phi;
  phi.group = quaternion_group();
  phi.labels.reserve(c.edges.size());
  for (const auto& e : c.edges) {
    int value;
    if (e.name == "x")
      value = phi.group.element("i");
    else if (e.name == "y")
      value = phi.group.element("j");
    else if (e.name == "z")
      value = phi.group.element("-k");
    else if (e.name == "w")
      value = phi.group.element("1");
    else
      throw std::invalid_argument("standard_labeling: unexpected edge name '" + e.name + "'");
    phi.labels.push_back(value);
  }
  return phi;
}

EdgeLabeling identity_labeling(const CubicalComplex& c, const FiniteGroup& g) {
  EdgeLabeling phi;
  phi.group = g;
  phi.labels.assign(c.edges.size(), g.identity);
  return phi;
}

LabelingReport check_labeling(const CubicalComplex& c, const EdgeLabeling& phi) {
  if (phi.labels.size() != c.edges.size())
    throw std::invalid_argument("labeling: label count differs from edge count");
  for (size_t e = 0; e < c.edges.size(); ++e)
    if (phi.labels[e] < 0 || phi.labels[e] >= phi.group.order)
      throw std::invalid_argument("labeling: edge '" + c.edges[e].name + "' is unlabeled");

  LabelingReport report;
  for (size_t s = 0; s < c.squares.size(); ++s) {
    int left = phi.transport(c.squares[s].left);
    int right = phi.transport(c.squares[s].right);
    if (left != right) {
      report.ok = false;
      report.violations.push_back({static_cast<int>(s), left, right});
    }
  }
  return report;
}

}  // namespace hm
