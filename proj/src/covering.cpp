#include "hm/covering.hpp"

#include "hm/errors.hpp"

#include <sstream>
#include <stdexcept>

namespace hm {

std::string compound_name(const std::string& base, const std::string& element) {
  if (!element.empty() && element[0] == '-') return base + "." + element.substr(1) + "-";
  return base + "." + element;
}

namespace {

// Lifts a base path starting at group coordinate q. A forward step over
// edge p at coordinate g uses the lifted edge (p, g); a backward step
// arrives from (p, g * phi(p)^-1).
EdgePath lift_path(const EdgeLabeling& phi, const EdgePath& path, int q, int order) {
  EdgePath lifted;
  lifted.start = path.start * order + q;
  int g = q;
  for (const auto& s : path.steps) {
    int l = phi.label(s.edge);
    if (s.dir > 0) {
      lifted.steps.push_back({s.edge * order + g, 1});
      g = phi.group.mul(g, l);
    } else {
      g = phi.group.mul(g, phi.group.inv(l));
      lifted.steps.push_back({s.edge * order + g, -1});
    }
  }
  return lifted;
}

}  // namespace

CoveringData cover_complex(const CubicalComplex& c, const EdgeLabeling& phi) {
  c.validate();
  LabelingReport report = check_labeling(c, phi);
  if (!report.ok) {
    std::ostringstream os;
    os << "cover_complex: labeling unbalanced at " << report.violations.size() << " square(s):";
    for (const auto& v : report.violations)
      os << " [" << c.squares[v.square].name << ": left=" << phi.group.names[v.left_value]
         << " right=" << phi.group.names[v.right_value] << "]";
    throw std::invalid_argument(os.str());
  }

  const FiniteGroup& g = phi.group;
  const int n = g.order;
  CoveringData cov;
  cov.base = c;
  cov.group = g;

  for (int v = 0; v < c.num_vertices(); ++v)
    for (int q = 0; q < n; ++q)
      cov.total.vertex_names.push_back(compound_name(c.vertex_names[v], g.names[q]));

  for (size_t e = 0; e < c.edges.size(); ++e)
    for (int q = 0; q < n; ++q) {
      const auto& edge = c.edges[e];
      int target_coord = g.mul(q, phi.label(static_cast<int>(e)));
      cov.total.edges.push_back({edge.source * n + q, edge.target * n + target_coord,
                                 compound_name(edge.name, g.names[q])});
    }

  for (size_t s = 0; s < c.squares.size(); ++s)
    for (int q = 0; q < n; ++q) {
      const auto& sq = c.squares[s];
      cov.total.squares.push_back({sq.base * n + q, lift_path(phi, sq.left, q, n),
                                   lift_path(phi, sq.right, q, n),
                                   compound_name(sq.name, g.names[q])});
    }

  for (size_t u = 0; u < c.cubes.size(); ++u)
    for (int q = 0; q < n; ++q) {
      const auto& cube = c.cubes[u];
      CubicalComplex::Cube lifted;
      lifted.base = cube.base * n + q;
      lifted.name = compound_name(cube.name, g.names[q]);
      for (int f = 0; f < 6; ++f) {
        const auto& face = cube.faces[f];
        int face_coord = g.mul(q, phi.transport(face.offset));
        lifted.faces[f] = {face.square * n + face_coord, lift_path(phi, face.offset, q, n),
                           face.orientation_hint};
      }
      cov.total.cubes.push_back(lifted);
    }
  cov.total.validate();

  std::array<int, 4> counts = {c.num_vertices(), static_cast<int>(c.edges.size()),
                               static_cast<int>(c.squares.size()), static_cast<int>(c.cubes.size())};
  for (int dim = 0; dim < 4; ++dim) {
    cov.projection[dim].resize(static_cast<size_t>(counts[dim]) * n);
    cov.coordinate[dim].resize(static_cast<size_t>(counts[dim]) * n);
    for (int cell = 0; cell < counts[dim]; ++cell)
      for (int q = 0; q < n; ++q) {
        cov.projection[dim][cell * n + q] = cell;
        cov.coordinate[dim][cell * n + q] = q;
      }
  }
  cov.action.resize(n);
  for (int h = 0; h < n; ++h)
    for (int dim = 0; dim < 4; ++dim) {
      cov.action[h][dim].resize(static_cast<size_t>(counts[dim]) * n);
      for (int cell = 0; cell < counts[dim]; ++cell)
        for (int q = 0; q < n; ++q)
          cov.action[h][dim][cell * n + q] = cell * n + g.mul(h, q);
    }
  return cov;
}

void CoveringData::verify() const {
  const int n = group.order;
  std::array<int, 4> base_counts = {base.num_vertices(), static_cast<int>(base.edges.size()),
                                    static_cast<int>(base.squares.size()),
                                    static_cast<int>(base.cubes.size())};
  std::array<int, 4> total_counts = {total.num_vertices(), static_cast<int>(total.edges.size()),
                                     static_cast<int>(total.squares.size()),
                                     static_cast<int>(total.cubes.size())};
  for (int dim = 0; dim < 4; ++dim) {
    if (total_counts[dim] != base_counts[dim] * n)
      throw std::logic_error("cover: fiber cardinality mismatch");

    // Fibers are regular orbits: transitive with trivial stabilizers.
    std::vector<int> fiber_size(base_counts[dim], 0);
    for (int cell = 0; cell < total_counts[dim]; ++cell) ++fiber_size[projection[dim][cell]];
    for (int s : fiber_size)
      if (s != n) throw std::logic_error("cover: fiber is not of group size");

    for (int h = 0; h < n; ++h) {
      std::vector<bool> hit(total_counts[dim], false);
      for (int cell = 0; cell < total_counts[dim]; ++cell) {
        int image = action[h][dim][cell];
        if (hit[image]) throw std::logic_error("cover: action is not a permutation");
        hit[image] = true;
        if (projection[dim][image] != projection[dim][cell])
          throw std::logic_error("cover: action does not commute with projection");
        if (h != group.identity && image == cell)
          throw std::logic_error("cover: action is not free");
      }
    }
    // Homomorphism: action[h1] . action[h2] = action[h1 h2].
    for (int h1 = 0; h1 < n; ++h1)
      for (int h2 = 0; h2 < n; ++h2)
        for (int cell = 0; cell < total_counts[dim]; ++cell)
          if (action[h1][dim][action[h2][dim][cell]] != action[group.mul(h1, h2)][dim][cell])
            throw std::logic_error("cover: action is not a homomorphism");
  }

  // Projection preserves incidence.
  for (int e = 0; e < total_counts[1]; ++e) {
    const auto& lifted = total.edges[e];
    const auto& down = base.edges[projection[1][e]];
    if (projection[0][lifted.source] != down.source || projection[0][lifted.target] != down.target)
      throw std::logic_error("cover: projection breaks edge incidence");
  }
  for (int s = 0; s < total_counts[2]; ++s) {
    const auto& lifted = total.squares[s];
    const auto& down = base.squares[projection[2][s]];
    if (projection[0][lifted.base] != down.base ||
        lifted.left.steps.size() != down.left.steps.size() ||
        lifted.right.steps.size() != down.right.steps.size())
      throw std::logic_error("cover: projection breaks square incidence");
    for (size_t i = 0; i < down.left.steps.size(); ++i)
      if (projection[1][lifted.left.steps[i].edge] != down.left.steps[i].edge ||
          lifted.left.steps[i].dir != down.left.steps[i].dir)
        throw std::logic_error("cover: projection breaks square boundary");
    for (size_t i = 0; i < down.right.steps.size(); ++i)
      if (projection[1][lifted.right.steps[i].edge] != down.right.steps[i].edge ||
          lifted.right.steps[i].dir != down.right.steps[i].dir)
        throw std::logic_error("cover: projection breaks square boundary");
  }
  for (int q = 0; q < total_counts[3]; ++q) {
    const auto& lifted = total.cubes[q];
    const auto& down = base.cubes[projection[3][q]];
    for (int f = 0; f < 6; ++f)
      if (projection[2][lifted.faces[f].square] != down.faces[f].square)
        throw std::logic_error("cover: projection breaks cube faces");
  }
}

Presentation pi1_presentation(const CubicalComplex& c, const std::set<int>& tree) {
  c.validate();
  const int nv = c.num_vertices();
  const int ne = static_cast<int>(c.edges.size());
  for (int t : tree)
    if (t < 0 || t >= ne) throw std::invalid_argument("pi1: tree edge out of range");

  // Connectivity of the whole 1-skeleton.
  std::vector<int> parent(nv);
  for (int i = 0; i < nv; ++i) parent[i] = i;
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& e : c.edges) {
    int a = find(e.source), b = find(e.target);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  for (int v = 0; v < nv; ++v)
    if (find(v) != find(0)) throw std::invalid_argument("pi1: complex is not connected");

  // The tree must be acyclic and spanning.
  if (static_cast<int>(tree.size()) != nv - 1)
    throw std::invalid_argument("pi1: spanning tree needs exactly #vertices - 1 edges");
  for (int i = 0; i < nv; ++i) parent[i] = i;
  for (int t : tree) {
    int a = find(c.edges[t].source), b = find(c.edges[t].target);
    if (a == b) throw std::invalid_argument("pi1: tree contains a cycle");
    parent[std::max(a, b)] = std::min(a, b);
  }

  Presentation p;
  std::vector<int> generator_of(ne, -1);
  for (int e = 0; e < ne; ++e)
    if (!tree.count(e)) {
      generator_of[e] = static_cast<int>(p.generators.size());
      p.generators.push_back(c.edges[e].name);
    }

  auto word_of = [&](const EdgePath& path) {
    Word w;
    for (const auto& s : path.steps)
      if (generator_of[s.edge] >= 0) w.letters.push_back({generator_of[s.edge], s.dir});
    return w;
  };
  for (const auto& s : c.squares) p.relations.emplace_back(word_of(s.left), word_of(s.right));
  return p;
}

}  // namespace hm
