#include "hm/cubical.hpp"

#include "hm/errors.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <map>
#include <sstream>

using nlohmann::json;

namespace hm {

std::array<int, 4> CubicalComplex::cell_counts() const {
  return {num_vertices(), static_cast<int>(edges.size()), static_cast<int>(squares.size()),
          static_cast<int>(cubes.size())};
}

int CubicalComplex::dimension() const {
  if (!cubes.empty()) return 3;
  if (!squares.empty()) return 2;
  if (!edges.empty()) return 1;
  return 0;
}

int CubicalComplex::path_end(const EdgePath& p) const {
  int at = p.start;
  if (at < 0 || at >= num_vertices()) throw MalformedComplex("path start out of range");
  for (const auto& s : p.steps) {
    if (s.edge < 0 || s.edge >= static_cast<int>(edges.size()))
      throw MalformedComplex("path step edge out of range");
    const Edge& e = edges[s.edge];
    if (s.dir == 1) {
      if (e.source != at)
        throw MalformedComplex("path step does not start at current vertex (edge " + e.name + ")");
      at = e.target;
    } else if (s.dir == -1) {
      if (e.target != at)
        throw MalformedComplex("reversed path step does not start at current vertex (edge " +
                               e.name + ")");
      at = e.source;
    } else {
      throw MalformedComplex("path step direction must be +1 or -1");
    }
  }
  return at;
}

void CubicalComplex::validate() const {
  for (const Edge& e : edges)
    if (e.source < 0 || e.source >= num_vertices() || e.target < 0 || e.target >= num_vertices())
      throw MalformedComplex("edge endpoint out of range (edge " + e.name + ")");
  for (const Square& s : squares) {
    if (s.left.start != s.base || s.right.start != s.base)
      throw MalformedComplex("square paths must start at the base (square " + s.name + ")");
    if (path_end(s.left) != path_end(s.right))
      throw MalformedComplex("square paths end at different vertices (square " + s.name + ")");
  }
  for (const Cube& c : cubes)
    for (const Face& f : c.faces) {
      if (f.square < 0 || f.square >= static_cast<int>(squares.size()))
        throw MalformedComplex("cube face square out of range (cube " + c.name + ")");
      if (f.offset.start != c.base)
        throw MalformedComplex("face offset must start at the cube base (cube " + c.name + ")");
      if (path_end(f.offset) != squares[f.square].base)
        throw MalformedComplex("face offset must end at the face base (cube " + c.name + ")");
    }
}

namespace {

std::vector<long long> path_chain(const EdgePath& p, int num_edges) {
  std::vector<long long> chain(num_edges, 0);
  for (const auto& s : p.steps) chain[s.edge] += s.dir;
  return chain;
}

std::vector<long long> square_chain(const CubicalComplex::Square& s, int num_edges) {
  std::vector<long long> chain = path_chain(s.left, num_edges);
  std::vector<long long> right = path_chain(s.right, num_edges);
  for (int e = 0; e < num_edges; ++e) chain[e] -= right[e];
  return chain;
}

// Searches face signs with the fixed-first-face convention; returns the
// first assignment (preferred sign first at each face) whose signed face
// chains sum to zero.
std::optional<std::array<int, 6>> solve_cube_signs(const std::vector<std::vector<long long>>& face_chains,
                                                   const std::array<int, 6>& hints) {
  std::array<int, 6> signs{};
  size_t width = face_chains[0].size();
  std::vector<long long> sum(width, 0);

  auto rec = [&](auto&& self, int f) -> bool {
    if (f == 6) {
      for (long long v : sum)
        if (v != 0) return false;
      return true;
    }
    int preferred = hints[f] != 0 ? hints[f] : +1;
    for (int attempt = 0; attempt < (f == 0 ? 1 : 2); ++attempt) {
      int sign = attempt == 0 ? preferred : -preferred;
      signs[f] = sign;
      for (size_t e = 0; e < width; ++e) sum[e] += sign * face_chains[f][e];
      if (self(self, f + 1)) return true;
      for (size_t e = 0; e < width; ++e) sum[e] -= sign * face_chains[f][e];
    }
    return false;
  };
  if (!rec(rec, 0)) return std::nullopt;
  return signs;
}

}  // namespace

ChainComplex chain_complex(const CubicalComplex& c) {
  c.validate();
  ChainComplex out;
  int dim = c.dimension();
  auto counts = c.cell_counts();
  out.ranks.assign(counts.begin(), counts.begin() + dim + 1);

  if (dim >= 1) {
    IntegerMatrix d1(counts[0], counts[1]);
    for (int e = 0; e < counts[1]; ++e) {
      d1.at(c.edges[e].target, e) += 1;
      d1.at(c.edges[e].source, e) -= 1;
    }
    out.boundaries.push_back(std::move(d1));
  }
  if (dim >= 2) {
    IntegerMatrix d2(counts[1], counts[2]);
    for (int s = 0; s < counts[2]; ++s) {
      auto chain = square_chain(c.squares[s], counts[1]);
      for (int e = 0; e < counts[1]; ++e) d2.at(e, s) = chain[e];
    }
    out.boundaries.push_back(std::move(d2));
  }
  if (dim >= 3) {
    IntegerMatrix d3(counts[2], counts[3]);
    for (int q = 0; q < counts[3]; ++q) {
      const auto& cube = c.cubes[q];
      std::vector<std::vector<long long>> face_chains;
      std::array<int, 6> hints{};
      for (int f = 0; f < 6; ++f) {
        face_chains.push_back(square_chain(c.squares[cube.faces[f].square], counts[1]));
        hints[f] = cube.faces[f].orientation_hint;
      }
      auto signs = solve_cube_signs(face_chains, hints);
      if (!signs)
        throw MalformedComplex("no consistent face orientation for cube " + cube.name +
                               " (index " + std::to_string(q) + ")");
      for (int f = 0; f < 6; ++f) d3.at(cube.faces[f].square, q) += (*signs)[f];
    }
    out.boundaries.push_back(std::move(d3));
  }
  out.validate();
  return out;
}

int euler_characteristic(const CubicalComplex& c) {
  auto n = c.cell_counts();
  return n[0] - n[1] + n[2] - n[3];
}

LabeledGraph one_skeleton(const CubicalComplex& c) {
  LabeledGraph g;
  g.vertex_names = c.vertex_names;
  for (const auto& e : c.edges) g.edges.push_back({e.source, e.target, e.name});
  return g;
}

// ---------------------------------------------------------------------------
// Builders

CubicalComplex hm_skeleton(int k) {
  if (k < 0 || k > 3) throw std::invalid_argument("hm_skeleton: k must be in 0..3");
  CubicalComplex c;
  c.vertex_names = {"a", "b"};
  if (k < 1) return c;

  // Edges x, y, z, w all run a -> b.
  for (const char* name : {"x", "y", "z", "w"}) c.edges.push_back({0, 1, name});
  if (k < 2) return c;

  const int x = 0, y = 1, z = 2, w = 3;
  auto path = [](std::vector<EdgePath::Step> steps) {
    return EdgePath{0, std::move(steps)};
  };
  // alpha: y z~ = x w~, beta: y w~ = z x~, gamma: z w~ = x y~.
  c.squares.push_back({0, path({{y, 1}, {z, -1}}), path({{x, 1}, {w, -1}}), "alpha"});
  c.squares.push_back({0, path({{y, 1}, {w, -1}}), path({{z, 1}, {x, -1}}), "beta"});
  c.squares.push_back({0, path({{z, 1}, {w, -1}}), path({{x, 1}, {y, -1}}), "gamma"});
  if (k < 3) return c;

  // One 3-cell; each square appears as two opposite faces. Offsets run from
  // the base corner a to the base corner of each face, read off the glued
  // cube: the far alpha face sits past y w~, the far beta past x y~, the
  // far gamma past y z~.
  CubicalComplex::Cube cube;
  cube.base = 0;
  cube.name = "A";
  cube.faces[0] = {0, path({}), 0};
  cube.faces[1] = {0, path({{y, 1}, {w, -1}}), 0};
  cube.faces[2] = {1, path({}), 0};
  cube.faces[3] = {1, path({{x, 1}, {y, -1}}), 0};
  cube.faces[4] = {2, path({}), 0};
  cube.faces[5] = {2, path({{y, 1}, {z, -1}}), 0};
  c.cubes.push_back(cube);
  c.validate();
  return c;
}

CubicalComplex tesseract_boundary() {
  CubicalComplex c;
  auto name_of = [](int vertex_bits, std::vector<int> free_coords) {
    std::string n(4, '?');
    for (int i = 0; i < 4; ++i) n[i] = (vertex_bits >> i) & 1 ? '+' : '-';
    for (int f : free_coords) n[f] = '.';
    return n;
  };

  for (int v = 0; v < 16; ++v) c.vertex_names.push_back(name_of(v, {}));

  // Edge per free coordinate f and assignment of the other three bits.
  std::map<std::pair<int, int>, int> edge_index;  // (f, vertex at f=0) -> id
  for (int f = 0; f < 4; ++f) {
    std::vector<int> rest;
    for (int i = 0; i < 4; ++i)
      if (i != f) rest.push_back(i);
    for (int r = 0; r < 8; ++r) {
      int v0 = 0;
      for (int b = 0; b < 3; ++b)
        if ((r >> b) & 1) v0 |= 1 << rest[b];
      edge_index[{f, v0}] = static_cast<int>(c.edges.size());
      c.edges.push_back({v0, v0 | (1 << f), name_of(v0, {f})});
    }
  }
  auto edge_at = [&](int f, int vertex) {
    return edge_index.at({f, vertex & ~(1 << f)});
  };

  // Square per free pair f1 < f2; left runs f2 then f1, right f1 then f2.
  std::map<std::tuple<int, int, int>, int> square_index;  // (f1, f2, base) -> id
  for (int f1 = 0; f1 < 4; ++f1)
    for (int f2 = f1 + 1; f2 < 4; ++f2) {
      std::vector<int> rest;
      for (int i = 0; i < 4; ++i)
        if (i != f1 && i != f2) rest.push_back(i);
      for (int r = 0; r < 4; ++r) {
        int base = 0;
        for (int b = 0; b < 2; ++b)
          if ((r >> b) & 1) base |= 1 << rest[b];
        EdgePath left{base, {{edge_at(f2, base), 1}, {edge_at(f1, base | (1 << f2)), 1}}};
        EdgePath right{base, {{edge_at(f1, base), 1}, {edge_at(f2, base | (1 << f1)), 1}}};
        square_index[{f1, f2, base}] = static_cast<int>(c.squares.size());
        c.squares.push_back({base, left, right, name_of(base, {f1, f2})});
      }
    }

  // Cube per free triple (one fixed coordinate, two values).
  for (int fixed = 0; fixed < 4; ++fixed) {
    std::vector<int> free;
    for (int i = 0; i < 4; ++i)
      if (i != fixed) free.push_back(i);
    for (int s = 0; s < 2; ++s) {
      int base = s << fixed;
      CubicalComplex::Cube cube;
      cube.base = base;
      cube.name = name_of(base, free);
      int slot = 0;
      for (int fi : free) {
        std::vector<int> others;
        for (int o : free)
          if (o != fi) others.push_back(o);
        cube.faces[slot++] = {square_index.at({others[0], others[1], base}), EdgePath{base, {}}, 0};
        cube.faces[slot++] = {square_index.at({others[0], others[1], base | (1 << fi)}),
                              EdgePath{base, {{edge_at(fi, base), 1}}}, 0};
      }
      c.cubes.push_back(cube);
    }
  }
  c.validate();
  return c;
}

// ---------------------------------------------------------------------------
// Isomorphism

namespace {

using Multiset = std::vector<int>;

Multiset sorted(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  return v;
}

std::vector<int> boundary_edges(const CubicalComplex::Square& s) {
  std::vector<int> out;
  for (const auto& st : s.left.steps) out.push_back(st.edge);
  for (const auto& st : s.right.steps) out.push_back(st.edge);
  return out;
}

struct IsoState {
  const CubicalComplex& c1;
  const CubicalComplex& c2;
  CellBijection map;
  std::vector<bool> used_v, used_e, used_s, used_q;

  std::map<std::pair<int, int>, int> pair_count2;  // unordered endpoint pair -> #edges

  static std::pair<int, int> unordered(int a, int b) { return {std::min(a, b), std::max(a, b)}; }

  bool vertices_consistent(int u, int v) {
    // Undirected multi-degree between u and every mapped vertex must match.
    for (int w = 0; w < static_cast<int>(map.vertices.size()); ++w) {
      if (map.vertices[w] < 0 || w > u) continue;
      int count1 = 0;
      for (const auto& e : c1.edges)
        if (unordered(e.source, e.target) == unordered(u, w)) ++count1;
      auto it = pair_count2.find(unordered(v, map.vertices[w]));
      int count2 = it == pair_count2.end() ? 0 : it->second;
      if (count1 != count2) return false;
    }
    return true;
  }

  bool assign_vertices(int u);
  bool assign_edges(size_t e);
  bool assign_squares(size_t s);
  bool assign_cubes(size_t q);
};

bool IsoState::assign_vertices(int u) {
  if (u == c1.num_vertices()) return assign_edges(0);
  for (int v = 0; v < c2.num_vertices(); ++v) {
    if (used_v[v]) continue;
    map.vertices[u] = v;
    used_v[v] = true;
    if (vertices_consistent(u, v) && assign_vertices(u + 1)) return true;
    map.vertices[u] = -1;
    used_v[v] = false;
  }
  return false;
}

bool IsoState::assign_edges(size_t e) {
  if (e == c1.edges.size()) return assign_squares(0);
  auto want = IsoState::unordered(map.vertices[c1.edges[e].source], map.vertices[c1.edges[e].target]);
  for (size_t f = 0; f < c2.edges.size(); ++f) {
    if (used_e[f]) continue;
    if (IsoState::unordered(c2.edges[f].source, c2.edges[f].target) != want) continue;
    map.edges[e] = static_cast<int>(f);
    used_e[f] = true;
    if (assign_edges(e + 1)) return true;
    map.edges[e] = -1;
    used_e[f] = false;
  }
  return false;
}

bool IsoState::assign_squares(size_t s) {
  if (s == c1.squares.size()) return assign_cubes(0);
  std::vector<int> image;
  for (int e : boundary_edges(c1.squares[s])) image.push_back(map.edges[e]);
  Multiset want = sorted(image);
  for (size_t t = 0; t < c2.squares.size(); ++t) {
    if (used_s[t]) continue;
    if (sorted(boundary_edges(c2.squares[t])) != want) continue;
    map.squares[s] = static_cast<int>(t);
    used_s[t] = true;
    if (assign_squares(s + 1)) return true;
    map.squares[s] = -1;
    used_s[t] = false;
  }
  return false;
}

bool IsoState::assign_cubes(size_t q) {
  if (q == c1.cubes.size()) return true;
  std::vector<int> image;
  for (const auto& f : c1.cubes[q].faces) image.push_back(map.squares[f.square]);
  Multiset want = sorted(image);
  for (size_t t = 0; t < c2.cubes.size(); ++t) {
    if (used_q[t]) continue;
    std::vector<int> faces;
    for (const auto& f : c2.cubes[t].faces) faces.push_back(f.square);
    if (sorted(faces) != want) continue;
    map.cubes[q] = static_cast<int>(t);
    used_q[t] = true;
    if (assign_cubes(q + 1)) return true;
    map.cubes[q] = -1;
    used_q[t] = false;
  }
  return false;
}

}  // namespace

CellId CellBijection::map(CellId id) const {
  const std::vector<int>* level = nullptr;
  switch (id.dimension) {
    case 0: level = &vertices; break;
    case 1: level = &edges; break;
    case 2: level = &squares; break;
    case 3: level = &cubes; break;
    default: throw std::invalid_argument("cell bijection: dimension out of range");
  }
  if (id.index < 0 || id.index >= static_cast<int>(level->size()))
    throw std::invalid_argument("cell bijection: index out of range");
  return {id.dimension, (*level)[id.index]};
}

bool contains(const CubicalComplex& c, CellId id) {
  if (id.dimension < 0 || id.dimension > 3 || id.index < 0) return false;
  return id.index < c.cell_counts()[id.dimension];
}

std::optional<CellBijection> complex_isomorphic(const CubicalComplex& c1, const CubicalComplex& c2) {
  if (c1.cell_counts() != c2.cell_counts()) return std::nullopt;
  IsoState st{c1, c2, CellBijection{}, {}, {}, {}, {}, {}};
  st.map.vertices.assign(c1.num_vertices(), -1);
  st.map.edges.assign(c1.edges.size(), -1);
  st.map.squares.assign(c1.squares.size(), -1);
  st.map.cubes.assign(c1.cubes.size(), -1);
  st.used_v.assign(c2.num_vertices(), false);
  st.used_e.assign(c2.edges.size(), false);
  st.used_s.assign(c2.squares.size(), false);
  st.used_q.assign(c2.cubes.size(), false);
  for (const auto& e : c2.edges) ++st.pair_count2[IsoState::unordered(e.source, e.target)];
  if (!st.assign_vertices(0)) return std::nullopt;
  return st.map;
}

// ---------------------------------------------------------------------------
// Serialization

namespace {

json path_to_json(const EdgePath& p) {
  json steps = json::array();
  for (const auto& s : p.steps) steps.push_back({s.edge, s.dir});
  return steps;
}

EdgePath path_from_json(const json& steps, int start) {
  EdgePath p;
  p.start = start;
  for (const auto& s : steps) {
    if (!s.is_array() || s.size() != 2) throw std::invalid_argument("complex json: bad path step");
    p.steps.push_back({s[0].get<int>(), s[1].get<int>()});
  }
  return p;
}

}  // namespace

std::string CubicalComplex::to_json() const {
  json j;
  j["schema"] = 1;
  j["vertices"] = vertex_names;
  json es = json::array();
  for (const auto& e : edges) es.push_back({e.source, e.target});
  j["edges"] = es;
  json ss = json::array();
  for (const auto& s : squares)
    ss.push_back({{"base", s.base}, {"left", path_to_json(s.left)}, {"right", path_to_json(s.right)}});
  j["squares"] = ss;
  json qs = json::array();
  for (const auto& q : cubes) {
    json faces = json::array();
    for (const auto& f : q.faces) {
      json fj = {{"square", f.square}, {"offset", path_to_json(f.offset)}};
      if (f.orientation_hint != 0) fj["hint"] = f.orientation_hint;
      faces.push_back(fj);
    }
    qs.push_back({{"base", q.base}, {"faces", faces}});
  }
  j["cubes"] = qs;
  return j.dump(2) + "\n";
}

CubicalComplex complex_from_json(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("complex json: parse error: ") + e.what());
  }
  if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
    throw std::invalid_argument("complex json: missing vertices/edges");
  CubicalComplex c;
  for (const auto& v : j["vertices"]) c.vertex_names.push_back(v.get<std::string>());
  int ei = 0;
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2) throw std::invalid_argument("complex json: bad edge");
    c.edges.push_back({e[0].get<int>(), e[1].get<int>(), "e" + std::to_string(ei++)});
  }
  int si = 0;
  for (const auto& s : j.value("squares", json::array())) {
    int base = s.at("base").get<int>();
    c.squares.push_back({base, path_from_json(s.at("left"), base), path_from_json(s.at("right"), base),
                         "s" + std::to_string(si++)});
  }
  int qi = 0;
  for (const auto& q : j.value("cubes", json::array())) {
    CubicalComplex::Cube cube;
    cube.base = q.at("base").get<int>();
    cube.name = "c" + std::to_string(qi++);
    const auto& faces = q.at("faces");
    if (!faces.is_array() || faces.size() != 6)
      throw std::invalid_argument("complex json: cube needs exactly 6 faces");
    for (int f = 0; f < 6; ++f) {
      cube.faces[f] = {faces[f].at("square").get<int>(),
                       path_from_json(faces[f].at("offset"), cube.base),
                       faces[f].value("hint", 0)};
    }
    c.cubes.push_back(cube);
  }
  c.validate();
  return c;
}

std::string CubicalComplex::to_dot(const std::string& graph_name) const {
  std::ostringstream os;
  os << "digraph \"" << graph_name << "\" {\n";
  for (const auto& n : vertex_names) os << "  \"" << n << "\";\n";
  for (const auto& e : edges)
    os << "  \"" << vertex_names[e.source] << "\" -> \"" << vertex_names[e.target] << "\" [label=\""
       << e.name << "\"];\n";
  auto render = [&](const EdgePath& p) {
    std::string out;
    for (const auto& s : p.steps) {
      if (!out.empty()) out += " ";
      out += edges[s.edge].name;
      if (s.dir < 0) out += "^-1";
    }
    return out.empty() ? "1" : out;
  };
  for (const auto& s : squares)
    os << "  // square " << s.name << ": " << render(s.left) << " = " << render(s.right) << "\n";
  for (const auto& q : cubes) {
    os << "  // cube " << q.name << ": faces";
    for (const auto& f : q.faces) os << " " << squares[f.square].name;
    os << "\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace hm
