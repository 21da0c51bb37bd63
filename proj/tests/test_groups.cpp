#include "hm/coset.hpp"
#include "hm/errors.hpp"
#include "hm/graph.hpp"
#include "hm/group.hpp"
#include "hm/presentations.hpp"

#include <doctest.h>

#include <numeric>
#include <set>

using namespace hm;

TEST_CASE("quaternion group multiplication") {
  FiniteGroup q = quaternion_group();
  q.validate();
  int one = q.element("1"), i = q.element("i"), j = q.element("j"), k = q.element("k");
  int mi = q.element("-i"), mk = q.element("-k"), mone = q.element("-1");

  CHECK(q.order == 8);
  CHECK(q.mul(i, j) == k);
  CHECK(q.mul(j, i) == mk);
  CHECK(q.mul(i, i) == mone);
  CHECK(q.mul(j, j) == mone);
  CHECK(q.mul(k, k) == mone);
  CHECK(q.mul(j, k) == i);
  CHECK(q.mul(k, j) == mi);
  CHECK(q.mul(k, i) == j);
  for (int x = 0; x < 8; ++x) {
    CHECK(q.mul(one, x) == x);
    CHECK(q.mul(x, one) == x);
  }
  CHECK(q.inv(i) == mi);
  CHECK(q.inv(mone) == mone);
}

TEST_CASE("eval_word") {
  FiniteGroup q = quaternion_group();
  std::vector<int> assign = {q.element("i"), q.element("j")};

  Word iji{{{0, 1}, {1, 1}, {0, 1}}};
  Word jij{{{1, 1}, {0, 1}, {1, 1}}};
  CHECK(eval_word(q, assign, iji) == q.element("j"));
  CHECK(eval_word(q, assign, jij) == q.element("i"));
  CHECK(eval_word(q, assign, Word{}) == q.identity);

  std::vector<int> partial = {q.element("i"), -1};
  CHECK_THROWS_AS(eval_word(q, partial, jij), std::invalid_argument);
}

TEST_CASE("presentation parsing and printing") {
  Presentation p = parse_presentation("<i,j | i=jij, j=iji>");
  REQUIRE(p.generators == std::vector<std::string>{"i", "j"});
  REQUIRE(p.relations.size() == 2);
  CHECK(p.relations[0].first.letters.size() == 1);
  CHECK(p.relations[0].second.letters.size() == 3);

  Presentation powers = parse_presentation("<a | a^4=1>");
  CHECK(powers.relations[0].first.letters.size() == 4);
  CHECK(powers.relations[0].second.letters.empty());

  Presentation inverse = parse_presentation("<a,b | ab^-1=1>");
  CHECK(inverse.relations[0].first.letters[1].sign == -1);

  CHECK(to_string(p) == "<i,j | i=jij, j=iji>");
  CHECK_THROWS_AS(parse_presentation("no brackets"), std::invalid_argument);
  CHECK_THROWS_AS(parse_presentation("<a | q=1>"), std::invalid_argument);
}

TEST_CASE("todd_coxeter certifies the quaternion presentations") {
  auto std_pres = parse_presentation("<e,i,j,k | i^2=e, j^2=e, k^2=e, ijk=e, e^2=1>");
  auto power_pres = parse_presentation("<i,j | i^4=1, i^2=j^2, iji=j>");
  auto two_gen = parse_presentation("<i,j | i=jij, j=iji>");
  CHECK(todd_coxeter(std_pres).order == 8);
  CHECK(todd_coxeter(power_pres).order == 8);
  CHECK(todd_coxeter(two_gen).order == 8);

  auto result = todd_coxeter(two_gen);
  CHECK(result.table.rows.size() == 8);
  CHECK(result.table.closed_under(two_gen));
}

TEST_CASE("todd_coxeter small groups") {
  CHECK(todd_coxeter(parse_presentation("<a | a=1>")).order == 1);
  CHECK(todd_coxeter(parse_presentation("<a | a^4=1>")).order == 4);
  CHECK(todd_coxeter(parse_presentation("<x,y,z | x=zy, y=xz, z=yx>")).order == 8);
  // Symmetric group on three letters, as a sanity point with coincidences.
  CHECK(todd_coxeter(parse_presentation("<s,t | s^2=1, t^2=1, sts=tst>")).order == 6);
}

TEST_CASE("todd_coxeter classical orders") {
  // Rotation group of the cube, Klein four, generalized quaternion Q16,
  // and a presentation that collapses to the trivial group.
  CHECK(todd_coxeter(parse_presentation("<x,y | x^2=1, y^3=1, xyxyxyxy=1>")).order == 24);
  CHECK(todd_coxeter(parse_presentation("<a,b | a^2=1, b^2=1, abab=1>")).order == 4);
  CHECK(todd_coxeter(parse_presentation("<a,b | a^8=1, b^2=a^4, bab^-1=a^-1>")).order == 16);
  CHECK(todd_coxeter(parse_presentation("<a,b | ab=1, ba^2=1>")).order == 1);
}

TEST_CASE("todd_coxeter budget is an inconclusive error") {
  auto p = parse_presentation("<i,j | i=jij, j=iji>");
  CHECK_THROWS_AS(todd_coxeter(p, 2), BudgetExceeded);
  // The free group never closes; the budget must fire, not a wrong answer.
  CHECK_THROWS_AS(todd_coxeter(parse_presentation("<a,b | >"), 100), BudgetExceeded);
  CHECK_THROWS_AS(todd_coxeter(p, 0), std::invalid_argument);
}

TEST_CASE("presentation_isomorphic_to the quaternion group") {
  FiniteGroup q = quaternion_group();

  auto two_gen = parse_presentation("<i,j | i=jij, j=iji>");
  auto assignment = presentation_isomorphic_to(two_gen, q);
  REQUIRE(assignment.has_value());
  CHECK((*assignment)[0] == q.element("i"));
  CHECK((*assignment)[1] == q.element("j"));
  for (size_t r = 0; r < two_gen.relations.size(); ++r)
    CHECK(eval_word(q, *assignment, two_gen.relations[r].first) ==
          eval_word(q, *assignment, two_gen.relations[r].second));

  auto xyz = parse_presentation("<x,y,z | x=zy, y=xz, z=yx>");
  auto xyz_assignment = presentation_isomorphic_to(xyz, q);
  REQUIRE(xyz_assignment.has_value());
  for (size_t r = 0; r < xyz.relations.size(); ++r)
    CHECK(eval_word(q, *xyz_assignment, xyz.relations[r].first) ==
          eval_word(q, *xyz_assignment, xyz.relations[r].second));
  // The canonical reading x -> i, y -> j, z -> -k also satisfies everything.
  std::vector<int> canonical = {q.element("i"), q.element("j"), q.element("-k")};
  for (size_t r = 0; r < xyz.relations.size(); ++r)
    CHECK(eval_word(q, canonical, xyz.relations[r].first) ==
          eval_word(q, canonical, xyz.relations[r].second));
  CHECK(q.generates(canonical));

  CHECK_FALSE(presentation_isomorphic_to(parse_presentation("<a | a^2=1>"), q).has_value());
}

TEST_CASE("abelianization") {
  HomologySignature two_gen = abelianization(parse_presentation("<i,j | i=jij, j=iji>"));
  CHECK(two_gen.free_rank == 0);
  CHECK(two_gen.torsion == std::vector<Int>{2, 2});

  HomologySignature free_one = abelianization(parse_presentation("<a | >"));
  CHECK(free_one.free_rank == 1);
  CHECK(free_one.torsion.empty());

  HomologySignature xyz = abelianization(parse_presentation("<x,y,z | x=zy, y=xz, z=yx>"));
  CHECK(xyz.free_rank == 0);
  CHECK(xyz.torsion == std::vector<Int>{2, 2});
}

TEST_CASE("cayley graphs") {
  FiniteGroup q = quaternion_group();
  LabeledGraph g = cayley_graph(q, {q.element("i"), q.element("j")});
  CHECK(g.num_vertices() == 8);
  CHECK(g.edges.size() == 16);

  // One generator: right multiplication by i decomposes into two 4-cycles.
  LabeledGraph gi = cayley_graph(q, {q.element("i")});
  CHECK(gi.edges.size() == 8);
  std::vector<int> next(8);
  for (const auto& e : gi.edges) next[e.source] = e.target;
  std::set<int> seen;
  int cycles = 0;
  for (int v = 0; v < 8; ++v) {
    if (seen.count(v)) continue;
    ++cycles;
    int len = 0, cur = v;
    do {
      seen.insert(cur);
      cur = next[cur];
      ++len;
    } while (cur != v);
    CHECK(len == 4);
  }
  CHECK(cycles == 2);

  FiniteGroup trivial;
  trivial.order = 1;
  trivial.names = {"1"};
  trivial.table = {{0}};
  trivial.identity = 0;
  trivial.inverses = {0};
  LabeledGraph loop = cayley_graph(trivial, {0});
  CHECK(loop.num_vertices() == 1);
  REQUIRE(loop.edges.size() == 1);
  CHECK(loop.edges[0].source == loop.edges[0].target);

  CHECK_THROWS_AS(cayley_graph(q, {}), std::invalid_argument);
}

TEST_CASE("cayley graphs are vertex-transitive") {
  FiniteGroup q = quaternion_group();
  std::vector<int> gens = {q.element("i"), q.element("j")};
  LabeledGraph g = cayley_graph(q, gens);
  std::set<std::tuple<int, int, std::string>> edge_set;
  for (const auto& e : g.edges) edge_set.insert({e.source, e.target, e.label});
  for (int h = 0; h < q.order; ++h)
    for (const auto& e : g.edges)
      CHECK(edge_set.count({q.mul(h, e.source), q.mul(h, e.target), e.label}) == 1);
}

TEST_CASE("graph isomorphism") {
  FiniteGroup q = quaternion_group();
  LabeledGraph g = cayley_graph(q, {q.element("i"), q.element("j")});

  auto self = graph_isomorphic(g, g, true);
  REQUIRE(self.has_value());
  std::vector<int> identity(8);
  std::iota(identity.begin(), identity.end(), 0);
  CHECK(*self == identity);

  LabeledGraph cycle4{{"0", "1", "2", "3"}, {{0, 1, ""}, {1, 2, ""}, {2, 3, ""}, {3, 0, ""}}};
  LabeledGraph path4{{"0", "1", "2", "3"}, {{0, 1, ""}, {1, 2, ""}, {2, 3, ""}}};
  CHECK_FALSE(graph_isomorphic(cycle4, path4, false).has_value());

  // Relabeled cycle is isomorphic without labels, not with them.
  LabeledGraph cycle4_labeled{{"0", "1", "2", "3"},
                              {{0, 1, "p"}, {1, 2, "q"}, {2, 3, "p"}, {3, 0, "q"}}};
  CHECK(graph_isomorphic(cycle4, cycle4_labeled, false).has_value());
  CHECK_FALSE(graph_isomorphic(cycle4, cycle4_labeled, true).has_value());
}

TEST_CASE("contract and delete edges") {
  LabeledGraph g{{"u", "v"}, {{0, 1, "a"}, {0, 1, "b"}, {1, 0, "c"}}};
  LabeledGraph same = delete_edges(g, [](const LabeledGraph::Edge&) { return false; });
  CHECK(same.edges.size() == 3);
  CHECK(same.vertex_names == g.vertex_names);

  LabeledGraph contracted = contract_edges(g, [](const LabeledGraph::Edge& e) { return e.label == "a"; });
  CHECK(contracted.num_vertices() == 1);
  CHECK(contracted.vertex_names[0] == "u+v");
  // b and c survive as loops.
  REQUIRE(contracted.edges.size() == 2);
  for (const auto& e : contracted.edges) CHECK(e.source == e.target);
}
