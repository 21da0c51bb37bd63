#include "hm/errors.hpp"
#include "hm/group_ring.hpp"
#include "hm/resolution.hpp"
#include "hm/snf.hpp"

#include <doctest.h>

using namespace hm;

namespace {

CoveringData hm_cover(int k) {
  CubicalComplex base = hm_skeleton(k);
  return cover_complex(base, standard_labeling(base));
}

std::vector<int> convolve_with_augmentation(const std::vector<int>& a, const std::vector<int>& b) {
  // Degree -1 counts as rank one on both sides; result for degrees 0..|a|+|b|.
  std::vector<int> za{1};
  za.insert(za.end(), a.begin(), a.end());
  std::vector<int> zb{1};
  zb.insert(zb.end(), b.begin(), b.end());
  std::vector<int> out(a.size() + b.size(), 0);  // degrees 0 .. dA + dB + 1
  for (size_t i = 0; i < za.size(); ++i)
    for (size_t j = 0; j < zb.size(); ++j) {
      int degree = static_cast<int>(i + j) - 1;  // shift: (-1) + (-1) + 1 = -1
      if (degree >= 0) out[degree] += za[i] * zb[j];
    }
  return out;
}

}  // namespace

TEST_CASE("group ring arithmetic") {
  FiniteGroup q = quaternion_group();
  GroupRingElement i = GroupRingElement::of_element(q, q.element("i"));
  GroupRingElement j = GroupRingElement::of_element(q, q.element("j"));
  GroupRingElement ij = zg_mul(q, i, j);
  CHECK(ij == GroupRingElement::of_element(q, q.element("k")));
  GroupRingElement ji = zg_mul(q, j, i);
  CHECK(ji == GroupRingElement::of_element(q, q.element("-k")));

  GroupRingElement n = GroupRingElement::norm(q);
  CHECK(zg_mul(q, i, n) == n);
  CHECK(zg_mul(q, n, i) == n);
  CHECK(n.augmentation() == 8);
  CHECK(zg_mul(q, n, n).augmentation() == 64);
}

TEST_CASE("zg complex from the cover of the glued cube") {
  ZGComplex res = zg_complex_from_cover(hm_cover(3), true);
  CHECK(res.ranks == std::vector<int>{2, 4, 3, 1});
  CHECK(res.augmented);
  res.validate();

  const FiniteGroup& q = res.group;
  // d1 column for x: (b, i) - (a, 1).
  CHECK(res.boundaries[0][0][0] == GroupRingElement::of_element(q, q.identity, -1));
  CHECK(res.boundaries[0][1][0] == GroupRingElement::of_element(q, q.element("i")));
  // d1 column for z: (b, -k) - (a, 1).
  CHECK(res.boundaries[0][1][2] == GroupRingElement::of_element(q, q.element("-k")));
}

TEST_CASE("zg complex from a single point") {
  CubicalComplex point;
  point.vertex_names = {"p"};
  CoveringData cov = cover_complex(point, identity_labeling(point, quaternion_group()));
  ZGComplex res = zg_complex_from_cover(cov, true);
  CHECK(res.ranks == std::vector<int>{1});
  CHECK(res.augmented);
  res.validate();
}

TEST_CASE("restriction of the cover complex equals the cover chain complex") {
  CoveringData cov = hm_cover(3);
  ZGComplex res = zg_complex_from_cover(cov, true);
  ChainComplex restricted = restrict_to_z(res);
  ChainComplex direct = chain_complex(cov.total);
  CHECK(restricted.ranks == direct.ranks);
  REQUIRE(restricted.boundaries.size() == direct.boundaries.size());
  for (size_t k = 0; k < direct.boundaries.size(); ++k)
    CHECK(restricted.boundaries[k] == direct.boundaries[k]);
}

TEST_CASE("coinvariants of the cover complex equal the base chain complex") {
  CoveringData cov = hm_cover(3);
  ZGComplex res = zg_complex_from_cover(cov, true);
  ChainComplex collapsed = coinvariants(res);
  ChainComplex base = chain_complex(cov.base);
  CHECK(collapsed.ranks == base.ranks);
  for (size_t k = 0; k < base.boundaries.size(); ++k)
    CHECK(collapsed.boundaries[k] == base.boundaries[k]);

  auto h = homology(collapsed);
  CHECK(h[0].to_string() == "Z");
  CHECK(h[1].to_string() == "Z/2 + Z/2");
  CHECK(h[2].to_string() == "0");
  CHECK(h[3].to_string() == "Z");
}

TEST_CASE("restriction homology is invariant under re-chosen orbit representatives") {
  FiniteGroup q = quaternion_group();
  ZGComplex res = zg_complex_from_cover(hm_cover(3), true);
  auto reference = homology(restrict_to_z(res));

  // Rebasing generator j by a unit g rewrites entries m -> g m (column) and
  // m -> m h^-1 (row h): conjugate bases give the same homology.
  std::vector<std::vector<int>> unit_choices = {
      {1, 3, 5, 7}, {2, 2, 2, 2}, {0, 4, 6, 1}};
  for (const auto& degree_units : unit_choices) {
    ZGComplex rebased = res;
    std::vector<std::vector<int>> units;  // units[degree][generator]
    for (size_t d = 0; d < rebased.ranks.size(); ++d) {
      std::vector<int> u(rebased.ranks[d]);
      for (size_t g = 0; g < u.size(); ++g)
        u[g] = degree_units[(d + g) % degree_units.size()];
      units.push_back(u);
    }
    for (size_t k = 0; k < rebased.boundaries.size(); ++k)
      for (size_t i = 0; i < rebased.boundaries[k].size(); ++i)
        for (size_t j = 0; j < rebased.boundaries[k][i].size(); ++j) {
          GroupRingElement left = GroupRingElement::of_element(q, units[k + 1][j]);
          GroupRingElement right = GroupRingElement::of_element(q, q.inv(units[k][i]));
          rebased.boundaries[k][i][j] =
              zg_mul(q, zg_mul(q, left, rebased.boundaries[k][i][j]), right);
        }
    rebased.validate();
    CHECK(homology(restrict_to_z(rebased)) == reference);
    CHECK(homology(coinvariants(rebased)) == homology(coinvariants(res)));
  }
}

TEST_CASE("level one resolution is a 3-sphere shadow") {
  ZGComplex res = hm_resolution(1);
  CHECK(res.ranks == std::vector<int>{2, 4, 3, 1});
  ChainComplex restricted = restrict_to_z(res);
  CHECK(restricted.ranks == std::vector<int>{16, 32, 24, 8});
  auto h = homology(restricted);
  CHECK(h[0].to_string() == "Z");
  CHECK(h[3].to_string() == "Z");
  CHECK(exactness_range(restricted) == 2);
  CHECK(restricted.euler_characteristic() == 0);
}

TEST_CASE("algebraic join rank convolution") {
  ZGComplex res1 = hm_resolution(1);
  ZGComplex res2 = algebraic_join(res1, res1);
  CHECK(res2.ranks == std::vector<int>{4, 12, 22, 30, 28, 17, 6, 1});
  CHECK(res2.ranks == convolve_with_augmentation(res1.ranks, res1.ranks));

  ZGComplex res3 = algebraic_join(res2, res1);
  CHECK(res3.ranks == convolve_with_augmentation(res2.ranks, res1.ranks));
  CHECK(res3.ranks ==
        std::vector<int>{6, 24, 65, 135, 216, 271, 264, 195, 105, 39, 9, 1});
  res3.validate();
}

TEST_CASE("join with the trivial augmented complex is the identity") {
  ZGComplex trivial;
  trivial.group = quaternion_group();
  trivial.augmented = true;  // only the degree -1 copy of Z
  ZGComplex res1 = hm_resolution(1);
  ZGComplex left = algebraic_join(trivial, res1);
  ZGComplex right = algebraic_join(res1, trivial);
  CHECK(left.ranks == res1.ranks);
  CHECK(right.ranks == res1.ranks);
  CHECK(left.boundaries == res1.boundaries);
  CHECK(right.boundaries == res1.boundaries);
}

TEST_CASE("join requirements") {
  ZGComplex res1 = hm_resolution(1);
  ZGComplex unaugmented = res1;
  unaugmented.augmented = false;
  CHECK_THROWS_AS(algebraic_join(res1, unaugmented), std::invalid_argument);

  ZGComplex other = res1;
  other.group = quaternion_group();
  other.group.table[0][0] = 0;  // same order, same table: fine
  CHECK_NOTHROW(algebraic_join(res1, other));
  FiniteGroup z2;
  z2.order = 2;
  z2.names = {"1", "-1"};
  z2.table = {{0, 1}, {1, 0}};
  z2.identity = 0;
  z2.inverses = {0, 1};
  ZGComplex wrong_group;
  wrong_group.group = z2;
  wrong_group.augmented = true;
  CHECK_THROWS_AS(algebraic_join(res1, wrong_group), std::invalid_argument);
}

TEST_CASE("level two resolution is a 7-sphere shadow") {
  ZGComplex res2 = hm_resolution(2);
  CHECK(res2.ranks == std::vector<int>{4, 12, 22, 30, 28, 17, 6, 1});
  ChainComplex restricted = restrict_to_z(res2);
  CHECK(restricted.euler_characteristic() == 0);
  auto h = homology(restricted);
  REQUIRE(h.size() == 8);
  CHECK(h[0].to_string() == "Z");
  for (int k = 1; k <= 6; ++k) CHECK(h[k].trivial());
  CHECK(h[7].to_string() == "Z");
  CHECK(exactness_range(restricted) == 6);
}

TEST_CASE("group homology of the quaternion group") {
  auto h1 = group_homology(1, 2);
  REQUIRE(h1.size() == 3);
  CHECK(h1[0].to_string() == "Z");
  CHECK(h1[1].to_string() == "Z/2 + Z/2");
  CHECK(h1[2].to_string() == "0");

  auto h2 = group_homology(2, 6);
  REQUIRE(h2.size() == 7);
  CHECK(h2[0].to_string() == "Z");
  CHECK(h2[1].to_string() == "Z/2 + Z/2");
  CHECK(h2[2].to_string() == "0");
  CHECK(h2[3].to_string() == "Z/8");
  CHECK(h2[4].to_string() == "0");
  CHECK(h2[5].to_string() == "Z/2 + Z/2");
  CHECK(h2[6].to_string() == "0");

  CHECK_THROWS_AS(group_homology(1, 3), std::invalid_argument);
  CHECK_THROWS_AS(group_homology(2, 7), std::invalid_argument);
}

TEST_CASE("group homology is consistent across resolution levels") {
  // Levels 2 and 3 must agree wherever both are certified, and the level-3
  // table exhibits the 4-periodicity of quaternion homology.
  auto h2 = group_homology(2, 6);
  auto h3 = group_homology(3, 10);
  for (int k = 0; k <= 6; ++k) CHECK(h3[k] == h2[k]);
  for (int k = 7; k <= 10; ++k) CHECK(h3[k] == h3[k - 4]);
}

TEST_CASE("bar resolution oracle") {
  FiniteGroup q = quaternion_group();
  auto h = bar_resolution_oracle(q, 3);
  REQUIRE(h.size() == 4);
  CHECK(h[0].to_string() == "Z");
  CHECK(h[1].to_string() == "Z/2 + Z/2");
  CHECK(h[2].to_string() == "0");
  CHECK(h[3].to_string() == "Z/8");

  // H_1 equals the abelianization; the resolution pipeline must agree.
  auto direct = group_homology(1, 2);
  CHECK(h[0] == direct[0]);
  CHECK(h[1] == direct[1]);
  CHECK(h[2] == direct[2]);

  CHECK_THROWS_AS(bar_resolution_oracle(q, 4), BudgetExceeded);
  CHECK_NOTHROW(bar_resolution_oracle(q, 1, 2));
}

TEST_CASE("bar oracle on a cyclic group matches the classical values") {
  FiniteGroup z4;
  z4.order = 4;
  z4.names = {"0", "1", "2", "3"};
  z4.table.assign(4, std::vector<int>(4));
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) z4.table[a][b] = (a + b) % 4;
  z4.identity = 0;
  z4.inverses = {0, 3, 2, 1};
  z4.validate();

  auto h = bar_resolution_oracle(z4, 3, 4);
  CHECK(h[0].to_string() == "Z");
  CHECK(h[1].to_string() == "Z/4");
  CHECK(h[2].to_string() == "0");
  CHECK(h[3].to_string() == "Z/4");
}

TEST_CASE("degenerate group ring complexes pass through the functors") {
  ZGComplex zero;
  zero.group = quaternion_group();
  zero.ranks = {2, 3};
  zero.boundaries = {ZGMatrix(2, std::vector<GroupRingElement>(3, GroupRingElement(8)))};
  ChainComplex restricted = restrict_to_z(zero);
  CHECK(restricted.ranks == std::vector<int>{16, 24});
  CHECK(restricted.boundaries[0].is_zero());
  ChainComplex collapsed = coinvariants(zero);
  CHECK(collapsed.ranks == zero.ranks);
  CHECK(collapsed.boundaries[0].is_zero());
}

TEST_CASE("non-free deck data is rejected") {
  CoveringData cov = hm_cover(1);
  for (int h = 0; h < cov.group.order; ++h)
    for (int dim = 0; dim < 4; ++dim)
      for (size_t cell = 0; cell < cov.action[h][dim].size(); ++cell)
        cov.action[h][dim][cell] = static_cast<int>(cell);  // every element acts trivially
  CHECK_THROWS_AS(zg_complex_from_cover(cov, true), std::logic_error);
}

TEST_CASE("join commutes with coinvariant degree ranks") {
  ZGComplex res1 = hm_resolution(1);
  ZGComplex res2 = algebraic_join(res1, res1);
  ChainComplex collapsed = coinvariants(res2);
  CHECK(collapsed.ranks == convolve_with_augmentation(coinvariants(res1).ranks,
                                                      coinvariants(res1).ranks));
}
