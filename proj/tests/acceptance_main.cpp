// Acceptance suite: each criterion prints one pass/fail line and the binary
// exits nonzero if any fails. All arithmetic is exact; every expected value
// is pinned in this file.

#include "hm/covering.hpp"
#include "hm/cubical.hpp"
#include "hm/presentations.hpp"
#include "hm/resolution.hpp"
#include "hm/snf.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <vector>

using namespace hm;

namespace {

struct Criterion {
  std::string name;
  double budget_seconds;
  std::function<void(std::vector<std::string>&)> body;
};

void expect(std::vector<std::string>& failures, bool condition, const std::string& what) {
  if (!condition) failures.push_back(what);
}

std::string signature_string(const std::vector<HomologySignature>& h) {
  std::string out = "(";
  for (size_t k = 0; k < h.size(); ++k) {
    if (k) out += "; ";
    out += h[k].to_string();
  }
  return out + ")";
}

// --- criterion bodies -------------------------------------------------------

void presentation_orders(std::vector<std::string>& failures) {
  FiniteGroup q = quaternion_group();
  const std::vector<std::pair<std::string, std::string>> corpus = {
      {"standard", "<e,i,j,k | i^2=e, j^2=e, k^2=e, ijk=e, e^2=1>"},
      {"power", "<i,j | i^4=1, i^2=j^2, iji=j>"},
      {"two-generator", "<i,j | i=jij, j=iji>"},
  };
  for (const auto& [name, text] : corpus) {
    Presentation p = parse_presentation(text);
    int order = todd_coxeter(p).order;
    expect(failures, order == 8, name + ": order " + std::to_string(order) + " != 8");
    auto assignment = presentation_isomorphic_to(p, q);
    expect(failures, assignment.has_value(), name + ": no isomorphism onto Q");
    if (assignment) {
      for (const auto& [lhs, rhs] : p.relations)
        expect(failures, eval_word(q, *assignment, lhs) == eval_word(q, *assignment, rhs),
               name + ": relation violated under the returned assignment");
      expect(failures, q.generates(*assignment), name + ": assignment does not generate Q");
    }
  }
}

void fundamental_group(std::vector<std::string>& failures) {
  Presentation p = pi1_presentation(hm_skeleton(2), {3});  // tree = {w}
  expect(failures, p.generators.size() == 3, "pi1: expected generators x, y, z");
  expect(failures, todd_coxeter(p).order == 8, "pi1: presented group order != 8");
  expect(failures, presentation_isomorphic_to(p, quaternion_group()).has_value(),
         "pi1: not isomorphic to Q");
}

void cover_shape(std::vector<std::string>& failures) {
  CubicalComplex hm3 = hm_skeleton(3);
  CoveringData cov = cover_complex(hm3, standard_labeling(hm3));
  expect(failures, cov.total.cell_counts() == std::array<int, 4>{16, 32, 24, 8},
         "cover of the 3-skeleton: wrong cell counts");
  expect(failures, complex_isomorphic(cov.total, tesseract_boundary()).has_value(),
         "cover of the 3-skeleton is not an empty 4-cube");

  CubicalComplex hm1 = hm_skeleton(1);
  EdgeLabeling phi = standard_labeling(hm1);
  CoveringData cov1 = cover_complex(hm1, phi);
  const FiniteGroup& q = phi.group;
  int checked = 0;
  for (int p = 0; p < 4; ++p)
    for (int g = 0; g < 8; ++g) {
      const auto& lifted = cov1.total.edges[p * 8 + g];
      bool ok = lifted.source == cov1.total_cell(0, 0, g) &&
                lifted.target == cov1.total_cell(0, 1, q.mul(g, phi.label(p)));
      expect(failures, ok, "lifted edge rule fails at (" + hm1.edges[p].name + ", " + q.names[g] + ")");
      ++checked;
    }
  expect(failures, checked == 32, "expected 32 lifted edges");
}

void deck_action(std::vector<std::string>& failures) {
  CubicalComplex hm3 = hm_skeleton(3);
  CoveringData cov = cover_complex(hm3, standard_labeling(hm3));
  try {
    cov.verify();
  } catch (const std::exception& e) {
    expect(failures, false, std::string("cover verification: ") + e.what());
    return;
  }
  const FiniteGroup& q = cov.group;
  int fiber_checks = 0;
  for (int dim = 0; dim < 4; ++dim) {
    int cells = cov.base.cell_counts()[dim];
    for (int cell = 0; cell < cells; ++cell) {
      std::set<int> orbit;
      for (int h = 0; h < q.order; ++h) {
        int image = cov.action[h][dim][cov.total_cell(dim, cell, q.identity)];
        expect(failures, cov.projection[dim][image] == cell, "deck action leaves the fiber");
        if (h != q.identity)
          expect(failures, image != cov.total_cell(dim, cell, q.identity),
                 "deck action has a fixed cell");
        orbit.insert(image);
      }
      expect(failures, orbit.size() == 8, "fiber orbit is not regular");
      ++fiber_checks;
    }
  }
  expect(failures, fiber_checks == 10, "expected one regular-fiber check per base cell");
}

void homology_tables(std::vector<std::string>& failures) {
  auto h_hm = homology(chain_complex(hm_skeleton(3)));
  expect(failures, signature_string(h_hm) == "(Z; Z/2 + Z/2; 0; Z)",
         "H(glued cube) = " + signature_string(h_hm));

  HomologySignature ab = abelianization(parse_presentation("<i,j | i=jij, j=iji>"));
  expect(failures, h_hm.size() > 1 && h_hm[1] == ab,
         "H_1 differs from the abelianization computed from the presentation");

  auto h_tess = homology(chain_complex(tesseract_boundary()));
  expect(failures, signature_string(h_tess) == "(Z; 0; 0; Z)",
         "H(tesseract boundary) = " + signature_string(h_tess));
}

void cayley_subquotient(std::vector<std::string>& failures) {
  CubicalComplex hm1 = hm_skeleton(1);
  CoveringData cov = cover_complex(hm1, standard_labeling(hm1));
  LabeledGraph reduced = delete_edges(
      contract_edges(one_skeleton(cov.total),
                     [](const LabeledGraph::Edge& e) { return e.label.starts_with("w."); }),
      [](const LabeledGraph::Edge& e) { return e.label.starts_with("z."); });
  expect(failures, reduced.num_vertices() == 8, "subquotient vertex count != 8");
  expect(failures, reduced.edges.size() == 16, "subquotient edge count != 16");
  FiniteGroup q = quaternion_group();
  LabeledGraph reference = cayley_graph(q, {q.element("i"), q.element("j")});
  expect(failures, graph_isomorphic(reduced, reference, false).has_value(),
         "subquotient is not isomorphic to Cayley(Q,{i,j})");
}

void resolution_exactness(std::vector<std::string>& failures) {
  for (int n = 1; n <= 2; ++n) {
    ZGComplex res = hm_resolution(n);
    if (n == 2)
      expect(failures, res.ranks == std::vector<int>{4, 12, 22, 30, 28, 17, 6, 1},
             "level-2 resolution ranks are not the convolution sequence");
    ChainComplex restricted = restrict_to_z(res);
    auto h = homology(restricted);
    expect(failures, h[0].to_string() == "Z", "restricted H_0 != Z at n=" + std::to_string(n));
    for (int k = 1; k <= 4 * n - 2; ++k)
      expect(failures, h[k].trivial(),
             "restricted H_" + std::to_string(k) + " nonzero at n=" + std::to_string(n));
    expect(failures, h[4 * n - 1].to_string() == "Z",
           "restricted top homology != Z at n=" + std::to_string(n));
  }
}

void group_homology_table(std::vector<std::string>& failures) {
  // Oracle first: the bar resolution pins the reference values.
  auto oracle = bar_resolution_oracle(quaternion_group(), 3);
  expect(failures, signature_string(oracle) == "(Z; Z/2 + Z/2; 0; Z/8)",
         "bar oracle table = " + signature_string(oracle));

  auto h = group_homology(2, 6);
  expect(failures, signature_string(h) == "(Z; Z/2 + Z/2; 0; Z/8; 0; Z/2 + Z/2; 0)",
         "group homology table = " + signature_string(h));
  for (int k = 0; k <= 3; ++k)
    expect(failures, h[k] == oracle[k],
           "group homology degree " + std::to_string(k) + " disagrees with the bar oracle");
}

void property_suites(std::vector<std::string>& failures) {
  // dd = 0 on every complex in the corpus, integral and equivariant.
  std::vector<ChainComplex> corpus;
  for (int k = 0; k <= 3; ++k) corpus.push_back(chain_complex(hm_skeleton(k)));
  corpus.push_back(chain_complex(tesseract_boundary()));
  CubicalComplex hm3 = hm_skeleton(3);
  CoveringData cov = cover_complex(hm3, standard_labeling(hm3));
  corpus.push_back(chain_complex(cov.total));

  ZGComplex res1 = hm_resolution(1);
  ZGComplex res2 = algebraic_join(res1, res1);
  ZGComplex res3 = algebraic_join(res2, res1);
  for (const ZGComplex* res : {&res1, &res2, &res3}) {
    try {
      res->validate();  // includes dd = 0 over the group ring
    } catch (const std::exception& e) {
      expect(failures, false, std::string("zg complex invalid: ") + e.what());
    }
  }
  corpus.push_back(restrict_to_z(res1));
  corpus.push_back(restrict_to_z(res2));
  corpus.push_back(coinvariants(res2));
  corpus.push_back(coinvariants(res3));

  for (size_t idx = 0; idx < corpus.size(); ++idx) {
    const ChainComplex& c = corpus[idx];
    try {
      c.validate();
    } catch (const std::exception& e) {
      expect(failures, false, "corpus complex " + std::to_string(idx) + ": " + e.what());
      continue;
    }
    // Euler-Poincare: alternating rank sum equals alternating homology rank sum.
    long long chi_ranks = c.euler_characteristic();
    long long chi_homology = 0;
    int sign = 1;
    for (const auto& h : homology(c)) {
      chi_homology += sign * h.free_rank;
      sign = -sign;
    }
    expect(failures, chi_ranks == chi_homology,
           "Euler-Poincare mismatch on corpus complex " + std::to_string(idx));
  }

  // Smith normal form properties on 1000 random matrices.
  std::mt19937 rng(0x5eed);
  std::uniform_int_distribution<int> dim(1, 8), entry(-9, 9);
  for (int trial = 0; trial < 1000; ++trial) {
    int m = dim(rng), n = dim(rng);
    IntegerMatrix a(m, n);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < n; ++j) a.at(i, j) = entry(rng);
    SNFResult s = smith_normal_form(a, true);
    for (size_t i = 0; i + 1 < s.diagonal.size(); ++i) {
      bool ok = s.diagonal[i] == 0 ? s.diagonal[i + 1] == 0
                                   : s.diagonal[i + 1] % s.diagonal[i] == 0;
      expect(failures, ok && s.diagonal[i] >= 0, "SNF divisibility fails on trial " +
                                                     std::to_string(trial));
    }
    IntegerMatrix d(m, n);
    for (size_t i = 0; i < s.diagonal.size(); ++i)
      d.at(static_cast<int>(i), static_cast<int>(i)) = s.diagonal[i];
    expect(failures, s.u->multiply(a).multiply(*s.v) == d,
           "U A V != D on trial " + std::to_string(trial));
  }

  // Join rank convolution, levels 2 and 3.
  auto convolve = [](const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> za{1}, zb{1};
    za.insert(za.end(), a.begin(), a.end());
    zb.insert(zb.end(), b.begin(), b.end());
    std::vector<int> out(a.size() + b.size(), 0);
    for (size_t i = 0; i < za.size(); ++i)
      for (size_t j = 0; j < zb.size(); ++j)
        if (static_cast<int>(i + j) - 1 >= 0) out[i + j - 1] += za[i] * zb[j];
    return out;
  };
  expect(failures, res2.ranks == convolve(res1.ranks, res1.ranks),
         "level-2 join ranks are not the convolution");
  expect(failures, res3.ranks == convolve(res2.ranks, res1.ranks),
         "level-3 join ranks are not the convolution");
}

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {"1 presentation orders certified", 1.0, presentation_orders},
      {"2 fundamental group of the glued cube", 1.0, fundamental_group},
      {"3 cover counts and tesseract shape", 1.0, cover_shape},
      {"4 deck action free with regular fibers", 1.0, deck_action},
      {"5 homology tables with abelianization cross-check", 1.0, homology_tables},
      {"6 Cayley subquotient of the cover", 1.0, cayley_subquotient},
      {"7 resolution exactness at levels 1 and 2", 10.0, resolution_exactness},
      {"8 group homology against the bar oracle", 60.0, group_homology_table},
      {"9 property suites", 30.0, property_suites},
  };

  bool all_ok = true;
  for (const auto& criterion : criteria) {
    std::vector<std::string> failures;
    auto start = std::chrono::steady_clock::now();
    try {
      criterion.body(failures);
    } catch (const std::exception& e) {
      failures.push_back(std::string("exception: ") + e.what());
    }
    double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (elapsed >= criterion.budget_seconds)
      failures.push_back("runtime " + std::to_string(elapsed) + "s exceeds budget " +
                         std::to_string(criterion.budget_seconds) + "s");
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(2);
    line << (failures.empty() ? "[PASS] " : "[FAIL] ") << "criterion " << criterion.name << " ("
         << elapsed << "s)";
    std::cout << line.str() << "\n";
    for (const auto& f : failures) std::cout << "       - " << f << "\n";
    all_ok = all_ok && failures.empty();
  }
  std::cout << (all_ok ? "acceptance: all criteria passed" : "acceptance: FAILURES above") << "\n";
  return all_ok ? 0 : 1;
}
