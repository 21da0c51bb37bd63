#include "hm/covering.hpp"
#include "hm/cubical.hpp"
#include "hm/presentations.hpp"
#include "hm/resolution.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace hm;

namespace {

py::list homology_table(const std::vector<HomologySignature>& table) {
  py::list rows;
  for (size_t k = 0; k < table.size(); ++k) {
    py::dict row;
    row["degree"] = k;
    row["free_rank"] = table[k].free_rank;
    py::list torsion;
    for (const Int& t : table[k].torsion) torsion.append(t.convert_to<long long>());
    row["torsion"] = torsion;
    row["pretty"] = table[k].to_string();
    rows.append(row);
  }
  return rows;
}

CoveringData canonical_cover(int k) {
  CubicalComplex base = hm_skeleton(k);
  return cover_complex(base, standard_labeling(base));
}

std::vector<int> counts_of(const CubicalComplex& c) {
  auto n = c.cell_counts();
  return {n[0], n[1], n[2], n[3]};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "cubical complexes, covers and quaternion-group resolutions";

  m.def("quaternion_names", [] { return quaternion_group().names; });
  m.def("quaternion_table", [] { return quaternion_group().table; });

  m.def(
      "todd_coxeter_order",
      [](const std::string& presentation, int max_cosets) {
        return todd_coxeter(parse_presentation(presentation), max_cosets).order;
      },
      py::arg("presentation"), py::arg("max_cosets") = 10000,
      "certified order of a finitely presented group, e.g. '<i,j | i=jij, j=iji>'");

  m.def(
      "presents_quaternion_group",
      [](const std::string& presentation) {
        return presentation_isomorphic_to(parse_presentation(presentation), quaternion_group())
            .has_value();
      },
      py::arg("presentation"));

  m.def(
      "abelianization",
      [](const std::string& presentation) {
        HomologySignature s = abelianization(parse_presentation(presentation));
        py::list torsion;
        for (const Int& t : s.torsion) torsion.append(t.convert_to<long long>());
        return py::make_tuple(s.free_rank, torsion);
      },
      py::arg("presentation"), "(free rank, torsion coefficients)");

  m.def("hm_cell_counts", [](int k) { return counts_of(hm_skeleton(k)); }, py::arg("k") = 3);
  m.def("tesseract_cell_counts", [] { return counts_of(tesseract_boundary()); });
  m.def(
      "complex_json",
      [](const std::string& which, int k) {
        if (which == "tesseract") return tesseract_boundary().to_json();
        if (which == "hm") return hm_skeleton(k).to_json();
        throw std::invalid_argument("complex_json: expected 'hm' or 'tesseract'");
      },
      py::arg("which") = "hm", py::arg("k") = 3);

  m.def("cover_cell_counts", [](int k) { return counts_of(canonical_cover(k).total); },
        py::arg("k") = 3);
  m.def("cover_is_tesseract", [] {
    return complex_isomorphic(canonical_cover(3).total, tesseract_boundary()).has_value();
  });
  m.def("pi1_presents_quaternion_group", [] {
    Presentation p = pi1_presentation(hm_skeleton(2), {3});
    return presentation_isomorphic_to(p, quaternion_group()).has_value();
  });
  m.def("cayley_subquotient_matches", [] {
    CoveringData cov = canonical_cover(1);
    LabeledGraph reduced = delete_edges(
        contract_edges(one_skeleton(cov.total),
                       [](const LabeledGraph::Edge& e) { return e.label.starts_with("w."); }),
        [](const LabeledGraph::Edge& e) { return e.label.starts_with("z."); });
    FiniteGroup q = quaternion_group();
    return graph_isomorphic(reduced, cayley_graph(q, {q.element("i"), q.element("j")}), false)
        .has_value();
  });

  m.def(
      "homology",
      [](const std::string& which) {
        if (which == "hm") return homology_table(homology(chain_complex(hm_skeleton(3))));
        if (which == "tesseract")
          return homology_table(homology(chain_complex(tesseract_boundary())));
        if (which == "cover-hm")
          return homology_table(homology(chain_complex(canonical_cover(3).total)));
        throw std::invalid_argument("homology: expected 'hm', 'tesseract' or 'cover-hm'");
      },
      py::arg("which") = "hm");
  m.def(
      "homology_of_json",
      [](const std::string& text) {
        return homology_table(homology(chain_complex(complex_from_json(text))));
      },
      py::arg("complex_json"));

  m.def("resolution_ranks", [](int n) { return hm_resolution(n).ranks; }, py::arg("n") = 1);
  m.def(
      "resolution_exactness_range",
      [](int n) { return exactness_range(restrict_to_z(hm_resolution(n))); }, py::arg("n") = 1);
  m.def(
      "group_homology", [](int n, int max_degree) { return homology_table(group_homology(n, max_degree)); },
      py::arg("n"), py::arg("max_degree"));
  m.def(
      "bar_resolution_homology",
      [](int max_degree, int max_bar_degree) {
        return homology_table(bar_resolution_oracle(quaternion_group(), max_degree, max_bar_degree));
      },
      py::arg("max_degree"), py::arg("max_bar_degree") = 4);
}
