#include "hm/cli.hpp"

#include "hm/covering.hpp"
#include "hm/cubical.hpp"
#include "hm/errors.hpp"
#include "hm/presentations.hpp"
#include "hm/resolution.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

using nlohmann::json;

namespace hm {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

int env_int(const char* name, int fallback) {
  const char* v = std::getenv(name);
  if (!v || !*v) return fallback;
  try {
    return std::stoi(v);
  } catch (...) {
    throw std::invalid_argument(std::string(name) + ": not an integer: " + v);
  }
}

void emit(const std::string& text, const std::string& output_path, std::ostream& out) {
  if (output_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(output_path);
  if (!f) throw std::invalid_argument("cannot open output file " + output_path);
  f << text;
}

json homology_json(const std::vector<HomologySignature>& table) {
  json rows = json::array();
  for (size_t k = 0; k < table.size(); ++k) {
    json torsion = json::array();
    for (const Int& t : table[k].torsion) torsion.push_back(t.convert_to<long long>());
    rows.push_back({{"degree", k},
                    {"free_rank", table[k].free_rank},
                    {"torsion", torsion},
                    {"pretty", table[k].to_string()}});
  }
  return rows;
}

std::string homology_text(const std::vector<HomologySignature>& table) {
  std::ostringstream os;
  for (size_t k = 0; k < table.size(); ++k)
    os << "H_" << k << " = " << table[k].to_string() << "\n";
  return os.str();
}

struct PresentationCheck {
  std::string name;
  std::string presentation;
  bool ok = false;
  int order = -1;
  int expected_order = 8;
  std::string detail;
};

PresentationCheck check_presents_quaternion(const std::string& name, const Presentation& p,
                                            int max_cosets) {
  PresentationCheck c;
  c.name = name;
  c.presentation = to_string(p);
  FiniteGroup q = quaternion_group();
  c.order = todd_coxeter(p, max_cosets).order;
  if (c.order != q.order) {
    c.detail = "coset enumeration gives order " + std::to_string(c.order) + ", expected 8";
    return c;
  }
  auto assignment = presentation_isomorphic_to(p, q, max_cosets);
  if (!assignment) {
    c.detail = "order is 8 but no isomorphism onto the quaternion group exists";
    return c;
  }
  std::string map;
  for (size_t g = 0; g < p.generators.size(); ++g) {
    if (!map.empty()) map += ", ";
    map += p.generators[g] + " -> " + q.names[(*assignment)[g]];
  }
  c.ok = true;
  c.detail = "isomorphic to the quaternion group via " + map;
  return c;
}

int cmd_presentations_verify(const std::string& file, const std::string& format,
                             const std::string& output, std::ostream& out) {
  int max_cosets = env_int("HM_MAX_COSETS", 10000);
  std::vector<PresentationCheck> checks;

  if (file.empty()) {
    checks.push_back(check_presents_quaternion(
        "standard-presentation",
        parse_presentation("<e,i,j,k | i^2=e, j^2=e, k^2=e, ijk=e, e^2=1>"), max_cosets));
    checks.push_back(check_presents_quaternion(
        "power-presentation", parse_presentation("<i,j | i^4=1, i^2=j^2, iji=j>"), max_cosets));
    checks.push_back(check_presents_quaternion(
        "two-generator-presentation", parse_presentation("<i,j | i=jij, j=iji>"), max_cosets));
  } else {
    std::ifstream f(file);
    if (!f) throw std::invalid_argument("cannot open presentation file " + file);
    std::string line;
    int lineno = 0;
    while (std::getline(f, line)) {
      ++lineno;
      std::string trimmed = line;
      size_t a = trimmed.find_first_not_of(" \t");
      if (a == std::string::npos || trimmed[a] == '#') continue;
      checks.push_back(check_presents_quaternion("file:" + std::to_string(lineno),
                                                 parse_presentation(trimmed), max_cosets));
    }
    if (checks.empty()) throw std::invalid_argument("presentation file has no entries");
  }

  // Fundamental-group check: contracting w in the 2-skeleton presents Q.
  {
    CubicalComplex hm2 = hm_skeleton(2);
    Presentation p = pi1_presentation(hm2, {3});  // w is edge 3
    checks.push_back(check_presents_quaternion("pi1-from-2-skeleton", p, max_cosets));
  }

  bool all_ok = true;
  for (const auto& c : checks) all_ok = all_ok && c.ok;

  std::ostringstream os;
  if (format == "json") {
    json j;
    j["schema"] = 1;
    j["command"] = "presentations-verify";
    j["ok"] = all_ok;
    json rows = json::array();
    for (const auto& c : checks)
      rows.push_back({{"name", c.name},
                      {"presentation", c.presentation},
                      {"ok", c.ok},
                      {"order", c.order},
                      {"expected_order", c.expected_order},
                      {"detail", c.detail}});
    j["checks"] = rows;
    os << j.dump(2) << "\n";
  } else {
    for (const auto& c : checks)
      os << (c.ok ? "[ok]   " : "[FAIL] ") << c.name << ": " << c.presentation << "\n        "
         << c.detail << "\n";
    os << (all_ok ? "all checks passed" : "verification FAILED") << "\n";
  }
  emit(os.str(), output, out);
  return all_ok ? kExitOk : kExitVerificationFailed;
}

CubicalComplex build_named_complex(bool tesseract, int skeleton) {
  if (tesseract) return tesseract_boundary();
  return hm_skeleton(skeleton);
}

int cmd_complex_build(bool tesseract, int skeleton, const std::string& format,
                      const std::string& output, std::ostream& out) {
  CubicalComplex c = build_named_complex(tesseract, skeleton);
  if (format == "json")
    emit(c.to_json(), output, out);
  else if (format == "dot")
    emit(c.to_dot(tesseract ? "tesseract" : "hm"), output, out);
  else {
    auto n = c.cell_counts();
    std::ostringstream os;
    os << "cells: (" << n[0] << ", " << n[1] << ", " << n[2] << ", " << n[3] << ")\n"
       << "euler characteristic: " << euler_characteristic(c) << "\n";
    emit(os.str(), output, out);
  }
  return kExitOk;
}

int cmd_cover(int skeleton, bool check_tesseract, const std::string& format,
              const std::string& output, std::ostream& out) {
  CubicalComplex base = hm_skeleton(skeleton);
  CoveringData cov = cover_complex(base, standard_labeling(base));
  cov.verify();
  auto counts = cov.total.cell_counts();

  bool isomorphic = false;
  if (check_tesseract) isomorphic = complex_isomorphic(cov.total, tesseract_boundary()).has_value();

  std::ostringstream os;
  if (format == "json") {
    json j;
    j["schema"] = 1;
    j["command"] = "cover";
    j["skeleton"] = skeleton;
    j["counts"] = {counts[0], counts[1], counts[2], counts[3]};
    if (check_tesseract) j["isomorphic_to_tesseract"] = isomorphic;
    j["total"] = json::parse(cov.total.to_json());
    os << j.dump(2) << "\n";
  } else if (format == "dot") {
    os << cov.total.to_dot("cover");
  } else {
    os << "cover cells: (" << counts[0] << ", " << counts[1] << ", " << counts[2] << ", "
       << counts[3] << ")\n";
    if (check_tesseract)
      os << "isomorphic to the tesseract boundary: " << (isomorphic ? "true" : "false") << "\n";
  }
  emit(os.str(), output, out);
  return (!check_tesseract || isomorphic) ? kExitOk : kExitVerificationFailed;
}

int cmd_homology(const std::string& input, const std::string& named, bool emit_matrices,
                 const std::string& format, const std::string& output, std::ostream& out) {
  ChainComplex chain;
  if (!input.empty()) {
    std::ifstream f(input);
    if (!f) throw std::invalid_argument("cannot open input file " + input);
    std::stringstream buffer;
    buffer << f.rdbuf();
    chain = chain_complex(complex_from_json(buffer.str()));
  } else if (named == "hm") {
    chain = chain_complex(hm_skeleton(3));
  } else if (named == "tesseract") {
    chain = chain_complex(tesseract_boundary());
  } else if (named == "cover-hm") {
    CubicalComplex base = hm_skeleton(3);
    chain = chain_complex(cover_complex(base, standard_labeling(base)).total);
  } else {
    throw std::invalid_argument("homology: choose --input, --hm, --cover-hm or --tesseract");
  }

  std::vector<HomologySignature> table = homology(chain);
  std::ostringstream os;
  if (format == "json") {
    json j;
    j["schema"] = 1;
    j["command"] = "homology";
    j["ranks"] = chain.ranks;
    j["table"] = homology_json(table);
    if (emit_matrices) {
      json boundaries = json::array();
      for (const auto& b : chain.boundaries) boundaries.push_back(json::parse(b.to_json()));
      j["boundaries"] = boundaries;
    }
    os << j.dump(2) << "\n";
  } else {
    os << homology_text(table);
  }
  emit(os.str(), output, out);
  return kExitOk;
}

int cmd_cayley(const std::string& generators, bool check_subquotient, const std::string& format,
               const std::string& output, std::ostream& out) {
  FiniteGroup q = quaternion_group();
  std::vector<int> gens;
  std::stringstream ss(generators);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    int e = q.element(tok);
    if (e < 0) throw std::invalid_argument("cayley: unknown group element '" + tok + "'");
    gens.push_back(e);
  }
  LabeledGraph cayley = cayley_graph(q, gens);

  bool subquotient_ok = true;
  if (check_subquotient) {
    CubicalComplex hm1 = hm_skeleton(1);
    CoveringData cov = cover_complex(hm1, standard_labeling(hm1));
    LabeledGraph skel = one_skeleton(cov.total);
    LabeledGraph contracted =
        contract_edges(skel, [](const LabeledGraph::Edge& e) { return e.label.starts_with("w."); });
    LabeledGraph reduced = delete_edges(
        contracted, [](const LabeledGraph::Edge& e) { return e.label.starts_with("z."); });
    LabeledGraph reference = cayley_graph(q, {q.element("i"), q.element("j")});
    subquotient_ok = graph_isomorphic(reduced, reference, false).has_value();
  }

  std::ostringstream os;
  if (format == "json") {
    json j;
    j["schema"] = 1;
    j["command"] = "cayley";
    j["vertices"] = cayley.num_vertices();
    j["edges"] = cayley.edges.size();
    if (check_subquotient) j["subquotient_isomorphic"] = subquotient_ok;
    os << j.dump(2) << "\n";
  } else if (format == "dot") {
    os << cayley.to_dot("cayley");
  } else {
    os << "cayley graph: " << cayley.num_vertices() << " vertices, " << cayley.edges.size()
       << " edges\n";
    if (check_subquotient)
      os << "cover subquotient isomorphic to Cayley(Q,{i,j}): "
         << (subquotient_ok ? "true" : "false") << "\n";
  }
  emit(os.str(), output, out);
  return subquotient_ok ? kExitOk : kExitVerificationFailed;
}

int cmd_resolution(int n, int homology_degree, int oracle_degree, bool emit_matrices,
                   const std::string& format, const std::string& output, std::ostream& out) {
  ZGComplex res = hm_resolution(n);
  std::vector<HomologySignature> table;
  if (homology_degree >= 0) table = group_homology(n, homology_degree);
  std::vector<HomologySignature> oracle;
  if (oracle_degree >= 0)
    oracle = bar_resolution_oracle(quaternion_group(), oracle_degree,
                                   env_int("HM_MAX_BAR_DEGREE", 4));

  std::ostringstream os;
  if (format == "json") {
    json j;
    j["schema"] = 1;
    j["command"] = "resolution";
    j["n"] = n;
    j["augmented"] = res.augmented;
    j["ranks"] = res.ranks;
    if (homology_degree >= 0) j["group_homology"] = homology_json(table);
    if (oracle_degree >= 0) j["bar_oracle"] = homology_json(oracle);
    if (emit_matrices) {
      json boundaries = json::array();
      for (const auto& b : res.boundaries) boundaries.push_back(json::parse(zg_matrix_to_json(b)));
      j["boundaries"] = boundaries;
    }
    os << j.dump(2) << "\n";
  } else {
    os << "resolution level " << n << ", ranks:";
    for (int r : res.ranks) os << " " << r;
    os << " (augmented)\n";
    if (homology_degree >= 0) os << homology_text(table);
    if (oracle_degree >= 0) {
      os << "bar oracle:\n";
      os << homology_text(oracle);
    }
  }
  emit(os.str(), output, out);
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"computational engine for cubical complexes, covers and quaternion resolutions"};
  app.require_subcommand(1);

  std::string format = "text";
  std::string output;
  app.add_option("--format", format, "output format: text, json or dot")
      ->check(CLI::IsMember({"text", "json", "dot"}));
  app.add_option("--output", output, "write to a file instead of stdout");

  auto* presentations = app.add_subcommand("presentations", "presentation checks");
  presentations->require_subcommand(1);
  auto* verify = presentations->add_subcommand("verify", "verify the quaternion presentations");
  std::string pres_file;
  verify->add_option("--file", pres_file, "file with one presentation per line");

  auto* complex_cmd = app.add_subcommand("complex", "cell complexes");
  complex_cmd->require_subcommand(1);
  auto* build = complex_cmd->add_subcommand("build", "emit a complex");
  int build_skeleton = 3;
  bool build_tesseract = false;
  auto* skel_opt = build->add_option("--hm-skeleton", build_skeleton, "skeleton degree 0..3")
                       ->check(CLI::Range(0, 3));
  auto* tess_opt = build->add_flag("--tesseract", build_tesseract, "boundary of the 4-cube");
  tess_opt->excludes(skel_opt);

  auto* cover_cmd = app.add_subcommand("cover", "cover from the canonical labeling");
  int cover_skeleton = 3;
  cover_cmd->add_option("--hm-skeleton", cover_skeleton, "skeleton degree 0..3")
      ->check(CLI::Range(0, 3));
  bool check_tesseract = false;
  cover_cmd->add_flag("--check-tesseract", check_tesseract,
                      "verify the cover is an empty 4-cube");

  auto* homology_cmd = app.add_subcommand("homology", "integral homology tables");
  std::string homology_input;
  homology_cmd->add_option("--input", homology_input, "complex JSON file");
  bool want_hm = false, want_tesseract = false, want_cover = false, homology_matrices = false;
  homology_cmd->add_flag("--hm", want_hm, "the glued-cube complex");
  homology_cmd->add_flag("--tesseract", want_tesseract, "the tesseract boundary");
  homology_cmd->add_flag("--cover-hm", want_cover, "the cover of the glued cube");
  homology_cmd->add_flag("--matrices", homology_matrices,
                         "include boundary matrices in the JSON output");

  auto* cayley_cmd = app.add_subcommand("cayley", "Cayley graphs of the quaternion group");
  std::string cayley_gens = "i,j";
  cayley_cmd->add_option("--generators", cayley_gens, "comma-separated generator names");
  bool check_subquotient = false;
  cayley_cmd->add_flag("--check-subquotient", check_subquotient,
                       "verify the cover 1-skeleton subquotient matches Cayley(Q,{i,j})");

  auto* resolution_cmd = app.add_subcommand("resolution", "iterated-join resolutions");
  int res_n = 1;
  resolution_cmd->add_option("--n", res_n, "join level (>= 1)")->check(CLI::PositiveNumber);
  int res_homology = -1;
  resolution_cmd->add_option("--group-homology", res_homology,
                             "also print group homology through this degree");
  int res_oracle = -1;
  resolution_cmd->add_option("--bar-oracle", res_oracle,
                             "also print the bar-resolution oracle through this degree");
  bool res_matrices = false;
  resolution_cmd->add_flag("--matrices", res_matrices,
                           "include group-ring boundary matrices in the JSON output");

  for (CLI::App* sub : {presentations, verify, complex_cmd, build, cover_cmd, homology_cmd,
                        cayley_cmd, resolution_cmd})
    sub->fallthrough();

  std::vector<std::string> argv = args;
  std::vector<const char*> ptrs;
  ptrs.push_back("hmtool");
  for (const auto& a : argv) ptrs.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(ptrs.size()), ptrs.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      out << app.help();
      return kExitOk;
    }
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (verify->parsed()) return cmd_presentations_verify(pres_file, format, output, out);
    if (build->parsed())
      return cmd_complex_build(build_tesseract, build_skeleton, format, output, out);
    if (cover_cmd->parsed())
      return cmd_cover(cover_skeleton, check_tesseract, format, output, out);
    if (homology_cmd->parsed()) {
      std::string named = want_hm ? "hm" : want_tesseract ? "tesseract" : want_cover ? "cover-hm" : "";
      return cmd_homology(homology_input, named, homology_matrices, format, output, out);
    }
    if (cayley_cmd->parsed())
      return cmd_cayley(cayley_gens, check_subquotient, format, output, out);
    if (resolution_cmd->parsed())
      return cmd_resolution(res_n, res_homology, res_oracle, res_matrices, format, output, out);
    err << "usage error: no subcommand given\n";
    return kExitUsage;
  } catch (const BudgetExceeded& e) {
    err << "resource budget exceeded: " << e.what() << "\n";
    return kExitBudget;
  } catch (const MalformedComplex& e) {
    err << "malformed input: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace hm
