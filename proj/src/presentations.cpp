#include "hm/presentations.hpp"

#include "hm/snf.hpp"

namespace hm {

namespace {

bool relations_hold_up_to(const Presentation& p, const FiniteGroup& g,
                          const std::vector<int>& assignment, int assigned_count) {
  for (const auto& [lhs, rhs] : p.relations) {
    bool ready = true;
    for (const auto& l : lhs.letters) ready = ready && l.gen < assigned_count;
    for (const auto& l : rhs.letters) ready = ready && l.gen < assigned_count;
    if (!ready) continue;
    if (eval_word(g, assignment, lhs) != eval_word(g, assignment, rhs)) return false;
  }
  return true;
}

bool search(const Presentation& p, const FiniteGroup& g, std::vector<int>& assignment, int next) {
  int ngens = static_cast<int>(p.generators.size());
  if (next == ngens) return g.generates(assignment);
  for (int e = 0; e < g.order; ++e) {
    assignment[next] = e;
    if (relations_hold_up_to(p, g, assignment, next + 1)) {
      if (search(p, g, assignment, next + 1)) return true;
    }
  }
  assignment[next] = -1;
  return false;
}

}  // namespace

std::optional<std::vector<int>> presentation_isomorphic_to(const Presentation& p,
                                                           const FiniteGroup& g, int max_cosets) {
  // A surjective homomorphism between groups of equal order is bijective,
  // so the enumeration plus a generating relation-respecting assignment
  // certifies the isomorphism.
  EnumerationResult enumeration = todd_coxeter(p, max_cosets);
  if (enumeration.order != g.order) return std::nullopt;
  std::vector<int> assignment(p.generators.size(), -1);
  if (!search(p, g, assignment, 0)) return std::nullopt;
  return assignment;
}

HomologySignature abelianization(const Presentation& p) {
  int ngens = static_cast<int>(p.generators.size());
  int nrels = static_cast<int>(p.relations.size());
  IntegerMatrix exponents(nrels, ngens);
  for (int r = 0; r < nrels; ++r) {
    Word rel = p.relator(r);
    for (const auto& l : rel.letters) exponents.at(r, l.gen) += l.sign;
  }
  SNFResult s = smith_normal_form(exponents);
  HomologySignature sig;
  sig.free_rank = ngens - s.rank();
  for (const Int& d : s.diagonal)
    if (d > 1) sig.torsion.push_back(d);
  return sig;
}

}  // namespace hm
