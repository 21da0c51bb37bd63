#include "hm/chain_complex.hpp"

#include "hm/snf.hpp"

#include <sstream>
#include <stdexcept>

namespace hm {

void ChainComplex::validate() const {
  if (ranks.empty()) throw std::invalid_argument("chain complex: no degrees");
  if (boundaries.size() + 1 != ranks.size())
    throw std::invalid_argument("chain complex: boundary count mismatch");
  for (size_t k = 0; k < boundaries.size(); ++k) {
    if (boundaries[k].rows() != ranks[k] || boundaries[k].cols() != ranks[k + 1])
      throw std::invalid_argument("chain complex: boundary shape mismatch at degree " +
                                  std::to_string(k + 1));
  }
  for (size_t k = 0; k + 1 < boundaries.size(); ++k)
    if (!boundaries[k].multiply(boundaries[k + 1]).is_zero())
      throw std::invalid_argument("chain complex: dd != 0 at degree " + std::to_string(k + 2));
}

long long ChainComplex::euler_characteristic() const {
  long long chi = 0;
  int sign = 1;
  for (int r : ranks) {
    chi += sign * static_cast<long long>(r);
    sign = -sign;
  }
  return chi;
}

std::string HomologySignature::to_string() const {
  if (trivial()) return "0";
  std::ostringstream os;
  bool first = true;
  if (free_rank == 1) {
    os << "Z";
    first = false;
  } else if (free_rank > 1) {
    os << "Z^" << free_rank;
    first = false;
  }
  for (const Int& t : torsion) {
    if (!first) os << " + ";
    os << "Z/" << t;
    first = false;
  }
  return os.str();
}

std::vector<HomologySignature> homology(const ChainComplex& c) {
  c.validate();
  int d = c.top_degree();
  std::vector<int> boundary_rank(d + 2, 0);
  std::vector<std::vector<Int>> boundary_torsion(d + 2);
  for (int k = 1; k <= d; ++k) {
    SNFResult s = smith_normal_form(c.boundaries[k - 1]);
    boundary_rank[k] = s.rank();
    for (const Int& v : s.diagonal)
      if (v > 1) boundary_torsion[k].push_back(v);
  }
  std::vector<HomologySignature> h(d + 1);
  for (int k = 0; k <= d; ++k) {
    long nullity = c.ranks[k] - boundary_rank[k];
    h[k].free_rank = nullity - boundary_rank[k + 1];
    h[k].torsion = boundary_torsion[k + 1];
    if (h[k].free_rank < 0) throw std::logic_error("homology: negative free rank");
  }
  return h;
}

int exactness_range(const ChainComplex& c) {
  std::vector<HomologySignature> h = homology(c);
  int d = 0;
  for (int k = 1; k < static_cast<int>(h.size()); ++k) {
    if (!h[k].trivial()) break;
    d = k;
  }
  return d;
}

}  // namespace hm
