#include "hm/group_ring.hpp"

#include <sstream>
#include <stdexcept>

namespace hm {

GroupRingElement GroupRingElement::of_element(const FiniteGroup& g, int element, Int c) {
  GroupRingElement e(g.order);
  e.coeff[element] = std::move(c);
  return e;
}

GroupRingElement GroupRingElement::norm(const FiniteGroup& g) {
  GroupRingElement e(g.order);
  for (Int& c : e.coeff) c = 1;
  return e;
}

bool GroupRingElement::is_zero() const {
  for (const Int& c : coeff)
    if (c != 0) return false;
  return true;
}

Int GroupRingElement::augmentation() const {
  Int s = 0;
  for (const Int& c : coeff) s += c;
  return s;
}

GroupRingElement& GroupRingElement::add(const GroupRingElement& other, const Int& scale) {
  for (size_t i = 0; i < coeff.size(); ++i) coeff[i] += scale * other.coeff[i];
  return *this;
}

GroupRingElement zg_mul(const FiniteGroup& g, const GroupRingElement& a, const GroupRingElement& b) {
  GroupRingElement out(g.order);
  for (int u = 0; u < g.order; ++u) {
    if (a.coeff[u] == 0) continue;
    for (int v = 0; v < g.order; ++v) {
      if (b.coeff[v] == 0) continue;
      out.coeff[g.mul(u, v)] += a.coeff[u] * b.coeff[v];
    }
  }
  return out;
}

std::string GroupRingElement::to_string(const FiniteGroup& g) const {
  std::ostringstream os;
  bool first = true;
  for (int e = 0; e < g.order; ++e) {
    if (coeff[e] == 0) continue;
    if (!first) os << " + ";
    os << coeff[e] << "*" << g.names[e];
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

ZGMatrix zg_compose(const FiniteGroup& g, const ZGMatrix& d_k, const ZGMatrix& d_k1) {
  size_t rows = d_k.size();
  size_t mid = d_k1.size();
  size_t cols = mid == 0 ? 0 : d_k1[0].size();
  ZGMatrix out(rows, std::vector<GroupRingElement>(cols, GroupRingElement(g.order)));
  for (size_t i = 0; i < rows; ++i)
    for (size_t j = 0; j < mid; ++j) {
      if (d_k[i][j].is_zero()) continue;
      for (size_t l = 0; l < cols; ++l) {
        if (d_k1[j][l].is_zero()) continue;
        out[i][l].add(zg_mul(g, d_k1[j][l], d_k[i][j]));
      }
    }
  return out;
}

std::string zg_matrix_to_json(const ZGMatrix& m) {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < m.size(); ++i) {
    os << (i ? ",[" : "[");
    for (size_t j = 0; j < m[i].size(); ++j) {
      os << (j ? ",[" : "[");
      for (size_t c = 0; c < m[i][j].coeff.size(); ++c)
        os << (c ? "," : "") << m[i][j].coeff[c];
      os << "]";
    }
    os << "]";
  }
  os << "]";
  return os.str();
}

void ZGComplex::validate() const {
  if (ranks.empty()) {
    if (augmented && boundaries.empty()) return;  // just the degree -1 copy of Z
    throw std::invalid_argument("zg complex: no degrees");
  }
  if (boundaries.size() + 1 != ranks.size())
    throw std::invalid_argument("zg complex: boundary count mismatch");
  for (size_t k = 0; k < boundaries.size(); ++k) {
    if (static_cast<int>(boundaries[k].size()) != ranks[k])
      throw std::invalid_argument("zg complex: boundary row count mismatch");
    for (const auto& row : boundaries[k]) {
      if (static_cast<int>(row.size()) != ranks[k + 1])
        throw std::invalid_argument("zg complex: boundary column count mismatch");
      for (const auto& entry : row)
        if (static_cast<int>(entry.coeff.size()) != group.order)
          throw std::invalid_argument("zg complex: entry has wrong group order");
    }
  }
  for (size_t k = 0; k + 1 < boundaries.size(); ++k) {
    ZGMatrix square = zg_compose(group, boundaries[k], boundaries[k + 1]);
    for (const auto& row : square)
      for (const auto& entry : row)
        if (!entry.is_zero())
          throw std::invalid_argument("zg complex: dd != 0 at degree " + std::to_string(k + 2));
  }
  if (augmented && !boundaries.empty()) {
    // Augmentation row is all ones; the composite with d_1 must vanish,
    // which for coefficient sums means every column of d_1 sums to zero.
    for (int col = 0; col < ranks[1]; ++col) {
      Int s = 0;
      for (int row = 0; row < ranks[0]; ++row) s += boundaries[0][row][col].augmentation();
      if (s != 0)
        throw std::invalid_argument("zg complex: augmentation composite nonzero at column " +
                                    std::to_string(col));
    }
  }
}

ChainComplex restrict_to_z(const ZGComplex& r) {
  const int n = r.group.order;
  ChainComplex out;
  for (int rank : r.ranks) out.ranks.push_back(rank * n);
  for (const auto& boundary : r.boundaries) {
    int rows = static_cast<int>(boundary.size());
    int cols = rows == 0 ? 0 : static_cast<int>(boundary[0].size());
    IntegerMatrix m(rows * n, cols * n);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) {
        const GroupRingElement& entry = boundary[i][j];
        if (entry.is_zero()) continue;
        // Right multiplication: block[h', h] = coeff[h^-1 h'].
        for (int h = 0; h < n; ++h)
          for (int g = 0; g < n; ++g) {
            const Int& c = entry.coeff[g];
            if (c == 0) continue;
            m.at(i * n + r.group.mul(h, g), j * n + h) += c;
          }
      }
    out.boundaries.push_back(std::move(m));
  }
  return out;
}

ChainComplex coinvariants(const ZGComplex& r) {
  ChainComplex out;
  out.ranks = r.ranks;
  for (const auto& boundary : r.boundaries) {
    int rows = static_cast<int>(boundary.size());
    int cols = rows == 0 ? 0 : static_cast<int>(boundary[0].size());
    IntegerMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) m.at(i, j) = boundary[i][j].augmentation();
    out.boundaries.push_back(std::move(m));
  }
  return out;
}

}  // namespace hm
