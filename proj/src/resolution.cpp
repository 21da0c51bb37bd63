#include "hm/resolution.hpp"

#include "hm/errors.hpp"
#include "hm/snf.hpp"

#include <stdexcept>
#include <string>

namespace hm {

ZGComplex zg_complex_from_cover(const CoveringData& cov, bool augment) {
  cov.verify();
  const int n = cov.group.order;
  ChainComplex total_chain = chain_complex(cov.total);

  ZGComplex out;
  out.group = cov.group;
  out.augmented = augment;
  std::array<int, 4> counts = cov.base.cell_counts();
  int dim = cov.base.dimension();
  out.ranks.assign(counts.begin(), counts.begin() + dim + 1);

  for (int k = 1; k <= dim; ++k) {
    const IntegerMatrix& d = total_chain.boundaries[k - 1];
    ZGMatrix m(counts[k - 1], std::vector<GroupRingElement>(counts[k], GroupRingElement(n)));
    for (int j = 0; j < counts[k]; ++j) {
      int representative = cov.total_cell(k, j, cov.group.identity);
      for (int t = 0; t < d.rows(); ++t) {
        const Int& c = d.at(t, representative);
        if (c == 0) continue;
        m[cov.projection[k - 1][t]][j].coeff[cov.coordinate[k - 1][t]] += c;
      }
    }
    out.boundaries.push_back(std::move(m));
  }
  out.validate();
  return out;
}

namespace {

int zrank(const ZGComplex& x, int degree) {
  if (degree == -1) return 1;  // augmentation
  if (degree < -1 || degree > x.top_degree()) return 0;
  return x.ranks[degree];
}

// Generator of the top integral kernel, regrouped into group-ring
// coefficients. For an algebraic sphere with trivial top action this is a
// norm multiple in every slot.
std::vector<GroupRingElement> fundamental_cycle(const ZGComplex& a) {
  const int n = a.group.order;
  int top = a.top_degree();
  IntegerMatrix boundary;
  if (top >= 1) {
    ChainComplex z = restrict_to_z(a);
    boundary = z.boundaries[top - 1];
  } else {
    boundary = IntegerMatrix(1, a.ranks[0] * n);  // augmentation row
    for (int j = 0; j < a.ranks[0] * n; ++j) boundary.at(0, j) = 1;
  }
  auto kernel = integer_kernel(boundary);
  if (kernel.size() != 1)
    throw std::invalid_argument("algebraic_join: lower factor top kernel has rank " +
                                std::to_string(kernel.size()) + ", expected 1");
  std::vector<Int>& z = kernel[0];
  for (const Int& v : z)
    if (v != 0) {
      if (v < 0)
        for (Int& w : z) w = -w;
      break;
    }
  std::vector<GroupRingElement> nu(a.ranks[top], GroupRingElement(n));
  for (int i = 0; i < a.ranks[top]; ++i)
    for (int h = 0; h < n; ++h) nu[i].coeff[h] = z[i * n + h];
  for (const auto& slot : nu)
    for (int h = 1; h < n; ++h)
      if (slot.coeff[h] != slot.coeff[0])
        throw std::invalid_argument(
            "algebraic_join: top cycle is not group-fixed; lower factor is not an algebraic "
            "sphere with trivial top action");
  return nu;
}

}  // namespace

ZGComplex algebraic_join(const ZGComplex& a, const ZGComplex& b) {
  if (!a.group.same_as(b.group)) throw std::invalid_argument("algebraic_join: group mismatch");
  if (!a.augmented || !b.augmented)
    throw std::invalid_argument("algebraic_join: both factors must be augmented");
  if (a.ranks.empty()) return b;
  if (b.ranks.empty()) return a;

  const FiniteGroup& g = a.group;
  const int dA = a.top_degree();
  const int dB = b.top_degree();
  const int top = dA + dB + 1;

  std::vector<int> target(top + 1, 0);
  for (int m = 0; m <= top; ++m)
    for (int i = -1; i <= m; ++i) target[m] += zrank(a, i) * zrank(b, m - 1 - i);

  // Splice layout: degrees 0..dA carry A, degrees dA+1..top carry B.
  auto core_rank = [&](int m) { return m <= dA ? a.ranks[m] : b.ranks[m - dA - 1]; };

  // Contractible filler pairs between degrees d and d-1.
  std::vector<int> pad(top + 2, 0);
  for (int m = 0; m < top; ++m) pad[m + 1] = target[m] - core_rank(m) - pad[m];
  for (int d = 0; d <= top + 1; ++d)
    if (pad[d] < 0)
      throw std::logic_error("algebraic_join: convolution ranks not realizable (degree " +
                             std::to_string(d) + ")");
  if (target[top] != core_rank(top) + pad[top])
    throw std::logic_error("algebraic_join: rank bookkeeping failed at the top degree");

  std::vector<GroupRingElement> nu = fundamental_cycle(a);

  ZGComplex out;
  out.group = g;
  out.augmented = true;
  out.ranks = target;
  // Degree-m basis layout: [core | filler sources pad[m] | filler targets pad[m+1]].
  for (int m = 1; m <= top; ++m) {
    ZGMatrix d(target[m - 1], std::vector<GroupRingElement>(target[m], GroupRingElement(g.order)));
    if (m <= dA) {
      const ZGMatrix& src = a.boundaries[m - 1];
      for (int i = 0; i < a.ranks[m - 1]; ++i)
        for (int j = 0; j < a.ranks[m]; ++j) d[i][j] = src[i][j];
    } else if (m == dA + 1) {
      for (int j = 0; j < b.ranks[0]; ++j)
        for (int i = 0; i < a.ranks[dA]; ++i) d[i][j] = nu[i];
    } else {
      const ZGMatrix& src = b.boundaries[m - dA - 2];
      for (int i = 0; i < b.ranks[m - dA - 2]; ++i)
        for (int j = 0; j < b.ranks[m - dA - 1]; ++j) d[i][j] = src[i][j];
    }
    // Filler sources map isomorphically onto the filler-target slot one
    // degree down; between degrees 1 and 0 they attach to the first core
    // generator as well, keeping augmentation sums zero.
    for (int p = 0; p < pad[m]; ++p) {
      int row = core_rank(m - 1) + pad[m - 1] + p;
      int col = core_rank(m) + p;
      d[row][col] = GroupRingElement::of_element(g, g.identity);
      if (m == 1) d[0][col].add(GroupRingElement::of_element(g, g.identity), -1);
    }
    out.boundaries.push_back(std::move(d));
  }
  out.validate();
  return out;
}

ZGComplex hm_resolution(int n) {
  if (n < 1) throw std::invalid_argument("hm_resolution: n must be >= 1");
  CubicalComplex hm3 = hm_skeleton(3);
  ZGComplex res = zg_complex_from_cover(cover_complex(hm3, standard_labeling(hm3)), true);
  ZGComplex acc = res;
  for (int level = 2; level <= n; ++level) acc = algebraic_join(acc, res);
  return acc;
}

std::vector<HomologySignature> group_homology(int n, int max_degree) {
  if (n < 1) throw std::invalid_argument("group_homology: n must be >= 1");
  if (max_degree < 0) throw std::invalid_argument("group_homology: max_degree must be >= 0");
  if (max_degree > 4 * n - 2)
    throw std::invalid_argument("group_homology: degree " + std::to_string(max_degree) +
                                " exceeds the certified exactness range " +
                                std::to_string(4 * n - 2) + " of the level-" + std::to_string(n) +
                                " resolution");
  std::vector<HomologySignature> h = homology(coinvariants(hm_resolution(n)));
  h.resize(max_degree + 1);
  return h;
}

std::vector<HomologySignature> bar_resolution_oracle(const FiniteGroup& g, int max_degree,
                                                     int max_bar_degree) {
  if (max_degree < 0) throw std::invalid_argument("bar oracle: max_degree must be >= 0");
  if (max_degree + 1 > max_bar_degree)
    throw BudgetExceeded("bar oracle: degree " + std::to_string(max_degree) +
                         " needs bar modules through degree " + std::to_string(max_degree + 1) +
                         " but the budget allows " + std::to_string(max_bar_degree));

  std::vector<int> nonid;
  for (int e = 0; e < g.order; ++e)
    if (e != g.identity) nonid.push_back(e);
  const int base = static_cast<int>(nonid.size());

  std::vector<long long> rank(max_degree + 2);
  rank[0] = 1;
  for (int k = 1; k <= max_degree + 1; ++k) rank[k] = rank[k - 1] * base;

  ChainComplex c;
  for (int k = 0; k <= max_degree + 1; ++k) c.ranks.push_back(static_cast<int>(rank[k]));

  // Coinvariant differential of the normalized bar resolution: the leading
  // face drops the first entry, inner faces multiply neighbours (degenerate
  // tuples vanish), the last face drops the final entry.
  for (int k = 1; k <= max_degree + 1; ++k) {
    IntegerMatrix d(static_cast<int>(rank[k - 1]), static_cast<int>(rank[k]));
    std::vector<int> tuple(k);
    for (long long col = 0; col < rank[k]; ++col) {
      long long rest = col;
      for (int i = 0; i < k; ++i) {
        tuple[i] = nonid[rest % base];
        rest /= base;
      }
      auto row_index = [&](const std::vector<int>& t) -> long long {
        long long idx = 0;
        for (int i = static_cast<int>(t.size()) - 1; i >= 0; --i) {
          int digit = -1;
          for (int d2 = 0; d2 < base; ++d2)
            if (nonid[d2] == t[i]) digit = d2;
          idx = idx * base + digit;
        }
        return idx;
      };
      std::vector<int> face(tuple.begin() + 1, tuple.end());
      d.at(static_cast<int>(row_index(face)), static_cast<int>(col)) += 1;
      int sign = -1;
      for (int i = 0; i + 1 < k; ++i) {
        int product = g.mul(tuple[i], tuple[i + 1]);
        if (product != g.identity) {
          std::vector<int> merged;
          for (int t2 = 0; t2 < k; ++t2) {
            if (t2 == i) {
              merged.push_back(product);
              ++t2;  // skip the absorbed entry
            } else {
              merged.push_back(tuple[t2]);
            }
          }
          d.at(static_cast<int>(row_index(merged)), static_cast<int>(col)) += sign;
        }
        sign = -sign;
      }
      face.assign(tuple.begin(), tuple.end() - 1);
      d.at(static_cast<int>(row_index(face)), static_cast<int>(col)) += (k % 2 == 0) ? 1 : -1;
    }
    c.boundaries.push_back(std::move(d));
  }

  std::vector<HomologySignature> h = homology(c);
  h.resize(max_degree + 1);
  return h;
}

}  // namespace hm
