#include "hm/snf.hpp"

#include <stdexcept>

namespace hm {

namespace {

Int abs_val(const Int& v) { return v < 0 ? Int(-v) : v; }

}  // namespace

int SNFResult::rank() const {
  int r = 0;
  for (const Int& d : diagonal)
    if (d != 0) ++r;
  return r;
}

SNFResult smith_normal_form(const IntegerMatrix& a, bool want_transforms) {
  IntegerMatrix d = a;
  const int m = d.rows(), n = d.cols();
  IntegerMatrix u, v;
  if (want_transforms) {
    u = IntegerMatrix::identity(m);
    v = IntegerMatrix::identity(n);
  }

  auto row_op = [&](int r1, int r2, const Int& c) {
    d.add_row(r1, r2, c);
    if (want_transforms) u.add_row(r1, r2, c);
  };
  auto col_op = [&](int c1, int c2, const Int& c) {
    d.add_col(c1, c2, c);
    if (want_transforms) v.add_col(c1, c2, c);
  };

  int t = 0;
  const int bound = std::min(m, n);
  while (t < bound) {
    // Minimal nonzero |entry| in the trailing submatrix, row-major tie-break.
    int pi = -1, pj = -1;
    Int best;
    for (int i = t; i < m; ++i)
      for (int j = t; j < n; ++j) {
        const Int& e = d.at(i, j);
        if (e == 0) continue;
        Int ae = abs_val(e);
        if (pi < 0 || ae < best) {
          pi = i;
          pj = j;
          best = ae;
        }
      }
    if (pi < 0) break;  // submatrix is zero
    if (pi != t) {
      d.swap_rows(t, pi);
      if (want_transforms) u.swap_rows(t, pi);
    }
    if (pj != t) {
      d.swap_cols(t, pj);
      if (want_transforms) v.swap_cols(t, pj);
    }

    bool clean = true;
    for (int i = t + 1; i < m; ++i) {
      if (d.at(i, t) == 0) continue;
      Int q = d.at(i, t) / d.at(t, t);
      row_op(i, t, -q);
      if (d.at(i, t) != 0) clean = false;  // remainder smaller than pivot
    }
    for (int j = t + 1; j < n; ++j) {
      if (d.at(t, j) == 0) continue;
      Int q = d.at(t, j) / d.at(t, t);
      col_op(j, t, -q);
      if (d.at(t, j) != 0) clean = false;
    }
    if (!clean) continue;  // re-pick pivot, strictly smaller now exists

    // Divisibility: the pivot must divide the rest of the submatrix.
    int bad_row = -1;
    for (int i = t + 1; i < m && bad_row < 0; ++i)
      for (int j = t + 1; j < n; ++j)
        if (d.at(i, j) % d.at(t, t) != 0) {
          bad_row = i;
          break;
        }
    if (bad_row >= 0) {
      row_op(t, bad_row, 1);
      continue;
    }

    if (d.at(t, t) < 0) {
      d.negate_row(t);
      if (want_transforms) u.negate_row(t);
    }
    ++t;
  }

  SNFResult result;
  result.diagonal.resize(bound);
  for (int i = 0; i < bound; ++i) result.diagonal[i] = d.at(i, i);
  if (want_transforms) {
    result.u = std::move(u);
    result.v = std::move(v);
  }
  return result;
}

std::vector<std::vector<Int>> integer_kernel(const IntegerMatrix& a) {
  SNFResult s = smith_normal_form(a, true);
  const IntegerMatrix& v = *s.v;
  std::vector<std::vector<Int>> basis;
  int diag_len = static_cast<int>(s.diagonal.size());
  for (int j = 0; j < a.cols(); ++j) {
    bool in_kernel = j >= diag_len || s.diagonal[j] == 0;
    if (!in_kernel) continue;
    std::vector<Int> col(a.cols());
    for (int i = 0; i < a.cols(); ++i) col[i] = v.at(i, j);
    basis.push_back(std::move(col));
  }
  return basis;
}

}  // namespace hm
