#pragma once

#include "hm/integer_matrix.hpp"

#include <optional>
#include <vector>

namespace hm {

/// Diagonal of a Smith normal form, with d1 | d2 | ... and trailing zeros
/// allowed. When transforms are requested, U*A*V equals the diagonal
/// matrix and det U, det V are units.
struct SNFResult {
  std::vector<Int> diagonal;  // length min(rows, cols)
  std::optional<IntegerMatrix> u;
  std::optional<IntegerMatrix> v;

  int rank() const;
};

/// Deterministic Smith normal form: minimal-absolute-value pivot with
/// row-major tie-break, diagonal entries non-negative.
SNFResult smith_normal_form(const IntegerMatrix& a, bool want_transforms = false);

/// Basis of the integer kernel {x : A x = 0}, one column vector per basis
/// element, derived from the SNF transforms.
std::vector<std::vector<Int>> integer_kernel(const IntegerMatrix& a);

}  // namespace hm
