#pragma once

#include "hm/group.hpp"

#include <vector>

namespace hm {

/// Complete coset table produced by a successful enumeration over the
/// trivial subgroup. Columns come in pairs: column 2g is generator g,
/// column 2g+1 its inverse. Row 0 is the trivial coset.
struct CosetTable {
  int num_generators = 0;
  std::vector<std::vector<int>> rows;

  int column_of(int gen, int sign) const { return 2 * gen + (sign < 0 ? 1 : 0); }

  /// True when every entry is defined and every relator of `p` scans
  /// closed from every coset.
  bool closed_under(const Presentation& p) const;
};

struct EnumerationResult {
  int order = 0;
  CosetTable table;
};

/// HLT-style coset enumeration over the trivial subgroup with
/// deterministic first-undefined-entry filling. Returns the group order
/// (the number of surviving cosets) and the completed table.
///
/// Throws BudgetExceeded if more than `max_cosets` cosets would be
/// defined at once; that outcome is inconclusive, not a statement about
/// the group. Throws std::invalid_argument for malformed input.
EnumerationResult todd_coxeter(const Presentation& p, int max_cosets = 10000);

}  // namespace hm
