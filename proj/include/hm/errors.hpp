#pragma once

#include <stdexcept>
#include <string>

namespace hm {

/// Raised when an enumeration or oracle exceeds its configured resource
/// budget. Distinct from invalid-input errors so callers can tell
/// "inconclusive" apart from "malformed".
struct BudgetExceeded : std::runtime_error {
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when a cell complex violates a structural invariant (bad incidence,
/// unsolvable cube orientation, ...).
struct MalformedComplex : std::runtime_error {
  explicit MalformedComplex(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace hm
