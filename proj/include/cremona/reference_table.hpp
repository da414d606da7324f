#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cremona/cremona_core.hpp"

namespace cremona {

/// One row of the classification table of special Cremona transformations with n <= 7 or
/// r <= 3. `multidegree` includes the leading and trailing 1.
struct ReferenceRow {
  std::string row;
  int r = 0;
  int n = 0;
  std::vector<Integer> multidegree;
  std::optional<std::int64_t> lambda;
  std::optional<std::int64_t> genus;
  std::string description;
};

/// The embedded table (rows I-XIII).
const std::vector<ReferenceRow>& reference_table();

struct ReferenceCheck {
  const ReferenceRow* row = nullptr;
  std::vector<MultidegreeViolation> violations;
  std::optional<std::vector<Integer>> recomputed;  // rows with known (lambda, g)

  bool recomputation_matches() const { return !recomputed || *recomputed == row->multidegree; }
  bool passed() const { return violations.empty() && recomputation_matches(); }
};

/// Admissibility for every row; rows with (lambda, g) are also recomputed through the
/// invariant engine of the matching built-in configuration.
std::vector<ReferenceCheck> verify_reference_table();

}  // namespace cremona
