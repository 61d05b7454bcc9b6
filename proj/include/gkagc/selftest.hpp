#pragma once

#include <string>
#include <vector>

namespace gkagc {

struct CriterionResult {
  int id = 0;
  std::string label;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

/// Runs the full verification suite: point counts, orbit census, surface
/// membership, semigroup genera, the reference code tables for both fields,
/// the 70 improved parameters, rank certificates, intersection-multiplicity
/// certificates, the qbar=2 non-gap search, exhaustive small-dimension
/// distances, and the order-bound tail law.
///
/// qbar_filter: 0 runs everything, 2 or 3 restricts to that curve where a
/// criterion is per-curve. with_big additionally runs the GF(729) rank
/// certificates (the longest step); they always run when qbar_filter == 0.
std::vector<CriterionResult> run_selftest(int qbar_filter = 0, bool with_big = false);

}  // namespace gkagc
