#ifndef BRAIDFORCE_FORCING_HPP
#define BRAIDFORCE_FORCING_HPP

#include <string>
#include <vector>

#include "json.hpp"

#include "braidforce/aug_braid.hpp"
#include "braidforce/braid.hpp"
#include "braidforce/nielsen.hpp"

namespace braidforce {

struct ForcingOptions {
  Bounds bounds;
  bool boundary_fixed = false;  // homeomorphisms fixed pointwise on the boundary
  bool permissive = false;      // also report classes of undecided degeneracy
};

struct ForcedBraid {
  AugBraid braid;
  Verdict degeneracy;  // No, or Unknown in permissive mode
};

struct ForcingReport {
  BraidWord beta;
  int m;
  ForcingOptions options;
  std::vector<ClassReport> classes;
  std::vector<std::pair<FreeWord, FreeWord>> unresolved;
  std::vector<ForcedBraid> forced;
  /// False whenever an undecided comparison influenced merging or filtering.
  bool exact;
};

/// The braids iota(beta^m) phi(gamma) over the essential non-degenerate
/// fixed point classes gamma of f^m.
ForcingReport forced_set(const BraidWord& beta, int m, const ForcingOptions& options = {});

Decision is_forced(const AugBraid& candidate, const BraidWord& beta, int m, const ForcingOptions& options = {});
/// Candidate given as a word on n+1 strands fixing the last strand.
Decision is_forced(const BraidWord& candidate_word, const BraidWord& beta, int m, const ForcingOptions& options = {});

nlohmann::ordered_json report_to_json(const ForcingReport& report);
std::string format_report(const ForcingReport& report);

}  // namespace braidforce

#endif  // BRAIDFORCE_FORCING_HPP
