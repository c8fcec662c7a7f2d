#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tcla/shapovalov.hpp"

namespace tcla {

/// Outcome of the top-level criterion: M(Lambda) is reducible iff
/// Lambda(h_alpha (x) t^N) = 0 for some positive root alpha.
struct Verdict {
  bool reducible = false;
  std::vector<RootVector> witnesses;
  /// Set when only roots up to this height were examined; unset when the
  /// verdict covers every positive root (finite or closed-form systems).
  std::optional<int> scanned_height;

  /// Whether some witness has height <= max_height.
  bool reducible_up_to(int max_height) const;
};

/// Evaluates Lambda_N(h_alpha) over the positive roots. Finite algebras use
/// their full root list; algebras with a closed-form witness search are
/// solved exactly; anything else is examined up to max_root_height.
Verdict criterion_reducible(const WeightFunctional& lambda, const TruncatedAlgebra& alg, int max_root_height);

struct ScanRecord {
  RootVector chi;
  std::size_t dim = 0;
  Rat det;
};

/// Shapovalov determinants for every chi in Q+ with 1 <= height <= max_height.
struct ScanReport {
  int max_height = 0;
  std::vector<ScanRecord> records;

  bool zero_found() const;
  std::vector<RootVector> zero_weights() const;
};

ScanReport scan_reducible(const WeightFunctional& lambda, const TruncatedAlgebra& alg, int max_height);
ScanReport scan_reducible(const VermaModule& module, int max_height);

/// "REDUCIBLE, witness alpha1+alpha2" / "IRREDUCIBLE" (with the height
/// bound appended for truncated verdicts).
std::string describe(const Verdict& verdict, const LieAlgebra& base);

}  // namespace tcla
