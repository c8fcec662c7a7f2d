#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "tcla/criterion.hpp"

namespace tcla {

/// Per-sample generator; seeded from (seed, sample index).
std::mt19937_64 sample_rng(std::uint64_t seed, std::uint64_t index);

/// Rational with numerator uniform in [-20, 20] and denominator in [1, 6].
Rat random_rat(std::mt19937_64& rng);

WeightFunctional random_weight(std::mt19937_64& rng, const TruncatedAlgebra& alg);

/// Forces Lambda_N(h_witness) = 0 by solving for one Cartan coordinate
/// (chosen at random among those with a nonzero coroot coefficient).
void plant_witness(std::mt19937_64& rng, WeightFunctional& lambda, const TruncatedAlgebra& alg,
                   const RootVector& witness);

struct SampleResult {
  std::size_t index = 0;
  bool constructed = false;
  std::optional<RootVector> planted;
  WeightFunctional lambda;
  Verdict criterion;
  bool criterion_in_window = false;
  std::vector<RootVector> zero_weights;
  bool scan_zero = false;
  bool agree = false;
};

struct ValidationReport {
  std::string algebra;
  int nilp = 0;
  std::uint64_t seed = 0;
  int max_height = 0;
  std::vector<SampleResult> samples;

  std::size_t agreements() const;
  std::vector<const SampleResult*> disagreements() const;
};

/// Draws `samples` weights (even indices generic, odd indices with a
/// planted witness of height <= max_height), then compares the criterion
/// restricted to roots of height <= max_height against the determinant scan
/// over the same window. Deterministic in `seed` regardless of `threads`
/// (0 = TCLA_THREADS or hardware concurrency).
ValidationReport cross_validate(const AlgebraPtr& alg, int nilp, int samples, std::uint64_t seed,
                                int max_height, int threads = 0);

SampleResult evaluate_sample(const TruncatedAlgebra& alg, WeightFunctional lambda, int max_height);

std::string report_to_text(const ValidationReport& report, const LieAlgebra& base);
std::string report_to_json(const ValidationReport& report, const LieAlgebra& base);

/// Worker count: TCLA_THREADS if set and positive, else hardware concurrency.
int default_thread_count();

}  // namespace tcla
