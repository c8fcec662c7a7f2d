#pragma once

#include <map>
#include <mutex>
#include <utility>

#include "tcla/weights.hpp"

namespace tcla {

/// Vector of M(Lambda), coefficients over the PBW basis theta v_Lambda.
using VermaVector = LinComb<PBWMonomial>;

/// The Verma module M(Lambda) for a truncated current algebra.
///
/// Generators act on basis monomials by straightening: X f_1 ... f_k v is
/// rewritten as f_1 (X f_2 ... f_k v) + [X, f_1] f_2 ... f_k v until every
/// lowering product is in canonical order, raising generators reach v_Lambda
/// (and die), and Cartan generators reach v_Lambda (and evaluate Lambda).
/// Results per (generator, monomial) are memoized; the cache is guarded so a
/// module may be shared between threads.
class VermaModule {
 public:
  VermaModule(TruncatedAlgebra alg, WeightFunctional lambda);

  const TruncatedAlgebra& algebra() const { return alg_; }
  const WeightFunctional& weight() const { return lambda_; }

  VermaVector highest_weight_vector() const;

  VermaVector apply_lowering(const GenElement& f, const VermaVector& v) const;
  VermaVector apply_cartan(const GenElement& h, const VermaVector& v) const;
  VermaVector apply_raising(const GenElement& e, const VermaVector& v) const;

  /// Action of an arbitrary generator.
  VermaVector apply(const GenElement& x, const VermaVector& v) const;
  VermaVector apply(const GenComb& x, const VermaVector& v) const;

  /// Coefficient of v_Lambda.
  static Rat highest_coefficient(const VermaVector& v);

  std::size_t cache_size() const;

 private:
  VermaVector act(const GenElement& x, const PBWMonomial& m) const;
  VermaVector compute(const GenElement& x, const PBWMonomial& m) const;

  TruncatedAlgebra alg_;
  WeightFunctional lambda_;
  mutable std::mutex mutex_;
  mutable std::map<std::pair<GenElement, PBWMonomial>, VermaVector> memo_;
};

/// The weight chi of a homogeneous vector; nullopt if v is zero or mixed.
std::optional<RootVector> homogeneous_weight(const VermaVector& v, int generator_count);

}  // namespace tcla
