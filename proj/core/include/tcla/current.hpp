#pragma once

#include <compare>
#include <optional>
#include <vector>

#include "tcla/algebra.hpp"

namespace tcla {

/// x (x) t^degree in g (x) k[t]/t^(N+1).
struct GenElement {
  BaseElement elem;
  int degree = 0;

  bool is_cartan() const { return elem.is_cartan(); }
  bool is_raising() const { return elem.is_raising(); }
  bool is_lowering() const { return elem.is_lowering(); }

  friend auto operator<=>(const GenElement&, const GenElement&) = default;
  friend bool operator==(const GenElement&, const GenElement&) = default;
};

using GenComb = LinComb<GenElement>;

/// The truncated current algebra g (x) k[t]/t^(N+1), N >= 1.
class TruncatedAlgebra {
 public:
  /// Throws InputError when nilp < 1: N = 0 is the base algebra itself, for
  /// which the top-level reducibility criterion does not apply.
  TruncatedAlgebra(AlgebraPtr base, int nilp);

  const LieAlgebra& base() const { return *base_; }
  const AlgebraPtr& base_ptr() const { return base_; }
  int nilp() const { return nilp_; }

  void validate(const GenElement& x) const;

  /// [x t^i, y t^j] = [x, y] t^(i+j), zero once i + j > N.
  GenComb bracket(const GenElement& x, const GenElement& y) const;

  /// Basis of g^alpha (x) k[t]/t^(N+1) ordered by (space index, degree).
  std::vector<GenElement> root_space_basis(const RootVector& alpha) const;

  /// Basis of h (x) k[t]/t^(N+1) ordered by (Cartan index, degree).
  std::vector<GenElement> cartan_basis() const;

  /// Lifts a base-algebra combination to a fixed degree.
  GenComb lift(const BaseComb& x, int degree) const;

 private:
  AlgebraPtr base_;
  int nilp_;
};

GenComb hat_bracket(const TruncatedAlgebra& alg, const GenElement& x, const GenElement& y);

}  // namespace tcla
