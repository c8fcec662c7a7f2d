#include "tcla/current.hpp"

#include "tcla/errors.hpp"

namespace tcla {

TruncatedAlgebra::TruncatedAlgebra(AlgebraPtr base, int nilp) : base_(std::move(base)), nilp_(nilp) {
  if (!base_) throw InputError("truncated algebra needs a base algebra");
  if (nilp_ < 1) {
    throw InputError("nilpotency index N must be >= 1 (got " + std::to_string(nilp_) +
                     "); N = 0 is the base algebra, where the top-level criterion does not apply");
  }
}

void TruncatedAlgebra::validate(const GenElement& x) const {
  base_->validate(x.elem);
  if (x.degree < 0 || x.degree > nilp_)
    throw InvalidElementError("degree " + std::to_string(x.degree) + " outside 0.." + std::to_string(nilp_));
}

GenComb TruncatedAlgebra::bracket(const GenElement& x, const GenElement& y) const {
  validate(x);
  validate(y);
  const int degree = x.degree + y.degree;
  if (degree > nilp_) return {};
  return lift(base_->bracket_unchecked(x.elem, y.elem), degree);
}

GenComb TruncatedAlgebra::lift(const BaseComb& x, int degree) const {
  GenComb out;
  for (const auto& [e, c] : x) out.add(GenElement{e, degree}, c);
  return out;
}

std::vector<GenElement> TruncatedAlgebra::root_space_basis(const RootVector& alpha) const {
  if (!base_->is_root(alpha)) throw NotARootError(base_->name() + ": " + format_root(alpha) + " is not a root");
  const int dim = base_->root_dim(is_positive(alpha) ? alpha : negated(alpha));
  std::vector<GenElement> out;
  for (int s = 0; s < dim; ++s)
    for (int i = 0; i <= nilp_; ++i) out.push_back({BaseElement::root_space(alpha, s), i});
  return out;
}

std::vector<GenElement> TruncatedAlgebra::cartan_basis() const {
  std::vector<GenElement> out;
  for (int k = 0; k < base_->cartan_rank(); ++k)
    for (int i = 0; i <= nilp_; ++i) out.push_back({BaseElement::cartan(k), i});
  return out;
}

GenComb hat_bracket(const TruncatedAlgebra& alg, const GenElement& x, const GenElement& y) {
  return alg.bracket(x, y);
}

}  // namespace tcla
