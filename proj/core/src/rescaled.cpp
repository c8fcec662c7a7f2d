#include "tcla/rescaled.hpp"

#include <random>

namespace tcla {

RescaledAlgebra::RescaledAlgebra(AlgebraPtr base, std::uint64_t seed, int max_abs)
    : base_(std::move(base)), seed_(seed), max_abs_(max_abs) {}

std::string RescaledAlgebra::name() const { return base_->name() + "~" + std::to_string(seed_); }

Rat RescaledAlgebra::scale(const BaseElement& x) const {
  if (x.is_cartan()) return 1;
  std::vector<std::uint32_t> key{static_cast<std::uint32_t>(seed_), static_cast<std::uint32_t>(seed_ >> 32),
                                 static_cast<std::uint32_t>(x.index)};
  for (int c : x.root) key.push_back(static_cast<std::uint32_t>(c));
  std::seed_seq seq(key.begin(), key.end());
  std::mt19937_64 rng(seq);
  std::uniform_int_distribution<int> mag(1, max_abs_);
  const int num = mag(rng);
  const int den = mag(rng);
  const bool negative = (rng() & 1U) != 0;
  Rat s(negative ? -num : num, den);
  s.canonicalize();
  return s;
}

BaseComb RescaledAlgebra::bracket_unchecked(const BaseElement& x, const BaseElement& y) const {
  const Rat factor = scale(x) * scale(y);
  BaseComb out;
  for (const auto& [z, c] : base_->bracket_unchecked(x, y)) out.add(z, c * factor / scale(z));
  return out;
}

Matrix RescaledAlgebra::pairing_unchecked(const RootVector& alpha) const {
  Matrix p = base_->pairing_unchecked(alpha);
  const RootVector neg = negated(alpha);
  for (std::size_t a = 0; a < p.rows(); ++a)
    for (std::size_t b = 0; b < p.cols(); ++b)
      p(a, b) *= scale(BaseElement::root_space(alpha, static_cast<int>(a))) *
                 scale(BaseElement::root_space(neg, static_cast<int>(b)));
  return p;
}

}  // namespace tcla
