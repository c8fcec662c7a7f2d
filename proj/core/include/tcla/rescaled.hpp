#pragma once

#include <cstdint>
#include <map>
#include <utility>

#include "tcla/algebra.hpp"

namespace tcla {

/// The same algebra presented in a rescaled root-space basis: every root
/// basis vector x is replaced by s(x) * x for a nonzero rational s(x). The
/// Cartan basis and the coroots are kept; structure constants and the
/// pairing are transformed accordingly.
///
/// Scales are drawn deterministically from `seed` per (root, space index),
/// with numerators and denominators in 1..max_abs and a random sign.
class RescaledAlgebra final : public LieAlgebra {
 public:
  RescaledAlgebra(AlgebraPtr base, std::uint64_t seed, int max_abs = 5);

  /// Scale applied to the given root basis vector (1 for Cartan elements).
  Rat scale(const BaseElement& x) const;

  std::string name() const override;
  int cartan_rank() const override { return base_->cartan_rank(); }
  std::vector<std::string> cartan_names() const override { return base_->cartan_names(); }
  int generator_count() const override { return base_->generator_count(); }
  bool is_finite() const override { return base_->is_finite(); }
  int root_dim(const RootVector& positive) const override { return base_->root_dim(positive); }
  std::vector<RootInfo> positive_roots_raw(int max_height) const override {
    return base_->positive_roots_raw(max_height);
  }
  std::vector<Rat> simple_root_action(int generator) const override {
    return base_->simple_root_action(generator);
  }
  BaseComb bracket_unchecked(const BaseElement& x, const BaseElement& y) const override;
  Matrix pairing_unchecked(const RootVector& alpha) const override;
  CartanVector coroot_unchecked(const RootVector& alpha) const override {
    return base_->coroot_unchecked(alpha);
  }
  std::optional<std::vector<RootVector>> closed_form_witnesses(
      const std::vector<Rat>& top_level, int report_height) const override {
    return base_->closed_form_witnesses(top_level, report_height);
  }
  std::string root_label(const RootVector& alpha) const override { return base_->root_label(alpha); }

 private:
  AlgebraPtr base_;
  std::uint64_t seed_;
  int max_abs_;
};

}  // namespace tcla
