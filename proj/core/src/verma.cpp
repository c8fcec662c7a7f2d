#include "tcla/verma.hpp"

#include "tcla/errors.hpp"

namespace tcla {

VermaModule::VermaModule(TruncatedAlgebra alg, WeightFunctional lambda)
    : alg_(std::move(alg)), lambda_(std::move(lambda)) {
  if (lambda_.nilp() != alg_.nilp())
    throw InputError("weight has " + std::to_string(lambda_.nilp() + 1) + " levels, algebra needs " +
                     std::to_string(alg_.nilp() + 1));
  if (lambda_.rank() != alg_.base().cartan_rank())
    throw InputError("weight levels have " + std::to_string(lambda_.rank()) + " entries, Cartan rank is " +
                     std::to_string(alg_.base().cartan_rank()));
}

VermaVector VermaModule::highest_weight_vector() const { return VermaVector(PBWMonomial{}); }

VermaVector VermaModule::apply_lowering(const GenElement& f, const VermaVector& v) const {
  if (!f.is_lowering()) throw InvalidElementError("apply_lowering needs a lowering generator");
  return apply(f, v);
}

VermaVector VermaModule::apply_cartan(const GenElement& h, const VermaVector& v) const {
  if (!h.is_cartan()) throw InvalidElementError("apply_cartan needs a Cartan generator");
  return apply(h, v);
}

VermaVector VermaModule::apply_raising(const GenElement& e, const VermaVector& v) const {
  if (!e.is_raising()) throw InvalidElementError("apply_raising needs a raising generator");
  return apply(e, v);
}

VermaVector VermaModule::apply(const GenElement& x, const VermaVector& v) const {
  alg_.validate(x);
  VermaVector out;
  for (const auto& [m, c] : v) out.add_scaled(act(x, m), c);
  return out;
}

VermaVector VermaModule::apply(const GenComb& x, const VermaVector& v) const {
  VermaVector out;
  for (const auto& [g, c] : x) out.add_scaled(apply(g, v), c);
  return out;
}

Rat VermaModule::highest_coefficient(const VermaVector& v) { return v.coeff(PBWMonomial{}); }

std::size_t VermaModule::cache_size() const {
  std::lock_guard lock(mutex_);
  return memo_.size();
}

VermaVector VermaModule::act(const GenElement& x, const PBWMonomial& m) const {
  if (m.empty()) {
    if (x.is_lowering()) return VermaVector(PBWMonomial{{x}});
    if (x.is_cartan()) return lambda_.level(x.degree)[static_cast<std::size_t>(x.elem.index)] * highest_weight_vector();
    return {};
  }
  if (x.is_lowering() && !pbw_less(m.factors.front(), x)) {
    PBWMonomial prepended;
    prepended.factors.reserve(m.size() + 1);
    prepended.factors.push_back(x);
    prepended.factors.insert(prepended.factors.end(), m.factors.begin(), m.factors.end());
    return VermaVector(std::move(prepended));
  }

  auto key = std::pair{x, m};
  {
    std::lock_guard lock(mutex_);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  }
  VermaVector result = compute(x, m);
  std::lock_guard lock(mutex_);
  return memo_.try_emplace(std::move(key), std::move(result)).first->second;
}

// x g0 r v = g0 (x r v) + [x, g0] r v, where g0 is the first (smallest)
// factor. Both terms act on the strictly shorter monomial r; g0 then acts on
// vectors whose factors all come after it unless x was raising.
VermaVector VermaModule::compute(const GenElement& x, const PBWMonomial& m) const {
  const GenElement& first = m.factors.front();
  const PBWMonomial rest{std::vector<GenElement>(m.factors.begin() + 1, m.factors.end())};

  VermaVector out;
  for (const auto& [mono, c] : act(x, rest)) out.add_scaled(act(first, mono), c);
  for (const auto& [z, c] : alg_.bracket(x, first)) out.add_scaled(act(z, rest), c);
  return out;
}

std::optional<RootVector> homogeneous_weight(const VermaVector& v, int generator_count) {
  std::optional<RootVector> chi;
  for (const auto& [m, c] : v) {
    RootVector w = monomial_weight(m, generator_count);
    if (chi && *chi != w) return std::nullopt;
    chi = std::move(w);
  }
  return chi;
}

}  // namespace tcla
