#include "tcla/weights.hpp"

#include <algorithm>

#include "tcla/errors.hpp"

namespace tcla {

WeightFunctional::WeightFunctional(std::vector<std::vector<Rat>> levels) : levels_(std::move(levels)) {
  if (levels_.size() < 2) throw InputError("a weight needs at least two levels (N >= 1)");
  for (const auto& l : levels_)
    if (l.size() != levels_.front().size()) throw InputError("weight levels have unequal lengths");
}

WeightFunctional WeightFunctional::zero(const TruncatedAlgebra& alg) {
  return WeightFunctional(std::vector<std::vector<Rat>>(static_cast<std::size_t>(alg.nilp() + 1),
                                                        std::vector<Rat>(static_cast<std::size_t>(alg.base().cartan_rank()))));
}

const std::vector<Rat>& WeightFunctional::level(int i) const {
  if (i < 0 || i > nilp()) throw DegreeError("degree " + std::to_string(i) + " outside 0.." + std::to_string(nilp()));
  return levels_[static_cast<std::size_t>(i)];
}

std::vector<Rat>& WeightFunctional::level(int i) {
  if (i < 0 || i > nilp()) throw DegreeError("degree " + std::to_string(i) + " outside 0.." + std::to_string(nilp()));
  return levels_[static_cast<std::size_t>(i)];
}

Rat WeightFunctional::eval(const CartanVector& h, int degree) const {
  const auto& l = level(degree);
  if (h.size() != l.size()) throw InputError("Cartan vector has wrong length");
  Rat out = 0;
  for (std::size_t k = 0; k < l.size(); ++k) out += l[k] * h[k];
  return out;
}

Rat lambda_eval(const WeightFunctional& lambda, const CartanVector& h, int degree) { return lambda.eval(h, degree); }

bool pbw_less(const GenElement& a, const GenElement& b) {
  const RootVector ra = negated(a.elem.root);
  const RootVector rb = negated(b.elem.root);
  if (ra != rb) return root_less(ra, rb);
  if (a.elem.index != b.elem.index) return a.elem.index < b.elem.index;
  return a.degree < b.degree;
}

PBWMonomial make_monomial(std::vector<GenElement> factors) {
  for (const auto& f : factors)
    if (!f.is_lowering()) throw InvalidElementError("PBW monomials contain lowering generators only");
  std::sort(factors.begin(), factors.end(), pbw_less);
  return PBWMonomial{std::move(factors)};
}

RootVector monomial_weight(const PBWMonomial& m, int generator_count) {
  RootVector chi(static_cast<std::size_t>(generator_count), 0);
  for (const auto& f : m.factors) chi = chi - f.elem.root;
  return chi;
}

std::vector<GenElement> lowering_generators(const RootVector& chi, const TruncatedAlgebra& alg) {
  std::vector<GenElement> gens;
  for (const auto& [alpha, dim] : enumerate_positive_roots(alg.base(), height(chi))) {
    bool fits = true;
    for (std::size_t i = 0; i < chi.size(); ++i) fits = fits && alpha[i] <= chi[i];
    if (!fits) continue;
    for (int s = 0; s < dim; ++s)
      for (int d = 0; d <= alg.nilp(); ++d) gens.push_back({BaseElement::root_space(negated(alpha), s), d});
  }
  std::sort(gens.begin(), gens.end(), pbw_less);
  return gens;
}

namespace {

void extend(const std::vector<GenElement>& gens, std::size_t start, RootVector& remaining,
            std::vector<GenElement>& current, std::vector<PBWMonomial>& out) {
  if (is_zero(remaining)) {
    out.push_back(PBWMonomial{current});
    return;
  }
  for (std::size_t k = start; k < gens.size(); ++k) {
    const RootVector& neg = gens[k].elem.root;
    bool fits = true;
    for (std::size_t i = 0; i < remaining.size(); ++i) fits = fits && remaining[i] + neg[i] >= 0;
    if (!fits) continue;
    remaining = remaining + neg;
    current.push_back(gens[k]);
    extend(gens, k, remaining, current, out);
    current.pop_back();
    remaining = remaining - neg;
  }
}

}  // namespace

std::vector<PBWMonomial> enumerate_monomials(const RootVector& chi, const TruncatedAlgebra& alg) {
  if (static_cast<int>(chi.size()) != alg.base().generator_count())
    throw InputError("weight has " + std::to_string(chi.size()) + " coordinates, expected " +
                     std::to_string(alg.base().generator_count()));
  if (std::any_of(chi.begin(), chi.end(), [](int c) { return c < 0; }))
    throw InputError("weight " + format_root(chi) + " is not in Q+");
  const auto gens = lowering_generators(chi, alg);
  std::vector<PBWMonomial> out;
  RootVector remaining = chi;
  std::vector<GenElement> current;
  extend(gens, 0, remaining, current, out);
  return out;
}

std::string encode_monomial(const PBWMonomial& m) {
  if (m.empty()) return "1";
  std::string s;
  for (const auto& f : m.factors) {
    if (!s.empty()) s += " * ";
    s += "f" + format_root(negated(f.elem.root)) + "[" + std::to_string(f.elem.index) + "]@" + std::to_string(f.degree);
  }
  return s;
}

namespace {

void compositions(int parts, int total, RootVector& current, std::vector<RootVector>& out) {
  if (static_cast<int>(current.size()) == parts - 1) {
    current.push_back(total);
    out.push_back(current);
    current.pop_back();
    return;
  }
  for (int c = total; c >= 0; --c) {
    current.push_back(c);
    compositions(parts, total - c, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<RootVector> weights_of_height(int generator_count, int height) {
  std::vector<RootVector> out;
  if (generator_count <= 0 || height < 0) return out;
  RootVector current;
  compositions(generator_count, height, current, out);
  std::sort(out.begin(), out.end(), root_less);
  return out;
}

}  // namespace tcla
