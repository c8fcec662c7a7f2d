#include "tcla/algebra.hpp"

#include <algorithm>
#include <numeric>

#include "tcla/errors.hpp"

namespace tcla {

int height(const RootVector& root) { return std::accumulate(root.begin(), root.end(), 0); }

bool is_positive(const RootVector& root) {
  return !is_zero(root) && std::all_of(root.begin(), root.end(), [](int c) { return c >= 0; });
}

bool is_negative(const RootVector& root) {
  return !is_zero(root) && std::all_of(root.begin(), root.end(), [](int c) { return c <= 0; });
}

bool is_zero(const RootVector& root) {
  return std::all_of(root.begin(), root.end(), [](int c) { return c == 0; });
}

RootVector negated(const RootVector& root) {
  RootVector out(root.size());
  std::transform(root.begin(), root.end(), out.begin(), [](int c) { return -c; });
  return out;
}

RootVector operator+(const RootVector& a, const RootVector& b) {
  if (a.size() != b.size()) throw InvariantError("root arity mismatch");
  RootVector out(a.size());
  std::transform(a.begin(), a.end(), b.begin(), out.begin(), std::plus<>());
  return out;
}

RootVector operator-(const RootVector& a, const RootVector& b) {
  if (a.size() != b.size()) throw InvariantError("root arity mismatch");
  RootVector out(a.size());
  std::transform(a.begin(), a.end(), b.begin(), out.begin(), std::minus<>());
  return out;
}

bool root_less(const RootVector& a, const RootVector& b) {
  const int ha = height(a);
  const int hb = height(b);
  if (ha != hb) return ha < hb;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

std::string format_root(const RootVector& root) {
  std::string s = "(";
  for (std::size_t i = 0; i < root.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(root[i]);
  }
  return s + ")";
}

std::optional<std::vector<RootVector>> LieAlgebra::closed_form_witnesses(const std::vector<Rat>&, int) const {
  return std::nullopt;
}

std::string LieAlgebra::root_label(const RootVector& alpha) const {
  std::string s;
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    if (alpha[i] == 0) continue;
    if (!s.empty()) s += "+";
    if (alpha[i] != 1) s += std::to_string(alpha[i]) + "*";
    s += "alpha" + std::to_string(i + 1);
  }
  return s.empty() ? "0" : s;
}

std::string LieAlgebra::element_name(const BaseElement& x) const {
  if (x.is_cartan()) return cartan_names().at(static_cast<std::size_t>(x.index));
  return (x.is_raising() ? "e" : "f") + format_root(x.is_raising() ? x.root : negated(x.root)) + "[" +
         std::to_string(x.index) + "]";
}

bool LieAlgebra::is_root(const RootVector& signed_root) const {
  if (static_cast<int>(signed_root.size()) != generator_count()) return false;
  if (is_positive(signed_root)) return root_dim(signed_root) > 0;
  if (is_negative(signed_root)) return root_dim(negated(signed_root)) > 0;
  return false;
}

void LieAlgebra::validate(const BaseElement& x) const {
  if (x.is_cartan()) {
    if (x.index < 0 || x.index >= cartan_rank())
      throw InvalidElementError(name() + ": Cartan index " + std::to_string(x.index) + " out of range");
    return;
  }
  if (!is_root(x.root))
    throw InvalidElementError(name() + ": " + format_root(x.root) + " is not a root");
  const RootVector abs = is_positive(x.root) ? x.root : negated(x.root);
  if (x.index < 0 || x.index >= root_dim(abs))
    throw InvalidElementError(name() + ": space index " + std::to_string(x.index) + " out of range for root " +
                              format_root(x.root));
}

BaseComb LieAlgebra::bracket(const BaseElement& x, const BaseElement& y) const {
  validate(x);
  validate(y);
  return bracket_unchecked(x, y);
}

Matrix LieAlgebra::pairing(const RootVector& alpha) const {
  if (!is_positive(alpha) || !is_root(alpha))
    throw NotARootError(name() + ": " + format_root(alpha) + " is not a positive root");
  return pairing_unchecked(alpha);
}

CartanVector LieAlgebra::coroot(const RootVector& alpha) const {
  if (!is_positive(alpha) || !is_root(alpha))
    throw NotARootError(name() + ": " + format_root(alpha) + " is not a positive root");
  return coroot_unchecked(alpha);
}

std::vector<Rat> LieAlgebra::root_action(const RootVector& alpha) const {
  std::vector<Rat> out(static_cast<std::size_t>(cartan_rank()));
  for (int i = 0; i < generator_count(); ++i) {
    if (alpha[static_cast<std::size_t>(i)] == 0) continue;
    const auto simple = simple_root_action(i);
    for (std::size_t k = 0; k < out.size(); ++k) out[k] += simple[k] * alpha[static_cast<std::size_t>(i)];
  }
  return out;
}

BaseComb LieAlgebra::dual_raising(const RootVector& alpha, int space_index) const {
  const Matrix p = pairing(alpha);
  if (space_index < 0 || static_cast<std::size_t>(space_index) >= p.cols())
    throw InvalidElementError(name() + ": space index " + std::to_string(space_index) + " out of range");
  const auto inv = inverse(p);
  if (!inv) throw InvalidAlgebraError(name() + ": singular pairing at root " + format_root(alpha));
  // c^T P = e_s^T  =>  c = row s of P^-1
  BaseComb out;
  for (std::size_t a = 0; a < p.rows(); ++a)
    out.add(BaseElement::root_space(alpha, static_cast<int>(a)), (*inv)(static_cast<std::size_t>(space_index), a));
  return out;
}

std::vector<RootInfo> enumerate_positive_roots(const LieAlgebra& alg, int max_height) {
  auto roots = alg.positive_roots_raw(std::max(max_height, 0));
  std::erase_if(roots, [&](const RootInfo& r) { return height(r.root) > max_height; });
  std::sort(roots.begin(), roots.end(), [](const RootInfo& a, const RootInfo& b) { return root_less(a.root, b.root); });
  return roots;
}

std::vector<std::string> algebra_names() { return {"sl2", "sl3", "sl4", "virasoro", "oscillator"}; }

AlgebraPtr make_algebra(std::string_view name) {
  if (name == "sl2") return make_sl(2);
  if (name == "sl3") return make_sl(3);
  if (name == "sl4") return make_sl(4);
  if (name == "virasoro") return make_virasoro();
  if (name == "oscillator") return make_oscillator();
  throw UnknownAlgebraError("unknown algebra '" + std::string(name) + "' (expected sl2, sl3, sl4, virasoro, oscillator)");
}

}  // namespace tcla
