// Built-in algebras.
//
// sl_n: Chevalley basis realized by matrix units. For i < j (0-based),
//   e_ij = E_ij spans g^alpha with alpha = alpha_i + ... + alpha_{j-1},
//   f_ij = E_ji spans g^-alpha,
//   h_k  = E_kk - E_{k+1,k+1}.
// Brackets are matrix commutators, so every sign follows from
// [E_ab, E_cd] = delta_bc E_ad - delta_da E_cb. <e_ij, f_ij> = 1 and
// h_alpha = h_i + ... + h_{j-1}.
//
// Virasoro: Cartan {L0, c}; L_m (m > 0) spans g^(m alpha1), alpha1(L0) = -1;
//   <L_m, L_-m> = 1, h_(m alpha1) = 2m L0 + (m^3 - m)/12 c.
//
// Oscillator: Cartan {d, hbar}; [d, a_m] = m a_m, [a_m, a_n] = m delta_{m,-n} hbar;
//   <a_m, a_-m> = m, h_(m alpha1) = hbar.

#include <cmath>
#include <memory>

#include "tcla/algebra.hpp"
#include "tcla/errors.hpp"

namespace tcla {

namespace {

class SpecialLinear final : public LieAlgebra {
 public:
  explicit SpecialLinear(int n) : n_(n) {}

  std::string name() const override { return "sl" + std::to_string(n_); }
  int cartan_rank() const override { return n_ - 1; }
  int generator_count() const override { return n_ - 1; }
  bool is_finite() const override { return true; }

  std::vector<std::string> cartan_names() const override {
    if (n_ == 2) return {"h"};
    std::vector<std::string> names;
    for (int k = 1; k < n_; ++k) names.push_back("h" + std::to_string(k));
    return names;
  }

  int root_dim(const RootVector& positive) const override { return block(positive) ? 1 : 0; }

  std::vector<RootInfo> positive_roots_raw(int max_height) const override {
    std::vector<RootInfo> out;
    for (int i = 0; i < n_; ++i)
      for (int j = i + 1; j < n_ && j - i <= max_height; ++j) out.push_back({root_of(i, j), 1});
    return out;
  }

  std::vector<Rat> simple_root_action(int generator) const override {
    std::vector<Rat> out(static_cast<std::size_t>(n_ - 1));
    for (int k = 0; k < n_ - 1; ++k) {
      if (k == generator) out[static_cast<std::size_t>(k)] = 2;
      else if (k == generator - 1 || k == generator + 1) out[static_cast<std::size_t>(k)] = -1;
    }
    return out;
  }

  BaseComb bracket_unchecked(const BaseElement& x, const BaseElement& y) const override {
    const auto a = to_matrix(x);
    const auto b = to_matrix(y);
    std::vector<int> c(static_cast<std::size_t>(n_ * n_), 0);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) {
        int s = 0;
        for (int k = 0; k < n_; ++k) s += at(a, i, k) * at(b, k, j) - at(b, i, k) * at(a, k, j);
        c[static_cast<std::size_t>(i * n_ + j)] = s;
      }
    return from_matrix(c);
  }

  Matrix pairing_unchecked(const RootVector&) const override {
    Matrix p(1, 1);
    p(0, 0) = 1;
    return p;
  }

  CartanVector coroot_unchecked(const RootVector& alpha) const override {
    CartanVector h(static_cast<std::size_t>(n_ - 1));
    for (std::size_t k = 0; k < alpha.size(); ++k) h[k] = alpha[k];
    return h;
  }

  std::string root_label(const RootVector& alpha) const override {
    if (n_ == 2) return alpha[0] == 1 ? "alpha" : std::to_string(alpha[0]) + "*alpha";
    return LieAlgebra::root_label(alpha);
  }

  std::string element_name(const BaseElement& x) const override {
    if (x.is_cartan()) return cartan_names()[static_cast<std::size_t>(x.index)];
    const auto [i, j] = *block(x.is_raising() ? x.root : negated(x.root));
    if (n_ == 2) return x.is_raising() ? "e" : "f";
    return (x.is_raising() ? "e" : "f") + std::to_string(i + 1) + std::to_string(j + 1);
  }

 private:
  RootVector root_of(int i, int j) const {
    RootVector r(static_cast<std::size_t>(n_ - 1), 0);
    for (int k = i; k < j; ++k) r[static_cast<std::size_t>(k)] = 1;
    return r;
  }

  // (i, j) with alpha = alpha_i + ... + alpha_{j-1}, if alpha is a positive root.
  std::optional<std::pair<int, int>> block(const RootVector& alpha) const {
    if (static_cast<int>(alpha.size()) != n_ - 1) return std::nullopt;
    int first = -1;
    int last = -1;
    for (int k = 0; k < n_ - 1; ++k) {
      const int c = alpha[static_cast<std::size_t>(k)];
      if (c != 0 && c != 1) return std::nullopt;
      if (c == 1) {
        if (first < 0) first = k;
        else if (last != k - 1) return std::nullopt;
        last = k;
      }
    }
    if (first < 0) return std::nullopt;
    return std::pair{first, last + 1};
  }

  int at(const std::vector<int>& m, int i, int j) const { return m[static_cast<std::size_t>(i * n_ + j)]; }

  std::vector<int> to_matrix(const BaseElement& x) const {
    std::vector<int> m(static_cast<std::size_t>(n_ * n_), 0);
    if (x.is_cartan()) {
      m[static_cast<std::size_t>(x.index * n_ + x.index)] = 1;
      m[static_cast<std::size_t>((x.index + 1) * n_ + x.index + 1)] = -1;
    } else if (x.is_raising()) {
      const auto [i, j] = *block(x.root);
      m[static_cast<std::size_t>(i * n_ + j)] = 1;
    } else {
      const auto [i, j] = *block(negated(x.root));
      m[static_cast<std::size_t>(j * n_ + i)] = 1;
    }
    return m;
  }

  BaseComb from_matrix(const std::vector<int>& m) const {
    BaseComb out;
    int running = 0;
    for (int k = 0; k + 1 < n_; ++k) {
      running += at(m, k, k);
      out.add(BaseElement::cartan(k), running);
    }
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) {
        if (i == j || at(m, i, j) == 0) continue;
        const RootVector r = i < j ? root_of(i, j) : negated(root_of(j, i));
        out.add(BaseElement::root_space(r), at(m, i, j));
      }
    return out;
  }

  int n_;
};

// Shared scaffolding for the two Z-graded infinite algebras: one simple
// generator, every multiple m*alpha1 (m != 0) a root of dimension 1.
class GradedAlgebra : public LieAlgebra {
 public:
  int cartan_rank() const override { return 2; }
  int generator_count() const override { return 1; }
  bool is_finite() const override { return false; }
  int root_dim(const RootVector& positive) const override {
    return positive.size() == 1 && positive[0] > 0 ? 1 : 0;
  }
  std::vector<RootInfo> positive_roots_raw(int max_height) const override {
    std::vector<RootInfo> out;
    for (int m = 1; m <= max_height; ++m) out.push_back({{m}, 1});
    return out;
  }
  std::string root_label(const RootVector& alpha) const override { return "m=" + std::to_string(alpha[0]); }

 protected:
  static int grade(const BaseElement& x) { return x.is_cartan() ? 0 : x.root[0]; }
  static BaseElement mode(int m) { return BaseElement::root_space({m}); }

  static std::vector<RootVector> all_up_to(int report_height) {
    std::vector<RootVector> out;
    for (int m = 1; m <= std::max(report_height, 1); ++m) out.push_back({m});
    return out;
  }
};

class Virasoro final : public GradedAlgebra {
 public:
  std::string name() const override { return "virasoro"; }
  std::vector<std::string> cartan_names() const override { return {"L0", "c"}; }

  std::vector<Rat> simple_root_action(int) const override { return {Rat(-1), Rat(0)}; }

  BaseComb bracket_unchecked(const BaseElement& x, const BaseElement& y) const override {
    if (is_central(x) || is_central(y)) return {};
    const int m = grade(x);
    const int n = grade(y);
    BaseComb out;
    if (m + n == 0) {
      out.add(BaseElement::cartan(0), m - n);
      out.add(BaseElement::cartan(1), ratio(m * m * m - m, 12));
    } else {
      out.add(mode(m + n), m - n);
    }
    return out;
  }

  Matrix pairing_unchecked(const RootVector&) const override {
    Matrix p(1, 1);
    p(0, 0) = 1;
    return p;
  }

  CartanVector coroot_unchecked(const RootVector& alpha) const override {
    const int m = alpha[0];
    return {Rat(2 * m), ratio(m * m * m - m, 12)};
  }

  // 2m a + (m^3 - m)/12 c = 0 with m > 0  <=>  m^2 = 1 - 24 a / c  (c != 0).
  std::optional<std::vector<RootVector>> closed_form_witnesses(const std::vector<Rat>& top,
                                                               int report_height) const override {
    const Rat& a = top[0];
    const Rat& c = top[1];
    if (sgn(c) == 0) {
      if (sgn(a) == 0) return all_up_to(report_height);
      return std::vector<RootVector>{};
    }
    const Rat square = 1 - 24 * a / c;
    if (square.get_den() != 1 || sgn(square) <= 0) return std::vector<RootVector>{};
    if (!mpz_perfect_square_p(square.get_num_mpz_t())) return std::vector<RootVector>{};
    const Int m = sqrt(square.get_num());
    if (!m.fits_sint_p()) throw InvariantError("virasoro witness out of int range");
    return std::vector<RootVector>{{static_cast<int>(m.get_si())}};
  }

  std::string element_name(const BaseElement& x) const override {
    if (x.is_cartan()) return x.index == 0 ? "L0" : "c";
    return "L" + std::to_string(x.root[0]);
  }

 private:
  static bool is_central(const BaseElement& x) { return x.is_cartan() && x.index == 1; }
};

class Oscillator final : public GradedAlgebra {
 public:
  std::string name() const override { return "oscillator"; }
  std::vector<std::string> cartan_names() const override { return {"d", "hbar"}; }

  std::vector<Rat> simple_root_action(int) const override { return {Rat(1), Rat(0)}; }

  BaseComb bracket_unchecked(const BaseElement& x, const BaseElement& y) const override {
    BaseComb out;
    if (x.is_cartan() && y.is_cartan()) return out;
    if (x.is_cartan()) {
      if (x.index == 0) out.add(y, grade(y));
      return out;
    }
    if (y.is_cartan()) {
      if (y.index == 0) out.add(x, -grade(x));
      return out;
    }
    const int m = grade(x);
    if (m + grade(y) == 0) out.add(BaseElement::cartan(1), m);
    return out;
  }

  Matrix pairing_unchecked(const RootVector& alpha) const override {
    Matrix p(1, 1);
    p(0, 0) = alpha[0];
    return p;
  }

  CartanVector coroot_unchecked(const RootVector&) const override { return {Rat(0), Rat(1)}; }

  std::optional<std::vector<RootVector>> closed_form_witnesses(const std::vector<Rat>& top,
                                                               int report_height) const override {
    if (sgn(top[1]) == 0) return all_up_to(report_height);
    return std::vector<RootVector>{};
  }

  std::string element_name(const BaseElement& x) const override {
    if (x.is_cartan()) return x.index == 0 ? "d" : "hbar";
    return "a" + std::to_string(x.root[0]);
  }
};

}  // namespace

AlgebraPtr make_sl(int n) {
  if (n < 2) throw InputError("sl_n needs n >= 2");
  return std::make_shared<SpecialLinear>(n);
}

AlgebraPtr make_virasoro() { return std::make_shared<Virasoro>(); }
AlgebraPtr make_oscillator() { return std::make_shared<Oscillator>(); }

}  // namespace tcla
