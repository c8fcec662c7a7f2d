#pragma once

#include <compare>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tcla/linalg.hpp"
#include "tcla/rational.hpp"

namespace tcla {

/// Root in simple-generator coordinates. Positive roots have all coords
/// >= 0, negative roots all coords <= 0.
using RootVector = std::vector<int>;

/// Element of the Cartan subalgebra, as coefficients over its basis.
using CartanVector = std::vector<Rat>;

int height(const RootVector& root);
bool is_positive(const RootVector& root);
bool is_negative(const RootVector& root);
bool is_zero(const RootVector& root);
RootVector negated(const RootVector& root);
RootVector operator+(const RootVector& a, const RootVector& b);
RootVector operator-(const RootVector& a, const RootVector& b);

/// Total order on (absolute values of) roots: height first, then the
/// coordinate vector in descending lexicographic order, so that
/// (1,0) precedes (0,1) and simple roots appear in index order.
bool root_less(const RootVector& a, const RootVector& b);

/// "(1,0,2)"
std::string format_root(const RootVector& root);

/// A basis element of the base algebra g: either the k-th Cartan basis
/// vector, or the `index`-th basis vector of the root space g^root.
struct BaseElement {
  enum class Kind { cartan, root };

  Kind kind = Kind::cartan;
  int index = 0;
  RootVector root;

  static BaseElement cartan(int k) { return {Kind::cartan, k, {}}; }
  static BaseElement root_space(RootVector alpha, int space = 0) {
    return {Kind::root, space, std::move(alpha)};
  }

  bool is_cartan() const { return kind == Kind::cartan; }
  bool is_raising() const { return kind == Kind::root && is_positive(root); }
  bool is_lowering() const { return kind == Kind::root && is_negative(root); }

  friend auto operator<=>(const BaseElement&, const BaseElement&) = default;
  friend bool operator==(const BaseElement&, const BaseElement&) = default;
};

/// Finite formal linear combination with exact coefficients. Zero
/// coefficients are never stored.
template <class Key>
class LinComb {
 public:
  using Map = std::map<Key, Rat>;

  LinComb() = default;
  explicit LinComb(Key key, Rat coeff = 1) { add(std::move(key), coeff); }

  void add(const Key& key, const Rat& coeff) {
    if (sgn(coeff) == 0) return;
    auto [it, inserted] = terms_.try_emplace(key, coeff);
    if (!inserted) {
      it->second += coeff;
      if (sgn(it->second) == 0) terms_.erase(it);
    }
  }

  void add_scaled(const LinComb& other, const Rat& scale) {
    if (sgn(scale) == 0) return;
    for (const auto& [key, coeff] : other.terms_) add(key, coeff * scale);
  }

  LinComb& operator+=(const LinComb& other) {
    add_scaled(other, 1);
    return *this;
  }
  LinComb& operator-=(const LinComb& other) {
    add_scaled(other, -1);
    return *this;
  }
  LinComb& operator*=(const Rat& scale) {
    if (sgn(scale) == 0) {
      terms_.clear();
    } else {
      for (auto& [key, coeff] : terms_) coeff *= scale;
    }
    return *this;
  }

  friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
  friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
  friend LinComb operator*(const Rat& s, LinComb a) { return a *= s; }

  Rat coeff(const Key& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Rat(0) : it->second;
  }

  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Map& terms() const { return terms_; }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  friend bool operator==(const LinComb&, const LinComb&) = default;

 private:
  Map terms_;
};

using BaseComb = LinComb<BaseElement>;

struct RootInfo {
  RootVector root;
  int dim = 1;
  friend bool operator==(const RootInfo&, const RootInfo&) = default;
};

/// A Lie algebra g with a triangular decomposition g = g+ + h + g- and a
/// non-degenerate pairing between g^alpha and g^-alpha: for x in g^alpha,
/// y in g^-alpha, [x, y] = <x, y>_alpha h_alpha.
///
/// Roots are written over a fixed set of simple generators of Q+, and the
/// root action is linear in those coordinates. Infinite root systems are
/// only ever visited through height-bounded enumeration.
///
/// Implementations must be immutable after construction.
class LieAlgebra {
 public:
  virtual ~LieAlgebra() = default;

  virtual std::string name() const = 0;
  virtual int cartan_rank() const = 0;
  virtual std::vector<std::string> cartan_names() const = 0;
  virtual int generator_count() const = 0;
  virtual bool is_finite() const = 0;

  /// Dimension of g^alpha for alpha in Q+ (0 when alpha is not a positive root).
  virtual int root_dim(const RootVector& positive) const = 0;

  /// Positive roots of height <= max_height, in any order.
  virtual std::vector<RootInfo> positive_roots_raw(int max_height) const = 0;

  /// alpha_i(h_k) for the i-th simple generator, k over the Cartan basis.
  virtual std::vector<Rat> simple_root_action(int generator) const = 0;

  /// Lie bracket on basis elements. Inputs are assumed validated.
  virtual BaseComb bracket_unchecked(const BaseElement& x, const BaseElement& y) const = 0;

  /// P_alpha = (<x_a, y_b>_alpha) over the chosen bases of g^alpha, g^-alpha.
  virtual Matrix pairing_unchecked(const RootVector& alpha) const = 0;

  /// h_alpha for a positive root.
  virtual CartanVector coroot_unchecked(const RootVector& alpha) const = 0;

  /// Closed-form witness search for algebras whose criterion reduces to a
  /// solvable equation in the top level of the weight. Returns the
  /// witnesses of height <= report_height (all of them when the set is
  /// finite), or nullopt when no closed form is available.
  virtual std::optional<std::vector<RootVector>> closed_form_witnesses(
      const std::vector<Rat>& top_level, int report_height) const;

  /// Human-readable label for a positive root ("alpha1+alpha2", "m=3").
  virtual std::string root_label(const RootVector& alpha) const;

  /// Printable name of a basis element ("e12", "L-3", "c").
  virtual std::string element_name(const BaseElement& x) const;

  // Checked entry points.

  bool is_root(const RootVector& signed_root) const;
  void validate(const BaseElement& x) const;
  BaseComb bracket(const BaseElement& x, const BaseElement& y) const;
  Matrix pairing(const RootVector& alpha) const;
  CartanVector coroot(const RootVector& alpha) const;

  /// alpha(h_k) for every Cartan basis index k; alpha may be negative.
  std::vector<Rat> root_action(const RootVector& alpha) const;

  /// The x in g^alpha with <x, y_b>_alpha = delta(b, space_index).
  BaseComb dual_raising(const RootVector& alpha, int space_index) const;
};

using AlgebraPtr = std::shared_ptr<const LieAlgebra>;

/// Positive roots with height <= max_height, ordered by root_less.
std::vector<RootInfo> enumerate_positive_roots(const LieAlgebra& alg, int max_height);

/// Built-in catalog: "sl2", "sl3", "sl4", "virasoro", "oscillator".
std::vector<std::string> algebra_names();
AlgebraPtr make_algebra(std::string_view name);

AlgebraPtr make_sl(int n);
AlgebraPtr make_virasoro();
AlgebraPtr make_oscillator();

}  // namespace tcla
