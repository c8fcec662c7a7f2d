#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "tcla/current.hpp"

namespace tcla {

/// Lambda in the dual of h (x) k[t]/t^(N+1), stored as the tuple
/// (Lambda_0, ..., Lambda_N) with Lambda_i(h_k) = Lambda(h_k (x) t^i).
class WeightFunctional {
 public:
  WeightFunctional() = default;
  explicit WeightFunctional(std::vector<std::vector<Rat>> levels);

  /// All-zero functional for the given algebra.
  static WeightFunctional zero(const TruncatedAlgebra& alg);

  int nilp() const { return static_cast<int>(levels_.size()) - 1; }
  int rank() const { return levels_.empty() ? 0 : static_cast<int>(levels_.front().size()); }

  const std::vector<Rat>& level(int i) const;
  std::vector<Rat>& level(int i);
  const std::vector<std::vector<Rat>>& levels() const { return levels_; }
  const std::vector<Rat>& top() const { return levels_.back(); }

  /// Lambda_i(h).
  Rat eval(const CartanVector& h, int degree) const;

  friend bool operator==(const WeightFunctional&, const WeightFunctional&) = default;

 private:
  std::vector<std::vector<Rat>> levels_;
};

Rat lambda_eval(const WeightFunctional& lambda, const CartanVector& h, int degree);

/// Canonical order on lowering generators: |root| by root_less, then space
/// index, then degree.
bool pbw_less(const GenElement& a, const GenElement& b);

/// A multiset of lowering generators in canonical (pbw_less) order,
/// standing for the vector f_1 f_2 ... f_k v_Lambda.
struct PBWMonomial {
  std::vector<GenElement> factors;

  bool empty() const { return factors.empty(); }
  std::size_t size() const { return factors.size(); }

  friend auto operator<=>(const PBWMonomial&, const PBWMonomial&) = default;
  friend bool operator==(const PBWMonomial&, const PBWMonomial&) = default;
};

/// Sorts factors into canonical order; throws InvalidElementError when a
/// factor is not lowering.
PBWMonomial make_monomial(std::vector<GenElement> factors);

/// chi = sum of |root| over the factors; an element of Q+.
RootVector monomial_weight(const PBWMonomial& m, int generator_count);

/// Every canonical monomial of weight chi, in lexicographic pbw order. Its
/// length is dim M(Lambda)_{Lambda - chi}.
std::vector<PBWMonomial> enumerate_monomials(const RootVector& chi, const TruncatedAlgebra& alg);

/// Lowering generators f (x) t^i with |root| <= chi componentwise, sorted.
std::vector<GenElement> lowering_generators(const RootVector& chi, const TruncatedAlgebra& alg);

/// "f(1,0)[0]@0 * f(1,1)[0]@1"; the empty monomial is "1".
std::string encode_monomial(const PBWMonomial& m);

/// Elements of Q+ with the given height, ordered by root_less.
std::vector<RootVector> weights_of_height(int generator_count, int height);

// Input formats.

/// {"levels": [{<cartan_name>: "p/q", ...}, ...]} with exactly N+1 levels.
WeightFunctional parse_weight_json(std::string_view json_text, const TruncatedAlgebra& alg);
std::string weight_to_json(const WeightFunctional& lambda, const LieAlgebra& base);

/// "2,1" -> (2,1). Throws InputError on arity mismatch or negative entries.
RootVector parse_chi(std::string_view text, int generator_count);

}  // namespace tcla
