#include <gtest/gtest.h>

#include <random>

#include "random_elements.hpp"
#include "tcla/errors.hpp"
#include "tcla/verma.hpp"

namespace tcla {
namespace {

GenElement gen(RootVector root, int degree) { return {BaseElement::root_space(std::move(root)), degree}; }
GenElement cartan(int k, int degree) { return {BaseElement::cartan(k), degree}; }

VermaVector basis(std::initializer_list<GenElement> factors) { return VermaVector(make_monomial(factors)); }

VermaModule sl2_module(int l0, int l1) {
  return VermaModule(TruncatedAlgebra(make_algebra("sl2"), 1), WeightFunctional({{Rat(l0)}, {Rat(l1)}}));
}

TEST(Verma, CartanEvaluatesOnHighestWeightVector) {
  const auto m = sl2_module(5, 3);
  const auto v = m.highest_weight_vector();
  EXPECT_EQ(m.apply(cartan(0, 0), v), 5 * v);
  EXPECT_EQ(m.apply(cartan(0, 1), v), 3 * v);
  EXPECT_TRUE(m.apply(gen({1}, 0), v).empty());
  EXPECT_TRUE(m.apply(gen({1}, 1), v).empty());
}

TEST(Verma, Sl2RaisingExamples) {
  const auto m = sl2_module(5, 3);
  const auto v = m.highest_weight_vector();
  // e f v = h v
  EXPECT_EQ(m.apply(gen({1}, 0), basis({gen({-1}, 0)})), 5 * v);
  // (e t)(f t) v = [e, f] t^2 v = 0
  EXPECT_TRUE(m.apply(gen({1}, 1), basis({gen({-1}, 1)})).empty());
  // (e t) f v = (h t) v
  EXPECT_EQ(m.apply(gen({1}, 1), basis({gen({-1}, 0)})), 3 * v);
  // e f f v = 2 (lambda - 1) f v
  EXPECT_EQ(m.apply(gen({1}, 0), basis({gen({-1}, 0), gen({-1}, 0)})), 8 * basis({gen({-1}, 0)}));
}

TEST(Verma, Sl3StraighteningProducesCommutator) {
  const TruncatedAlgebra alg(make_algebra("sl3"), 1);
  const VermaModule m(alg, WeightFunctional::zero(alg));
  const auto f1 = gen({-1, 0}, 0);
  const auto f2 = gen({0, -1}, 0);
  const auto f12 = gen({-1, -1}, 0);
  // f1 precedes f2, so f1 (f2 v) is already canonical
  EXPECT_EQ(m.apply(f1, basis({f2})), basis({f1, f2}));
  // f2 f1 v = f1 f2 v + [f2, f1] v, with [E32, E21] = E31
  VermaVector expected = basis({f1, f2});
  expected += basis({f12});
  EXPECT_EQ(m.apply(f2, basis({f1})), expected);
}

TEST(Verma, RejectsWrongKinds) {
  const auto m = sl2_module(1, 1);
  const auto v = m.highest_weight_vector();
  EXPECT_THROW(m.apply_lowering(gen({1}, 0), v), InvalidElementError);
  EXPECT_THROW(m.apply_raising(gen({-1}, 0), v), InvalidElementError);
  EXPECT_THROW(m.apply_cartan(gen({1}, 0), v), InvalidElementError);
  EXPECT_THROW(m.apply(gen({1}, 2), v), InvalidElementError);
}

TEST(Verma, RejectsMismatchedWeight) {
  const TruncatedAlgebra alg(make_algebra("sl3"), 2);
  EXPECT_THROW(VermaModule(alg, WeightFunctional({{Rat(1), Rat(2)}, {Rat(0), Rat(0)}})), InputError);
  EXPECT_THROW(VermaModule(alg, WeightFunctional({{Rat(1)}, {Rat(0)}, {Rat(0)}})), InputError);
}

TEST(Verma, HomogeneousWeight) {
  EXPECT_EQ(homogeneous_weight(basis({gen({-1, 0}, 0), gen({-1, -1}, 1)}), 2), (RootVector{2, 1}));
  VermaVector mixed = basis({gen({-1, 0}, 0)});
  mixed += basis({gen({0, -1}, 0)});
  EXPECT_FALSE(homogeneous_weight(mixed, 2).has_value());
  EXPECT_FALSE(homogeneous_weight(VermaVector{}, 2).has_value());
}

class VermaProperties : public ::testing::TestWithParam<std::tuple<std::string, int>> {};

TEST_P(VermaProperties, ModuleAxiomHolds) {
  const auto& [name, nilp] = GetParam();
  const TruncatedAlgebra alg(make_algebra(name), nilp);
  std::mt19937_64 rng(99 + static_cast<unsigned>(nilp));
  for (int trial = 0; trial < 40; ++trial) {
    const VermaModule m(alg, testing::random_lambda(rng, alg));
    const auto x = testing::random_generator(rng, alg, 3);
    const auto y = testing::random_generator(rng, alg, 3);
    const auto v = testing::random_vector(rng, alg, 2);
    const VermaVector lhs = m.apply(x, m.apply(y, v)) - m.apply(y, m.apply(x, v));
    EXPECT_EQ(lhs, m.apply(alg.bracket(x, y), v)) << trial;
  }
}

TEST_P(VermaProperties, ActionIsLinearAndShiftsWeight) {
  const auto& [name, nilp] = GetParam();
  const TruncatedAlgebra alg(make_algebra(name), nilp);
  const int gens = alg.base().generator_count();
  std::mt19937_64 rng(7 + static_cast<unsigned>(nilp));
  for (int trial = 0; trial < 40; ++trial) {
    const VermaModule m(alg, testing::random_lambda(rng, alg));
    const auto x = testing::random_generator(rng, alg, 3);
    const auto u = testing::random_vector(rng, alg, 2);
    const auto w = testing::random_vector(rng, alg, 2);
    const Rat a = testing::small_rat(rng);
    EXPECT_EQ(m.apply(x, a * u + w), a * m.apply(x, u) + m.apply(x, w));

    const auto chi = homogeneous_weight(u, gens);
    const VermaVector xu = m.apply(x, u);
    if (!chi || xu.empty()) continue;
    const auto shifted = homogeneous_weight(xu, gens);
    ASSERT_TRUE(shifted.has_value());
    EXPECT_EQ(*shifted, x.is_cartan() ? *chi : *chi - x.elem.root);
    for (const auto& [mono, c] : xu) EXPECT_TRUE(std::is_sorted(mono.factors.begin(), mono.factors.end(), pbw_less));
  }
}

TEST_P(VermaProperties, RaisingKillsHighestWeightVector) {
  const auto& [name, nilp] = GetParam();
  const TruncatedAlgebra alg(make_algebra(name), nilp);
  std::mt19937_64 rng(5);
  const VermaModule m(alg, testing::random_lambda(rng, alg));
  for (const auto& x : testing::basis_elements(alg.base(), 4)) {
    if (!x.is_raising()) continue;
    for (int d = 0; d <= nilp; ++d) EXPECT_TRUE(m.apply(GenElement{x, d}, m.highest_weight_vector()).empty());
  }
}

INSTANTIATE_TEST_SUITE_P(BuiltIns, VermaProperties,
                         ::testing::Combine(::testing::Values("sl2", "sl3", "virasoro", "oscillator"),
                                            ::testing::Values(1, 2)));

}  // namespace
}  // namespace tcla
