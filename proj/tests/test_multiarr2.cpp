#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "support.hpp"

namespace multiarr {
namespace {

using testing::a2;
using testing::b2;
using testing::kQ;
using testing::lines;

const Field kF2 = Field::prime(2);
const Field kF3 = Field::prime(3);

BinaryForm x1() { return BinaryForm::monomial(kQ, 1, 0, Scalar::one(kQ)); }
BinaryForm x2() { return BinaryForm::monomial(kQ, 0, 1, Scalar::one(kQ)); }

TEST(Multiplicity, RejectsNegativeEntries) {
  EXPECT_THROW(Multiplicity({1, -1}), PreconditionError);
  EXPECT_EQ(Multiplicity({2, 2, 1}).to_string(), "(2,2,1)");
  EXPECT_EQ(Multiplicity({2, 2, 1}).total(), 5);
}

TEST(Arrangement2, RejectsProportionalLines) {
  EXPECT_THROW(lines(kQ, {{1, 1}, {2, 2}}), PreconditionError);
}

TEST(DerivationSpace, Dimensions) {
  const auto a = a2();
  const auto one = Multiplicity::constant(3, 1);
  EXPECT_EQ(derivation_space_dim(a, one, 0), 0);
  EXPECT_EQ(derivation_space_dim(a, one, 1), 1);
  EXPECT_EQ(derivation_space_dim(a, one, 2), 3);
  EXPECT_EQ(derivation_space_dim(a2(kF2), Multiplicity::constant(3, 4), 3), 0);
}

TEST(Exponents, WorkedExamples) {
  EXPECT_EQ(exponents(a2(), {1, 1, 1}), (Exponents2{1, 2}));
  EXPECT_EQ(exponents(a2(), {2, 2, 1}), (Exponents2{2, 3}));
  EXPECT_EQ(exponents(a2(), {5, 1, 1}), (Exponents2{2, 5}));
  EXPECT_EQ(exponents(a2(kF2), {4, 4, 4}), (Exponents2{4, 8}));
  EXPECT_EQ(delta(a2(), {1, 1, 1}), 1);
  EXPECT_EQ(delta(a2(), {5, 1, 1}), 3);
  EXPECT_EQ(delta(b2(), Multiplicity::constant(4, 1)), 2);
  EXPECT_EQ(exponents(a2(), {0, 0, 0}), (Exponents2{0, 0}));
}

TEST(Balanced, Examples) {
  EXPECT_TRUE(is_balanced(Multiplicity{1, 1, 1}));
  EXPECT_FALSE(is_balanced(Multiplicity{5, 1, 1}));
  EXPECT_TRUE(is_balanced(Multiplicity{2, 2, 1}));
  EXPECT_EQ(dominant_hyperplane(Multiplicity{5, 1, 1}), std::optional<std::size_t>(0));
  EXPECT_FALSE(dominant_hyperplane(Multiplicity{2, 2, 1}).has_value());
}

TEST(LowerDegreeBasis, Euler) {
  const auto theta = lower_degree_basis(a2(), {1, 1, 1});
  EXPECT_EQ(theta, Derivation2(x1(), x2()));
  EXPECT_THROW(lower_degree_basis(a2(), {0, 0, 0}), PreconditionError);
}

TEST(LowerDegreeBasis, CharacteristicTwo) {
  const auto theta = lower_degree_basis(a2(kF2), {4, 4, 4});
  EXPECT_EQ(theta.f().to_string(), "x1^4");
  EXPECT_EQ(theta.g().to_string(), "x2^4");
}

TEST(LowerDegreeBasis, UnbalancedIsProductTimesConstantField) {
  const auto theta = lower_degree_basis(a2(), {5, 1, 1});
  EXPECT_TRUE(theta.f().is_zero());
  const auto expected = x2() * (x1() + x2());
  EXPECT_TRUE(scalar_multiple_of(theta.g(), expected).has_value()) << theta.to_string();
}

TEST(Basis, SaitoScalarNonzero) {
  const auto b = basis(a2(), {1, 1, 1});
  EXPECT_FALSE(b.saito_scalar.is_zero());
  const auto det = saito_det(b.theta1, b.theta2);
  EXPECT_EQ(det, defining_polynomial(a2(), {1, 1, 1}).scaled(b.saito_scalar));
}

TEST(Basis, CharacteristicTwoPair) {
  const auto b = basis(a2(kF2), {4, 4, 4});
  EXPECT_EQ(b.exps, (Exponents2{4, 8}));
  // theta2 is unique only modulo S_4 * theta1; the classical complement
  // x1^8 d1 + x2^8 d2 must complete theta1 to a basis as well.
  const auto x = [](int i, int j) { return BinaryForm::monomial(kF2, i, j, Scalar::one(kF2)); };
  const Derivation2 classical(x(8, 0), x(0, 8));
  EXPECT_TRUE(in_derivation_module(a2(kF2), {4, 4, 4}, classical));
  const auto c = scalar_multiple_of(saito_det(b.theta1, classical), defining_polynomial(a2(kF2), {4, 4, 4}));
  ASSERT_TRUE(c.has_value());
  EXPECT_FALSE(c->is_zero());
}

TEST(Basis, SingleLine) {
  const auto a = lines(kQ, {{1, 0}});
  const auto b = basis(a, {3});
  EXPECT_EQ(b.exps, (Exponents2{0, 3}));
  EXPECT_EQ(b.theta1, Derivation2::constant(Scalar::zero(kQ), Scalar::one(kQ)));
  EXPECT_TRUE(b.theta2.g().is_zero());
  EXPECT_EQ(b.theta2.f().to_string(), "x1^3");
}

TEST(SaitoDet, Examples) {
  const auto d1 = Derivation2::constant(Scalar::one(kQ), Scalar::zero(kQ));
  const auto d2 = Derivation2::constant(Scalar::zero(kQ), Scalar::one(kQ));
  EXPECT_EQ(saito_det(d1, d2).to_string(), "1");
  const auto euler = Derivation2::euler(kQ);
  EXPECT_TRUE(saito_det(euler, euler).is_zero());
  const Derivation2 phi(x1() * x1(), BinaryForm(kQ, 2));
  EXPECT_EQ(saito_det(euler, phi).to_string(), "-x1^2*x2");
}

TEST(Nonbalanced, ClosedForm) {
  const auto r = nonbalanced_exponents(a2(), {5, 1, 1});
  EXPECT_EQ(r.exps, (Exponents2{2, 5}));
  EXPECT_EQ(r.dominant, 0U);
  EXPECT_EQ(nonbalanced_exponents(lines(kQ, {{1, 0}, {0, 1}}), {3, 1}).exps, (Exponents2{1, 3}));
  EXPECT_EQ(nonbalanced_exponents(a2(), {9, 2, 2}).exps, (Exponents2{4, 9}));
  EXPECT_THROW(nonbalanced_exponents(a2(), {1, 1, 1}), PreconditionError);
}

class RandomPairs : public ::testing::TestWithParam<std::uint64_t> {};

// Saito's criterion, the Hilbert-function law of a free module with exponents
// (d1, d2), and agreement with the closed form off the balanced region.
TEST_P(RandomPairs, StructuralLaws) {
  const Field f = GetParam() == 0 ? kQ : Field::prime(GetParam());
  std::mt19937_64 rng(0xa11 + GetParam());
  for (int trial = 0; trial < 25; ++trial) {
    const std::size_t h = 1 + static_cast<std::size_t>(trial % 5);
    if (!f.is_rational() && h > f.characteristic() + 1) continue;
    const auto a = testing::random_lines(rng, h, f);
    const auto m = testing::random_multiplicity(rng, h, 4);
    if (m.total() == 0) continue;
    const auto b = basis(a, m);
    EXPECT_EQ(b.exps.d1 + b.exps.d2, m.total());
    EXPECT_LE(b.exps.d1, b.exps.d2);
    EXPECT_TRUE(in_derivation_module(a, m, b.theta1));
    EXPECT_TRUE(in_derivation_module(a, m, b.theta2));
    const auto c = scalar_multiple_of(saito_det(b.theta1, b.theta2), defining_polynomial(a, m));
    ASSERT_TRUE(c.has_value());
    EXPECT_FALSE(c->is_zero());
    for (int d = 0; d <= m.total() + 1; ++d) {
      const int expected = std::max(0, d - b.exps.d1 + 1) + std::max(0, d - b.exps.d2 + 1);
      EXPECT_EQ(derivation_space_dim(a, m, d), expected) << "d=" << d << " m=" << m.to_string();
    }
    if (!is_balanced(m)) {
      EXPECT_EQ(nonbalanced_exponents(a, m).exps, b.exps);
    }
    EXPECT_EQ(delta(a, m) % 2, m.total() % 2);
  }
}

INSTANTIATE_TEST_SUITE_P(QAndPrimes, RandomPairs, ::testing::Values(0, 5, 7, 101));

// Exponents depend only on the lines, not on the coordinates: swap and shear.
TEST(Exponents, CoordinateInvariance) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t h = 2 + static_cast<std::size_t>(trial % 4);
    const auto a = testing::random_lines(rng, h);
    const auto m = testing::random_multiplicity(rng, h, 4);
    std::vector<LinearForm2> swapped, sheared;
    for (const auto& l : a.forms()) {
      swapped.emplace_back(l.b(), l.a());
      sheared.emplace_back(l.a(), l.a() * Scalar(kQ, 3) + l.b());
    }
    const auto e = exponents(a, m);
    EXPECT_EQ(exponents(Arrangement2(swapped), m), e);
    EXPECT_EQ(exponents(Arrangement2(sheared), m), e);
  }
}

// Oracle: over F_3 enumerate every derivation of degree <= 2 and test
// tangency directly; the count must be 3^dim of the solver's kernel.
TEST(DerivationSpace, MatchesBruteForceOverF3) {
  const std::vector<Arrangement2> arrangements = {
      lines(kF3, {{1, 0}, {0, 1}, {1, 1}}), lines(kF3, {{1, 0}, {0, 1}, {1, 1}, {1, 2}}),
      lines(kF3, {{1, 0}, {1, 1}})};
  std::mt19937_64 rng(3);
  for (const auto& a : arrangements) {
    for (int trial = 0; trial < 6; ++trial) {
      const auto m = testing::random_multiplicity(rng, a.size(), 3);
      for (int d = 0; d <= 2; ++d) {
        const std::size_t n = 2 * static_cast<std::size_t>(d + 1);
        std::size_t total = 1;
        for (std::size_t i = 0; i < n; ++i) total *= 3;
        std::size_t members = 0;
        for (std::size_t code = 0; code < total; ++code) {
          Vector v;
          std::size_t c = code;
          for (std::size_t i = 0; i < n; ++i, c /= 3) v.emplace_back(kF3, static_cast<long>(c % 3));
          const auto theta = Derivation2::from_coordinates(kF3, d, v);
          bool tangent = true;
          for (std::size_t i = 0; i < a.size() && tangent; ++i) {
            tangent = binary_form_divides(a[i], m[i], theta.apply(a[i]));
          }
          members += tangent;
        }
        std::size_t expected = 1;
        for (int i = 0; i < derivation_space_dim(a, m, d); ++i) expected *= 3;
        EXPECT_EQ(members, expected) << "m=" << m.to_string() << " d=" << d;
      }
    }
  }
}

}  // namespace
}  // namespace multiarr
