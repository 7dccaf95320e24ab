#include <gtest/gtest.h>

#include <random>

#include "multiarr/binary_form.hpp"
#include "multiarr/linear_algebra.hpp"

namespace multiarr {
namespace {

const Field kQ = Field::rationals();

LinearForm2 lf(long a, long b, Field f = kQ) { return LinearForm2(Scalar(f, a), Scalar(f, b)); }

BinaryForm random_form(std::mt19937_64& rng, Field f, int degree) {
  std::uniform_int_distribution<long> d(-6, 6);
  std::vector<Scalar> c;
  for (int i = 0; i <= degree; ++i) c.emplace_back(f, d(rng));
  return BinaryForm(f, std::move(c));
}

TEST(BinaryForm, PrintsHighestX1PowerFirst) {
  const auto s = lf(1, 1).to_form();
  EXPECT_EQ(pow(s, 2).to_string(), "x1^2 + 2*x1*x2 + x2^2");
  EXPECT_EQ((lf(1, -1).to_form() * lf(1, 1).to_form()).to_string(), "x1^2 - x2^2");
  EXPECT_EQ(BinaryForm(kQ, 3).to_string(), "0");
}

TEST(BinaryForm, Partials) {
  const auto p = pow(lf(1, 1).to_form(), 3);
  EXPECT_EQ(p.partial_x1().to_string(), "3*x1^2 + 6*x1*x2 + 3*x2^2");
  EXPECT_EQ(p.partial_x1(), p.partial_x2());
  EXPECT_TRUE(BinaryForm::constant(Scalar(kQ, 4)).partial_x1().is_zero());
}

TEST(BinaryForm, ExactDivision) {
  const auto a = lf(1, 2).to_form();
  const auto b = lf(3, -1).to_form();
  const auto q = (a * b).divide_exact(a);
  ASSERT_TRUE(q.has_value());
  EXPECT_EQ(*q, b);
  EXPECT_FALSE((a * b + BinaryForm::monomial(kQ, 2, 0, Scalar(kQ, 1))).divide_exact(b).has_value());
}

TEST(LinearForm2, Canonical) {
  EXPECT_EQ(lf(2, 4), lf(1, 2));
  EXPECT_EQ(lf(-1, 1).to_string(), "x1 - x2");
  EXPECT_EQ(lf(0, -3).to_string(), "x2");
  EXPECT_TRUE(lf(2, 6).proportional_to(lf(-1, -3)));
  EXPECT_THROW(lf(0, 0), PreconditionError);
}

TEST(DivisibilityConstraints, Shape) {
  const auto m = divisibility_constraints(lf(1, 1), 3, 5);
  EXPECT_EQ(m.rows(), 3U);
  EXPECT_EQ(m.cols(), 6U);
  EXPECT_EQ(divisibility_constraints(lf(1, 0), 4, 2).rows(), 4U);
}

class DivisibilityAgreement : public ::testing::TestWithParam<std::uint64_t> {};

// The kernel test and repeated synthetic division agree; multiples of alpha^k
// always pass.
TEST_P(DivisibilityAgreement, RandomForms) {
  const Field f = GetParam() == 0 ? kQ : Field::prime(GetParam());
  std::mt19937_64 rng(0xd1 + GetParam());
  std::uniform_int_distribution<long> c(-4, 4);
  std::uniform_int_distribution<int> deg(0, 7);
  for (int trial = 0; trial < 200; ++trial) {
    long a = c(rng), b = c(rng);
    if (Scalar(f, a).is_zero() && Scalar(f, b).is_zero()) a = 1;
    const auto alpha = lf(a, b, f);
    const int k = deg(rng) % 4;
    const int d = deg(rng);
    const auto m = divisibility_constraints(alpha, k, d);
    const auto p = trial % 2 == 0 && d >= k ? pow(alpha.to_form(), k) * random_form(rng, f, d - k)
                                            : random_form(rng, f, d);
    const auto residual = m.apply(p.coeffs());
    const bool in_kernel =
        std::all_of(residual.begin(), residual.end(), [](const Scalar& s) { return s.is_zero(); });
    EXPECT_EQ(in_kernel, binary_form_divides(alpha, k, p)) << p.to_string() << " by (" << alpha.to_string() << ")^" << k;
    if (trial % 2 == 0 && d >= k) {
      EXPECT_TRUE(binary_form_divides(alpha, k, p));
    }
  }
}

INSTANTIATE_TEST_SUITE_P(QAndPrimes, DivisibilityAgreement, ::testing::Values(0, 2, 5, 101));

TEST(DivisibilityConstraints, DegreeBelowKOnlyZero) {
  const auto m = divisibility_constraints(lf(1, 1), 4, 2);
  EXPECT_TRUE(kernel_basis(m).empty());
  EXPECT_TRUE(binary_form_divides(lf(1, 1), 4, BinaryForm(kQ, 2)));
}

}  // namespace
}  // namespace multiarr
