#pragma once

#include <optional>
#include <string>
#include <vector>

#include "multiarr/linear_algebra.hpp"
#include "multiarr/scalar.hpp"

namespace multiarr {

/// Homogeneous polynomial in x1, x2. coeff(i) is the coefficient of
/// x1^i * x2^(degree - i). The zero form may carry any degree.
class BinaryForm {
 public:
  BinaryForm(Field field, int degree);
  BinaryForm(Field field, std::vector<Scalar> coeffs);

  static BinaryForm monomial(Field field, int pow_x1, int pow_x2, const Scalar& c);
  static BinaryForm constant(const Scalar& c) { return monomial(c.field(), 0, 0, c); }

  Field field() const { return field_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Scalar& coeff(int i) const { return coeffs_[static_cast<std::size_t>(i)]; }
  const std::vector<Scalar>& coeffs() const { return coeffs_; }

  bool is_zero() const;

  BinaryForm scaled(const Scalar& s) const;
  BinaryForm partial_x1() const;
  BinaryForm partial_x2() const;

  /// Exact quotient when `divisor` divides this form, nullopt otherwise.
  std::optional<BinaryForm> divide_exact(const BinaryForm& divisor) const;

  /// Human-readable, highest power of x1 first, e.g. "x1^2 - 3*x1*x2 + x2^2".
  std::string to_string() const;

  BinaryForm& operator+=(const BinaryForm& rhs);
  BinaryForm& operator-=(const BinaryForm& rhs);

  friend BinaryForm operator+(BinaryForm a, const BinaryForm& b) { return a += b; }
  friend BinaryForm operator-(BinaryForm a, const BinaryForm& b) { return a -= b; }
  friend BinaryForm operator*(const BinaryForm& a, const BinaryForm& b);
  BinaryForm operator-() const { return scaled(-Scalar::one(field_)); }

  // Same degree and coefficients; zero forms compare equal regardless of degree.
  friend bool operator==(const BinaryForm& a, const BinaryForm& b);

 private:
  Field field_;
  std::vector<Scalar> coeffs_;
};

BinaryForm pow(const BinaryForm& base, int exponent);

/// A linear form a*x1 + b*x2, stored in canonical projective form.
class LinearForm2 {
 public:
  LinearForm2(const Scalar& a, const Scalar& b);
  LinearForm2(Field field, long a, long b) : LinearForm2(Scalar(field, a), Scalar(field, b)) {}

  Field field() const { return a_.field(); }
  const Scalar& a() const { return a_; }
  const Scalar& b() const { return b_; }

  BinaryForm to_form() const;
  Scalar evaluate(const Scalar& x1, const Scalar& x2) const { return a_ * x1 + b_ * x2; }
  bool proportional_to(const LinearForm2& other) const;
  std::string to_string() const;

  friend bool operator==(const LinearForm2&, const LinearForm2&) = default;

 private:
  Scalar a_;
  Scalar b_;
};

/// Rows whose kernel is exactly the coefficient vectors of degree-d forms
/// divisible by alpha^k: the k remainder coefficients of dividing the
/// generic degree-d form by alpha^k. Always k rows and d+1 columns.
Matrix divisibility_constraints(const LinearForm2& alpha, int k, int d);

/// alpha^k | p, checked by repeated synthetic division. The zero form is
/// divisible by everything.
bool binary_form_divides(const LinearForm2& alpha, int k, const BinaryForm& p);

}  // namespace multiarr
