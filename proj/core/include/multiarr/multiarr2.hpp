#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "multiarr/binary_form.hpp"

namespace multiarr {

/// A central arrangement of h >= 1 pairwise non-proportional lines in K^2.
class Arrangement2 {
 public:
  explicit Arrangement2(std::vector<LinearForm2> forms);

  Field field() const { return forms_.front().field(); }
  std::size_t size() const { return forms_.size(); }
  const LinearForm2& operator[](std::size_t i) const { return forms_[i]; }
  const std::vector<LinearForm2>& forms() const { return forms_; }

 private:
  std::vector<LinearForm2> forms_;
};

/// Nonnegative multiplicities aligned with the forms of an Arrangement2.
class Multiplicity {
 public:
  Multiplicity() = default;
  Multiplicity(std::initializer_list<int> values) : values_(values) { validate(); }
  explicit Multiplicity(std::vector<int> values) : values_(std::move(values)) { validate(); }
  static Multiplicity constant(std::size_t h, int value) { return Multiplicity(std::vector<int>(h, value)); }

  std::size_t size() const { return values_.size(); }
  int operator[](std::size_t i) const { return values_[i]; }
  int& operator[](std::size_t i) { return values_[i]; }
  const std::vector<int>& values() const { return values_; }
  auto begin() const { return values_.begin(); }
  auto end() const { return values_.end(); }

  int total() const;
  std::string to_string() const;  // "(2,2,1)"

  friend auto operator<=>(const Multiplicity&, const Multiplicity&) = default;

 private:
  void validate() const;
  std::vector<int> values_;
};

/// theta = f * d/dx1 + g * d/dx2 with deg f = deg g.
class Derivation2 {
 public:
  Derivation2(BinaryForm f, BinaryForm g);

  static Derivation2 zero(Field field, int degree) { return {BinaryForm(field, degree), BinaryForm(field, degree)}; }
  /// Constant derivation c1*d/dx1 + c2*d/dx2.
  static Derivation2 constant(const Scalar& c1, const Scalar& c2);
  static Derivation2 euler(Field field);

  Field field() const { return f_.field(); }
  int degree() const { return f_.degree(); }
  const BinaryForm& f() const { return f_; }
  const BinaryForm& g() const { return g_; }
  bool is_zero() const { return f_.is_zero() && g_.is_zero(); }

  /// theta(p) = f * dp/dx1 + g * dp/dx2.
  BinaryForm apply(const BinaryForm& p) const;
  BinaryForm apply(const LinearForm2& alpha) const;

  Derivation2 scaled(const Scalar& s) const { return {f_.scaled(s), g_.scaled(s)}; }
  Derivation2 times(const BinaryForm& p) const { return {p * f_, p * g_}; }

  /// Coefficients (f_0..f_d, g_0..g_d).
  Vector coordinates() const;
  static Derivation2 from_coordinates(Field field, int degree, const Vector& coords);

  std::string to_string() const;  // "(f)*d1 + (g)*d2"

  friend bool operator==(const Derivation2& a, const Derivation2& b) { return a.f_ == b.f_ && a.g_ == b.g_; }

 private:
  BinaryForm f_;
  BinaryForm g_;
};

struct Exponents2 {
  int d1 = 0;
  int d2 = 0;
  int delta() const { return d2 - d1; }
  friend bool operator==(const Exponents2&, const Exponents2&) = default;
};

/// Linear conditions (sum m(H) rows, 2(d+1) columns) cutting out the
/// degree-d part of D(A, m) inside the space of generic degree-d derivations.
Matrix derivation_constraints(const Arrangement2& a, const Multiplicity& m, int d);

int derivation_space_dim(const Arrangement2& a, const Multiplicity& m, int d);

/// Kernel basis of the degree-d part of D(A, m), deterministic order.
std::vector<Derivation2> derivation_space_basis(const Arrangement2& a, const Multiplicity& m, int d);

/// d1 is the least degree with a nonzero element, d2 = |m| - d1.
Exponents2 exponents(const Arrangement2& a, const Multiplicity& m);

int delta(const Arrangement2& a, const Multiplicity& m);

bool is_balanced(const Multiplicity& m);
inline bool is_balanced(const Arrangement2&, const Multiplicity& m) { return is_balanced(m); }

/// Index K with 2 m(K) > |m|, if any (unique when it exists).
std::optional<std::size_t> dominant_hyperplane(const Multiplicity& m);

/// theta(alpha_H) divisible by alpha_H^m(H) for every H.
bool in_derivation_module(const Arrangement2& a, const Multiplicity& m, const Derivation2& theta);

/// Nonzero element of degree d1, scaled so its first nonzero coordinate is 1.
Derivation2 lower_degree_basis(const Arrangement2& a, const Multiplicity& m);

struct Basis2 {
  Derivation2 theta1;
  Derivation2 theta2;
  Exponents2 exps;
  Scalar saito_scalar;  // det(theta1, theta2) = saito_scalar * prod alpha_H^m(H)
};

Basis2 basis(const Arrangement2& a, const Multiplicity& m);

/// f1*g2 - f2*g1.
BinaryForm saito_det(const Derivation2& theta1, const Derivation2& theta2);

/// prod alpha_H^m(H).
BinaryForm defining_polynomial(const Arrangement2& a, const Multiplicity& m);

/// The c with det == c * q when q != 0 and det is a scalar multiple of q.
std::optional<Scalar> scalar_multiple_of(const BinaryForm& det, const BinaryForm& q);

struct NonbalancedResult {
  Exponents2 exps;
  std::size_t dominant = 0;
  Derivation2 lower;
};

/// Closed form for unbalanced m: exponents {m(K), |m| - m(K)} and the
/// lower-degree element prod_{H != K} alpha_H^m(H) * d_v with d_v(alpha_K) = 0.
NonbalancedResult nonbalanced_exponents(const Arrangement2& a, const Multiplicity& m);

}  // namespace multiarr
