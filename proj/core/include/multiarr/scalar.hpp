#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace multiarr {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operands from two different fields met in one operation.
class FieldMismatchError : public Error {
 public:
  using Error::Error;
};

// Caller violated a documented precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// A mathematical invariant that must hold failed; indicates a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

/// The coefficient field: the rationals, or a prime field F_p with p < 2^32.
class Field {
 public:
  constexpr Field() = default;

  static constexpr Field rationals() { return Field{}; }
  static Field prime(std::uint64_t p);

  constexpr bool is_rational() const { return p_ == 0; }
  constexpr std::uint64_t characteristic() const { return p_; }
  std::string name() const;

  friend constexpr bool operator==(Field, Field) = default;

 private:
  std::uint64_t p_ = 0;
};

/// An exact field element. Rationals are kept in lowest terms with a positive
/// denominator; residues lie in [0, p).
class Scalar {
 public:
  Scalar() = default;
  Scalar(Field field, long value);
  Scalar(Field field, const mpq_class& value);

  static Scalar zero(Field field) { return Scalar(field, 0L); }
  static Scalar one(Field field) { return Scalar(field, 1L); }

  /// Accepts "7", "-7/2", "1.25" (decimal converted exactly).
  static Scalar parse(Field field, std::string_view text);

  Field field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  const mpq_class& rational() const;
  std::uint64_t residue() const;

  // Canonical text: "3", "-7/2"; residues print as their representative.
  std::string to_string() const;

  Scalar operator-() const;
  Scalar inverse() const;

  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs);

  friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
  friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
  friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
  friend Scalar operator/(Scalar lhs, const Scalar& rhs) { return lhs /= rhs; }

  friend bool operator==(const Scalar& a, const Scalar& b);

 private:
  void check_same_field(const Scalar& rhs) const;

  Field field_{};
  mpq_class q_{0};
  std::uint64_t r_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// Rescales a nonzero vector to its canonical projective representative:
/// over Q coprime integers with the first nonzero entry positive, over F_p
/// first nonzero entry equal to 1. Throws PreconditionError on the zero vector.
void normalize_projective(std::span<Scalar> coords);

/// Scales so the first nonzero entry is 1; leaves the zero vector unchanged.
void normalize_leading_one(std::span<Scalar> coords);

}  // namespace multiarr
