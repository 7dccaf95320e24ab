#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "multiarr/multiarr2.hpp"

namespace multiarr {

/// a*x + b*y + c*z, canonical up to scaling.
class LinearForm3 {
 public:
  LinearForm3(const Scalar& a, const Scalar& b, const Scalar& c);
  LinearForm3(Field field, long a, long b, long c)
      : LinearForm3(Scalar(field, a), Scalar(field, b), Scalar(field, c)) {}

  Field field() const { return c_[0].field(); }
  const Scalar& operator[](std::size_t i) const { return c_[i]; }
  const std::array<Scalar, 3>& coeffs() const { return c_; }
  Scalar evaluate(const Vector& v) const { return c_[0] * v[0] + c_[1] * v[1] + c_[2] * v[2]; }
  std::string to_string() const;  // "x - z"

  friend bool operator==(const LinearForm3&, const LinearForm3&) = default;

 private:
  std::array<Scalar, 3> c_;
};

/// Central arrangement of distinct planes through the origin of K^3.
class Arrangement3 {
 public:
  explicit Arrangement3(std::vector<LinearForm3> forms);

  Field field() const { return forms_.front().field(); }
  std::size_t size() const { return forms_.size(); }
  const LinearForm3& operator[](std::size_t i) const { return forms_[i]; }
  const std::vector<LinearForm3>& forms() const { return forms_; }

 private:
  std::vector<LinearForm3> forms_;
};

/// Affine line a*x + b*y = c with (a, b) != 0, canonical up to scaling.
class AffineLine {
 public:
  AffineLine(const Scalar& a, const Scalar& b, const Scalar& c);
  AffineLine(Field field, long a, long b, long c) : AffineLine(Scalar(field, a), Scalar(field, b), Scalar(field, c)) {}

  Field field() const { return a_.field(); }
  const Scalar& a() const { return a_; }
  const Scalar& b() const { return b_; }
  const Scalar& c() const { return c_; }
  bool parallel_to(const AffineLine& other) const { return (a_ * other.b_ - b_ * other.a_).is_zero(); }
  std::string to_string() const;  // "x - y = 1"

  friend bool operator==(const AffineLine&, const AffineLine&) = default;

 private:
  Scalar a_;
  Scalar b_;
  Scalar c_;
};

class AffineArrangement2 {
 public:
  AffineArrangement2(Field field, std::vector<AffineLine> lines);

  Field field() const { return field_; }
  std::size_t size() const { return lines_.size(); }
  const AffineLine& operator[](std::size_t i) const { return lines_[i]; }
  const std::vector<AffineLine>& lines() const { return lines_; }

  friend bool operator==(const AffineArrangement2&, const AffineArrangement2&) = default;

 private:
  Field field_;
  std::vector<AffineLine> lines_;
};

/// Integer polynomial in t; coeffs[i] multiplies t^i.
class CharPoly {
 public:
  CharPoly() = default;
  explicit CharPoly(std::vector<std::int64_t> coeffs);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  std::int64_t coeff(int i) const { return i < 0 || i > degree() ? 0 : coeffs_[static_cast<std::size_t>(i)]; }
  const std::vector<std::int64_t>& coeffs() const { return coeffs_; }
  std::int64_t evaluate(std::int64_t t) const;

  CharPoly times_t_minus(std::int64_t r) const;
  /// Exact quotient by (t - r), nullopt if (t - r) does not divide.
  std::optional<CharPoly> divide_t_minus(std::int64_t r) const;

  std::string to_string() const;  // "t^3 - 6*t^2 + 11*t - 6"

  friend bool operator==(const CharPoly&, const CharPoly&) = default;

 private:
  std::vector<std::int64_t> coeffs_;
};

/// Integer roots (r1 <= r2) of t^2 - sum*t + product, if it splits over Z.
std::optional<std::pair<std::int64_t, std::int64_t>> integer_roots(std::int64_t sum, std::int64_t product);

struct Flat {
  int codim = 0;
  std::vector<std::size_t> hyperplanes;  // indices of hyperplanes containing the flat
  std::int64_t mobius = 0;
};

/// Flats of L(A) grouped by codimension (V first), with Moebius values.
std::vector<Flat> intersection_lattice(const Arrangement3& a);
std::vector<Flat> intersection_lattice(const AffineArrangement2& a);

CharPoly char_poly(const Arrangement3& a);
CharPoly char_poly(const AffineArrangement2& a);

struct Coning {
  Arrangement3 arrangement;
  std::size_t infinite_index = 0;  // position of z = 0, always last
};

Coning cone(const AffineArrangement2& a);
AffineArrangement2 decone(const Arrangement3& a, std::size_t h0);

struct ZieglerRestriction {
  Arrangement2 arrangement;
  Multiplicity multiplicity;
  std::array<Vector, 2> frame;  // spanning vectors of H0 used as coordinates
};

/// Restriction of A onto h0 with multiplicity m(X) = #{H != h0 : H contains X}.
/// Throws PreconditionError when h0 is the only hyperplane.
ZieglerRestriction ziegler_restriction(const Arrangement3& a, std::size_t h0);

struct CokerData {
  std::int64_t c1 = 0;
  std::int64_t c2 = 0;
  Exponents2 exps;
  std::int64_t coker_dim = 0;
};

/// c2 - d1 d2 from chi(A, t) = (t - 1)(t^2 - c1 t + c2) and the exponents of
/// the Ziegler restriction onto h0. A negative value raises InternalError.
CokerData yoshinaga_data(const Arrangement3& a, std::size_t h0);
std::int64_t yoshinaga_coker_dim(const Arrangement3& a, std::size_t h0);

struct CombinatorialExponents {
  Exponents2 exps;
  std::string reason;  // "nb" or "limit-parity"
};

/// Exponents of a Ziegler restriction that follow from the multiplicity alone:
/// the unbalanced closed form, or for balanced m with h = 3, or h = 4 and
/// |m| odd, the bound Delta <= h - 2 together with Delta = |m| mod 2. The
/// bound is used in characteristic zero only.
std::optional<CombinatorialExponents> combinatorial_exponents(Field field, const Multiplicity& m);

struct FreenessVerdict {
  bool free = false;
  std::array<int, 3> exponents{0, 0, 0};  // sorted {1, d1, d2} when free
  std::int64_t coker_dim = 0;
  std::size_t h0 = 0;
  std::optional<ZieglerRestriction> ziegler;  // absent when |A| = 1
  Exponents2 restriction_exps;
  CharPoly chi;
  bool combinatorial = false;
  std::string combinatorial_reason;  // "nb", "fc" or "limit-parity"
};

FreenessVerdict is_free(const Arrangement3& a, std::optional<std::size_t> h0 = std::nullopt);

struct FcVerdict {
  bool applies = false;
  bool free = false;
  std::string reason;  // failing hypothesis when not applicable
  int gap_case = 0;    // 2: chi = (t-d)(t-d-h+2), 3: chi = (t-d)(t-d-h+3)
  std::int64_t d = 0;
  std::int64_t coker_dim = 0;
  bool violation = false;  // hypotheses hold but coker != 0
};

FcVerdict thm_fc_check(const AffineArrangement2& a);

struct RestReport {
  bool applicable = false;
  std::string reason;
  int bound_case = 0;  // 1: k = 2d+h-2, 2: k = 2d+h-3
  std::int64_t d = 0;
  std::int64_t root_a = 0;
  std::int64_t root_b = 0;
  bool holds = false;
};

RestReport thm_rest_check(const AffineArrangement2& a);

struct ChamberCount {
  std::int64_t zaslavsky = 0;
  std::optional<std::int64_t> euler;  // planar Euler-formula count, |A| <= 10 only
  bool agree() const { return !euler || *euler == zaslavsky; }
};

ChamberCount chamber_count(const AffineArrangement2& a);

struct Rest2Report {
  bool applicable = false;
  std::string reason;
  int bound_case = 0;
  std::int64_t d = 0;
  std::int64_t bound = 0;
  std::int64_t chambers = 0;
  bool equality = false;
  std::optional<bool> free_confirmed;  // checked when equality holds
  bool holds = false;
};

Rest2Report thm_rest2_check(const AffineArrangement2& a);

struct Pb3Report {
  bool member = false;
  std::optional<std::size_t> witness;
  std::vector<std::string> certificate;
};

Pb3Report pb3_membership(const Arrangement3& a);

}  // namespace multiarr
