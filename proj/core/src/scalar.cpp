#include "multiarr/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>

namespace multiarr {

namespace {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::uint64_t reduce_mod(const mpz_class& z, std::uint64_t p) {
  mpz_class r = z % mpz_class(static_cast<unsigned long>(p));
  if (r < 0) r += static_cast<unsigned long>(p);
  return r.get_ui();
}

// Operands are below p < 2^32, so the product fits in 64 bits.
std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) { return a * b % p; }

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint64_t p) {
  std::uint64_t acc = 1 % p;
  while (e > 0) {
    if (e & 1) acc = mul_mod(acc, base, p);
    base = mul_mod(base, base, p);
    e >>= 1;
  }
  return acc;
}

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  return std::all_of(s.begin() + static_cast<long>(i), s.end(),
                     [](unsigned char c) { return std::isdigit(c) != 0; });
}

mpq_class parse_rational(std::string_view text) {
  auto bad = [&] { return PreconditionError("malformed exact number: \"" + std::string(text) + "\""); };
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    auto num = text.substr(0, slash);
    auto den = text.substr(slash + 1);
    if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-' || den[0] == '+') throw bad();
    mpz_class n(std::string(num[0] == '+' ? num.substr(1) : num), 10);
    mpz_class d(std::string(den), 10);
    if (d == 0) throw PreconditionError("zero denominator in \"" + std::string(text) + "\"");
    mpq_class q(n, d);
    q.canonicalize();
    return q;
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    auto whole = text.substr(0, dot);
    auto frac = text.substr(dot + 1);
    bool negative = !whole.empty() && whole[0] == '-';
    if (!whole.empty() && (whole[0] == '-' || whole[0] == '+')) whole.remove_prefix(1);
    if (frac.empty() && whole.empty()) throw bad();
    if (!whole.empty() && !is_integer_literal(whole)) throw bad();
    if (!frac.empty() && !is_integer_literal(frac)) throw bad();
    if ((!whole.empty() && !std::isdigit(static_cast<unsigned char>(whole[0]))) ||
        (!frac.empty() && !std::isdigit(static_cast<unsigned char>(frac[0]))))
      throw bad();
    std::string digits = std::string(whole) + std::string(frac);
    mpz_class n(digits.empty() ? std::string("0") : digits, 10);
    mpz_class d;
    mpz_ui_pow_ui(d.get_mpz_t(), 10, frac.size());
    mpq_class q(negative ? mpz_class(-n) : n, d);
    q.canonicalize();
    return q;
  }
  if (!is_integer_literal(text)) throw bad();
  return mpq_class(mpz_class(std::string(text[0] == '+' ? text.substr(1) : text), 10));
}

}  // namespace

Field Field::prime(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 32) || !is_prime(p)) {
    throw PreconditionError("field characteristic must be a prime below 2^32, got " + std::to_string(p));
  }
  Field f;
  f.p_ = p;
  return f;
}

std::string Field::name() const { return is_rational() ? "Q" : "F_" + std::to_string(p_); }

Scalar::Scalar(Field field, long value) : field_(field) {
  if (field.is_rational()) {
    q_ = value;
  } else {
    r_ = reduce_mod(mpz_class(value), field.characteristic());
  }
}

Scalar::Scalar(Field field, const mpq_class& value) : field_(field) {
  if (field.is_rational()) {
    q_ = value;
    q_.canonicalize();
    return;
  }
  const auto p = field.characteristic();
  std::uint64_t den = reduce_mod(value.get_den(), p);
  if (den == 0) {
    throw PreconditionError("denominator of " + value.get_str() + " vanishes in " + field.name());
  }
  r_ = mul_mod(reduce_mod(value.get_num(), p), pow_mod(den, p - 2, p), p);
}

Scalar Scalar::parse(Field field, std::string_view text) { return Scalar(field, parse_rational(text)); }

bool Scalar::is_zero() const { return field_.is_rational() ? sgn(q_) == 0 : r_ == 0; }

bool Scalar::is_one() const { return field_.is_rational() ? q_ == 1 : r_ == 1; }

const mpq_class& Scalar::rational() const {
  if (!field_.is_rational()) throw FieldMismatchError("rational value requested from an element of " + field_.name());
  return q_;
}

std::uint64_t Scalar::residue() const {
  if (field_.is_rational()) throw FieldMismatchError("residue requested from a rational scalar");
  return r_;
}

std::string Scalar::to_string() const { return field_.is_rational() ? q_.get_str() : std::to_string(r_); }

Scalar Scalar::operator-() const {
  Scalar out = *this;
  if (field_.is_rational()) {
    out.q_ = -q_;
  } else if (r_ != 0) {
    out.r_ = field_.characteristic() - r_;
  }
  return out;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw PreconditionError("division by zero");
  Scalar out = *this;
  if (field_.is_rational()) {
    out.q_ = 1 / q_;
  } else {
    out.r_ = pow_mod(r_, field_.characteristic() - 2, field_.characteristic());
  }
  return out;
}

void Scalar::check_same_field(const Scalar& rhs) const {
  if (!(field_ == rhs.field_)) {
    throw FieldMismatchError("mixed-field arithmetic: " + field_.name() + " vs " + rhs.field_.name());
  }
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  check_same_field(rhs);
  if (field_.is_rational()) {
    q_ += rhs.q_;
  } else {
    r_ += rhs.r_;
    if (r_ >= field_.characteristic()) r_ -= field_.characteristic();
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) { return *this += -rhs; }

Scalar& Scalar::operator*=(const Scalar& rhs) {
  check_same_field(rhs);
  if (field_.is_rational()) {
    q_ *= rhs.q_;
  } else {
    r_ = mul_mod(r_, rhs.r_, field_.characteristic());
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
  check_same_field(rhs);
  return *this *= rhs.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (!(a.field_ == b.field_)) return false;
  return a.field_.is_rational() ? a.q_ == b.q_ : a.r_ == b.r_;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

void normalize_projective(std::span<Scalar> coords) {
  auto lead = std::find_if(coords.begin(), coords.end(), [](const Scalar& s) { return !s.is_zero(); });
  if (lead == coords.end()) throw PreconditionError("cannot normalize the zero vector");
  const Field field = lead->field();
  if (!field.is_rational()) {
    normalize_leading_one(coords);
    return;
  }
  mpz_class lcm_den = 1;
  for (const auto& c : coords) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.rational().get_den_mpz_t());
  mpz_class gcd_num = 0;
  for (const auto& c : coords) {
    mpz_class n = c.rational().get_num() * (lcm_den / c.rational().get_den());
    mpz_gcd(gcd_num.get_mpz_t(), gcd_num.get_mpz_t(), n.get_mpz_t());
  }
  mpq_class factor(lcm_den, gcd_num);
  if (sgn(lead->rational()) < 0) factor = -factor;
  factor.canonicalize();
  const Scalar scale(field, factor);
  for (auto& c : coords) c *= scale;
}

void normalize_leading_one(std::span<Scalar> coords) {
  auto lead = std::find_if(coords.begin(), coords.end(), [](const Scalar& s) { return !s.is_zero(); });
  if (lead == coords.end()) return;
  const Scalar inv = lead->inverse();
  for (auto& c : coords) c *= inv;
}

}  // namespace multiarr
