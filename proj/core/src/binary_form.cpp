#include "multiarr/binary_form.hpp"

#include <algorithm>
#include <sstream>

namespace multiarr {

BinaryForm::BinaryForm(Field field, int degree) : field_(field) {
  if (degree < 0) throw PreconditionError("binary form degree must be nonnegative");
  coeffs_.assign(static_cast<std::size_t>(degree) + 1, Scalar::zero(field));
}

BinaryForm::BinaryForm(Field field, std::vector<Scalar> coeffs) : field_(field), coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw PreconditionError("binary form needs at least one coefficient");
  for (const auto& c : coeffs_) {
    if (!(c.field() == field)) throw FieldMismatchError("binary form coefficient outside " + field.name());
  }
}

BinaryForm BinaryForm::monomial(Field field, int pow_x1, int pow_x2, const Scalar& c) {
  BinaryForm f(field, pow_x1 + pow_x2);
  f.coeffs_[static_cast<std::size_t>(pow_x1)] = c;
  return f;
}

bool BinaryForm::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Scalar& s) { return s.is_zero(); });
}

BinaryForm BinaryForm::scaled(const Scalar& s) const {
  BinaryForm out = *this;
  for (auto& c : out.coeffs_) c *= s;
  return out;
}

BinaryForm BinaryForm::partial_x1() const {
  const int d = degree();
  if (d == 0) return BinaryForm(field_, 0);
  BinaryForm out(field_, d - 1);
  for (int i = 1; i <= d; ++i) out.coeffs_[static_cast<std::size_t>(i - 1)] = coeff(i) * Scalar(field_, i);
  return out;
}

BinaryForm BinaryForm::partial_x2() const {
  const int d = degree();
  if (d == 0) return BinaryForm(field_, 0);
  BinaryForm out(field_, d - 1);
  for (int i = 0; i < d; ++i) out.coeffs_[static_cast<std::size_t>(i)] = coeff(i) * Scalar(field_, d - i);
  return out;
}

std::optional<BinaryForm> BinaryForm::divide_exact(const BinaryForm& divisor) const {
  if (!(divisor.field_ == field_)) throw FieldMismatchError("dividing forms over different fields");
  if (divisor.is_zero()) throw PreconditionError("division by the zero form");
  if (is_zero()) return BinaryForm(field_, std::max(0, degree() - divisor.degree()));
  const int d = degree();
  const int e = divisor.degree();
  if (e > d) return std::nullopt;

  int top = e;
  while (divisor.coeff(top).is_zero()) --top;
  const Scalar inv_lead = divisor.coeff(top).inverse();

  std::vector<Scalar> rem = coeffs_;
  BinaryForm quotient(field_, d - e);
  for (int k = d - e; k >= 0; --k) {
    const Scalar q = rem[static_cast<std::size_t>(k + top)] * inv_lead;
    if (q.is_zero()) continue;
    quotient.coeffs_[static_cast<std::size_t>(k)] = q;
    for (int j = 0; j <= e; ++j) {
      if (!divisor.coeff(j).is_zero()) rem[static_cast<std::size_t>(k + j)] -= q * divisor.coeff(j);
    }
  }
  if (!std::all_of(rem.begin(), rem.end(), [](const Scalar& s) { return s.is_zero(); })) return std::nullopt;
  return quotient;
}

std::string BinaryForm::to_string() const {
  std::ostringstream os;
  bool first = true;
  const int d = degree();
  for (int i = d; i >= 0; --i) {
    const Scalar& c = coeff(i);
    if (c.is_zero()) continue;
    const int j = d - i;
    std::string mono;
    auto append_var = [&mono](const char* name, int power) {
      if (power == 0) return;
      if (!mono.empty()) mono += "*";
      mono += name;
      if (power > 1) mono += "^" + std::to_string(power);
    };
    append_var("x1", i);
    append_var("x2", j);

    bool negative = field_.is_rational() && sgn(c.rational()) < 0;
    Scalar magnitude = negative ? -c : c;
    std::string term;
    if (mono.empty()) {
      term = magnitude.to_string();
    } else if (magnitude.is_one()) {
      term = mono;
    } else {
      term = magnitude.to_string() + "*" + mono;
    }
    if (first) {
      os << (negative ? "-" : "") << term;
    } else {
      os << (negative ? " - " : " + ") << term;
    }
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

BinaryForm& BinaryForm::operator+=(const BinaryForm& rhs) {
  if (!(rhs.field_ == field_)) throw FieldMismatchError("adding forms over different fields");
  if (rhs.degree() != degree()) {
    if (rhs.is_zero()) return *this;
    if (is_zero()) return *this = rhs;
    throw PreconditionError("adding binary forms of different degrees");
  }
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  return *this;
}

BinaryForm& BinaryForm::operator-=(const BinaryForm& rhs) { return *this += -rhs; }

BinaryForm operator*(const BinaryForm& a, const BinaryForm& b) {
  if (!(a.field_ == b.field_)) throw FieldMismatchError("multiplying forms over different fields");
  BinaryForm out(a.field_, a.degree() + b.degree());
  for (int i = 0; i <= a.degree(); ++i) {
    if (a.coeff(i).is_zero()) continue;
    for (int j = 0; j <= b.degree(); ++j) {
      if (b.coeff(j).is_zero()) continue;
      out.coeffs_[static_cast<std::size_t>(i + j)] += a.coeff(i) * b.coeff(j);
    }
  }
  return out;
}

bool operator==(const BinaryForm& a, const BinaryForm& b) {
  if (!(a.field_ == b.field_)) return false;
  if (a.is_zero() && b.is_zero()) return true;
  return a.coeffs_ == b.coeffs_;
}

BinaryForm pow(const BinaryForm& base, int exponent) {
  if (exponent < 0) throw PreconditionError("negative exponent");
  BinaryForm acc = BinaryForm::constant(Scalar::one(base.field()));
  for (int i = 0; i < exponent; ++i) acc = acc * base;
  return acc;
}

LinearForm2::LinearForm2(const Scalar& a, const Scalar& b) : a_(a), b_(b) {
  if (!(a.field() == b.field())) throw FieldMismatchError("linear form coefficients from different fields");
  if (a.is_zero() && b.is_zero()) throw PreconditionError("the zero linear form defines no hyperplane");
  std::vector<Scalar> v{a_, b_};
  normalize_projective(v);
  a_ = v[0];
  b_ = v[1];
}

BinaryForm LinearForm2::to_form() const { return BinaryForm(field(), std::vector<Scalar>{b_, a_}); }

bool LinearForm2::proportional_to(const LinearForm2& other) const {
  return (a_ * other.b_ - b_ * other.a_).is_zero();
}

std::string LinearForm2::to_string() const { return to_form().to_string(); }

Matrix divisibility_constraints(const LinearForm2& alpha, int k, int d) {
  if (k < 0 || d < 0) throw PreconditionError("divisibility constraints need k >= 0 and d >= 0");
  const Field field = alpha.field();
  Matrix m(field, static_cast<std::size_t>(k), static_cast<std::size_t>(d) + 1);
  if (k == 0) return m;

  // Dehomogenize along a variable in which alpha has a nonzero coefficient:
  // alpha becomes lead*t + tail and the column for x1^i x2^(d-i) is t^e(i).
  const bool along_x1 = !alpha.a().is_zero();
  const Scalar lead = along_x1 ? alpha.a() : alpha.b();
  const Scalar tail = along_x1 ? alpha.b() : Scalar::zero(field);

  // Monic divisor (t + tail/lead)^k; only its lower k coefficients matter.
  const Scalar shift = tail / lead;
  std::vector<Scalar> monic(static_cast<std::size_t>(k) + 1, Scalar::zero(field));
  monic[0] = Scalar::one(field);
  for (int step = 0; step < k; ++step) {
    for (int j = step + 1; j >= 1; --j) {
      monic[static_cast<std::size_t>(j)] = monic[static_cast<std::size_t>(j - 1)] +
                                           monic[static_cast<std::size_t>(j)] * shift;
    }
    monic[0] *= shift;
  }

  // remainders[e] = t^e mod monic, as k coefficients.
  std::vector<std::vector<Scalar>> remainders;
  std::vector<Scalar> r(static_cast<std::size_t>(k), Scalar::zero(field));
  r[0] = Scalar::one(field);
  for (int e = 0; e <= d; ++e) {
    remainders.push_back(r);
    Scalar overflow = r[static_cast<std::size_t>(k - 1)];
    for (int j = k - 1; j >= 1; --j) r[static_cast<std::size_t>(j)] = r[static_cast<std::size_t>(j - 1)];
    r[0] = Scalar::zero(field);
    if (!overflow.is_zero()) {
      for (int j = 0; j < k; ++j) r[static_cast<std::size_t>(j)] -= overflow * monic[static_cast<std::size_t>(j)];
    }
  }

  for (int i = 0; i <= d; ++i) {
    const int e = along_x1 ? i : d - i;
    const auto& rem = remainders[static_cast<std::size_t>(e)];
    for (int j = 0; j < k; ++j) m.at(static_cast<std::size_t>(j), static_cast<std::size_t>(i)) = rem[static_cast<std::size_t>(j)];
  }
  return m;
}

bool binary_form_divides(const LinearForm2& alpha, int k, const BinaryForm& p) {
  if (!(alpha.field() == p.field())) throw FieldMismatchError("divisibility test across fields");
  if (k <= 0 || p.is_zero()) return true;
  const BinaryForm divisor = alpha.to_form();
  BinaryForm current = p;
  for (int i = 0; i < k; ++i) {
    auto q = current.divide_exact(divisor);
    if (!q) return false;
    current = std::move(*q);
  }
  return true;
}

}  // namespace multiarr
