#include "multiarr/multiarr2.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace multiarr {

Arrangement2::Arrangement2(std::vector<LinearForm2> forms) : forms_(std::move(forms)) {
  if (forms_.empty()) throw PreconditionError("an arrangement needs at least one line");
  for (std::size_t i = 0; i < forms_.size(); ++i) {
    if (!(forms_[i].field() == forms_[0].field())) throw FieldMismatchError("arrangement mixes fields");
    for (std::size_t j = 0; j < i; ++j) {
      if (forms_[i].proportional_to(forms_[j])) {
        throw PreconditionError("lines " + std::to_string(j) + " and " + std::to_string(i) + " coincide (" +
                                forms_[i].to_string() + ")");
      }
    }
  }
}

void Multiplicity::validate() const {
  for (int v : values_) {
    if (v < 0) throw PreconditionError("multiplicities must be nonnegative");
  }
}

int Multiplicity::total() const { return std::accumulate(values_.begin(), values_.end(), 0); }

std::string Multiplicity::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < values_.size(); ++i) os << (i ? "," : "") << values_[i];
  os << ')';
  return os.str();
}

Derivation2::Derivation2(BinaryForm f, BinaryForm g) : f_(std::move(f)), g_(std::move(g)) {
  if (!(f_.field() == g_.field())) throw FieldMismatchError("derivation components over different fields");
  if (f_.degree() != g_.degree()) {
    if (f_.is_zero()) {
      f_ = BinaryForm(g_.field(), g_.degree());
    } else if (g_.is_zero()) {
      g_ = BinaryForm(f_.field(), f_.degree());
    } else {
      throw PreconditionError("derivation components must have equal degree");
    }
  }
}

Derivation2 Derivation2::constant(const Scalar& c1, const Scalar& c2) {
  return {BinaryForm::constant(c1), BinaryForm::constant(c2)};
}

Derivation2 Derivation2::euler(Field field) {
  const Scalar one = Scalar::one(field);
  return {BinaryForm::monomial(field, 1, 0, one), BinaryForm::monomial(field, 0, 1, one)};
}

BinaryForm Derivation2::apply(const BinaryForm& p) const {
  BinaryForm out = f_ * p.partial_x1();
  out += g_ * p.partial_x2();
  return out;
}

BinaryForm Derivation2::apply(const LinearForm2& alpha) const {
  BinaryForm out = f_.scaled(alpha.a());
  out += g_.scaled(alpha.b());
  return out;
}

Vector Derivation2::coordinates() const {
  Vector v = f_.coeffs();
  v.insert(v.end(), g_.coeffs().begin(), g_.coeffs().end());
  return v;
}

Derivation2 Derivation2::from_coordinates(Field field, int degree, const Vector& coords) {
  const auto n = static_cast<std::size_t>(degree) + 1;
  if (coords.size() != 2 * n) throw PreconditionError("coordinate vector has wrong length for degree");
  return {BinaryForm(field, Vector(coords.begin(), coords.begin() + static_cast<long>(n))),
          BinaryForm(field, Vector(coords.begin() + static_cast<long>(n), coords.end()))};
}

std::string Derivation2::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  if (!f_.is_zero()) out = "(" + f_.to_string() + ")*d1";
  if (!g_.is_zero()) out += (out.empty() ? "" : " + ") + std::string("(") + g_.to_string() + ")*d2";
  return out;
}

Matrix derivation_constraints(const Arrangement2& a, const Multiplicity& m, int d) {
  if (m.size() != a.size()) throw PreconditionError("multiplicity length does not match the arrangement");
  if (d < 0) throw PreconditionError("negative degree");
  const Field field = a.field();
  const auto n = static_cast<std::size_t>(d) + 1;
  Matrix out(field, 0, 2 * n);
  for (std::size_t h = 0; h < a.size(); ++h) {
    if (m[h] == 0) continue;
    const Matrix r = divisibility_constraints(a[h], m[h], d);
    Matrix block(field, r.rows(), 2 * n);
    for (std::size_t i = 0; i < r.rows(); ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (r.at(i, j).is_zero()) continue;
        block.at(i, j) = a[h].a() * r.at(i, j);
        block.at(i, n + j) = a[h].b() * r.at(i, j);
      }
    }
    out.append_rows(block);
  }
  return out;
}

int derivation_space_dim(const Arrangement2& a, const Multiplicity& m, int d) {
  const Matrix c = derivation_constraints(a, m, d);
  return static_cast<int>(c.cols() - rank(c));
}

std::vector<Derivation2> derivation_space_basis(const Arrangement2& a, const Multiplicity& m, int d) {
  std::vector<Derivation2> out;
  for (const auto& v : kernel_basis(derivation_constraints(a, m, d))) {
    out.push_back(Derivation2::from_coordinates(a.field(), d, v));
  }
  return out;
}

Exponents2 exponents(const Arrangement2& a, const Multiplicity& m) {
  if (m.size() != a.size()) throw PreconditionError("multiplicity length does not match the arrangement");
  const int total = m.total();
  if (total == 0) return {0, 0};
  for (int d = 0; d <= total / 2; ++d) {
    if (derivation_space_dim(a, m, d) > 0) return {d, total - d};
  }
  throw InternalError("no derivation found up to degree |m|/2 for m=" + m.to_string());
}

int delta(const Arrangement2& a, const Multiplicity& m) { return exponents(a, m).delta(); }

bool is_balanced(const Multiplicity& m) {
  const int mx = m.size() == 0 ? 0 : *std::max_element(m.begin(), m.end());
  return 2 * mx <= m.total();
}

std::optional<std::size_t> dominant_hyperplane(const Multiplicity& m) {
  const int total = m.total();
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (2 * m[i] > total) return i;
  }
  return std::nullopt;
}

bool in_derivation_module(const Arrangement2& a, const Multiplicity& m, const Derivation2& theta) {
  if (m.size() != a.size()) throw PreconditionError("multiplicity length does not match the arrangement");
  for (std::size_t h = 0; h < a.size(); ++h) {
    if (!binary_form_divides(a[h], m[h], theta.apply(a[h]))) return false;
  }
  return true;
}

Derivation2 lower_degree_basis(const Arrangement2& a, const Multiplicity& m) {
  if (m.total() == 0) throw PreconditionError("|m| = 0: D(A, 0) is all of Der(S), no canonical lower-degree element");
  const Exponents2 e = exponents(a, m);
  auto kernel = derivation_space_basis(a, m, e.d1);
  if (kernel.empty()) throw InternalError("empty kernel at the lower exponent");
  return kernel.front();
}

BinaryForm saito_det(const Derivation2& theta1, const Derivation2& theta2) {
  BinaryForm out = theta1.f() * theta2.g();
  out -= theta2.f() * theta1.g();
  return out;
}

BinaryForm defining_polynomial(const Arrangement2& a, const Multiplicity& m) {
  BinaryForm q = BinaryForm::constant(Scalar::one(a.field()));
  for (std::size_t h = 0; h < a.size(); ++h) q = q * pow(a[h].to_form(), m[h]);
  return q;
}

std::optional<Scalar> scalar_multiple_of(const BinaryForm& det, const BinaryForm& q) {
  if (q.is_zero() || det.is_zero() || det.degree() != q.degree()) return std::nullopt;
  int i = 0;
  while (q.coeff(i).is_zero()) ++i;
  const Scalar c = det.coeff(i) / q.coeff(i);
  if (c.is_zero() || !(q.scaled(c) == det)) return std::nullopt;
  return c;
}

Basis2 basis(const Arrangement2& a, const Multiplicity& m) {
  if (m.total() == 0) throw PreconditionError("|m| = 0: basis is not defined by the solver");
  const Exponents2 e = exponents(a, m);
  const BinaryForm q = defining_polynomial(a, m);
  auto low = derivation_space_basis(a, m, e.d1);
  if (low.empty()) throw InternalError("empty kernel at the lower exponent");
  const Derivation2& theta1 = low.front();
  for (const auto& candidate : derivation_space_basis(a, m, e.d2)) {
    const BinaryForm det = saito_det(theta1, candidate);
    if (det.is_zero()) continue;
    if (auto c = scalar_multiple_of(det, q)) return {theta1, candidate, e, *c};
    throw InternalError("Saito determinant is not a multiple of the defining polynomial for m=" + m.to_string());
  }
  throw InternalError("no complementary basis element in degree " + std::to_string(e.d2) + " for m=" + m.to_string());
}

NonbalancedResult nonbalanced_exponents(const Arrangement2& a, const Multiplicity& m) {
  if (m.size() != a.size()) throw PreconditionError("multiplicity length does not match the arrangement");
  const auto k = dominant_hyperplane(m);
  if (!k) throw PreconditionError("m=" + m.to_string() + " is balanced; use the degree-scan solver");
  const Field field = a.field();
  BinaryForm coeff = BinaryForm::constant(Scalar::one(field));
  for (std::size_t h = 0; h < a.size(); ++h) {
    if (h != *k) coeff = coeff * pow(a[h].to_form(), m[h]);
  }
  const LinearForm2& alpha = a[*k];
  Derivation2 lower = Derivation2::constant(-alpha.b(), alpha.a()).times(coeff);
  Vector coords = lower.coordinates();
  normalize_leading_one(coords);
  lower = Derivation2::from_coordinates(field, lower.degree(), coords);

  const int mk = m[*k];
  const int rest = m.total() - mk;
  return {{std::min(mk, rest), std::max(mk, rest)}, *k, lower};
}

}  // namespace multiarr
