#include "multiarr/linear_algebra.hpp"

#include <utility>

namespace multiarr {

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, Scalar::zero(field)) {}

Matrix Matrix::from_rows(Field field, std::size_t cols, const std::vector<Vector>& rows) {
  Matrix m(field, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw PreconditionError("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) {
      if (!(rows[r][c].field() == field)) throw FieldMismatchError("matrix entry outside " + field.name());
      m.at(r, c) = rows[r][c];
    }
  }
  return m;
}

void Matrix::append_rows(const Matrix& other) {
  if (other.cols_ != cols_) throw PreconditionError("column count mismatch when stacking matrices");
  if (!(other.field_ == field_)) throw FieldMismatchError("stacking matrices over different fields");
  data_.insert(data_.end(), other.data_.begin(), other.data_.end());
  rows_ += other.rows_;
}

Vector Matrix::apply(std::span<const Scalar> v) const {
  if (v.size() != cols_) throw PreconditionError("vector length does not match column count");
  Vector out(rows_, Scalar::zero(field_));
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (!at(r, c).is_zero()) out[r] += at(r, c) * v[c];
    }
  }
  return out;
}

namespace {

void check_uniform_field(const Matrix& m) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (const auto& s : m.row(r)) {
      if (!(s.field() == m.field())) {
        throw FieldMismatchError("matrix mixes " + m.field().name() + " and " + s.field().name());
      }
    }
  }
}

// Row echelon form; rows [0, pivots.size()) are the nonzero rows and
// pivots[i] is the pivot column of row i.
struct Echelon {
  std::vector<Vector> rows;
  std::vector<std::size_t> pivots;
};

// Fraction-free (Bareiss) elimination over Z after clearing row denominators.
Echelon echelon_rational(const Matrix& m) {
  const std::size_t nr = m.rows();
  const std::size_t nc = m.cols();
  std::vector<std::vector<mpz_class>> a(nr, std::vector<mpz_class>(nc));
  for (std::size_t r = 0; r < nr; ++r) {
    mpz_class lcm_den = 1;
    for (const auto& s : m.row(r)) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), s.rational().get_den_mpz_t());
    for (std::size_t c = 0; c < nc; ++c) {
      const auto& q = m.at(r, c).rational();
      a[r][c] = q.get_num() * (lcm_den / q.get_den());
    }
  }

  std::vector<std::size_t> pivots;
  mpz_class prev = 1;
  mpz_class t;
  mpz_class rem;
  std::size_t row = 0;
  for (std::size_t c = 0; c < nc && row < nr; ++c) {
    std::size_t p = row;
    while (p < nr && a[p][c] == 0) ++p;
    if (p == nr) continue;
    std::swap(a[p], a[row]);
    for (std::size_t i = row + 1; i < nr; ++i) {
      for (std::size_t j = c + 1; j < nc; ++j) {
        t = a[row][c] * a[i][j] - a[i][c] * a[row][j];
        mpz_tdiv_qr(a[i][j].get_mpz_t(), rem.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        if (rem != 0) throw InternalError("Bareiss step produced an inexact quotient");
      }
      a[i][c] = 0;
    }
    prev = a[row][c];
    pivots.push_back(c);
    ++row;
  }

  Echelon e;
  e.pivots = std::move(pivots);
  const Field q = Field::rationals();
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    Vector v;
    v.reserve(nc);
    for (std::size_t c = 0; c < nc; ++c) v.emplace_back(q, mpq_class(a[r][c]));
    e.rows.push_back(std::move(v));
  }
  return e;
}

Echelon echelon_prime(const Matrix& m) {
  const std::size_t nr = m.rows();
  const std::size_t nc = m.cols();
  std::vector<Vector> a(nr);
  for (std::size_t r = 0; r < nr; ++r) a[r].assign(m.row(r).begin(), m.row(r).end());

  Echelon e;
  std::size_t row = 0;
  for (std::size_t c = 0; c < nc && row < nr; ++c) {
    std::size_t p = row;
    while (p < nr && a[p][c].is_zero()) ++p;
    if (p == nr) continue;
    std::swap(a[p], a[row]);
    const Scalar inv = a[row][c].inverse();
    for (std::size_t j = c; j < nc; ++j) a[row][j] *= inv;
    for (std::size_t i = row + 1; i < nr; ++i) {
      if (a[i][c].is_zero()) continue;
      const Scalar f = a[i][c];
      for (std::size_t j = c; j < nc; ++j) a[i][j] -= f * a[row][j];
    }
    e.pivots.push_back(c);
    ++row;
  }
  a.resize(row);
  e.rows = std::move(a);
  return e;
}

Echelon echelon(const Matrix& m) {
  check_uniform_field(m);
  return m.field().is_rational() ? echelon_rational(m) : echelon_prime(m);
}

}  // namespace

std::vector<Vector> kernel_basis(const Matrix& m) {
  const Echelon e = echelon(m);
  const std::size_t nc = m.cols();
  const Field field = m.field();

  std::vector<bool> is_pivot(nc, false);
  for (auto p : e.pivots) is_pivot[p] = true;

  std::vector<Vector> basis;
  for (std::size_t free_col = 0; free_col < nc; ++free_col) {
    if (is_pivot[free_col]) continue;
    Vector x(nc, Scalar::zero(field));
    x[free_col] = Scalar::one(field);
    for (std::size_t i = e.pivots.size(); i-- > 0;) {
      const std::size_t pc = e.pivots[i];
      Scalar acc = Scalar::zero(field);
      for (std::size_t c = pc + 1; c < nc; ++c) {
        if (!e.rows[i][c].is_zero() && !x[c].is_zero()) acc += e.rows[i][c] * x[c];
      }
      x[pc] = -acc / e.rows[i][pc];
    }
    normalize_leading_one(x);
    basis.push_back(std::move(x));
  }
  return basis;
}

std::size_t rank(const Matrix& m) { return echelon(m).pivots.size(); }

}  // namespace multiarr
