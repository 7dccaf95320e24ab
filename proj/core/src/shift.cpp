#include "multiarr/shift.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "multiarr/parallel.hpp"

namespace multiarr {

Derivation2 nabla(const Derivation2& theta, const Derivation2& phi) {
  return {theta.apply(phi.f()), theta.apply(phi.g())};
}

std::array<Derivation2, 2> coordinate_derivations(const Arrangement2& a) {
  if (a.size() < 2) throw PreconditionError("coordinate derivations need at least two lines");
  const Scalar& a0 = a[0].a();
  const Scalar& b0 = a[0].b();
  const Scalar& a1 = a[1].a();
  const Scalar& b1 = a[1].b();
  const Scalar inv = (a0 * b1 - b0 * a1).inverse();
  return {Derivation2::constant(b1 * inv, -a1 * inv), Derivation2::constant(-b0 * inv, a0 * inv)};
}

DescentReport nabla_descent_check(const Arrangement2& a, const Multiplicity& m, const Derivation2& theta) {
  if (a.size() < 2) throw PreconditionError("descent check needs at least two lines");
  if (m.size() != a.size()) throw PreconditionError("multiplicity length does not match the arrangement");
  const auto partials = coordinate_derivations(a);
  DescentReport r{true,
                  {m, m},
                  {nabla(partials[0], theta), nabla(partials[1], theta)},
                  {true, true}};
  for (std::size_t i = 0; i < 2; ++i) {
    const std::size_t other = 1 - i;
    for (std::size_t h = 0; h < a.size(); ++h) {
      if (h != other) r.reduced[i][h] = std::max(0, m[h] - 1);
    }
    r.member[i] = in_derivation_module(a, r.reduced[i], r.images[i]);
    r.pass = r.pass && r.member[i];
  }
  return r;
}

ShiftHypotheses check_shift_hypotheses(const Arrangement2& a, const Multiplicity& m0) {
  ShiftHypotheses hy;
  hy.h = static_cast<int>(a.size());
  hy.balanced = is_balanced(m0);
  hy.positive = std::all_of(m0.begin(), m0.end(), [](int v) { return v > 0; });
  hy.delta = delta(a, m0);
  hy.delta_is_extremal = hy.delta == hy.h - 2;
  if (hy.h <= 2) hy.failures.push_back("needs more than two lines");
  if (!hy.balanced) hy.failures.push_back("m0 is not balanced");
  if (!hy.positive) hy.failures.push_back("m0 vanishes somewhere");
  if (!hy.delta_is_extremal) {
    hy.failures.push_back("Delta(m0)=" + std::to_string(hy.delta) + " differs from h-2=" + std::to_string(hy.h - 2));
  }
  if (hy.h >= 4) {
    hy.variant = 2;
  } else if (hy.h == 3 && hy.positive) {
    std::vector<int> shifted(m0.values());
    for (int& v : shifted) v -= 1;
    if (is_balanced(Multiplicity(shifted))) {
      hy.variant = 1;
    } else {
      hy.failures.push_back("h=3 and m0-1 is not balanced");
    }
  }
  return hy;
}

namespace {

std::vector<Multiplicity> shift_patterns(std::size_t h, bool& exhaustive) {
  std::vector<Multiplicity> out;
  if (h <= 12) {
    exhaustive = true;
    for (std::size_t mask = 0; mask < (std::size_t{1} << h); ++mask) {
      std::vector<int> v(h);
      for (std::size_t i = 0; i < h; ++i) v[i] = static_cast<int>((mask >> (h - 1 - i)) & 1U);
      out.emplace_back(std::move(v));
    }
    return out;
  }
  exhaustive = false;
  std::mt19937_64 rng(0x51f7ULL);
  std::set<Multiplicity> picked;
  while (picked.size() < 256) {
    std::vector<int> v(h);
    for (auto& x : v) x = static_cast<int>(rng() & 1U);
    picked.insert(Multiplicity(std::move(v)));
  }
  out.assign(picked.begin(), picked.end());
  return out;
}

ShiftRow check_shift(const Arrangement2& a, const Multiplicity& m0, const Derivation2& theta0, const Multiplicity& m) {
  ShiftRow row;
  row.shift = m;
  std::vector<int> t(m0.size());
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = m0[i] + m[i] - 1;
  row.target = Multiplicity(t);

  Derivation2 th1 = Derivation2::zero(a.field(), 0);
  Derivation2 th2 = Derivation2::zero(a.field(), 0);
  if (m.total() == 0) {
    th1 = Derivation2::constant(Scalar::one(a.field()), Scalar::zero(a.field()));
    th2 = Derivation2::constant(Scalar::zero(a.field()), Scalar::one(a.field()));
  } else {
    auto b = basis(a, m);
    th1 = b.theta1;
    th2 = b.theta2;
  }
  const Derivation2 img1 = nabla(th1, theta0);
  const Derivation2 img2 = nabla(th2, theta0);

  row.degree_identity = row.target.total() == 2 * theta0.degree() + m.total() - 2;
  row.images_in_module = in_derivation_module(a, row.target, img1) && in_derivation_module(a, row.target, img2);
  const bool degrees_ok = !img1.is_zero() && !img2.is_zero() && img1.degree() + img2.degree() == row.target.total();
  row.saito_scalar = scalar_multiple_of(saito_det(img1, img2), defining_polynomial(a, row.target));
  row.pass = row.images_in_module && row.degree_identity && degrees_ok && row.saito_scalar.has_value();
  if (!row.pass) {
    std::ostringstream os;
    os << "images " << img1.to_string() << " | " << img2.to_string();
    if (!row.images_in_module) os << "; not in D(A," << row.target.to_string() << ")";
    if (!degrees_ok) os << "; degree sum mismatch";
    if (!row.saito_scalar) os << "; Saito determinant is not a nonzero multiple of the defining polynomial";
    row.detail = os.str();
  }
  return row;
}

}  // namespace

ShiftCertificate shift_isomorphism_check(const Arrangement2& a, const Multiplicity& m0, unsigned jobs) {
  const auto hy = check_shift_hypotheses(a, m0);
  if (!hy.preconditions_hold()) {
    throw PreconditionError("shift isomorphism preconditions fail for m0=" + m0.to_string() + ": " + hy.failures.front());
  }
  return shift_isomorphism_check(a, m0, lower_degree_basis(a, m0), jobs);
}

ShiftCertificate shift_isomorphism_check(const Arrangement2& a, const Multiplicity& m0, const Derivation2& theta0,
                                         unsigned jobs) {
  ShiftCertificate cert;
  cert.m0 = m0;
  cert.theta0 = theta0;
  cert.hypotheses = check_shift_hypotheses(a, m0);
  if (!cert.hypotheses.preconditions_hold()) {
    throw PreconditionError("shift isomorphism preconditions fail for m0=" + m0.to_string() + ": " +
                            cert.hypotheses.failures.front());
  }
  const auto patterns = shift_patterns(a.size(), cert.exhaustive);
  cert.rows.resize(patterns.size());
  parallel_for(patterns.size(), jobs, [&](std::size_t i) { cert.rows[i] = check_shift(a, m0, theta0, patterns[i]); });

  cert.pass = std::all_of(cert.rows.begin(), cert.rows.end(), [](const ShiftRow& r) { return r.pass; });
  if (!cert.pass && cert.hypotheses.hold()) {
    cert.theorem_violation = true;
    std::ostringstream os;
    os << "field=" << a.field().name() << " lines=[";
    for (std::size_t i = 0; i < a.size(); ++i) os << (i ? ", " : "") << a[i].to_string();
    os << "] m0=" << m0.to_string() << " theta0=" << theta0.to_string();
    for (const auto& r : cert.rows) {
      if (!r.pass) os << "\n  shift " << r.shift.to_string() << ": " << r.detail;
    }
    cert.reproducer = os.str();
  }
  return cert;
}

EulerReport is_am_euler(const Arrangement2& a, const Multiplicity& m, const Derivation2& theta) {
  EulerReport r;
  if (m.size() != a.size()) throw PreconditionError("multiplicity length does not match the arrangement");
  if (theta.is_zero()) r.diagnostics.push_back("theta is zero");
  if (!(theta.field() == a.field())) r.diagnostics.push_back("theta lives over a different field");
  if (!r.diagnostics.empty()) return r;

  const auto e = exponents(a, m);
  if (theta.degree() != e.d1) {
    r.diagnostics.push_back("deg theta=" + std::to_string(theta.degree()) + " but d1=" + std::to_string(e.d1));
  }
  if (!in_derivation_module(a, m, theta)) r.diagnostics.push_back("theta is not in D(A,m)");

  const auto hy = check_shift_hypotheses(a, m);
  for (const auto& f : hy.failures) r.diagnostics.push_back(f);
  if (!r.diagnostics.empty()) return r;

  r.is_euler = true;
  r.certificate = shift_isomorphism_check(a, m, theta);
  if (!r.certificate->pass) {
    r.diagnostics.push_back("THEOREM VIOLATION: shift certificate failed\n" + r.certificate->reproducer);
  }
  return r;
}

NextPairReport verify_next_independence(const DeltaTable& table) {
  NextPairReport r;
  const auto& a = table.arrangement();
  for (std::size_t p = 0; p < table.points().size(); ++p) {
    const auto& m1 = table.points()[p];
    if (table.exponents_at(p).delta() != 1) continue;
    for (std::size_t i = 0; i < m1.size(); ++i) {
      if (m1[i] == 0) continue;
      for (std::size_t j = 0; j < m1.size(); ++j) {
        if (j == i) continue;
        Multiplicity m2 = m1;
        m2[i] -= 1;
        m2[j] += 1;
        if (!(m1 < m2)) continue;  // each unordered pair once
        auto d2 = table.delta_of(m2);
        if (!d2 || *d2 != 1) continue;
        Multiplicity hi = m1;
        hi[j] += 1;
        Multiplicity lo = m1;
        lo[i] -= 1;
        if (table.delta_anywhere(hi) != 0 || table.delta_anywhere(lo) != 0) continue;
        ++r.pairs_checked;
        const auto det = saito_det(lower_degree_basis(a, m1), lower_degree_basis(a, m2));
        if (det.is_zero() && r.failures.size() < 20) {
          r.failures.push_back(m1.to_string() + " / " + m2.to_string() + ": lower-degree elements are dependent");
        }
      }
    }
  }
  return r;
}

}  // namespace multiarr
