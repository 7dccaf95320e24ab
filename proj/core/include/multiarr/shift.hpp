#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "multiarr/lattice.hpp"
#include "multiarr/multiarr2.hpp"

namespace multiarr {

/// Flat connection: nabla_theta(f d1 + g d2) = theta(f) d1 + theta(g) d2.
Derivation2 nabla(const Derivation2& theta, const Derivation2& phi);

/// Constant derivations dual to the first two lines of A, so that
/// partial[i](alpha_j) = delta_ij for j in {0, 1}.
std::array<Derivation2, 2> coordinate_derivations(const Arrangement2& a);

struct DescentReport {
  bool pass = true;
  std::array<Multiplicity, 2> reduced;       // max(m - m_i, 0)
  std::array<Derivation2, 2> images;         // nabla_{partial_i} theta
  std::array<bool, 2> member{true, true};
};

/// For the coordinate derivations partial_1, partial_2 of the first two lines,
/// checks nabla_{partial_i} theta in D(A, m - m_i) where m_i vanishes on the
/// other coordinate line and is 1 elsewhere.
DescentReport nabla_descent_check(const Arrangement2& a, const Multiplicity& m, const Derivation2& theta);

struct ShiftHypotheses {
  int h = 0;
  int delta = 0;
  bool balanced = false;
  bool delta_is_extremal = false;  // Delta(m0) = h - 2
  bool positive = false;           // m0 > 0 everywhere
  // 1: h = 3 and m0 - 1 balanced; 2: h >= 4; 0: neither.
  int variant = 0;
  std::vector<std::string> failures;

  bool preconditions_hold() const { return h > 2 && balanced && delta_is_extremal && positive; }
  bool hold() const { return preconditions_hold() && variant != 0; }
};

ShiftHypotheses check_shift_hypotheses(const Arrangement2& a, const Multiplicity& m0);

struct ShiftRow {
  Multiplicity shift;   // m : A -> {0, 1}
  Multiplicity target;  // m0 + m - 1
  bool images_in_module = false;
  bool degree_identity = false;  // |m0 + m - 1| = 2 deg theta0 + |m| - 2
  bool pass = false;
  std::optional<Scalar> saito_scalar;
  std::string detail;
};

struct ShiftCertificate {
  Multiplicity m0;
  Derivation2 theta0 = Derivation2::zero(Field::rationals(), 0);
  ShiftHypotheses hypotheses;
  bool exhaustive = true;
  std::vector<ShiftRow> rows;
  bool pass = false;
  // A failing row while every hypothesis holds.
  bool theorem_violation = false;
  std::string reproducer;
};

/// Checks that theta -> nabla_theta theta0 maps a basis of D(A, m) to a basis
/// of D(A, m0 + m - 1) for every 0/1 multiplicity m (exhaustive for h <= 12,
/// otherwise 256 deterministic samples). Throws PreconditionError when m0 is
/// unbalanced, not positive, h <= 2, or Delta(m0) != h - 2.
ShiftCertificate shift_isomorphism_check(const Arrangement2& a, const Multiplicity& m0, unsigned jobs = 0);
ShiftCertificate shift_isomorphism_check(const Arrangement2& a, const Multiplicity& m0, const Derivation2& theta0,
                                         unsigned jobs = 0);

struct EulerReport {
  bool is_euler = false;
  std::vector<std::string> diagnostics;
  std::optional<ShiftCertificate> certificate;  // present when is_euler
};

EulerReport is_am_euler(const Arrangement2& a, const Multiplicity& m, const Derivation2& theta);

struct NextPairReport {
  std::size_t pairs_checked = 0;
  std::vector<std::string> failures;
  bool pass() const { return failures.empty(); }
};

/// For every pair m1, m2 = m1 - e_i + e_j in the table with Delta = 1 at both
/// and Delta = 0 at their componentwise max and min, the lower-degree
/// elements must have a nonzero Saito determinant.
NextPairReport verify_next_independence(const DeltaTable& table);

}  // namespace multiarr
