#include "multiarr/arr3.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <sstream>

#include "multiarr/linear_algebra.hpp"

namespace multiarr {

namespace {

bool is_negative(const Scalar& s) { return s.field().is_rational() && sgn(s.rational()) < 0; }

// Appends c*var to a signed sum, e.g. "x - 2*z".
void append_term(std::string& out, const Scalar& c, const std::string& var) {
  if (c.is_zero()) return;
  const bool neg = is_negative(c);
  const Scalar mag = neg ? -c : c;
  if (out.empty()) {
    if (neg) out += "-";
  } else {
    out += neg ? " - " : " + ";
  }
  if (var.empty()) {
    out += mag.to_string();
  } else if (mag.is_one()) {
    out += var;
  } else {
    out += mag.to_string() + "*" + var;
  }
}

using Key = std::vector<std::string>;

Key key_of(std::span<const Scalar> v) {
  Key k;
  for (const auto& s : v) k.push_back(s.to_string());
  return k;
}

std::array<Scalar, 3> cross(const std::array<Scalar, 3>& u, const std::array<Scalar, 3>& v) {
  return {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
}

bool is_zero3(const std::array<Scalar, 3>& v) {
  return v[0].is_zero() && v[1].is_zero() && v[2].is_zero();
}

// Two independent vectors spanning the plane n . v = 0. Over Q the smallest
// integer vectors by L1 norm, then descending lexicographic order, restricted
// to vectors whose first nonzero entry is positive.
std::array<Vector, 2> plane_frame(const LinearForm3& n) {
  const Field field = n.field();
  if (!field.is_rational()) {
    Matrix m(field, 1, 3);
    for (std::size_t i = 0; i < 3; ++i) m.at(0, i) = n[i];
    auto k = kernel_basis(m);
    if (k.size() != 2) throw InternalError("plane frame: kernel has dimension " + std::to_string(k.size()));
    return {k[0], k[1]};
  }
  std::optional<Vector> first;
  for (long norm = 1;; ++norm) {
    std::vector<std::array<long, 3>> level;
    for (long x = -norm; x <= norm; ++x) {
      for (long y = -(norm - std::labs(x)); y <= norm - std::labs(x); ++y) {
        const long r = norm - std::labs(x) - std::labs(y);
        for (long z : {r, -r}) {
          const std::array<long, 3> v{x, y, z};
          const auto lead = std::find_if(v.begin(), v.end(), [](long c) { return c != 0; });
          if (*lead > 0) level.push_back(v);
          if (r == 0) break;
        }
      }
    }
    std::sort(level.begin(), level.end(), std::greater<>());
    for (const auto& v : level) {
      Vector cand{Scalar(field, v[0]), Scalar(field, v[1]), Scalar(field, v[2])};
      if (!n.evaluate(cand).is_zero()) continue;
      if (!first) {
        first = cand;
        continue;
      }
      const std::array<Scalar, 3> f{(*first)[0], (*first)[1], (*first)[2]};
      const std::array<Scalar, 3> c{cand[0], cand[1], cand[2]};
      if (!is_zero3(cross(f, c))) return {*first, cand};
    }
  }
}

// A point p with n(p) = 1: e_j / n_j for the last nonzero coordinate j.
Vector unit_point(const LinearForm3& n) {
  const Field field = n.field();
  Vector p(3, Scalar::zero(field));
  for (std::size_t j = 3; j-- > 0;) {
    if (!n[j].is_zero()) {
      p[j] = n[j].inverse();
      return p;
    }
  }
  throw InternalError("zero linear form");
}

}  // namespace

LinearForm3::LinearForm3(const Scalar& a, const Scalar& b, const Scalar& c) : c_{a, b, c} {
  if (!(a.field() == b.field()) || !(a.field() == c.field())) throw FieldMismatchError("linear form over mixed fields");
  if (is_zero3(c_)) throw PreconditionError("linear form must be nonzero");
  normalize_projective(c_);
}

std::string LinearForm3::to_string() const {
  std::string out;
  append_term(out, c_[0], "x");
  append_term(out, c_[1], "y");
  append_term(out, c_[2], "z");
  return out;
}

Arrangement3::Arrangement3(std::vector<LinearForm3> forms) : forms_(std::move(forms)) {
  if (forms_.empty()) throw PreconditionError("an arrangement needs at least one plane");
  for (std::size_t i = 0; i < forms_.size(); ++i) {
    if (!(forms_[i].field() == forms_[0].field())) throw FieldMismatchError("planes over different fields");
    for (std::size_t j = 0; j < i; ++j) {
      if (forms_[i] == forms_[j]) throw PreconditionError("repeated plane " + forms_[i].to_string());
    }
  }
}

AffineLine::AffineLine(const Scalar& a, const Scalar& b, const Scalar& c) : a_(a), b_(b), c_(c) {
  if (!(a.field() == b.field()) || !(a.field() == c.field())) throw FieldMismatchError("affine line over mixed fields");
  if (a.is_zero() && b.is_zero()) throw PreconditionError("affine line needs (a, b) != 0");
  std::array<Scalar, 3> v{a_, b_, c_};
  normalize_projective(v);
  a_ = v[0];
  b_ = v[1];
  c_ = v[2];
}

std::string AffineLine::to_string() const {
  std::string out;
  append_term(out, a_, "x");
  append_term(out, b_, "y");
  return out + " = " + c_.to_string();
}

AffineArrangement2::AffineArrangement2(Field field, std::vector<AffineLine> lines)
    : field_(field), lines_(std::move(lines)) {
  for (std::size_t i = 0; i < lines_.size(); ++i) {
    if (!(lines_[i].field() == field_)) throw FieldMismatchError("line over a different field");
    for (std::size_t j = 0; j < i; ++j) {
      if (lines_[i] == lines_[j]) throw PreconditionError("repeated line " + lines_[i].to_string());
    }
  }
}

CharPoly::CharPoly(std::vector<std::int64_t> coeffs) : coeffs_(std::move(coeffs)) {
  while (coeffs_.size() > 1 && coeffs_.back() == 0) coeffs_.pop_back();
  if (coeffs_.empty()) coeffs_.push_back(0);
}

std::int64_t CharPoly::evaluate(std::int64_t t) const {
  std::int64_t acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

CharPoly CharPoly::times_t_minus(std::int64_t r) const {
  std::vector<std::int64_t> out(coeffs_.size() + 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    out[i + 1] += coeffs_[i];
    out[i] -= r * coeffs_[i];
  }
  return CharPoly(std::move(out));
}

std::optional<CharPoly> CharPoly::divide_t_minus(std::int64_t r) const {
  if (degree() < 1) return std::nullopt;
  // Synthetic division from the top.
  std::vector<std::int64_t> q(coeffs_.size() - 1, 0);
  std::int64_t carry = 0;
  for (std::size_t i = coeffs_.size(); i-- > 1;) {
    carry = coeffs_[i] + carry * r;
    q[i - 1] = carry;
  }
  if (coeffs_[0] + carry * r != 0) return std::nullopt;
  return CharPoly(std::move(q));
}

std::string CharPoly::to_string() const {
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const std::int64_t c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0 && !(i == 0 && out.empty())) continue;
    const std::int64_t mag = c < 0 ? -c : c;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    const std::string mono = i == 0 ? "" : (i == 1 ? "t" : "t^" + std::to_string(i));
    if (mono.empty()) {
      out += std::to_string(mag);
    } else if (mag == 1) {
      out += mono;
    } else {
      out += std::to_string(mag) + "*" + mono;
    }
  }
  return out;
}

std::optional<std::pair<std::int64_t, std::int64_t>> integer_roots(std::int64_t sum, std::int64_t product) {
  const std::int64_t disc = sum * sum - 4 * product;
  if (disc < 0) return std::nullopt;
  auto root = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(disc)));
  while (root * root > disc) --root;
  while ((root + 1) * (root + 1) <= disc) ++root;
  if (root * root != disc || (sum + root) % 2 != 0) return std::nullopt;
  return std::make_pair((sum - root) / 2, (sum + root) / 2);
}

std::vector<Flat> intersection_lattice(const Arrangement3& a) {
  std::vector<Flat> flats;
  flats.push_back({0, {}, 1});
  for (std::size_t i = 0; i < a.size(); ++i) flats.push_back({1, {i}, -1});

  std::map<Key, std::size_t> seen;
  std::vector<Flat> lines;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      auto dir = cross(a[i].coeffs(), a[j].coeffs());
      normalize_projective(dir);
      auto [it, inserted] = seen.emplace(key_of(dir), lines.size());
      if (!inserted) continue;
      const Vector v(dir.begin(), dir.end());
      Flat f{2, {}, 0};
      for (std::size_t k = 0; k < a.size(); ++k) {
        if (a[k].evaluate(v).is_zero()) f.hyperplanes.push_back(k);
      }
      f.mobius = static_cast<std::int64_t>(f.hyperplanes.size()) - 1;
      lines.push_back(std::move(f));
    }
  }
  std::int64_t line_sum = 0;
  for (const auto& f : lines) line_sum += f.mobius;
  flats.insert(flats.end(), lines.begin(), lines.end());

  Matrix normals(a.field(), a.size(), 3);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t c = 0; c < 3; ++c) normals.at(i, c) = a[i][c];
  }
  if (rank(normals) == 3) {
    Flat origin{3, {}, 0};
    for (std::size_t i = 0; i < a.size(); ++i) origin.hyperplanes.push_back(i);
    origin.mobius = -(1 - static_cast<std::int64_t>(a.size()) + line_sum);
    flats.push_back(std::move(origin));
  }
  return flats;
}

std::vector<Flat> intersection_lattice(const AffineArrangement2& a) {
  std::vector<Flat> flats;
  flats.push_back({0, {}, 1});
  for (std::size_t i = 0; i < a.size(); ++i) flats.push_back({1, {i}, -1});
  std::map<Key, std::size_t> seen;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      const auto& l1 = a[i];
      const auto& l2 = a[j];
      if (l1.parallel_to(l2)) continue;
      const Scalar inv = (l1.a() * l2.b() - l1.b() * l2.a()).inverse();
      const Vector p{(l1.c() * l2.b() - l1.b() * l2.c()) * inv, (l1.a() * l2.c() - l1.c() * l2.a()) * inv};
      auto [it, inserted] = seen.emplace(key_of(p), flats.size());
      if (!inserted) continue;
      Flat f{2, {}, 0};
      for (std::size_t k = 0; k < a.size(); ++k) {
        if ((a[k].a() * p[0] + a[k].b() * p[1] - a[k].c()).is_zero()) f.hyperplanes.push_back(k);
      }
      f.mobius = static_cast<std::int64_t>(f.hyperplanes.size()) - 1;
      flats.push_back(std::move(f));
    }
  }
  return flats;
}

namespace {

CharPoly poly_from_flats(const std::vector<Flat>& flats, int dim) {
  std::vector<std::int64_t> c(static_cast<std::size_t>(dim) + 1, 0);
  for (const auto& f : flats) c[static_cast<std::size_t>(dim - f.codim)] += f.mobius;
  return CharPoly(std::move(c));
}

}  // namespace

CharPoly char_poly(const Arrangement3& a) { return poly_from_flats(intersection_lattice(a), 3); }

CharPoly char_poly(const AffineArrangement2& a) { return poly_from_flats(intersection_lattice(a), 2); }

Coning cone(const AffineArrangement2& a) {
  const Field field = a.field();
  std::vector<LinearForm3> forms;
  for (const auto& l : a.lines()) forms.emplace_back(l.a(), l.b(), -l.c());
  forms.emplace_back(field, 0, 0, 1);
  const std::size_t inf = forms.size() - 1;
  return {Arrangement3(std::move(forms)), inf};
}

AffineArrangement2 decone(const Arrangement3& a, std::size_t h0) {
  if (h0 >= a.size()) throw PreconditionError("H0 index " + std::to_string(h0) + " out of range");
  const auto frame = plane_frame(a[h0]);
  const Vector p = unit_point(a[h0]);
  std::vector<AffineLine> lines;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i == h0) continue;
    lines.emplace_back(a[i].evaluate(frame[0]), a[i].evaluate(frame[1]), -a[i].evaluate(p));
  }
  return AffineArrangement2(a.field(), std::move(lines));
}

ZieglerRestriction ziegler_restriction(const Arrangement3& a, std::size_t h0) {
  if (h0 >= a.size()) throw PreconditionError("H0 index " + std::to_string(h0) + " out of range");
  if (a.size() < 2) throw PreconditionError("restriction onto the only plane is empty");
  const auto frame = plane_frame(a[h0]);
  std::vector<LinearForm2> forms;
  std::vector<int> mult;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i == h0) continue;
    const LinearForm2 r(a[i].evaluate(frame[0]), a[i].evaluate(frame[1]));
    auto it = std::find_if(forms.begin(), forms.end(), [&](const LinearForm2& f) { return f.proportional_to(r); });
    if (it == forms.end()) {
      forms.push_back(r);
      mult.push_back(1);
    } else {
      ++mult[static_cast<std::size_t>(it - forms.begin())];
    }
  }
  return {Arrangement2(std::move(forms)), Multiplicity(std::move(mult)), frame};
}

CokerData yoshinaga_data(const Arrangement3& a, std::size_t h0) {
  const CharPoly chi = char_poly(a);
  const auto reduced = chi.divide_t_minus(1);
  if (!reduced) throw InternalError("chi(A, t) is not divisible by t - 1: " + chi.to_string());
  CokerData out;
  out.c1 = -reduced->coeff(1);
  out.c2 = reduced->coeff(0);
  if (a.size() >= 2) {
    const auto z = ziegler_restriction(a, h0);
    out.exps = exponents(z.arrangement, z.multiplicity);
  }
  out.coker_dim = out.c2 - static_cast<std::int64_t>(out.exps.d1) * out.exps.d2;
  if (out.coker_dim < 0) {
    throw InternalError("negative cokernel dimension " + std::to_string(out.coker_dim) + " for chi=" + chi.to_string());
  }
  return out;
}

std::int64_t yoshinaga_coker_dim(const Arrangement3& a, std::size_t h0) { return yoshinaga_data(a, h0).coker_dim; }

std::optional<CombinatorialExponents> combinatorial_exponents(Field field, const Multiplicity& m) {
  const int total = m.total();
  if (const auto k = dominant_hyperplane(m)) {
    return CombinatorialExponents{{total - m[*k], m[*k]}, "nb"};
  }
  if (!field.is_rational()) return std::nullopt;
  const auto h = m.size();
  if (h == 3 || (h == 4 && total % 2 == 1)) {
    const int delta = total % 2;
    return CombinatorialExponents{{(total - delta) / 2, (total + delta) / 2}, "limit-parity"};
  }
  return std::nullopt;
}

namespace {

// d and the gap case when chi0 = t^2 - k t + c2 equals (t-d)(t-d-h+2) or
// (t-d)(t-d-h+3); nullopt otherwise.
std::optional<std::pair<int, std::int64_t>> fc_shape(std::int64_t k, std::int64_t c2, std::int64_t h) {
  for (int gap : {2, 3}) {
    const std::int64_t twice_d = k - h + gap;
    if (twice_d < 0 || twice_d % 2 != 0) continue;
    const std::int64_t d = twice_d / 2;
    if (c2 == d * (d + h - gap)) return std::make_pair(gap, d);
  }
  return std::nullopt;
}

}  // namespace

FreenessVerdict is_free(const Arrangement3& a, std::optional<std::size_t> h0) {
  FreenessVerdict v;
  v.h0 = h0.value_or(0);
  if (v.h0 >= a.size()) throw PreconditionError("H0 index " + std::to_string(v.h0) + " out of range");
  v.chi = char_poly(a);
  const auto data = yoshinaga_data(a, v.h0);
  v.restriction_exps = data.exps;
  v.coker_dim = data.coker_dim;
  v.free = data.coker_dim == 0;
  if (v.free) {
    v.exponents = {1, data.exps.d1, data.exps.d2};
    std::sort(v.exponents.begin(), v.exponents.end());
  }
  if (a.size() < 2) return v;
  v.ziegler = ziegler_restriction(a, v.h0);

  const auto& m = v.ziegler->multiplicity;
  const auto comb = combinatorial_exponents(a.field(), m);
  if (comb && comb->reason == "nb") {
    v.combinatorial = true;
    v.combinatorial_reason = "nb";
  } else if (a.field().is_rational() && m.size() > 2 && is_balanced(m) &&
             fc_shape(data.c1, data.c2, static_cast<std::int64_t>(m.size()))) {
    v.combinatorial = true;
    v.combinatorial_reason = "fc";
    if (!v.free) throw InternalError("THEOREM VIOLATION: free-by-characteristic-polynomial arrangement is not free");
  } else if (comb) {
    v.combinatorial = true;
    v.combinatorial_reason = comb->reason;
  }
  if (comb && !(comb->exps.d1 == data.exps.d1 && comb->exps.d2 == data.exps.d2)) {
    throw InternalError("THEOREM VIOLATION: combinatorial exponents (" + std::to_string(comb->exps.d1) + "," +
                        std::to_string(comb->exps.d2) + ") differ from computed (" + std::to_string(data.exps.d1) +
                        "," + std::to_string(data.exps.d2) + ") for m=" + m.to_string());
  }
  return v;
}

namespace {

struct AffineContext {
  std::int64_t k = 0;
  std::int64_t c2 = 0;
  std::int64_t h = 0;
  bool balanced = false;
  std::string reason;  // nonempty when the balanced hypotheses fail
};

AffineContext affine_context(const AffineArrangement2& a) {
  AffineContext ctx;
  const CharPoly chi = char_poly(a);
  ctx.k = -chi.coeff(1);
  ctx.c2 = chi.coeff(0);
  const auto coned = cone(a);
  if (coned.arrangement.size() < 2) {
    ctx.reason = "empty arrangement";
    return ctx;
  }
  const auto z = ziegler_restriction(coned.arrangement, coned.infinite_index);
  ctx.h = static_cast<std::int64_t>(z.arrangement.size());
  ctx.balanced = is_balanced(z.multiplicity);
  if (!a.field().is_rational()) {
    ctx.reason = "characteristic " + std::to_string(a.field().characteristic()) + " is not zero";
  } else if (ctx.h <= 2) {
    ctx.reason = "only " + std::to_string(ctx.h) + " directions (h <= 2)";
  } else if (!ctx.balanced) {
    ctx.reason = "restriction multiplicity " + z.multiplicity.to_string() + " is unbalanced";
  }
  return ctx;
}

// Case 1 when k - (h - 2) is even (k = 2d + h - 2), case 2 otherwise (k = 2d + h - 3).
std::pair<int, std::int64_t> parity_case(std::int64_t k, std::int64_t h) {
  if ((k - h) % 2 == 0) return {1, (k - h + 2) / 2};
  return {2, (k - h + 3) / 2};
}

}  // namespace

FcVerdict thm_fc_check(const AffineArrangement2& a) {
  FcVerdict v;
  const auto ctx = affine_context(a);
  if (!ctx.reason.empty()) {
    v.reason = ctx.reason;
    return v;
  }
  const auto shape = fc_shape(ctx.k, ctx.c2, ctx.h);
  if (!shape) {
    v.reason = "chi = " + char_poly(a).to_string() + " is not (t-d)(t-d-h+2) or (t-d)(t-d-h+3) with h=" +
               std::to_string(ctx.h);
    return v;
  }
  v.applies = true;
  v.gap_case = shape->first;
  v.d = shape->second;
  const auto coned = cone(a);
  v.coker_dim = yoshinaga_coker_dim(coned.arrangement, coned.infinite_index);
  v.free = v.coker_dim == 0;
  v.violation = !v.free;
  return v;
}

RestReport thm_rest_check(const AffineArrangement2& a) {
  RestReport r;
  const auto ctx = affine_context(a);
  if (!ctx.reason.empty()) {
    r.reason = ctx.reason;
    return r;
  }
  const auto roots = integer_roots(ctx.k, ctx.c2);
  if (!roots) {
    r.reason = "chi = " + char_poly(a).to_string() + " does not split over Z";
    return r;
  }
  r.applicable = true;
  std::tie(r.bound_case, r.d) = parity_case(ctx.k, ctx.h);
  r.root_a = roots->first;
  r.root_b = roots->second;
  const std::int64_t upper = r.d + ctx.h - (r.bound_case == 1 ? 2 : 3);
  r.holds = r.d <= r.root_a && r.root_a <= r.root_b && r.root_b <= upper;
  return r;
}

ChamberCount chamber_count(const AffineArrangement2& a) {
  if (!a.field().is_rational()) throw PreconditionError("chambers are only defined over the reals");
  ChamberCount c;
  c.zaslavsky = char_poly(a).evaluate(-1);
  if (a.size() == 0) {
    c.euler = 1;
  } else if (a.size() <= 10) {
    // Sphere picture: every line is a circle through the point at infinity.
    const auto flats = intersection_lattice(a);
    std::int64_t vertices = 1;
    std::vector<std::int64_t> on_line(a.size(), 0);
    for (const auto& f : flats) {
      if (f.codim != 2) continue;
      ++vertices;
      for (auto i : f.hyperplanes) ++on_line[i];
    }
    std::int64_t edges = 0;
    for (auto n : on_line) edges += n + 1;
    c.euler = 2 - vertices + edges;
  }
  return c;
}

Rest2Report thm_rest2_check(const AffineArrangement2& a) {
  Rest2Report r;
  const auto ctx = affine_context(a);
  if (!ctx.reason.empty()) {
    r.reason = ctx.reason;
    return r;
  }
  r.applicable = true;
  std::tie(r.bound_case, r.d) = parity_case(ctx.k, ctx.h);
  r.bound = 1 + ctx.k + r.d * (r.d + ctx.h - (r.bound_case == 1 ? 2 : 3));
  r.chambers = chamber_count(a).zaslavsky;
  r.equality = r.chambers == r.bound;
  r.holds = r.chambers >= r.bound;
  if (r.equality) {
    const auto coned = cone(a);
    r.free_confirmed = is_free(coned.arrangement, coned.infinite_index).free;
    r.holds = r.holds && *r.free_confirmed;
  }
  return r;
}

Pb3Report pb3_membership(const Arrangement3& a) {
  Pb3Report r;
  if (a.size() < 2) {
    r.certificate.push_back("fewer than two planes");
    return r;
  }
  bool all_balanced = true;
  std::vector<std::int64_t> hs(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    const auto z = ziegler_restriction(a, i);
    hs[i] = static_cast<std::int64_t>(z.arrangement.size());
    const bool bal = is_balanced(z.multiplicity);
    all_balanced = all_balanced && bal;
    r.certificate.push_back("H0=" + a[i].to_string() + " h=" + std::to_string(hs[i]) + " m=" +
                            z.multiplicity.to_string() + (bal ? " balanced" : " unbalanced"));
  }
  if (!all_balanced) {
    r.certificate.push_back("some restriction is unbalanced");
    return r;
  }
  const auto reduced = char_poly(a).divide_t_minus(1);
  const auto roots = integer_roots(-reduced->coeff(1), reduced->coeff(0));
  if (!roots) {
    r.certificate.push_back("chi/(t-1) = " + reduced->to_string() + " does not split over Z");
    return r;
  }
  const std::int64_t gap = roots->second - roots->first;
  r.certificate.push_back("chi/(t-1) = (t-" + std::to_string(roots->first) + ")(t-" + std::to_string(roots->second) +
                          ")");
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (gap >= hs[i] - 3) {
      r.member = true;
      r.witness = i;
      r.certificate.push_back("witness H0=" + a[i].to_string() + ": |d-d'|=" + std::to_string(gap) +
                              " >= h-3=" + std::to_string(hs[i] - 3));
      return r;
    }
  }
  r.certificate.push_back("no H0 with |d-d'| >= h-3");
  return r;
}

}  // namespace multiarr
