#include <gtest/gtest.h>

#include <gmpxx.h>

#include <algorithm>
#include <random>

#include "support.hpp"

namespace multiarr {
namespace {

using testing::affine;
using testing::boolean3;
using testing::braid;
using testing::generic4;
using testing::kQ;
using testing::planes;

using Row = std::array<mpq_class, 3>;

mpq_class det3(const Row& a, const Row& b, const Row& c) {
  return a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) + a[2] * (b[0] * c[1] - b[1] * c[0]);
}

bool proportional(const Row& a, const Row& b) {
  return a[0] * b[1] == a[1] * b[0] && a[0] * b[2] == a[2] * b[0] && a[1] * b[2] == a[2] * b[1];
}

// Rank of a set of nonzero vectors in Q^3 by minors, independent of the
// library's elimination code.
int rank_of(const std::vector<Row>& rows) {
  if (rows.empty()) return 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = i + 1; j < rows.size(); ++j) {
      for (std::size_t k = j + 1; k < rows.size(); ++k) {
        if (det3(rows[i], rows[j], rows[k]) != 0) return 3;
      }
    }
  }
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (!proportional(rows[0], rows[i])) return 2;
  }
  return 1;
}

Row row_of(const LinearForm3& f) { return {f[0].rational(), f[1].rational(), f[2].rational()}; }

CharPoly poly_from_counts(const std::vector<std::int64_t>& c) { return CharPoly(c); }

// chi(A, t) = sum over subsets B of (-1)^|B| t^(3 - rank B).
CharPoly whitney_central(const Arrangement3& a) {
  std::vector<std::int64_t> c(4, 0);
  const std::size_t n = a.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    std::vector<Row> rows;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask >> i & 1U) rows.push_back(row_of(a[i]));
    }
    c[static_cast<std::size_t>(3 - rank_of(rows))] += rows.size() % 2 == 0 ? 1 : -1;
  }
  return poly_from_counts(c);
}

// Affine version: only subsets with a common point contribute.
CharPoly whitney_affine(const AffineArrangement2& a) {
  std::vector<std::int64_t> c(3, 0);
  const std::size_t n = a.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    std::vector<Row> hom, lin;
    for (std::size_t i = 0; i < n; ++i) {
      if (!(mask >> i & 1U)) continue;
      hom.push_back({a[i].a().rational(), a[i].b().rational(), -a[i].c().rational()});
      lin.push_back({a[i].a().rational(), a[i].b().rational(), 0});
    }
    const int r = rank_of(lin);
    if (r != rank_of(hom)) continue;
    c[static_cast<std::size_t>(2 - r)] += hom.size() % 2 == 0 ? 1 : -1;
  }
  return poly_from_counts(c);
}

CharPoly product_t_minus(std::initializer_list<std::int64_t> roots) {
  CharPoly p({1});
  for (auto r : roots) p = p.times_t_minus(r);
  return p;
}

AffineArrangement2 random_affine(std::mt19937_64& rng, std::size_t n, long bound = 2) {
  std::uniform_int_distribution<long> coef(-bound, bound);
  std::vector<AffineLine> out;
  while (out.size() < n) {
    const long a = coef(rng), b = coef(rng), c = coef(rng);
    if (a == 0 && b == 0) continue;
    const AffineLine l(kQ, a, b, c);
    if (std::find(out.begin(), out.end(), l) == out.end()) out.push_back(l);
  }
  return AffineArrangement2(kQ, std::move(out));
}

AffineArrangement2 braid_deconing() { return decone(braid(), 2); }

TEST(LinearForm3, Canonical) {
  EXPECT_EQ(LinearForm3(kQ, -2, 0, 2), LinearForm3(kQ, 1, 0, -1));
  EXPECT_EQ(LinearForm3(kQ, 1, 0, -1).to_string(), "x - z");
  EXPECT_THROW(LinearForm3(kQ, 0, 0, 0), PreconditionError);
  EXPECT_THROW(planes({{1, 0, 0}, {2, 0, 0}}), PreconditionError);
}

TEST(CharPoly, Arithmetic) {
  const auto p = product_t_minus({1, 2, 3});
  EXPECT_EQ(p.to_string(), "t^3 - 6*t^2 + 11*t - 6");
  EXPECT_EQ(p.evaluate(2), 0);
  EXPECT_EQ(p.divide_t_minus(3), std::optional<CharPoly>(product_t_minus({1, 2})));
  EXPECT_FALSE(p.divide_t_minus(4).has_value());
  EXPECT_EQ(integer_roots(5, 6), (std::optional<std::pair<std::int64_t, std::int64_t>>({2, 3})));
  EXPECT_FALSE(integer_roots(3, 3).has_value());
}

TEST(IntersectionLattice, Boolean) {
  const auto flats = intersection_lattice(boolean3());
  std::array<int, 4> per_codim{};
  for (const auto& f : flats) {
    ++per_codim[static_cast<std::size_t>(f.codim)];
    if (f.codim == 3) {
      EXPECT_EQ(f.mobius, -1);
    }
    if (f.codim == 1) {
      EXPECT_EQ(f.mobius, -1);
    }
    if (f.codim == 0) {
      EXPECT_EQ(f.mobius, 1);
    }
  }
  EXPECT_EQ(per_codim, (std::array<int, 4>{1, 3, 3, 1}));
}

TEST(IntersectionLattice, BraidAndGeneric) {
  int triple = 0, dbl = 0;
  for (const auto& f : intersection_lattice(braid())) {
    if (f.codim != 2) continue;
    (f.hyperplanes.size() == 3 ? triple : dbl) += 1;
    EXPECT_EQ(f.mobius, static_cast<std::int64_t>(f.hyperplanes.size()) - 1);
  }
  EXPECT_EQ(triple, 4);
  EXPECT_EQ(dbl, 3);
  for (const auto& f : intersection_lattice(generic4())) {
    if (f.codim == 2) {
      EXPECT_EQ(f.hyperplanes.size(), 2U);
    }
    // Constant term of t^3 - 4t^2 + 6t - 3.
    if (f.codim == 3) {
      EXPECT_EQ(f.mobius, -3);
    }
  }
}

TEST(CharPoly, Examples) {
  EXPECT_EQ(char_poly(boolean3()), product_t_minus({1, 1, 1}));
  EXPECT_EQ(char_poly(braid()), product_t_minus({1, 2, 3}));
  EXPECT_EQ(char_poly(generic4()), CharPoly({-3, 6, -4, 1}));
}

TEST(CharPoly, MatchesWhitneyOracle) {
  EXPECT_EQ(whitney_central(braid()), char_poly(braid()));
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const auto a = testing::random_planes(rng, 2 + static_cast<std::size_t>(trial % 8));
    EXPECT_EQ(char_poly(a), whitney_central(a));
    const auto aff = random_affine(rng, 1 + static_cast<std::size_t>(trial % 7));
    EXPECT_EQ(char_poly(aff), whitney_affine(aff));
  }
}

TEST(Coning, Examples) {
  const auto c = cone(affine({{1, 0, 0}}));
  EXPECT_EQ(c.arrangement.size(), 2U);
  EXPECT_EQ(c.infinite_index, 1U);
  EXPECT_EQ(c.arrangement[0], LinearForm3(kQ, 1, 0, 0));
  EXPECT_EQ(c.arrangement[1], LinearForm3(kQ, 0, 0, 1));
  EXPECT_EQ(cone(affine({{1, 0, 1}})).arrangement[0], LinearForm3(kQ, 1, 0, -1));
  const auto d = braid_deconing();
  EXPECT_EQ(d.size(), 5U);
  EXPECT_EQ(decone(cone(d).arrangement, cone(d).infinite_index), d);
  EXPECT_THROW(decone(braid(), 6), PreconditionError);
}

TEST(Coning, FactorizationAndRoundTrip) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const auto aff = random_affine(rng, static_cast<std::size_t>(trial % 8));
    const auto c = cone(aff);
    EXPECT_EQ(c.arrangement.size(), aff.size() + 1);
    EXPECT_EQ(char_poly(c.arrangement), char_poly(aff).times_t_minus(1));
    EXPECT_EQ(decone(c.arrangement, c.infinite_index), aff);
  }
}

TEST(Ziegler, Examples) {
  const auto z = ziegler_restriction(braid(), 2);
  EXPECT_EQ(z.arrangement.size(), 3U);
  auto m = z.multiplicity.values();
  std::sort(m.begin(), m.end());
  EXPECT_EQ(m, (std::vector<int>{1, 2, 2}));
  EXPECT_EQ(exponents(z.arrangement, z.multiplicity), (Exponents2{2, 3}));
  const auto b = ziegler_restriction(boolean3(), 2);
  EXPECT_EQ(b.arrangement.size(), 2U);
  EXPECT_EQ(b.multiplicity, (Multiplicity{1, 1}));
  EXPECT_EQ(ziegler_restriction(generic4(), 3).multiplicity, (Multiplicity{1, 1, 1}));
  EXPECT_THROW(ziegler_restriction(braid(), 9), PreconditionError);
}

TEST(Ziegler, FrameSpansH0) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 30; ++trial) {
    const auto a = testing::random_planes(rng, 2 + static_cast<std::size_t>(trial % 7));
    for (std::size_t h0 = 0; h0 < a.size(); ++h0) {
      const auto z = ziegler_restriction(a, h0);
      EXPECT_EQ(z.multiplicity.total(), static_cast<int>(a.size()) - 1);
      for (const auto& v : z.frame) EXPECT_TRUE(a[h0].evaluate(v).is_zero());
      EXPECT_EQ(ziegler_restriction(a, h0).arrangement.forms(), z.arrangement.forms());
    }
  }
}

TEST(Yoshinaga, Examples) {
  for (std::size_t h0 = 0; h0 < 6; ++h0) EXPECT_EQ(yoshinaga_coker_dim(braid(), h0), 0);
  const auto g = yoshinaga_data(generic4(), 0);
  EXPECT_EQ(g.c2, 3);
  EXPECT_EQ(g.exps, (Exponents2{1, 2}));
  EXPECT_EQ(g.coker_dim, 1);
  EXPECT_EQ(yoshinaga_coker_dim(boolean3(), 0), 0);
}

TEST(IsFree, Examples) {
  const auto b = is_free(braid());
  EXPECT_TRUE(b.free);
  EXPECT_EQ(b.exponents, (std::array<int, 3>{1, 2, 3}));
  EXPECT_TRUE(b.combinatorial);
  const auto g = is_free(generic4());
  EXPECT_FALSE(g.free);
  EXPECT_EQ(g.coker_dim, 1);
  const auto o = is_free(boolean3());
  EXPECT_TRUE(o.free);
  EXPECT_EQ(o.exponents, (std::array<int, 3>{1, 1, 1}));
  const auto near = is_free(planes({{1, 0, 0}, {0, 1, 0}, {1, 1, 0}, {1, -1, 0}, {0, 0, 1}}));
  EXPECT_TRUE(near.free);
  EXPECT_EQ(near.exponents, (std::array<int, 3>{1, 1, 3}));
  EXPECT_EQ(near.combinatorial_reason, "nb");
}

// Verdict is H0-independent; free arrangements factor as (t-1)(t-d1)(t-d2).
TEST(IsFree, RandomArrangementProperties) {
  std::mt19937_64 rng(13);
  int frees = 0, nonfrees = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const auto a = testing::random_planes(rng, 3 + static_cast<std::size_t>(trial % 6));
    const auto first = is_free(a);
    EXPECT_GE(first.coker_dim, 0);
    (first.free ? frees : nonfrees) += 1;
    for (std::size_t h0 = 1; h0 < a.size(); ++h0) EXPECT_EQ(is_free(a, h0).free, first.free);
    if (first.free) {
      const auto& e = first.exponents;
      EXPECT_EQ(char_poly(a), product_t_minus({e[0], e[1], e[2]}));
    }
  }
  EXPECT_GT(frees, 0);
  EXPECT_GT(nonfrees, 0);
}

TEST(CombinatorialExponents, Reasons) {
  const auto nb = combinatorial_exponents(kQ, {5, 1, 1});
  ASSERT_TRUE(nb.has_value());
  EXPECT_EQ(nb->reason, "nb");
  EXPECT_EQ(nb->exps, (Exponents2{2, 5}));
  const auto lp = combinatorial_exponents(kQ, {2, 2, 1});
  ASSERT_TRUE(lp.has_value());
  EXPECT_EQ(lp->reason, "limit-parity");
  EXPECT_EQ(lp->exps, (Exponents2{2, 3}));
  EXPECT_FALSE(combinatorial_exponents(Field::prime(2), {4, 4, 4}).has_value());
  // Every combinatorial prediction agrees with the solver.
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t h = 3 + static_cast<std::size_t>(trial % 2);
    const auto lines = testing::random_lines(rng, h);
    const auto m = testing::random_multiplicity(rng, h, 4);
    if (const auto c = combinatorial_exponents(kQ, m)) {
      EXPECT_EQ(c->exps, exponents(lines, m)) << m.to_string();
    }
  }
}

TEST(FreeByChi, Examples) {
  const auto v = thm_fc_check(braid_deconing());
  EXPECT_TRUE(v.applies);
  EXPECT_TRUE(v.free);
  EXPECT_EQ(v.gap_case, 2);
  EXPECT_EQ(v.d, 2);
  EXPECT_FALSE(v.violation);
  EXPECT_FALSE(thm_fc_check(decone(generic4(), 0)).applies);
  const auto unbalanced = thm_fc_check(affine({{1, 0, 0}, {1, 0, 1}, {1, 0, 2}, {0, 1, 0}}));
  EXPECT_FALSE(unbalanced.applies);
  EXPECT_FALSE(unbalanced.reason.empty());
}

TEST(RootBounds, Examples) {
  const auto r = thm_rest_check(braid_deconing());
  EXPECT_TRUE(r.applicable);
  EXPECT_EQ(r.bound_case, 1);
  EXPECT_EQ(r.d, 2);
  EXPECT_EQ(r.root_a, 2);
  EXPECT_EQ(r.root_b, 3);
  EXPECT_TRUE(r.holds);
  EXPECT_FALSE(thm_rest_check(decone(boolean3(), 2)).applicable);
}

TEST(Chambers, Examples) {
  EXPECT_EQ(chamber_count(affine({{1, 0, 0}})).zaslavsky, 2);
  EXPECT_EQ(chamber_count(affine({{1, 0, 0}, {0, 1, 0}})).zaslavsky, 4);
  EXPECT_EQ(chamber_count(affine({{1, 0, 0}, {1, 0, 1}})).zaslavsky, 3);
  const auto b = chamber_count(braid_deconing());
  EXPECT_EQ(b.zaslavsky, 12);
  ASSERT_TRUE(b.euler.has_value());
  EXPECT_EQ(*b.euler, 12);
  const Field f5 = Field::prime(5);
  EXPECT_THROW(chamber_count(AffineArrangement2(f5, {AffineLine(f5, 1, 0, 0)})), PreconditionError);
}

TEST(Chambers, EulerFormulaAgreesWithZaslavsky) {
  std::mt19937_64 rng(15);
  for (int trial = 0; trial < 60; ++trial) {
    const auto aff = random_affine(rng, static_cast<std::size_t>(trial % 10), 3);
    const auto c = chamber_count(aff);
    EXPECT_TRUE(c.agree()) << c.zaslavsky << " vs " << c.euler.value_or(-1);
    EXPECT_EQ(c.zaslavsky, char_poly(aff).evaluate(-1));
  }
}

TEST(ChamberBound, Examples) {
  const auto r = thm_rest2_check(braid_deconing());
  EXPECT_TRUE(r.applicable);
  EXPECT_EQ(r.bound, 12);
  EXPECT_EQ(r.chambers, 12);
  EXPECT_TRUE(r.equality);
  EXPECT_EQ(r.free_confirmed, std::optional<bool>(true));
  EXPECT_TRUE(r.holds);
  EXPECT_FALSE(thm_rest2_check(affine({{1, 0, 0}, {0, 1, 0}})).applicable);
}

// Wherever the bound-checking theorems apply on random arrangements, they hold.
TEST(ChamberBound, RandomAffineArrangements) {
  std::mt19937_64 rng(16);
  int applicable = 0;
  for (int trial = 0; trial < 80; ++trial) {
    const auto aff = random_affine(rng, 3 + static_cast<std::size_t>(trial % 5));
    const auto r2 = thm_rest2_check(aff);
    if (r2.applicable) {
      ++applicable;
      EXPECT_TRUE(r2.holds);
    }
    const auto r = thm_rest_check(aff);
    if (r.applicable) {
      EXPECT_TRUE(r.holds);
    }
    const auto fc = thm_fc_check(aff);
    if (fc.applies) {
      EXPECT_TRUE(fc.free && !fc.violation);
    }
  }
  EXPECT_GT(applicable, 0);
}

TEST(Pb3, Examples) {
  const auto b = pb3_membership(braid());
  EXPECT_TRUE(b.member);
  EXPECT_TRUE(b.witness.has_value());
  EXPECT_FALSE(pb3_membership(planes({{1, 0, 0}, {0, 1, 0}, {1, 1, 0}, {1, -1, 0}, {0, 0, 1}})).member);
  EXPECT_FALSE(pb3_membership(generic4()).member);
}

}  // namespace
}  // namespace multiarr
