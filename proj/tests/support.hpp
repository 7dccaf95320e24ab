#pragma once

#include <array>
#include <initializer_list>
#include <random>
#include <utility>
#include <vector>

#include "multiarr/arr3.hpp"
#include "multiarr/multiarr2.hpp"

namespace multiarr::testing {

inline const Field kQ = Field::rationals();

inline Arrangement2 lines(Field f, std::initializer_list<std::pair<long, long>> forms) {
  std::vector<LinearForm2> out;
  for (auto [a, b] : forms) out.emplace_back(Scalar(f, a), Scalar(f, b));
  return Arrangement2(std::move(out));
}

inline Arrangement2 a2(Field f = kQ) { return lines(f, {{1, 0}, {0, 1}, {1, 1}}); }
inline Arrangement2 b2() { return lines(kQ, {{1, 0}, {0, 1}, {1, -1}, {1, 1}}); }

inline Arrangement3 planes(std::initializer_list<std::array<long, 3>> forms, Field f = kQ) {
  std::vector<LinearForm3> out;
  for (const auto& c : forms) out.emplace_back(f, c[0], c[1], c[2]);
  return Arrangement3(std::move(out));
}

inline Arrangement3 braid() { return planes({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, -1, 0}, {1, 0, -1}, {0, 1, -1}}); }
inline Arrangement3 generic4() { return planes({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}}); }
inline Arrangement3 boolean3() { return planes({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}); }

inline AffineArrangement2 affine(std::initializer_list<std::array<long, 3>> ls) {
  std::vector<AffineLine> out;
  for (const auto& c : ls) out.emplace_back(kQ, c[0], c[1], c[2]);
  return AffineArrangement2(kQ, std::move(out));
}

/// h pairwise non-proportional lines with small integer coefficients.
inline Arrangement2 random_lines(std::mt19937_64& rng, std::size_t h, Field f = kQ, long bound = 5) {
  std::uniform_int_distribution<long> coef(-bound, bound);
  std::vector<LinearForm2> forms;
  while (forms.size() < h) {
    const Scalar a(f, coef(rng));
    const Scalar b(f, coef(rng));
    if (a.is_zero() && b.is_zero()) continue;
    const LinearForm2 g(a, b);
    bool fresh = true;
    for (const auto& x : forms) fresh = fresh && !x.proportional_to(g);
    if (fresh) forms.push_back(g);
  }
  return Arrangement2(std::move(forms));
}

/// n distinct planes with small integer coefficients.
inline Arrangement3 random_planes(std::mt19937_64& rng, std::size_t n, long bound = 2) {
  std::uniform_int_distribution<long> coef(-bound, bound);
  std::vector<LinearForm3> forms;
  while (forms.size() < n) {
    const long a = coef(rng), b = coef(rng), c = coef(rng);
    if (a == 0 && b == 0 && c == 0) continue;
    const LinearForm3 g(kQ, a, b, c);
    bool fresh = true;
    for (const auto& x : forms) fresh = fresh && !(x == g);
    if (fresh) forms.push_back(g);
  }
  return Arrangement3(std::move(forms));
}

inline Multiplicity random_multiplicity(std::mt19937_64& rng, std::size_t h, int cap) {
  std::uniform_int_distribution<int> d(0, cap);
  std::vector<int> v(h);
  for (auto& x : v) x = d(rng);
  return Multiplicity(std::move(v));
}

}  // namespace multiarr::testing
