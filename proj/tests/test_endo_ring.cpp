// Copyright 2026 The Isogenion Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <map>
#include <set>

#include "doctest.h"
#include "isogenion/endo_ring.hpp"
#include "isogenion/error.hpp"
#include "isogenion/isogeny.hpp"
#include "isogenion/numtheory.hpp"

using namespace isogenion;

namespace {

Field gf41() { return field_create(41); }
Curve ex1(std::int64_t j) { return curve_from_j(gf41(), gf41().from_int(j), 6); }

std::int64_t det(const Matrix2& M, int m) { return mod(M[0][0] * M[1][1] - M[0][1] * M[1][0], m); }

}  // namespace

TEST_CASE("conductors on the GF(41) trace 6 volcano") {
  const std::map<std::int64_t, std::int64_t> expected = {{5, 1}, {22, 2}, {29, 2}, {13, 4}, {33, 4}, {25, 4}, {35, 4}};
  for (const auto& c : classes_with_trace(gf41(), 6)) {
    auto d = compute_endo_conductor(c.representative);
    CHECK(d.D0 == -8);
    CHECK(d.f0 == 4);
    CHECK(d.f == expected.at(*c.j.as_prime_field()));
    CHECK(d.levels.at(2) == volcano_level(c.representative, 2));
    CHECK(d.order().disc() == d.f * d.f * -8);
    CHECK(d.frobenius_order().disc() == 6 * 6 - 4 * 41);
  }
}

TEST_CASE("conductor over other fields") {
  Field F = field_create(53);
  for (const auto& c : classes_with_trace(F, -4)) {
    auto d = compute_endo_conductor(c.representative);
    CHECK(d.D0 == -4);
    CHECK(d.f0 == 7);
    CHECK(d.f0 % d.f == 0);
  }
  // Scalar Frobenius has no quadratic Frobenius order.
  Field F2 = field_create(11, 2);
  auto ss = classes_with_trace(F2, -22);
  REQUIRE_FALSE(ss.empty());
  CHECK(has_scalar_frobenius(ss.front().representative));
  CHECK_THROWS_AS(compute_endo_conductor(ss.front().representative), Error);
  CHECK_FALSE(has_scalar_frobenius(ex1(5)));
}

TEST_CASE("Frobenius matrix has the Frobenius characteristic polynomial") {
  for (std::int64_t j : {5, 22, 13}) {
    for (int m : {2, 3, 4, 8}) {
      auto fm = frobenius_matrix(ex1(j), m);
      CHECK(mod(fm.matrix[0][0] + fm.matrix[1][1], m) == mod(6, m));
      CHECK(det(fm.matrix, m) == mod(41, m));
    }
  }
  CHECK(frobenius_matrix(ex1(5), 1).frame == nullptr);
}

TEST_CASE("explicit f*gamma agrees with the torsion lift") {
  for (const auto& c : classes_with_trace(gf41(), 6)) {
    for (int m : {2, 3, 4}) {
      auto fr = TorsionFrame::get(c.representative, m);
      for (const auto& P : {fr->P(), fr->Q(), fr->P() + fr->Q()})
        CHECK(apply_fgamma(c.representative, P) == apply_fgamma_by_lift(c.representative, P));
    }
  }
}

TEST_CASE("order elements act as expected") {
  for (std::int64_t j : {5, 29, 33}) {
    Curve E = ex1(j);
    auto d = compute_endo_conductor(E);
    // pi = c + w (f gamma)
    auto pi = to_order_basis(d, PiElement{0, 1, 1});
    REQUIRE(pi.has_value());
    CHECK(*pi == OrderElement{d.c, d.w});
    for (const auto& P : sample_points(E, 4)) {
      CHECK(evaluate_order_element(E, PiElement{0, 1, 1}, P) == frobenius_point(P, 1));
      CHECK(evaluate_order_element(E, OrderElement{0, 1}, P) == apply_fgamma(E, P));
      CHECK(evaluate_order_element(E, OrderElement{3, 0}, P) == 3 * P);
      // (pi - c) / w is f gamma
      CHECK(evaluate_order_element(E, PiElement{-d.c, 1, d.w}, P) == apply_fgamma(E, P));
    }
  }
  // (pi - c) / 8 is not integral anywhere on the volcano.
  auto d = compute_endo_conductor(ex1(13));
  CHECK_FALSE(to_order_basis(d, PiElement{-d.c, 1, 8}).has_value());
}

TEST_CASE("annihilator index of prime-degree kernels") {
  // Horizontal and ascending kernels have index ell; descending ones ell^2.
  for (const auto& c : classes_with_trace(gf41(), 6)) {
    Curve E = c.representative;
    const int lev = volcano_level(E, 2);
    for (int ell : {2, 3}) {
      for (const auto& phi : rational_isogenies(E, ell)) {
        auto ker = kernel_points(phi);
        const int lev2 = volcano_level(phi.target(), 2);
        const std::int64_t expected = ell == 2 && lev2 > lev ? 4 : ell;
        CHECK(annihilator_index(E, ker) == expected);
      }
    }
  }
}

TEST_CASE("annihilator lattice depends only on the subgroup") {
  Curve E = ex1(5);
  for (const auto& phi : rational_isogenies(E, 2)) {
    auto ker = kernel_points(phi);
    Point K;
    for (const auto& P : ker)
      if (!P.is_infinity()) K = P;
    auto L1 = annihilator_lattice(E, {K});
    auto L2 = annihilator_lattice(E, ker);
    auto L3 = annihilator_lattice(E, {K, 3 * K, E.infinity()});
    CHECK(L1.A == L2.A);
    CHECK(L1.B == L2.B);
    CHECK(L1.C == L2.C);
    CHECK(L1.A == L3.A);
    CHECK(L1.B == L3.B);
    CHECK(L1.C == L3.C);
    CHECK(annihilator_index(E, K, 2) == L1.index());
    CHECK_THROWS_AS(annihilator_index(E, K, 4), Error);
  }
  CHECK(annihilator_index(E, {E.infinity()}) == 1);
}

TEST_CASE("small group helpers") {
  Curve E = ex1(5);
  auto fr = TorsionFrame::get(E, 4);
  CHECK(small_point_order(fr->P()) == 4);
  CHECK(small_point_order(2 * fr->P()) == 2);
  CHECK(small_point_order(E.infinity()) == 1);
  CHECK(group_exponent({fr->P(), 2 * fr->Q()}) == 4);
  auto H = subgroup_elements({fr->P(), 2 * fr->Q()});
  CHECK(H.size() == 8);
  CHECK(std::set<Point, bool (*)(const Point&, const Point&)>(
            H.begin(), H.end(), [](const Point& a, const Point& b) { return a.to_string() < b.to_string(); })
            .size() == 8);
}
