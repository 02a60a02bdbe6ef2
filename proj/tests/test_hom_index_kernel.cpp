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

#include <algorithm>
#include <map>

#include "doctest.h"
#include "isogenion/error.hpp"
#include "isogenion/hom_index_kernel.hpp"

using namespace isogenion;

namespace {

Field gf41() { return field_create(41); }
Curve ex1(std::int64_t j) { return curve_from_j(gf41(), gf41().from_int(j), 6); }
std::int64_t jval(const Curve& E) { return *E.j_invariant().as_prime_field(); }

// First composite from E to the class of j with the given degree.
Isogeny find_composite(const Curve& E, std::int64_t j, std::int64_t degree) {
  for (const auto& b : cyclic_composites(E, {2, 3}, 36))
    if (jval(b.target()) == j && b.degree() == degree) return b;
  FAIL("no composite of the requested degree");
  return {};
}

}  // namespace

TEST_CASE("rho") {
  CHECK(rho(3) == 3);
  CHECK(rho(0) == 0);
  CHECK(rho(-2) == 0);
}

TEST_CASE("conductor ratios on the volcano") {
  CHECK(conductor_ratio(ex1(29), ex1(25)) == ConductorRatio{{2, 1}});
  CHECK(conductor_ratio(ex1(29), ex1(5)) == ConductorRatio{{2, -1}});
  CHECK(conductor_ratio(ex1(22), ex1(22)).empty());
  CHECK(conductor_ratio(ex1(29), ex1(22)).empty());
  CHECK_THROWS_AS(conductor_ratio(ex1(5), curve_from_j(gf41(), gf41().from_int(5), -6)), Error);
}

TEST_CASE("index examples") {
  SUBCASE("descending 2-isogeny from the surface") {
    auto beta = find_composite(ex1(5), 29, 2);
    auto h = hom_index(ex1(5), beta.target(), beta);
    CHECK(h.formula_index == 4);
    CHECK(h.oracle_index == 4);
    CHECK(h.fits_display);
  }
  SUBCASE("the degree 6 composite 29 -> 25") {
    auto beta = find_composite(ex1(29), 25, 6);
    auto h = hom_index(ex1(29), beta.target(), beta);
    CHECK(h.beta_degree == 6);
    CHECK(h.ratio == ConductorRatio{{2, 1}});
    CHECK(h.formula_index == 12);
    CHECK(h.oracle_index == 12);
    CHECK(h.agrees());
  }
  SUBCASE("ascending 2-isogeny") {
    auto beta = find_composite(ex1(29), 5, 2);
    auto h = hom_index(ex1(29), beta.target(), beta);
    CHECK(h.formula_index == 2);
    CHECK(h.oracle_index == 2);
  }
  SUBCASE("identity") {
    Curve E = ex1(13);
    auto h = hom_index(E, E, Isogeny::identity(E));
    CHECK(h.formula_index == 1);
    CHECK(h.oracle_index == 1);
    auto basis = hom_lattice_basis(E, E, Isogeny::identity(E));
    CHECK(basis.d1 == 1);
    CHECK(basis.d2 == 1);
    CHECK(basis.second == OrderElement{0, 1});
  }
}

TEST_CASE("formula and oracle agree on short composites") {
  for (const auto& c : classes_with_trace(gf41(), 6)) {
    for (const auto& b : cyclic_composites(c.representative, {2, 3}, 12)) {
      auto h = hom_index(c.representative, b.target(), b);
      CHECK(h.agrees());
      CHECK(h.fits_display);
      CHECK(h.backtrack_factor == 1);
    }
  }
}

TEST_CASE("composites are cyclic and deduplicated") {
  auto comps = cyclic_composites(ex1(5), {2, 3}, 12);
  for (std::size_t i = 0; i + 1 < comps.size(); ++i) CHECK(comps[i].degree() <= comps[i + 1].degree());
  for (std::size_t i = 0; i < comps.size(); ++i)
    for (std::size_t k = i + 1; k < comps.size(); ++k)
      CHECK_FALSE(comps[i].kernel_polynomial() == comps[k].kernel_polynomial());
  // [2] backtracks fully.
  CHECK(backtrack_factor(multiplication_isogeny(ex1(5), 2)) == 2);
}

TEST_CASE("supersingular scalar Frobenius: index is deg^2") {
  for (std::uint32_t p : {11u, 13u}) {
    Field F = field_create(p, 2);
    const std::int64_t t = -2 * static_cast<std::int64_t>(p);
    auto classes = classes_with_trace(F, t);
    REQUIRE_FALSE(classes.empty());
    Curve E = classes.front().representative;
    for (int ell : {2, 3}) {
      auto isos = rational_isogenies(E, ell);
      REQUIRE_FALSE(isos.empty());
      auto h = hom_index(E, isos.front().target(), isos.front());
      CHECK(h.full_endomorphisms);
      CHECK(h.oracle_index == ell * ell);
      CHECK(h.formula_index == ell * ell);
    }
    auto two = rational_isogenies(E, 2);
    Isogeny b4;
    bool found = false;
    for (const auto& phi : two) {
      for (const auto& psi : rational_isogenies(phi.target(), 2)) {
        Isogeny c = compose(psi, phi);
        if (backtrack_factor(c) == 1) {
          b4 = c;
          found = true;
          break;
        }
      }
      if (found) break;
    }
    REQUIRE(found);
    auto h = hom_index(E, b4.target(), b4);
    CHECK(h.oracle_index == 16);
  }
}

TEST_CASE("kernel ideal correspondence") {
  CHECK_FALSE(corresponds_to_kernel_ideal(ex1(5), ex1(29)));
  CHECK(corresponds_to_kernel_ideal(ex1(29), ex1(5)));
  CHECK(corresponds_to_kernel_ideal(ex1(33), ex1(33)));
  for (const auto& c : classes_with_trace(gf41(), 6)) {
    for (const auto& b : cyclic_composites(c.representative, {2, 3}, 6))
      CHECK(kernel_round_trip(b) == corresponds_to_kernel_ideal(c.representative, b.target()));
  }
}

TEST_CASE("kernels of ideals") {
  Curve E = ex1(5);
  QuadOrder O = compute_endo_conductor(E).order();
  auto H = kernel_of_ideal(E, principal_ideal(O, OrderElement{2, 0}));
  CHECK(H.size() == 4);
  // The ramified prime above 2 gives the horizontal loop at the surface.
  auto P2 = primes_above(O, 2);
  REQUIRE(P2.size() == 1);
  auto K = kernel_of_ideal(E, P2.front());
  CHECK(K.size() == 2);
  CHECK(annihilator_ideal(E, K) == P2.front());
  // A norm-4 ideal on the level-1 curve that is not invertible.
  Curve E29 = ex1(29);
  QuadOrder O29 = compute_endo_conductor(E29).order();
  for (const auto& I : enumerate_ideals(O29, 4)) {
    if (is_invertible(I)) continue;
    auto HI = kernel_of_ideal(E29, I);
    auto J = annihilator_ideal(E29, HI);
    CHECK(kernel_of_ideal(E29, J).size() == HI.size());
  }
}

TEST_CASE("ideals above p") {
  auto check = [](const Curve& E, int r) {
    auto d = compute_endo_conductor(E);
    QuadOrder O = d.order();
    const std::int64_t p = E.field().characteristic();
    auto pp = p_part_ideal(E, 1, 2);
    CHECK(ideal_multiply(pp.P1, pp.P2) == principal_ideal(O, OrderElement{p, 0}));
    QuadIdeal Pr = unit_ideal(O);
    for (int i = 0; i < r; ++i) Pr = ideal_multiply(Pr, pp.P1);
    CHECK(Pr == principal_ideal(O, OrderElement{d.c, d.w}));
    CHECK(p_part_ideal(E, 1, 1).ideal == pp.P1);
    CHECK(p_part_ideal(E, 0, 1).ideal == pp.P2);
  };
  check(ex1(5), 1);
  check(ex1(13), 1);
  Field F = field_create(5, 2);
  auto cl = classes_with_trace(F, 3);
  REQUIRE_FALSE(cl.empty());
  check(cl.front().representative, 2);
  Field F11 = field_create(11, 2);
  CHECK_THROWS_AS(p_part_ideal(classes_with_trace(F11, -22).front().representative, 1, 1), Error);
}
