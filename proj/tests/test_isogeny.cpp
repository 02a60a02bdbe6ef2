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
#include <cstdlib>
#include <fstream>
#include <random>
#include <map>
#include <set>
#include <sstream>

#include "doctest.h"
#include "isogenion/isogeny.hpp"

using namespace isogenion;

namespace {

Field gf41() { return field_create(41); }

Curve ex1(std::int64_t j) { return curve_from_j(gf41(), gf41().from_int(j), 6); }

std::set<std::int64_t> target_js(const Curve& E, int ell) {
  std::set<std::int64_t> out;
  for (const auto& phi : rational_isogenies(E, ell)) out.insert(*phi.target().j_invariant().as_prime_field());
  return out;
}

// Frobenius-stable lines of E[ell], counted from the frame matrix.
int stable_lines(const Curve& E, int ell) {
  auto fr = TorsionFrame::get(E, ell);
  auto M = fr->frobenius();
  int n = 0;
  for (int a = 0; a < ell; ++a) {
    for (int b = 0; b < ell; ++b) {
      if (a == 0 && b == 0) continue;
      if (!(a == 1 || (a == 0 && b == 1))) continue;
      const int x = mod(M[0][0] * a + M[0][1] * b, ell), y = mod(M[1][0] * a + M[1][1] * b, ell);
      if (mod(static_cast<std::int64_t>(x) * b - static_cast<std::int64_t>(y) * a, ell) == 0) ++n;
    }
  }
  return n;
}

}  // namespace

TEST_CASE("Velu on the GF(41) volcano") {
  Curve E29 = ex1(29);
  CHECK(target_js(E29, 2) == std::set<std::int64_t>{5, 13, 33});
  CHECK(target_js(ex1(5), 2) == std::set<std::int64_t>{5, 22, 29});
  CHECK(target_js(E29, 3) == std::set<std::int64_t>{22});
  CHECK(rational_isogenies(E29, 3).size() == 2);
  CHECK(rational_isogenies(ex1(5), 3).size() == 2);
  for (int ell : {2, 3}) {
    for (const auto& phi : rational_isogenies(E29, ell)) {
      CHECK(phi.degree() == ell);
      CHECK(phi.target().trace() == 6);
      CHECK(modular_adjacent(ell, E29.j_invariant(), phi.target().j_invariant()));
    }
  }
  Field F = gf41();
  Isogeny id = velu(E29, E29.infinity(), 1);
  CHECK(id.degree() == 1);
  CHECK(id.target() == E29);
}

TEST_CASE("evaluation is a homomorphism killing the kernel") {
  Curve E29 = ex1(29);
  auto pts = E29.rational_points();
  for (int ell : {2, 3}) {
    for (const auto& phi : rational_isogenies(E29, ell)) {
      Polynomial h = phi.kernel_polynomial();
      int killed = 0;
      for (const auto& P : pts) {
        Point img = phi.evaluate(P);
        if (img.is_infinity()) ++killed;
        if (!P.is_infinity()) CHECK(img.is_infinity() == h(P.x()).is_zero());
        CHECK((img.is_infinity() || phi.target().contains(img.x(), img.y())));
      }
      CHECK((killed == 1 || killed == ell));
      std::mt19937_64 rng(1);
      for (int i = 0; i < 200; ++i) {
        const Point& P = pts[rng() % pts.size()];
        const Point& Q = pts[rng() % pts.size()];
        CHECK(phi.evaluate(P + Q) == phi.evaluate(P) + phi.evaluate(Q));
      }
    }
  }
  CHECK_THROWS_AS(rational_isogenies(E29, 2).front().evaluate(ex1(5).infinity()), Error);
}

TEST_CASE("velu from a point") {
  Curve E = ex1(29);
  auto fr = TorsionFrame::get(E, 3);
  int rational = 0, irrational = 0;
  for (auto [i, j] : {std::pair{1, 0}, std::pair{0, 1}, std::pair{1, 1}, std::pair{1, 2}}) {
    Point K = fr->point(i, j);
    try {
      Isogeny phi = velu(E, K, 3);
      ++rational;
      CHECK(phi.evaluate(K).is_infinity());
      CHECK(phi.target().j_invariant() == gf41().from_int(22));
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::NotRational);
      ++irrational;
      Isogeny psi = velu(E, K, 3, false);
      CHECK(psi.evaluate(K).is_infinity());
    }
  }
  CHECK(rational == 2);
  CHECK(irrational == 2);
  try {
    velu(E, fr->point(1, 0), 9);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::WrongOrder);
  }
}

TEST_CASE("rational kernels match Frobenius-stable lines") {
  std::mt19937_64 rng(11);
  for (std::uint32_t p : {41u, 43u, 53u, 61u, 67u}) {
    Field F = field_create(p);
    for (int trial = 0; trial < 12; ++trial) {
      FieldElement a = F.from_int(static_cast<std::int64_t>(rng() % p));
      FieldElement b = F.from_int(static_cast<std::int64_t>(rng() % p));
      if ((a.square() * a * F.from_int(4) + b.square() * F.from_int(27)).is_zero()) continue;
      Curve E = Curve::create(a, b);
      for (int ell : {2, 3, 5, 7}) {
        std::size_t expected;
        try {
          expected = static_cast<std::size_t>(stable_lines(E, ell));
        } catch (const Error&) {
          continue;
        }
        CHECK(rational_kernel_polynomials(E, ell).size() == expected);
      }
    }
  }
}

TEST_CASE("dual isogenies") {
  Curve E29 = ex1(29);
  auto pts = E29.rational_points();
  for (int ell : {2, 3}) {
    for (const auto& phi : rational_isogenies(E29, ell)) {
      Isogeny d = dual(phi);
      CHECK(d.degree() == ell);
      CHECK(d.source() == phi.target());
      CHECK(d.target() == E29);
      for (const auto& P : pts) CHECK(d.evaluate(phi.evaluate(P)) == scalar_mul(ell, P));
      auto tp = phi.target().rational_points();
      for (const auto& P : tp) CHECK(phi.evaluate(d.evaluate(P)) == scalar_mul(ell, P));
      CHECK(dual(d).kernel_polynomial() == phi.kernel_polynomial());
    }
  }
  Isogeny id = Isogeny::identity(E29);
  CHECK(dual(id).degree() == 1);
  CHECK(dual(id).target() == E29);
}

TEST_CASE("composition 29 -> 22 -> 25") {
  Curve E29 = ex1(29), E22 = ex1(22);
  Isogeny phi3 = rational_isogenies(E29, 3).front();
  Isogeny phi2;
  for (const auto& psi : rational_isogenies(E22, 2))
    if (psi.target().j_invariant() == gf41().from_int(25)) phi2 = psi;
  REQUIRE(phi2.degree() == 2);
  Isogeny c = compose(phi2, phi3);
  CHECK(c.degree() == 6);
  CHECK(c.degree_chain() == std::vector<std::int64_t>{3, 2});
  CHECK(c.target().j_invariant() == gf41().from_int(25));
  Polynomial h = c.kernel_polynomial();
  CHECK(h.degree() == 3);
  auto fr = TorsionFrame::get(E29, 6);
  int killed = 0;
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) {
      Point P = fr->point(i, j);
      bool k = c.evaluate(P).is_infinity();
      killed += k;
      if (!P.is_infinity()) CHECK(k == h.map(embedding(gf41(), fr->ext()))(P.x()).is_zero());
    }
  CHECK(killed == 6);
  Isogeny cc = compose(dual(phi3), phi3);
  for (const auto& P : E29.rational_points()) CHECK(cc.evaluate(P) == scalar_mul(3, P));
  CHECK(compose(Isogeny::identity(E22), phi3).kernel_polynomial() == phi3.kernel_polynomial());
  CHECK_THROWS_AS(compose(phi3, phi3), Error);
}

TEST_CASE("multiplication and Frobenius isogenies") {
  Curve E = ex1(13);
  for (int m : {2, 3, -2}) {
    Isogeny mm = multiplication_isogeny(E, m);
    CHECK(mm.degree() == m * m);
    for (const auto& P : E.rational_points()) CHECK(mm.evaluate(P) == scalar_mul(m, P));
  }
  CHECK(frobenius_isogeny(E, 0).degree() == 1);
  Isogeny fr = frobenius_isogeny(E, 1);
  CHECK(fr.target() == E);
  CHECK(fr.insep_exp() == 1);
  CHECK(fr.degree() == 41);
  Field L = extension(gf41(), 3);
  std::mt19937_64 rng(5);
  Curve EL = E.base_change(L);
  for (int i = 0; i < 20; ++i) {
    Point P = EL.random_point(rng);
    Point pi = fr.evaluate(P);
    Point pi2 = fr.evaluate(pi);
    CHECK(pi2 - scalar_mul(6, pi) + scalar_mul(41, P) == EL.infinity());
  }
  Field K = field_create(7, 2);
  Curve S = Curve::create(K.generator(), K.one());
  Isogeny f1 = frobenius_isogeny(S, 1);
  CHECK(f1.target().a() == K.generator().frobenius(1));
  Isogeny f2 = compose(frobenius_isogeny(f1.target(), 1), f1);
  for (const auto& P : S.rational_points()) CHECK(f2.evaluate(P) == P);
}

TEST_CASE("supersingular Frobenius dual") {
  Field K = field_create(11, 2);
  for (std::uint64_t i = 0; i < 121; ++i) {
    const auto& reps = twist_representatives(K, K.element_at(i));
    for (const auto& E : reps) {
      if (E.trace() != -22 && E.trace() != 22) continue;
      Isogeny f = frobenius_isogeny(E, 1);
      Isogeny d = dual(f);
      CHECK(d.target() == E);
      for (const auto& P : E.rational_points()) CHECK(d.evaluate(f.evaluate(P)) == scalar_mul(11, P));
    }
  }
  Curve ord = ex1(5);
  CHECK_THROWS_AS(dual(frobenius_isogeny(ord, 1)), Error);
}

TEST_CASE("closure isogenies") {
  std::mt19937_64 rng(9);
  for (std::uint32_t p : {13u, 41u, 97u}) {
    Field F = field_create(p);
    for (int trial = 0; trial < 5; ++trial) {
      FieldElement a = F.from_int(static_cast<std::int64_t>(rng() % p) + 1);
      FieldElement b = F.from_int(static_cast<std::int64_t>(rng() % p));
      if ((a.square() * a * F.from_int(4) + b.square() * F.from_int(27)).is_zero()) continue;
      Curve E = Curve::create(a, b);
      for (int ell : {2, 3}) {
        std::size_t total = 0;
        for (const auto& phi : closure_isogenies(E, ell)) {
          const int d = phi.source().field().degree();
          total += static_cast<std::size_t>(d);
          Field L = phi.source().field();
          CHECK(phi.degree() == ell);
          if (ell <= 3) {
            FieldElement jE = embedding(F, L)(E.j_invariant());
            CHECK(modular_polynomial(ell).evaluate(jE, phi.target().j_invariant()).is_zero());
          }
        }
        CHECK(total == static_cast<std::size_t>(ell + 1));
      }
    }
  }
}

TEST_CASE("modular polynomials against Velu") {
  CHECK(modular_adjacent(2, gf41().from_int(29), gf41().from_int(5)));
  CHECK(modular_adjacent(3, gf41().from_int(29), gf41().from_int(22)));
  CHECK_FALSE(modular_adjacent(2, gf41().from_int(29), gf41().from_int(22)));
  CHECK_THROWS_AS(modular_polynomial(11), Error);
  for (int ell : kModularLevels) {
    const auto& m = modular_polynomial(ell);
    for (int i = 0; i <= ell + 1; ++i)
      for (int j = 0; j <= ell + 1; ++j) CHECK(m.coeff(i, j) == m.coeff(j, i));
    CHECK(m.coeff(ell + 1, 0) == 1);
  }
  std::mt19937_64 rng(2024);
  const std::uint32_t primes[] = {13, 17, 19, 23, 29, 31, 37, 43, 47, 59, 71, 83, 89, 101, 113, 127};
  int checked2 = 0;
  std::map<int, int> checked;
  for (int trial = 0; trial < 400; ++trial) {
    std::uint32_t p = primes[rng() % std::size(primes)];
    Field F = field_create(p, 1 + static_cast<int>(rng() % 2));
    FieldElement a = F.element_at(rng() % *F.size64()), b = F.element_at(rng() % *F.size64());
    if ((a.square() * a * F.from_int(4) + b.square() * F.from_int(27)).is_zero()) continue;
    Curve E = Curve::create(a, b);
    for (int ell : kModularLevels) {
      if (static_cast<std::uint32_t>(ell) == p) continue;
      if (ell > 3 && F.degree() > 1) continue;
      for (const auto& phi : rational_isogenies(E, ell)) {
        CHECK(modular_adjacent(ell, E.j_invariant(), phi.target().j_invariant()));
        ++checked[ell];
        if (ell == 2) ++checked2;
      }
    }
  }
  CHECK(checked2 >= 100);
  for (int ell : kModularLevels) CHECK(checked[ell] > 0);
}

TEST_CASE("every rational modular root is reached by a twist") {
  Field F = gf41();
  for (int ell : {2, 3, 5, 7}) {
    for (std::int64_t t : {6, -6}) {
      for (const auto& c : classes_with_trace(F, t)) {
        std::set<FieldElement> reached;
        for (const auto& E : twist_representatives(F, c.j))
          for (const auto& phi : rational_isogenies(E, ell)) reached.insert(phi.target().j_invariant());
        for (const auto& j2 : modular_polynomial(ell).specialize(c.j).roots()) CHECK(reached.count(j2) == 1);
        for (const auto& j2 : reached) CHECK(modular_adjacent(ell, c.j, j2));
      }
    }
  }
}

TEST_CASE("modular data from ISOGENION_DATA") {
  const char* dir = std::getenv("ISOGENION_DATA");
  std::string path = std::string(ISOGENION_TEST_DATA_DIR) + "/modular_polynomials.txt";
  std::ifstream f(path);
  REQUIRE(f);
  std::stringstream ss;
  ss << f.rdbuf();
  auto parsed = parse_modular_polynomials(ss.str());
  CHECK(parsed.size() == 4);
  for (int ell : kModularLevels)
    for (int i = 0; i <= ell + 1; ++i)
      for (int j = 0; j <= ell + 1; ++j) CHECK(parsed.at(ell).coeff(i, j) == modular_polynomial(ell).coeff(i, j));
  CHECK_THROWS_AS(parse_modular_polynomials("2 0 0 1\n"), Error);
  CHECK_THROWS_AS(parse_modular_polynomials("2 0 x\n"), Error);
  (void)dir;
}
