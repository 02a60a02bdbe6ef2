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

#include <random>
#include <set>

#include "doctest.h"
#include "isogenion/finite_field.hpp"
#include "isogenion/polynomial.hpp"

using namespace isogenion;

namespace {

FieldElement random_element(Field F, std::mt19937_64& rng) {
  std::vector<std::uint32_t> c(static_cast<std::size_t>(F.degree()));
  for (auto& v : c) v = static_cast<std::uint32_t>(rng() % F.characteristic());
  return F.from_coeffs(c);
}

// Monic divisor search over GF(p)[x], integer arithmetic only.
bool brute_irreducible(std::vector<std::int64_t> f, std::int64_t p) {
  int r = static_cast<int>(f.size()) - 1;
  for (int d = 1; d <= r / 2; ++d) {
    std::int64_t count = ipow(p, d);
    for (std::int64_t idx = 0; idx < count; ++idx) {
      std::vector<std::int64_t> g(static_cast<std::size_t>(d) + 1, 0);
      std::int64_t t = idx;
      for (int i = 0; i < d; ++i) {
        g[static_cast<std::size_t>(i)] = t % p;
        t /= p;
      }
      g[static_cast<std::size_t>(d)] = 1;
      std::vector<std::int64_t> rem = f;
      for (int s = r - d; s >= 0; --s) {
        std::int64_t c = rem[static_cast<std::size_t>(s + d)];
        for (int i = 0; i <= d; ++i) rem[static_cast<std::size_t>(s + i)] = mod(rem[static_cast<std::size_t>(s + i)] - c * g[static_cast<std::size_t>(i)], p);
      }
      bool zero = true;
      for (auto v : rem) zero = zero && v == 0;
      if (zero) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("field_create picks the least irreducible modulus") {
  Field F41 = field_create(41);
  CHECK(F41.modulus() == std::vector<std::uint32_t>{0});
  CHECK(F41.order() == 41);

  // Quadratics over GF(53) by (c0, c1): irreducible iff c1^2 - 4 c0 is a non-residue.
  std::vector<std::uint32_t> expected;
  for (std::int64_t c0 = 0; c0 < 53 && expected.empty(); ++c0) {
    for (std::int64_t c1 = 0; c1 < 53; ++c1) {
      std::int64_t disc = mod(c1 * c1 - 4 * c0, 53);
      if (disc != 0 && powmod(static_cast<std::uint64_t>(disc), 26, 53) == 52) {
        expected = {static_cast<std::uint32_t>(c0), static_cast<std::uint32_t>(c1)};
        break;
      }
    }
  }
  CHECK(expected == std::vector<std::uint32_t>{1, 1});
  CHECK(field_create(53, 2).modulus() == expected);

  for (auto [p, r] : {std::pair{5u, 3}, std::pair{5u, 4}, std::pair{7u, 2}, std::pair{3u, 4}, std::pair{41u, 3}}) {
    Field F = field_create(p, r);
    std::vector<std::int64_t> f(F.modulus().begin(), F.modulus().end());
    f.push_back(1);
    CHECK(brute_irreducible(f, p));
    // every lexicographically smaller tuple is reducible
    std::vector<std::int64_t> c(static_cast<std::size_t>(r), 0);
    c[0] = 1;
    int checked = 0;
    while (checked < 200) {
      if (std::vector<std::int64_t>(c.begin(), c.end()) == std::vector<std::int64_t>(f.begin(), f.end() - 1)) break;
      std::vector<std::int64_t> g = c;
      g.push_back(1);
      CHECK_FALSE(brute_irreducible(g, p));
      int i = r - 1;
      while (i >= 0 && ++c[static_cast<std::size_t>(i)] == static_cast<std::int64_t>(p)) c[static_cast<std::size_t>(i--)] = 0;
      ++checked;
    }
  }
}

TEST_CASE("field_create errors") {
  CHECK_THROWS_WITH_AS(field_create(4, 1), doctest::Contains("NotPrime"), Error);
  CHECK_THROWS_AS(field_create(65537, 1), Error);
  CHECK_THROWS_AS(field_create(41, 25), Error);
  try {
    field_create(1, 1);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotPrime);
  }
  CHECK(field_create(41, 2) == field_create(41, 2));
}

TEST_CASE("arith examples") {
  Field F = field_create(41);
  CHECK(F.from_int(40) + F.from_int(2) == F.from_int(1));
  CHECK(F.from_int(7) / F.from_int(7) == F.one());
  CHECK(arith(F.from_int(3), F.from_int(5), ArithOp::Sub) == F.from_int(39));
  CHECK_THROWS_AS(F.one() / F.zero(), Error);
  CHECK_THROWS_AS(F.one() + field_create(43).one(), Error);

  // x * x mod (x^2 + x + 1): long division gives -x - 1.
  Field G = field_create(53, 2);
  FieldElement x = G.generator();
  CHECK(x * x == G.from_coeffs({52, 52}));
}

TEST_CASE("field axioms on random samples") {
  std::mt19937_64 rng(7);
  for (auto [p, r] : {std::pair{41u, 1}, std::pair{53u, 2}, std::pair{7u, 5}, std::pair{41u, 12}, std::pair{11u, 24}}) {
    Field F = field_create(p, r);
    for (int i = 0; i < 10000; ++i) {
      auto a = random_element(F, rng), b = random_element(F, rng), c = random_element(F, rng);
      REQUIRE((a * b) * c == a * (b * c));
      REQUIRE((a + b) * c == a * c + b * c);
      REQUIRE(a + b - b == a);
      if (!a.is_zero()) REQUIRE(a * a.inverse() == F.one());
      if (i % 50 == 0) REQUIRE((a * b).frobenius() == a.frobenius() * b.frobenius());
    }
  }
}

TEST_CASE("sqrt") {
  Field F = field_create(41);
  auto z = F.zero().sqrt();
  REQUIRE(z);
  CHECK(z->first == F.zero());
  CHECK(z->second == F.zero());
  // exhaustive oracle over GF(41)
  std::vector<std::int64_t> roots2;
  for (int y = 0; y < 41; ++y) {
    if (y * y % 41 == 2) roots2.push_back(y);
  }
  CHECK(roots2 == std::vector<std::int64_t>{17, 24});
  auto s = F.from_int(2).sqrt();
  REQUIRE(s);
  CHECK(s->first == F.from_int(17));
  CHECK(s->second == F.from_int(24));
  CHECK_FALSE(field_create(7).from_int(3).sqrt());

  for (auto [p, r] : {std::pair{41u, 1}, std::pair{53u, 2}, std::pair{5u, 3}, std::pair{41u, 3}, std::pair{1009u, 1}}) {
    Field G = field_create(p, r);
    std::uint64_t q = *G.size64();
    std::uint64_t squares = 0;
    for (std::uint64_t i = 0; i < q; ++i) {
      FieldElement a = G.element_at(i);
      auto rt = a.sqrt();
      CHECK(rt.has_value() == a.is_square());
      if (!rt) continue;
      ++squares;
      REQUIRE(rt->first.square() == a);
      REQUIRE(rt->second.square() == a);
      REQUIRE(!(rt->second < rt->first));
    }
    CHECK(squares == (q + 1) / 2);
  }

  // Tonelli-Shanks path in a large field
  Field H = field_create(41, 12);
  std::mt19937_64 rng(3);
  for (int i = 0; i < 50; ++i) {
    FieldElement a = random_element(H, rng).square();
    auto rt = a.sqrt();
    REQUIRE(rt);
    CHECK(rt->first.square() == a);
    CHECK(rt->first + rt->second == H.zero());
  }
}

TEST_CASE("kronecker") {
  CHECK(kronecker(-8, 2) == 0);
  CHECK(kronecker(-212, 3) == 1);
  CHECK(kronecker(-212 % 3 + 3, 3) == 1);
  for (std::int64_t D = -50; D <= 50; ++D) CHECK(kronecker(D, 1) == 1);
  std::mt19937_64 rng(11);
  for (int i = 0; i < 2000; ++i) {
    std::int64_t D = static_cast<std::int64_t>(rng() % 2001) - 1000;
    std::int64_t m = static_cast<std::int64_t>(rng() % 60) + 1;
    std::int64_t n = static_cast<std::int64_t>(rng() % 60) + 1;
    REQUIRE(kronecker(D, m * n) == kronecker(D, m) * kronecker(D, n));
  }
  // Euler criterion oracle at odd primes
  for (std::int64_t p : {3, 5, 7, 41, 53}) {
    for (std::int64_t D = -100; D <= 100; ++D) {
      std::int64_t a = mod(D, p);
      int expect = a == 0 ? 0 : (powmod(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>((p - 1) / 2), static_cast<std::uint64_t>(p)) == 1 ? 1 : -1);
      REQUIRE(kronecker(D, p) == expect);
    }
  }
}

TEST_CASE("frobenius") {
  Field F = field_create(41);
  for (int a = 0; a < 41; ++a) CHECK(F.from_int(a).frobenius() == F.from_int(a));
  Field G = field_create(53, 2);
  std::mt19937_64 rng(5);
  for (int i = 0; i < 200; ++i) {
    FieldElement a = random_element(G, rng);
    CHECK(a.frobenius().frobenius() == a);
    CHECK(a.frobenius() == a.pow(std::uint64_t{53}));
  }
  FieldElement x = G.generator();
  FieldElement sq = G.one();
  for (int i = 0; i < 53; ++i) sq = sq * x;
  CHECK(x.frobenius() == sq);
  Field H = field_create(7, 5);
  for (int i = 0; i < 100; ++i) {
    FieldElement a = random_element(H, rng);
    CHECK(a.frobenius(5) == a);
    CHECK(a.frobenius(2) == a.pow(std::uint64_t{49}));
  }
}

TEST_CASE("polynomial roots agree with exhaustive search") {
  std::mt19937_64 rng(13);
  for (auto [p, r] : {std::pair{41u, 1}, std::pair{53u, 2}, std::pair{97u, 1}}) {
    Field F = field_create(p, r);
    for (int trial = 0; trial < 30; ++trial) {
      int deg = 1 + static_cast<int>(rng() % 6);
      std::vector<FieldElement> c;
      for (int i = 0; i < deg; ++i) c.push_back(random_element(F, rng));
      c.push_back(F.one());
      // plant some roots
      Polynomial f(F, c);
      f = f * Polynomial::linear(random_element(F, rng)) * Polynomial::linear(random_element(F, rng));
      std::vector<FieldElement> brute;
      for (std::uint64_t i = 0; i < *F.size64(); ++i) {
        if (f(F.element_at(i)).is_zero()) brute.push_back(F.element_at(i));
      }
      std::sort(brute.begin(), brute.end());
      CHECK(f.roots() == brute);
    }
  }
}

TEST_CASE("embeddings") {
  std::mt19937_64 rng(17);
  for (auto [p, r, d] : {std::tuple{53u, 2, 2}, std::tuple{41u, 1, 6}, std::tuple{41u, 2, 3}, std::tuple{11u, 4, 3}}) {
    Field K = field_create(p, r);
    Field L = extension(K, d);
    const Embedding& e = embedding(K, L);
    for (int i = 0; i < 200; ++i) {
      FieldElement a = random_element(K, rng), b = random_element(K, rng);
      REQUIRE(e(a * b) == e(a) * e(b));
      REQUIRE(e(a + b) == e(a) + e(b));
      auto back = e.descend(e(a));
      REQUIRE(back);
      REQUIRE(*back == a);
    }
    // x^(q) = x exactly on the image
    int found_outside = 0;
    for (int i = 0; i < 50; ++i) {
      FieldElement c = random_element(L, rng);
      bool in_image = c.frobenius(r) == c;
      CHECK(e.descend(c).has_value() == in_image);
      found_outside += in_image ? 0 : 1;
    }
    CHECK(found_outside > 0);
  }
}
