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

#include "isogenion/quadratic_order.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <tuple>

#include "isogenion/error.hpp"
#include "isogenion/numtheory.hpp"

namespace isogenion {

namespace {

using i128 = __int128;

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

struct Hnf {
  std::int64_t A, B, C;
};

// Z-span of the vectors (x, y) in the basis (1, omega).
Hnf hermite(const std::vector<OrderElement>& v) {
  std::int64_t g = 0;
  i128 wx = 0;
  std::vector<i128> xs;
  for (const auto& e : v) {
    if (e.y == 0) {
      xs.push_back(e.x);
      continue;
    }
    if (g == 0) {
      g = e.y;
      wx = e.x;
      continue;
    }
    // s*g + u*y = d
    std::int64_t s = 1, u = 0, s1 = 0, u1 = 1, r0 = g, r1 = e.y;
    while (r1 != 0) {
      std::int64_t q = r0 / r1;
      std::tie(r0, r1) = std::make_pair(r1, r0 - q * r1);
      std::tie(s, s1) = std::make_pair(s1, s - q * s1);
      std::tie(u, u1) = std::make_pair(u1, u - q * u1);
    }
    const std::int64_t d = r0;
    xs.push_back(static_cast<i128>(e.y / d) * wx - static_cast<i128>(g / d) * e.x);
    wx = static_cast<i128>(s) * wx + static_cast<i128>(u) * e.x;
    g = d;
  }
  i128 A = 0;
  for (i128 x : xs) {
    i128 a = x < 0 ? -x : x, b = A;
    while (b != 0) {
      i128 t = a % b;
      a = b;
      b = t;
    }
    A = a;
  }
  if (g == 0 || A == 0) raise(ErrorKind::NotAnIdeal, "lattice is not of full rank");
  if (g < 0) {
    g = -g;
    wx = -wx;
  }
  i128 B = wx % A;
  if (B < 0) B += A;
  return Hnf{static_cast<std::int64_t>(A), static_cast<std::int64_t>(B), g};
}

QuadIdeal from_hnf(const QuadOrder& O, const Hnf& h) {
  if (h.A % h.C != 0 || h.B % h.C != 0) raise(ErrorKind::NotAnIdeal, "lattice is not closed under omega");
  return ideal_create(O, h.C, h.A / h.C, h.B / h.C);
}

}  // namespace

QuadOrder::QuadOrder(std::int64_t D0, std::int64_t f) : D0_(D0), f_(f) {
  if (D0 >= 0) raise(ErrorKind::NotImaginaryQuadratic, "D0 must be negative");
  if (!is_fundamental_discriminant(D0)) raise(ErrorKind::InvalidArgument, "D0 is not a fundamental discriminant");
  if (f < 1) raise(ErrorKind::InvalidArgument, "conductor must be positive");
  if (mod(D0, 4) == 0) {
    T_ = 0;
    N_ = -f * f * (D0 / 4);
  } else {
    T_ = f;
    N_ = f * f * (1 - D0) / 4;
  }
}

QuadOrder QuadOrder::from_discriminant(std::int64_t disc) {
  if (disc >= 0) raise(ErrorKind::NotImaginaryQuadratic, "discriminant must be negative");
  if (mod(disc, 4) == 2 || mod(disc, 4) == 3) raise(ErrorKind::InvalidArgument, "not a discriminant");
  std::int64_t f = 1;
  for (auto [ell, e] : factorize(static_cast<std::uint64_t>(-disc))) f *= ipow(static_cast<std::int64_t>(ell), e / 2);
  std::int64_t D = disc / (f * f);
  if (mod(D, 4) == 2 || mod(D, 4) == 3) {
    D *= 4;
    f /= 2;
  }
  return QuadOrder(D, f);
}

std::string QuadOrder::omega_string() const {
  if (mod(D0_, 4) == 0) return (f_ == 1 ? "" : std::to_string(f_) + "*") + "sqrt(" + std::to_string(D0_ / 4) + ")";
  return (f_ == 1 ? "" : std::to_string(f_) + "*") + "(1+sqrt(" + std::to_string(D0_) + "))/2";
}

OrderElement multiply(const QuadOrder& O, const OrderElement& u, const OrderElement& v) {
  const std::int64_t yy = u.y * v.y;
  return {u.x * v.x - yy * O.N(), u.x * v.y + u.y * v.x + yy * O.T()};
}

OrderElement conjugate(const QuadOrder& O, const OrderElement& u) { return {u.x + u.y * O.T(), -u.y}; }

std::int64_t element_norm(const QuadOrder& O, const OrderElement& u) {
  return u.x * u.x + u.x * u.y * O.T() + u.y * u.y * O.N();
}

bool QuadIdeal::contains(const OrderElement& u) const {
  if (u.y % C() != 0) return false;
  return (u.x - (u.y / C()) * B()) % A() == 0;
}

std::string QuadIdeal::to_string() const {
  const std::int64_t D0 = order.D0(), f = order.f();
  std::string s = std::to_string(A()) + "Z + (";
  if (mod(D0, 4) == 0) {
    s += std::to_string(B()) + " + " + std::to_string(C() * f) + "*sqrt(" + std::to_string(D0 / 4) + ")";
  } else {
    s += "(" + std::to_string(2 * B() + C() * f) + " + " + std::to_string(C() * f) + "*sqrt(" + std::to_string(D0) +
         "))/2";
  }
  return s + ")Z";
}

bool operator<(const QuadIdeal& x, const QuadIdeal& y) {
  return std::make_tuple(x.norm(), x.t, x.a, x.b) < std::make_tuple(y.norm(), y.t, y.a, y.b);
}

QuadIdeal ideal_create(const QuadOrder& O, std::int64_t t, std::int64_t a, std::int64_t b) {
  if (t < 1 || a < 1) raise(ErrorKind::InvalidArgument, "t and a must be positive");
  b = mod(b, a);
  const i128 n = static_cast<i128>(b) * b + static_cast<i128>(O.T()) * b + O.N();
  if (n % a != 0) raise(ErrorKind::NotAnIdeal, "a does not divide the norm of b + omega");
  QuadIdeal I;
  I.order = O;
  I.t = t;
  I.a = a;
  I.b = b;
  return I;
}

QuadIdeal ideal_from_generators(const QuadOrder& O, const std::vector<OrderElement>& gens) {
  return from_hnf(O, hermite(gens));
}

QuadIdeal unit_ideal(const QuadOrder& O) { return ideal_create(O, 1, 1, 0); }

QuadIdeal principal_ideal(const QuadOrder& O, const OrderElement& u) {
  return ideal_from_generators(O, {u, multiply(O, u, {0, 1})});
}

std::int64_t ideal_norm(const QuadIdeal& I) { return I.norm(); }

std::int64_t multiplier_conductor(const QuadIdeal& I) {
  const QuadOrder& O = I.order;
  const std::vector<OrderElement> basis{{I.A(), 0}, {I.B(), I.C()}};
  auto divs = divisors(static_cast<std::uint64_t>(O.f()));
  for (auto it = divs.rbegin(); it != divs.rend(); ++it) {
    const auto s = static_cast<std::int64_t>(*it);
    bool ok = true;
    for (const auto& e : basis) {
      OrderElement w = multiply(O, e, {0, 1});
      if (w.x % s != 0 || w.y % s != 0 || !I.contains({w.x / s, w.y / s})) {
        ok = false;
        break;
      }
    }
    if (ok) return O.f() / s;
  }
  return O.f();
}

bool is_invertible(const QuadIdeal& I) { return multiplier_conductor(I) == I.order.f(); }

QuadIdeal ideal_multiply(const QuadIdeal& I, const QuadIdeal& J) {
  if (I.order != J.order) raise(ErrorKind::OrderMismatch, "ideals in different orders");
  const QuadOrder& O = I.order;
  const OrderElement i1{I.A(), 0}, i2{I.B(), I.C()}, j1{J.A(), 0}, j2{J.B(), J.C()};
  return ideal_from_generators(O, {multiply(O, i1, j1), multiply(O, i1, j2), multiply(O, i2, j1), multiply(O, i2, j2)});
}

QuadIdeal ideal_conjugate(const QuadIdeal& I) {
  const QuadOrder& O = I.order;
  return ideal_from_generators(O, {{I.A(), 0}, conjugate(O, {I.B(), I.C()})});
}

std::vector<QuadIdeal> primes_above(const QuadOrder& O, std::int64_t ell) {
  if (ell < 2 || !is_prime(static_cast<std::uint64_t>(ell))) raise(ErrorKind::InvalidArgument, "ell must be prime");
  if (O.f() % ell == 0) raise(ErrorKind::NotMaximalAtPrime, "order is not maximal at " + std::to_string(ell));
  std::vector<QuadIdeal> out;
  for (std::int64_t b = 0; b < ell; ++b)
    if (mod(b * b + O.T() * b + O.N(), ell) == 0) out.push_back(ideal_create(O, 1, ell, b));
  return out;
}

std::vector<QuadIdeal> enumerate_ideals(const QuadOrder& O, std::int64_t norm) {
  if (norm < 1) raise(ErrorKind::InvalidArgument, "norm must be positive");
  if (norm > kMaxEnumeratedNorm) raise(ErrorKind::BoundExceeded, "norm exceeds 10^6");
  std::vector<QuadIdeal> out;
  for (std::int64_t t = 1; t * t <= norm; ++t) {
    if (norm % (t * t) != 0) continue;
    const std::int64_t a = norm / (t * t);
    const std::int64_t T = mod(O.T(), a), N = mod(O.N(), a);
    for (std::int64_t b = 0; b < a; ++b)
      if ((static_cast<i128>(b) * b + static_cast<i128>(T) * b + N) % a == 0) out.push_back(ideal_create(O, t, a, b));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------

bool operator<(const Form& x, const Form& y) { return std::tie(x.a, x.b, x.c) < std::tie(y.a, y.b, y.c); }

Form reduce(Form F) {
  const std::int64_t D = F.b * F.b - 4 * F.a * F.c;
  if (F.a <= 0 || D >= 0) raise(ErrorKind::InvalidArgument, "form is not positive definite");
  auto normalize = [D](Form& G) {
    std::int64_t k = floor_div(G.a - G.b, 2 * G.a);
    G.b += 2 * k * G.a;
    G.c = (G.b * G.b - D) / (4 * G.a);
  };
  normalize(F);
  while (F.a > F.c || (F.a == F.c && F.b < 0)) {
    F = Form{F.c, -F.b, F.a};
    normalize(F);
  }
  return F;
}

std::vector<Form> reduced_forms(std::int64_t disc) {
  if (disc >= 0 || mod(disc, 4) > 1) raise(ErrorKind::InvalidArgument, "not a negative discriminant");
  if (-disc > kMaxDiscriminant) raise(ErrorKind::BoundExceeded, "discriminant exceeds 10^6");
  std::vector<Form> out;
  for (std::int64_t a = 1; 3 * a * a <= -disc; ++a) {
    for (std::int64_t b = -a + 1; b <= a; ++b) {
      const std::int64_t num = b * b - disc;
      if (num % (4 * a) != 0) continue;
      const std::int64_t c = num / (4 * a);
      if (c < a || (c == a && b < 0)) continue;
      if (std::gcd(std::gcd(a, b < 0 ? -b : b), c) != 1) continue;
      out.push_back(Form{a, b, c});
    }
  }
  return out;
}

Form ideal_form(const QuadIdeal& I) {
  const QuadOrder& O = I.order;
  const std::int64_t a = I.a, b = I.b;
  return Form{a, 2 * b + O.T(), (b * b + O.T() * b + O.N()) / a};
}

QuadIdeal form_ideal(const QuadOrder& O, const Form& F) {
  if (F.b * F.b - 4 * F.a * F.c != O.disc()) raise(ErrorKind::OrderMismatch, "form discriminant differs");
  return ideal_create(O, 1, F.a, (F.b - O.T()) / 2);
}

bool ideals_equivalent(const QuadIdeal& I, const QuadIdeal& J) {
  if (I.order != J.order) raise(ErrorKind::OrderMismatch, "ideals in different orders");
  if (!is_invertible(I) || !is_invertible(J)) raise(ErrorKind::InvalidArgument, "equivalence needs invertible ideals");
  return reduce(ideal_form(I)) == reduce(ideal_form(J));
}

std::int64_t ideal_class_order(const QuadIdeal& I) {
  if (!is_invertible(I)) raise(ErrorKind::InvalidArgument, "class order needs an invertible ideal");
  const QuadOrder& O = I.order;
  const Form one = reduce(ideal_form(unit_ideal(O)));
  QuadIdeal J = form_ideal(O, reduce(ideal_form(I)));
  const QuadIdeal base = J;
  for (std::int64_t k = 1;; ++k) {
    Form F = reduce(ideal_form(J));
    if (F == one) return k;
    J = form_ideal(O, reduce(ideal_form(ideal_multiply(form_ideal(O, F), base))));
    if (k > kMaxDiscriminant) raise(ErrorKind::DataError, "class order search did not terminate");
  }
}

IdealClassGroup class_group(const QuadOrder& O) {
  IdealClassGroup g;
  g.order = O;
  g.forms = reduced_forms(O.disc());
  for (const auto& F : g.forms) g.representatives.push_back(form_ideal(O, F));
  g.h = static_cast<std::int64_t>(g.forms.size());
  return g;
}

std::int64_t class_number(std::int64_t disc) { return static_cast<std::int64_t>(reduced_forms(disc).size()); }

// ---------------------------------------------------------------------

std::int64_t two_over_pi_sqrt_floor(std::int64_t n) {
  if (n < 0) raise(ErrorKind::InvalidArgument, "negative argument");
  // pi^2 * 10^40 lies strictly between these integers.
  static const BigInt lo("98696044010893586188344909998761511353136");
  static const BigInt hi("98696044010893586188344909998761511353137");
  static const BigInt scale = boost::multiprecision::pow(BigInt(10), 40);
  const BigInt rhs = BigInt(4) * n * scale;
  // m is admissible iff m^2 pi^2 <= 4n.
  auto below = [&](std::int64_t m) {
    const BigInt m2 = BigInt(m) * m;
    if (m2 * hi <= rhs) return true;
    if (m2 * lo >= rhs) return false;
    raise(ErrorKind::DataError, "pi^2 bracket too coarse");
  };
  std::int64_t m = static_cast<std::int64_t>(2.0 * std::sqrt(static_cast<double>(n)) / M_PI);
  while (m > 0 && !below(m)) --m;
  while (below(m + 1)) ++m;
  return m;
}

std::int64_t minkowski_bound(const QuadOrder& O) { return two_over_pi_sqrt_floor(-O.disc()); }

std::int64_t ideal_count_invertible(std::int64_t f, std::int64_t ell, int n, std::int64_t D0) {
  if (n < 0) raise(ErrorKind::InvalidArgument, "negative exponent");
  if (n == 0) return 1;
  const int v = valuation(f, ell);
  const int chi = kronecker(D0, ell);
  if (v == 0) {
    if (chi == 1) return n + 1;
    if (chi == 0) return 1;
    return n % 2 == 0 ? 1 : 0;
  }
  if (n % 2 == 1 && (n < 2 * v || chi == -1)) return 0;
  if (n < 2 * v) return ipow(ell, n / 2);
  if (chi == -1) return ipow(ell, v - 1) * (ell + 1);
  if (chi == 0) return ipow(ell, v);
  return (n - 2 * v + 1) * ipow(ell, v - 1) * (ell - 1);
}

std::int64_t ideal_count_noninvertible(std::int64_t f, std::int64_t ell, int n, std::int64_t D0) {
  const int v = valuation(f, ell);
  std::int64_t s = 0;
  for (int k = 1; k <= std::min(n, v); ++k) s += ideal_count_invertible(f / ipow(ell, k), ell, n - k, D0);
  return s;
}

}  // namespace isogenion
