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

#ifndef ISOGENION_QUADRATIC_ORDER_HPP
#define ISOGENION_QUADRATIC_ORDER_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace isogenion {

inline constexpr std::int64_t kMaxDiscriminant = 1000000;
inline constexpr std::int64_t kMaxEnumeratedNorm = 1000000;

// Z + Z*omega with omega = f*gamma, gamma = sqrt(D0)/2 or (1 + sqrt(D0))/2.
// omega^2 = T*omega - N.
class QuadOrder {
 public:
  QuadOrder() = default;
  QuadOrder(std::int64_t D0, std::int64_t f);
  static QuadOrder from_discriminant(std::int64_t disc);

  std::int64_t D0() const { return D0_; }
  std::int64_t f() const { return f_; }
  std::int64_t disc() const { return f_ * f_ * D0_; }
  std::int64_t T() const { return T_; }
  std::int64_t N() const { return N_; }
  std::string omega_string() const;

  friend bool operator==(const QuadOrder& x, const QuadOrder& y) { return x.D0_ == y.D0_ && x.f_ == y.f_; }
  friend bool operator!=(const QuadOrder& x, const QuadOrder& y) { return !(x == y); }

 private:
  std::int64_t D0_ = -4, f_ = 1, T_ = 0, N_ = 1;
};

// Element x + y*omega.
struct OrderElement {
  std::int64_t x = 0, y = 0;
  friend bool operator==(const OrderElement& a, const OrderElement& b) { return a.x == b.x && a.y == b.y; }
};
OrderElement multiply(const QuadOrder& O, const OrderElement& u, const OrderElement& v);
OrderElement conjugate(const QuadOrder& O, const OrderElement& u);
std::int64_t element_norm(const QuadOrder& O, const OrderElement& u);

// Z*a*t + Z*t*(b + omega), 0 <= b < a. In Hermite form the lattice is
// Z*A + Z*(B + C*omega) with A = a*t, B = b*t, C = t.
struct QuadIdeal {
  QuadOrder order;
  std::int64_t t = 1, a = 1, b = 0;

  std::int64_t A() const { return a * t; }
  std::int64_t B() const { return b * t; }
  std::int64_t C() const { return t; }
  std::int64_t norm() const { return t * t * a; }
  bool contains(const OrderElement& u) const;
  std::string to_string() const;

  friend bool operator==(const QuadIdeal& x, const QuadIdeal& y) {
    return x.order == y.order && x.t == y.t && x.a == y.a && x.b == y.b;
  }
  friend bool operator!=(const QuadIdeal& x, const QuadIdeal& y) { return !(x == y); }
  friend bool operator<(const QuadIdeal& x, const QuadIdeal& y);
};

QuadIdeal ideal_create(const QuadOrder& O, std::int64_t t, std::int64_t a, std::int64_t b);
// Lattice generated by arbitrary elements; must be a full-rank O-ideal.
QuadIdeal ideal_from_generators(const QuadOrder& O, const std::vector<OrderElement>& gens);
QuadIdeal unit_ideal(const QuadOrder& O);
QuadIdeal principal_ideal(const QuadOrder& O, const OrderElement& u);
std::int64_t ideal_norm(const QuadIdeal& I);
// Conductor of the multiplier ring {alpha : alpha*I in I}.
std::int64_t multiplier_conductor(const QuadIdeal& I);
bool is_invertible(const QuadIdeal& I);
QuadIdeal ideal_multiply(const QuadIdeal& I, const QuadIdeal& J);
QuadIdeal ideal_conjugate(const QuadIdeal& I);
std::vector<QuadIdeal> primes_above(const QuadOrder& O, std::int64_t ell);
// All ideals of the given norm in canonical order.
std::vector<QuadIdeal> enumerate_ideals(const QuadOrder& O, std::int64_t norm);

// Binary quadratic form a x^2 + b x y + c y^2.
struct Form {
  std::int64_t a = 1, b = 0, c = 1;
  friend bool operator==(const Form& x, const Form& y) { return x.a == y.a && x.b == y.b && x.c == y.c; }
  friend bool operator<(const Form& x, const Form& y);
};
Form reduce(Form F);
std::vector<Form> reduced_forms(std::int64_t disc);
// Form (a, 2b + T, c) of the primitive part of an invertible ideal.
Form ideal_form(const QuadIdeal& I);
QuadIdeal form_ideal(const QuadOrder& O, const Form& F);
bool ideals_equivalent(const QuadIdeal& I, const QuadIdeal& J);
// Order of the class of an invertible ideal.
std::int64_t ideal_class_order(const QuadIdeal& I);

struct IdealClassGroup {
  QuadOrder order;
  std::vector<Form> forms;
  std::vector<QuadIdeal> representatives;
  std::int64_t h = 0;
};
IdealClassGroup class_group(const QuadOrder& O);
std::int64_t class_number(std::int64_t disc);

// floor((2/pi) sqrt(n)) for n >= 0, exact.
std::int64_t two_over_pi_sqrt_floor(std::int64_t n);
std::int64_t minkowski_bound(const QuadOrder& O);

// Invertible and non-invertible ideal counts of norm ell^n in the order of
// conductor f inside the field of discriminant D0.
std::int64_t ideal_count_invertible(std::int64_t f, std::int64_t ell, int n, std::int64_t D0);
std::int64_t ideal_count_noninvertible(std::int64_t f, std::int64_t ell, int n, std::int64_t D0);

}  // namespace isogenion

#endif  // ISOGENION_QUADRATIC_ORDER_HPP
