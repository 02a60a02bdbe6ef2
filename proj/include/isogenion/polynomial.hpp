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

#ifndef ISOGENION_POLYNOMIAL_HPP
#define ISOGENION_POLYNOMIAL_HPP

#include <optional>
#include <string>
#include <vector>

#include "isogenion/finite_field.hpp"

namespace isogenion {

class Embedding;

// Dense univariate polynomial over a Field, constant term first, no
// trailing zeros.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(Field F) : F_(F) {}
  Polynomial(Field F, std::vector<FieldElement> c);

  static Polynomial constant(const FieldElement& c);
  static Polynomial x(Field F);
  // x - a
  static Polynomial linear(const FieldElement& a);

  Field field() const { return F_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  FieldElement coeff(int i) const;
  FieldElement leading() const;
  const std::vector<FieldElement>& coeffs() const { return c_; }

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator*(const FieldElement& s) const;
  Polynomial operator%(const Polynomial& m) const;
  Polynomial operator/(const Polynomial& m) const;
  Polynomial operator-() const;
  void divmod(const Polynomial& b, Polynomial& q, Polynomial& r) const;

  Polynomial monic() const;
  Polynomial derivative() const;
  FieldElement operator()(const FieldElement& x) const;
  // this(g(x))
  Polynomial compose(const Polynomial& g) const;
  Polynomial powmod(const BigInt& e, const Polynomial& m) const;
  Polynomial squarefree() const;
  // Coefficients mapped through an embedding into a larger field.
  Polynomial map(const Embedding& emb) const;
  // Coefficientwise x -> x^(p^times).
  Polynomial frobenius(int times) const;

  // Distinct roots in the coefficient field, lexicographically ascending.
  std::vector<FieldElement> roots() const;

  std::string to_string() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.F_ == b.F_ && a.c_ == b.c_; }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

 private:
  void trim();
  Field F_;
  std::vector<FieldElement> c_;
};

Polynomial gcd(Polynomial a, Polynomial b);
Polynomial product_of_linears(Field F, const std::vector<FieldElement>& roots);

// Field embedding GF(p^r) -> GF(p^(r d)), x -> least root of the base modulus.
class Embedding {
 public:
  Embedding(Field base, Field ext);

  Field base() const { return base_; }
  Field ext() const { return ext_; }
  FieldElement operator()(const FieldElement& a) const;
  // Preimage when b lies in the image.
  std::optional<FieldElement> descend(const FieldElement& b) const;
  std::optional<Polynomial> descend(const Polynomial& f) const;

 private:
  Field base_, ext_;
  std::vector<FieldElement> powers_;
};

// Cached embedding between nested fields; identity when base == ext.
const Embedding& embedding(Field base, Field ext);

// GF(p^(r d)) for base GF(p^r).
Field extension(Field base, int d);

}  // namespace isogenion

#endif  // ISOGENION_POLYNOMIAL_HPP
