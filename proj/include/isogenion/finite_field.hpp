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

#ifndef ISOGENION_FINITE_FIELD_HPP
#define ISOGENION_FINITE_FIELD_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "isogenion/error.hpp"
#include "isogenion/numtheory.hpp"

namespace isogenion {

inline constexpr std::uint32_t kMaxPrime = 1u << 16;
inline constexpr int kMaxDegree = 24;

struct FieldData;
class FieldElement;

// GF(p^r) as GF(p)[x]/(m(x)). Handles are interned: equal (p, r) give the
// same underlying data, so comparison is pointer comparison.
class Field {
 public:
  Field() = default;

  std::uint32_t characteristic() const;
  int degree() const;
  const BigInt& order() const;
  // Coefficients c0..c_{r-1} of the monic modulus (leading 1 omitted).
  const std::vector<std::uint32_t>& modulus() const;

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement from_int(std::int64_t v) const;
  FieldElement from_coeffs(const std::vector<std::uint32_t>& c) const;
  FieldElement generator() const;  // the class of x
  // Element with coefficient digits of `index` in base p (c0 least significant).
  FieldElement element_at(std::uint64_t index) const;
  // Number of elements if it fits in 64 bits.
  std::optional<std::uint64_t> size64() const;

  // Smallest-index element that is not a square; requires odd q.
  const FieldElement& nonresidue() const;

  bool valid() const { return d_ != nullptr; }
  const FieldData* data() const { return d_; }
  std::string to_string() const;

  friend bool operator==(const Field& a, const Field& b) { return a.d_ == b.d_; }
  friend bool operator!=(const Field& a, const Field& b) { return a.d_ != b.d_; }

 private:
  friend Field field_create(std::uint32_t p, int r);
  friend class FieldElement;
  explicit Field(const FieldData* d) : d_(d) {}
  const FieldData* d_ = nullptr;
};

Field field_create(std::uint32_t p, int r = 1);

class FieldElement {
 public:
  using Coeffs = std::array<std::uint32_t, kMaxDegree>;

  FieldElement() = default;

  Field field() const;
  std::uint32_t coeff(int i) const { return c_[static_cast<std::size_t>(i)]; }
  const Coeffs& coeffs() const { return c_; }
  bool is_zero() const;
  bool is_one() const;
  // Base-p digit value; meaningful while q fits in 64 bits.
  std::uint64_t index() const;
  // Value of the constant coefficient when the element lies in GF(p).
  std::optional<std::uint32_t> as_prime_field() const;

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
  FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
  FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }

  FieldElement scaled(std::int64_t k) const;
  FieldElement square() const { return *this * *this; }
  FieldElement inverse() const;
  FieldElement pow(const BigInt& e) const;
  FieldElement pow(std::uint64_t e) const;
  // x -> x^p, applied `times` times.
  FieldElement frobenius(int times = 1) const;

  bool is_square() const;
  // Both roots, lexicographically least coefficient vector first.
  std::optional<std::pair<FieldElement, FieldElement>> sqrt() const;

  std::string to_string() const;

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.f_ == b.f_ && a.c_ == b.c_;
  }
  friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }
  // Lexicographic on (c0, c1, ...).
  friend bool operator<(const FieldElement& a, const FieldElement& b);

 private:
  friend class Field;
  const FieldData* f_ = nullptr;
  Coeffs c_{};
};

enum class ArithOp { Add, Sub, Mul, Div };
FieldElement arith(const FieldElement& a, const FieldElement& b, ArithOp op);

struct FieldElementHash {
  std::size_t operator()(const FieldElement& a) const;
};

}  // namespace isogenion

#endif  // ISOGENION_FINITE_FIELD_HPP
