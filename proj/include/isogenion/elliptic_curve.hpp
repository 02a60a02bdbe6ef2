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

#ifndef ISOGENION_ELLIPTIC_CURVE_HPP
#define ISOGENION_ELLIPTIC_CURVE_HPP

#include <cstdint>
#include <array>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "isogenion/finite_field.hpp"
#include "isogenion/polynomial.hpp"

namespace isogenion {

inline constexpr int kMaxTorsion = 64;
inline constexpr std::uint64_t kMaxCountField = 1ull << 20;

struct CurveData;
class Point;

// y^2 = x^3 + A x + B over GF(p^r), p > 3. Interned like Field.
class Curve {
 public:
  Curve() = default;
  static Curve create(const FieldElement& a, const FieldElement& b);

  Field field() const;
  const FieldElement& a() const;
  const FieldElement& b() const;
  FieldElement discriminant() const;  // 4A^3 + 27B^2
  FieldElement j_invariant() const;
  FieldElement rhs(const FieldElement& x) const;
  Polynomial rhs_polynomial() const;

  // |E(k)| and t; exhaustive count for q <= 2^20, recurrence for base changes.
  const BigInt& order() const;
  const BigInt& trace_big() const;
  std::int64_t trace() const;
  BigInt order_over(int k) const;  // |E(GF(q^k))|
  bool is_supersingular() const;
  // Records a trace known from elsewhere (isogenous curve); no-op if cached.
  void seed_trace(const BigInt& t) const;
  bool trace_known() const;

  Curve base_change(Field ext) const;
  Curve quadratic_twist(const FieldElement& d) const;  // (d^2 A, d^3 B)
  Curve frobenius_conjugate(int e) const;              // (A^(p^e), B^(p^e))

  Point infinity() const;
  Point point(const FieldElement& x, const FieldElement& y) const;
  bool contains(const FieldElement& x, const FieldElement& y) const;
  Point random_point(std::mt19937_64& rng) const;
  std::vector<Point> rational_points() const;  // small fields only

  const CurveData* data() const { return d_; }
  bool valid() const { return d_ != nullptr; }
  std::string to_string() const;

  friend bool operator==(const Curve& x, const Curve& y) { return x.d_ == y.d_; }
  friend bool operator!=(const Curve& x, const Curve& y) { return x.d_ != y.d_; }

 private:
  explicit Curve(const CurveData* d) : d_(d) {}
  const CurveData* d_ = nullptr;
};

class Point {
 public:
  Point() = default;
  Point(Curve c, FieldElement x, FieldElement y) : curve_(c), x_(std::move(x)), y_(std::move(y)), inf_(false) {}
  static Point at_infinity(Curve c);

  const Curve& curve() const { return curve_; }
  bool is_infinity() const { return inf_; }
  const FieldElement& x() const { return x_; }
  const FieldElement& y() const { return y_; }
  std::string to_string() const;

  friend bool operator==(const Point& p, const Point& q) {
    return p.curve_ == q.curve_ && p.inf_ == q.inf_ && (p.inf_ || (p.x_ == q.x_ && p.y_ == q.y_));
  }
  friend bool operator!=(const Point& p, const Point& q) { return !(p == q); }

 private:
  Curve curve_;
  FieldElement x_, y_;
  bool inf_ = true;
};

struct PointHash {
  std::size_t operator()(const Point& p) const;
};

Point point_add(const Point& P, const Point& Q);
Point point_neg(const Point& P);
Point point_sub(const Point& P, const Point& Q);
Point scalar_mul(const BigInt& m, const Point& P);
Point scalar_mul(std::int64_t m, const Point& P);
inline Point operator+(const Point& P, const Point& Q) { return point_add(P, Q); }
inline Point operator-(const Point& P, const Point& Q) { return point_sub(P, Q); }
inline Point operator-(const Point& P) { return point_neg(P); }
inline Point operator*(std::int64_t m, const Point& P) { return scalar_mul(m, P); }

// Smallest n >= 1 with nP = 0, given a multiple N of the order.
BigInt point_order(const Point& P, const BigInt& multiple);
// Point coordinates mapped into a larger field.
Point embed_point(const Point& P, Field ext);
// (x, y) -> (x^(p^e), y^(p^e)) on the conjugate curve.
Point frobenius_point(const Point& P, int e);

struct PointCount {
  BigInt order;
  std::int64_t trace;
};
PointCount count_points(const Curve& E);

// ---------------------------------------------------------------------
// Isomorphism classes.

struct CurveClass {
  FieldElement j;
  std::int64_t trace = 0;
  int twist_index = 0;
  Curve representative;

  std::string label() const;
  friend bool operator==(const CurveClass& a, const CurveClass& b) {
    return a.j == b.j && a.trace == b.trace && a.twist_index == b.twist_index;
  }
  friend bool operator!=(const CurveClass& a, const CurveClass& b) { return !(a == b); }
  friend bool operator<(const CurveClass& a, const CurveClass& b);
};

// The deterministic scan of k-isomorphism classes with invariant j; position
// in the list is the twist index.
const std::vector<Curve>& twist_representatives(Field F, const FieldElement& j);
Curve curve_from_j(Field F, const FieldElement& j, std::int64_t trace);
CurveClass classify(const Curve& E);
std::vector<CurveClass> classes_with_trace(Field F, std::int64_t trace);

bool is_isomorphic(const Curve& E1, const Curve& E2);
// All u with (x, y) -> (u^2 x, u^3 y) mapping E1 onto E2 over the common field.
std::vector<FieldElement> isomorphisms(const Curve& E1, const Curve& E2);

// x-coordinates of the nonzero n-torsion points (monic, squarefree).
Polynomial torsion_x_polynomial(const Curve& E, int n);

// t^2 - 4q = f0^2 D0 with D0 fundamental; returns (D0, f0).
std::pair<std::int64_t, std::int64_t> discriminant_frobenius_order(std::int64_t q, std::int64_t t);

// ---------------------------------------------------------------------
// Torsion.

struct TorsionBasis {
  Point P, Q;
  Field ext;
};

// Degree k over the curve's field such that E[m] lies in E(GF(q^k)); the
// absolute degree of the result is also a multiple of `degree_multiple`.
int torsion_extension_degree(const Curve& E, int m, int degree_multiple = 1);
TorsionBasis torsion_basis(const Curve& E, int m);

// Discrete log in <G>, where G has order ell^a.
std::optional<BigInt> dlog_prime_power(const Point& X, const Point& G, std::int64_t ell, int a);

// Basis of E[m] over an extension together with an exhaustive coordinate
// table, so that any point of E[m] can be written as iP + jQ.
class TorsionFrame {
 public:
  // Cached; the absolute field degree is a multiple of `degree_multiple`.
  static std::shared_ptr<const TorsionFrame> get(const Curve& E, int m, int degree_multiple = 1);

  const Curve& base() const { return base_; }
  const Curve& curve() const { return ext_curve_; }
  Field ext() const { return ext_curve_.field(); }
  int m() const { return m_; }
  const Point& P() const { return P_; }
  const Point& Q() const { return Q_; }
  Point point(std::int64_t i, std::int64_t j) const;
  std::optional<std::pair<int, int>> coords(const Point& R) const;
  // Matrix of the q-power Frobenius: columns are coords of pi(P), pi(Q).
  std::array<std::array<int, 2>, 2> frobenius() const;

  TorsionFrame(Curve base, int m, int degree_multiple);

 private:
  void build_table() const;
  Curve base_, ext_curve_;
  int m_ = 1;
  Point P_, Q_;
  mutable std::once_flag table_once_;
  mutable std::unordered_map<Point, std::pair<int, int>, PointHash> table_;
};

}  // namespace isogenion

#endif  // ISOGENION_ELLIPTIC_CURVE_HPP
