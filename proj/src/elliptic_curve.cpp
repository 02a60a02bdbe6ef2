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

#include "isogenion/elliptic_curve.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <tuple>

namespace isogenion {

struct CurveData {
  Field F;
  FieldElement a, b;
  mutable std::mutex mu;
  mutable bool counted = false;
  mutable BigInt order, trace;
};

namespace {

using CurveKey = std::tuple<const FieldData*, FieldElement::Coeffs, FieldElement::Coeffs>;

std::mutex& registry_mutex() {
  static std::mutex m;
  return m;
}

std::map<CurveKey, std::unique_ptr<CurveData>>& registry() {
  static std::map<CurveKey, std::unique_ptr<CurveData>> r;
  return r;
}

void set_trace(const CurveData* d, const BigInt& t) {
  std::lock_guard<std::mutex> lock(d->mu);
  if (d->counted) return;
  d->trace = t;
  d->order = d->F.order() + 1 - t;
  d->counted = true;
}

std::optional<BigInt> known_trace(const CurveData* d) {
  std::lock_guard<std::mutex> lock(d->mu);
  if (d->counted) return d->trace;
  return std::nullopt;
}

// t_k for the degree-k extension from t_1 = t.
BigInt trace_over(const BigInt& t, const BigInt& q, int k) {
  BigInt prev = 2, cur = t;
  if (k == 0) return prev;
  for (int i = 1; i < k; ++i) {
    BigInt next = t * cur - q * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

PointCount sweep(const Curve& E) {
  Field F = E.field();
  auto q = F.size64();
  if (!q || *q > kMaxCountField) raise(ErrorKind::BoundExceeded, "point counting limited to q <= 2^20");
  std::int64_t affine = 0;
  if (F.degree() == 1) {
    const std::int64_t p = F.characteristic();
    std::vector<std::int8_t> chi(static_cast<std::size_t>(p), -1);
    chi[0] = 0;
    for (std::int64_t y = 1; y < p; ++y) chi[static_cast<std::size_t>(y * y % p)] = 1;
    const std::int64_t A = *E.a().as_prime_field(), B = *E.b().as_prime_field();
    for (std::int64_t x = 0; x < p; ++x) {
      std::int64_t v = ((x * x % p) * x + A * x + B) % p;
      affine += 1 + chi[static_cast<std::size_t>(v)];
    }
  } else {
    for (std::uint64_t i = 0; i < *q; ++i) {
      FieldElement v = E.rhs(F.element_at(i));
      affine += v.is_zero() ? 1 : (v.is_square() ? 2 : 0);
    }
  }
  PointCount c;
  c.order = BigInt(affine + 1);
  c.trace = static_cast<std::int64_t>(*q) - affine;
  return c;
}

bool is_nth_power(const FieldElement& c, std::int64_t n) {
  if (c.is_zero()) return true;
  BigInt qm1 = c.field().order() - 1;
  BigInt g = boost::multiprecision::gcd(qm1, BigInt(n));
  return c.pow(qm1 / g).is_one();
}

std::int64_t small_gcd_q(Field F, std::int64_t n) {
  BigInt qm1 = F.order() - 1;
  return static_cast<std::int64_t>(boost::multiprecision::gcd(qm1, BigInt(n)));
}

}  // namespace

// ---------------------------------------------------------------------

Curve Curve::create(const FieldElement& a, const FieldElement& b) {
  if (a.field() != b.field()) raise(ErrorKind::FieldMismatch, "curve coefficients in different fields");
  Field F = a.field();
  if (F.characteristic() <= 3) raise(ErrorKind::InvalidArgument, "characteristic must exceed 3");
  FieldElement disc = a.square() * a * F.from_int(4) + b.square() * F.from_int(27);
  if (disc.is_zero()) raise(ErrorKind::SingularCurve, "4A^3 + 27B^2 = 0");
  CurveKey key{F.data(), a.coeffs(), b.coeffs()};
  std::lock_guard<std::mutex> lock(registry_mutex());
  auto& slot = registry()[key];
  if (!slot) {
    slot = std::make_unique<CurveData>();
    slot->F = F;
    slot->a = a;
    slot->b = b;
  }
  return Curve(slot.get());
}

Field Curve::field() const { return d_->F; }
const FieldElement& Curve::a() const { return d_->a; }
const FieldElement& Curve::b() const { return d_->b; }

FieldElement Curve::discriminant() const {
  Field F = field();
  return a().square() * a() * F.from_int(4) + b().square() * F.from_int(27);
}

FieldElement Curve::j_invariant() const {
  Field F = field();
  FieldElement a3 = a().square() * a() * F.from_int(4);
  return F.from_int(1728) * a3 / discriminant();
}

FieldElement Curve::rhs(const FieldElement& x) const { return (x.square() + a()) * x + b(); }

Polynomial Curve::rhs_polynomial() const {
  Field F = field();
  return Polynomial(F, {b(), a(), F.zero(), F.one()});
}

const BigInt& Curve::order() const {
  trace_big();
  return d_->order;
}

const BigInt& Curve::trace_big() const {
  {
    std::lock_guard<std::mutex> lock(d_->mu);
    if (d_->counted) return d_->trace;
  }
  PointCount c = sweep(*this);
  set_trace(d_, BigInt(c.trace));
  return d_->trace;
}

std::int64_t Curve::trace() const {
  const BigInt& t = trace_big();
  if (boost::multiprecision::abs(t) > BigInt(INT64_MAX)) raise(ErrorKind::BoundExceeded, "trace exceeds 64 bits");
  return static_cast<std::int64_t>(t);
}

BigInt Curve::order_over(int k) const {
  BigInt q = field().order();
  return boost::multiprecision::pow(q, static_cast<unsigned>(k)) + 1 - trace_over(trace_big(), q, k);
}

void Curve::seed_trace(const BigInt& t) const { set_trace(d_, t); }

bool Curve::trace_known() const { return known_trace(d_).has_value(); }

bool Curve::is_supersingular() const { return trace_big() % field().characteristic() == 0; }

Curve Curve::base_change(Field ext) const {
  if (ext == field()) return *this;
  const Embedding& emb = embedding(field(), ext);
  Curve E = create(emb(a()), emb(b()));
  std::optional<BigInt> t = known_trace(d_);
  if (!t && field().size64() && *field().size64() <= kMaxCountField) t = trace_big();
  if (t) set_trace(E.d_, trace_over(*t, field().order(), ext.degree() / field().degree()));
  return E;
}

Curve Curve::quadratic_twist(const FieldElement& d) const {
  Curve E = create(d.square() * a(), d.square() * d * b());
  if (auto t = known_trace(d_)) {
    if (!d.is_square()) set_trace(E.d_, -*t);
    else set_trace(E.d_, *t);
  }
  return E;
}

Curve Curve::frobenius_conjugate(int e) const {
  Curve E = create(a().frobenius(e), b().frobenius(e));
  if (auto t = known_trace(d_)) set_trace(E.d_, *t);
  return E;
}

Point Curve::infinity() const { return Point::at_infinity(*this); }

bool Curve::contains(const FieldElement& x, const FieldElement& y) const {
  return x.field() == field() && y.field() == field() && y.square() == rhs(x);
}

Point Curve::point(const FieldElement& x, const FieldElement& y) const {
  if (!contains(x, y)) raise(ErrorKind::InvalidArgument, "point not on curve");
  return Point(*this, x, y);
}

Point Curve::random_point(std::mt19937_64& rng) const {
  Field F = field();
  const int r = F.degree();
  const std::uint32_t p = F.characteristic();
  for (;;) {
    std::vector<std::uint32_t> c(static_cast<std::size_t>(r));
    for (auto& v : c) v = static_cast<std::uint32_t>(rng() % p);
    FieldElement x = F.from_coeffs(c);
    auto s = rhs(x).sqrt();
    if (!s) continue;
    return Point(*this, x, (rng() & 1) ? s->second : s->first);
  }
}

std::vector<Point> Curve::rational_points() const {
  Field F = field();
  auto q = F.size64();
  if (!q || *q > kMaxCountField) raise(ErrorKind::BoundExceeded, "point enumeration limited to q <= 2^20");
  std::vector<Point> pts{infinity()};
  for (std::uint64_t i = 0; i < *q; ++i) {
    FieldElement x = F.element_at(i);
    auto s = rhs(x).sqrt();
    if (!s) continue;
    pts.emplace_back(*this, x, s->first);
    if (s->second != s->first) pts.emplace_back(*this, x, s->second);
  }
  return pts;
}

std::string Curve::to_string() const {
  return "y^2 = x^3 + (" + a().to_string() + ")x + (" + b().to_string() + ") over " + field().to_string();
}

// ---------------------------------------------------------------------

Point Point::at_infinity(Curve c) {
  Point P;
  P.curve_ = c;
  P.x_ = c.field().zero();
  P.y_ = c.field().zero();
  P.inf_ = true;
  return P;
}

std::string Point::to_string() const {
  if (inf_) return "inf";
  return "(" + x_.to_string() + ", " + y_.to_string() + ")";
}

std::size_t PointHash::operator()(const Point& p) const {
  if (p.is_infinity()) return 0x9e3779b97f4a7c15ull;
  FieldElementHash h;
  return h(p.x()) * 0x100000001b3ull ^ h(p.y());
}

Point point_neg(const Point& P) {
  if (P.is_infinity()) return P;
  return Point(P.curve(), P.x(), -P.y());
}

Point point_add(const Point& P, const Point& Q) {
  if (P.curve() != Q.curve()) raise(ErrorKind::CurveMismatch, "points on different curves");
  if (P.is_infinity()) return Q;
  if (Q.is_infinity()) return P;
  FieldElement lambda;
  if (P.x() == Q.x()) {
    if (P.y() != Q.y() || P.y().is_zero()) return Point::at_infinity(P.curve());
    Field F = P.curve().field();
    lambda = (P.x().square() * F.from_int(3) + P.curve().a()) / (P.y() + P.y());
  } else {
    lambda = (Q.y() - P.y()) / (Q.x() - P.x());
  }
  FieldElement x3 = lambda.square() - P.x() - Q.x();
  FieldElement y3 = lambda * (P.x() - x3) - P.y();
  return Point(P.curve(), x3, y3);
}

Point point_sub(const Point& P, const Point& Q) { return point_add(P, point_neg(Q)); }

Point scalar_mul(const BigInt& m, const Point& P) {
  if (m < 0) return point_neg(scalar_mul(BigInt(-m), P));
  Point R = Point::at_infinity(P.curve());
  if (m == 0 || P.is_infinity()) return R;
  const auto bits = static_cast<int>(boost::multiprecision::msb(m));
  for (int i = bits; i >= 0; --i) {
    R = point_add(R, R);
    if (boost::multiprecision::bit_test(m, static_cast<unsigned>(i))) R = point_add(R, P);
  }
  return R;
}

Point scalar_mul(std::int64_t m, const Point& P) { return scalar_mul(BigInt(m), P); }

BigInt point_order(const Point& P, const BigInt& multiple) {
  BigInt n = multiple;
  std::vector<std::pair<std::uint64_t, int>> fac;
  if (n <= BigInt(UINT64_MAX)) {
    fac = factorize(static_cast<std::uint64_t>(n));
  } else {
    raise(ErrorKind::BoundExceeded, "order multiple exceeds 64 bits");
  }
  for (auto [ell, e] : fac) {
    for (int i = 0; i < e; ++i) {
      BigInt cand = n / ell;
      if (scalar_mul(cand, P).is_infinity()) n = cand;
      else break;
    }
  }
  return n;
}

Point embed_point(const Point& P, Field ext) {
  Curve E = P.curve().base_change(ext);
  if (P.is_infinity()) return E.infinity();
  const Embedding& emb = embedding(P.curve().field(), ext);
  return Point(E, emb(P.x()), emb(P.y()));
}

Point frobenius_point(const Point& P, int e) {
  Curve E = P.curve().frobenius_conjugate(e);
  if (P.is_infinity()) return E.infinity();
  return Point(E, P.x().frobenius(e), P.y().frobenius(e));
}

PointCount count_points(const Curve& E) { return PointCount{E.order(), E.trace()}; }

// ---------------------------------------------------------------------

bool operator<(const CurveClass& a, const CurveClass& b) {
  if (a.j != b.j) return a.j < b.j;
  if (a.trace != b.trace) return a.trace < b.trace;
  return a.twist_index < b.twist_index;
}

std::string CurveClass::label() const {
  std::string s = j.to_string();
  if (twist_index != 0) s += "/" + std::to_string(twist_index);
  return s;
}

bool is_isomorphic(const Curve& E1, const Curve& E2) {
  if (E1.field() != E2.field()) raise(ErrorKind::FieldMismatch, "curves over different fields");
  if (E1 == E2) return true;
  if (E1.j_invariant() != E2.j_invariant()) return false;
  if (E1.b().is_zero()) return is_nth_power(E2.a() / E1.a(), 4);
  if (E1.a().is_zero()) return is_nth_power(E2.b() / E1.b(), 6);
  return ((E2.b() * E1.a()) / (E1.b() * E2.a())).is_square();
}

std::vector<FieldElement> isomorphisms(const Curve& E1, const Curve& E2) {
  if (E1.field() != E2.field()) raise(ErrorKind::FieldMismatch, "curves over different fields");
  Field F = E1.field();
  std::vector<FieldElement> out;
  if (E1.j_invariant() != E2.j_invariant()) return out;
  std::vector<FieldElement> cand;
  if (!E1.a().is_zero()) {
    Polynomial f(F, {-(E2.a() / E1.a()), F.zero(), F.zero(), F.zero(), F.one()});
    cand = f.roots();
  } else {
    std::vector<FieldElement> c(7, F.zero());
    c[0] = -(E2.b() / E1.b());
    c[6] = F.one();
    cand = Polynomial(F, c).roots();
  }
  for (const auto& u : cand) {
    FieldElement u2 = u.square();
    if (u2.square() * E1.a() == E2.a() && u2 * u2 * u2 * E1.b() == E2.b()) out.push_back(u);
  }
  return out;
}

const std::vector<Curve>& twist_representatives(Field F, const FieldElement& j) {
  static std::mutex mu;
  static std::map<std::pair<const FieldData*, FieldElement::Coeffs>, std::vector<Curve>> cache;
  if (j.field() != F) raise(ErrorKind::FieldMismatch, "j not in field");
  auto key = std::make_pair(F.data(), j.coeffs());
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  std::vector<Curve> reps;
  const FieldElement c1728 = F.from_int(1728);
  auto q = F.size64();
  auto scan = [&](bool scan_b, std::int64_t n) {
    const std::int64_t want = small_gcd_q(F, n);
    for (std::uint64_t i = 1; static_cast<std::int64_t>(reps.size()) < want; ++i) {
      if (q && i >= *q) break;
      FieldElement v = F.element_at(i);
      Curve E = scan_b ? Curve::create(F.zero(), v) : Curve::create(v, F.zero());
      bool fresh = true;
      for (const auto& R : reps) {
        if (is_isomorphic(E, R)) {
          fresh = false;
          break;
        }
      }
      if (fresh) reps.push_back(E);
    }
  };
  if (j.is_zero()) {
    scan(true, 6);
  } else if (j == c1728) {
    scan(false, 4);
  } else {
    FieldElement c = c1728 - j;
    Curve E0 = Curve::create(F.from_int(3) * j * c, F.from_int(2) * j * c.square());
    reps.push_back(E0);
    reps.push_back(E0.quadratic_twist(F.nonresidue()));
  }
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(key, std::move(reps)).first->second;
}

Curve curve_from_j(Field F, const FieldElement& j, std::int64_t trace) {
  for (const auto& E : twist_representatives(F, j)) {
    if (E.trace() == trace) return E;
  }
  raise(ErrorKind::NoSuchTwist, "no twist with j = " + j.to_string() + " has trace " + std::to_string(trace));
}

CurveClass classify(const Curve& E) {
  FieldElement j = E.j_invariant();
  const auto& reps = twist_representatives(E.field(), j);
  for (std::size_t i = 0; i < reps.size(); ++i) {
    if (is_isomorphic(E, reps[i])) return CurveClass{j, E.trace(), static_cast<int>(i), reps[i]};
  }
  raise(ErrorKind::ClassMismatch, "curve not matched by any twist representative");
}

std::vector<CurveClass> classes_with_trace(Field F, std::int64_t trace) {
  auto q = F.size64();
  if (!q || *q > kMaxCountField) raise(ErrorKind::BoundExceeded, "class enumeration limited to q <= 2^20");
  std::vector<CurveClass> out;
  for (std::uint64_t i = 0; i < *q; ++i) {
    FieldElement j = F.element_at(i);
    const auto& reps = twist_representatives(F, j);
    for (std::size_t k = 0; k < reps.size(); ++k) {
      if (reps[k].trace() == trace) out.push_back(CurveClass{j, trace, static_cast<int>(k), reps[k]});
    }
  }
  return out;
}

Polynomial torsion_x_polynomial(const Curve& E, int n) {
  if (n < 1) raise(ErrorKind::InvalidArgument, "n must be positive");
  Field F = E.field();
  if (n % static_cast<int>(F.characteristic()) == 0) raise(ErrorKind::InvalidArgument, "n divisible by p");
  const FieldElement A = E.a(), B = E.b();
  const Polynomial R = E.rhs_polynomial();
  const Polynomial R2 = R * R;
  const FieldElement half = F.from_int(2).inverse();
  std::vector<Polynomial> f;
  f.push_back(Polynomial(F));
  f.push_back(Polynomial::constant(F.one()));
  f.push_back(Polynomial::constant(F.from_int(2)));
  auto c = [&](std::int64_t v) { return F.from_int(v); };
  f.push_back(Polynomial(F, {-A.square(), c(12) * B, c(6) * A, F.zero(), c(3)}));
  f.push_back(Polynomial(F, {c(-8) * B.square() - A.square() * A, c(-4) * A * B, c(-5) * A.square(), c(20) * B,
                             c(5) * A, F.zero(), F.one()}) *
              c(4));
  for (int k = 5; k <= n; ++k) {
    const int m = k / 2;
    auto cube = [](const Polynomial& g) { return g * g * g; };
    if (k % 2 == 1) {
      if (m % 2 == 0) f.push_back(R2 * f[m + 2] * cube(f[m]) - f[m - 1] * cube(f[m + 1]));
      else f.push_back(f[m + 2] * cube(f[m]) - R2 * f[m - 1] * cube(f[m + 1]));
    } else {
      f.push_back(f[m] * (f[m + 2] * f[m - 1] * f[m - 1] - f[m - 2] * f[m + 1] * f[m + 1]) * half);
    }
  }
  Polynomial g = f[static_cast<std::size_t>(n)];
  if (n % 2 == 0) g = g * R;
  if (g.degree() <= 0) return Polynomial::constant(F.one());
  return g.monic().squarefree();
}

std::pair<std::int64_t, std::int64_t> discriminant_frobenius_order(std::int64_t q, std::int64_t t) {
  const std::int64_t d = t * t - 4 * q;
  if (d >= 0) raise(ErrorKind::NotImaginaryQuadratic, "t^2 - 4q must be negative");
  std::int64_t f = 1;
  for (auto [ell, e] : factorize(static_cast<std::uint64_t>(-d))) f *= ipow(static_cast<std::int64_t>(ell), e / 2);
  std::int64_t D = d / (f * f);
  if (mod(D, 4) == 2 || mod(D, 4) == 3) {
    D *= 4;
    f /= 2;
  }
  return {D, f};
}

// ---------------------------------------------------------------------
// Torsion.

std::optional<BigInt> dlog_prime_power(const Point& X, const Point& G, std::int64_t ell, int a) {
  if (a == 0) {
    if (X.is_infinity()) return BigInt(0);
    return std::nullopt;
  }
  const Point gamma = scalar_mul(BigInt(boost::multiprecision::pow(BigInt(ell), static_cast<unsigned>(a - 1))), G);
  std::vector<Point> table;
  table.push_back(Point::at_infinity(G.curve()));
  for (std::int64_t d = 1; d < ell; ++d) table.push_back(table.back() + gamma);
  BigInt x = 0, ell_i = 1;
  for (int i = 0; i < a; ++i) {
    Point Y = scalar_mul(boost::multiprecision::pow(BigInt(ell), static_cast<unsigned>(a - 1 - i)),
                         X - scalar_mul(x, G));
    auto it = std::find(table.begin(), table.end(), Y);
    if (it == table.end()) return std::nullopt;
    x += BigInt(it - table.begin()) * ell_i;
    ell_i *= ell;
  }
  if (scalar_mul(x, G) != X) return std::nullopt;
  return x;
}

namespace {

struct Sylow {
  Point G1, G2;
  int a = 0, b = 0;
};

int ell_order_exponent(Point S, std::int64_t ell, int cap) {
  int c = 0;
  while (!S.is_infinity()) {
    S = scalar_mul(ell, S);
    if (++c > cap) raise(ErrorKind::DataError, "point order exceeds Sylow bound");
  }
  return c;
}

Sylow sylow_basis(const Curve& EL, std::int64_t ell, const BigInt& N, std::mt19937_64& rng) {
  int v = 0;
  BigInt h = N;
  while (h % ell == 0) {
    h /= ell;
    ++v;
  }
  Sylow s;
  s.G1 = s.G2 = EL.infinity();
  if (v == 0) return s;
  for (int iter = 0; iter < 4000; ++iter) {
    Point S = scalar_mul(h, EL.random_point(rng));
    int c = ell_order_exponent(S, ell, v);
    if (c == 0) continue;
    if (c > s.a) {
      s.G1 = S;
      s.a = c;
      s.G2 = EL.infinity();
      s.b = 0;
    } else {
      Point T = S;
      for (int k = 0; k <= c; ++k) {
        auto j = dlog_prime_power(T, s.G1, ell, s.a);
        if (j) {
          BigInt lk = boost::multiprecision::pow(BigInt(ell), static_cast<unsigned>(k));
          if (*j % lk == 0 && k > s.b) {
            s.G2 = S - scalar_mul(*j / lk, s.G1);
            s.b = k;
          }
          break;
        }
        T = scalar_mul(ell, T);
      }
    }
    if (s.a + s.b == v) return s;
  }
  raise(ErrorKind::DataError, "Sylow basis search did not converge");
}

struct BasisKey {
  const CurveData* E;
  int m, mult;
  bool operator<(const BasisKey& o) const { return std::tie(E, m, mult) < std::tie(o.E, o.m, o.mult); }
};

void check_torsion_args(const Curve& E, int m) {
  if (m < 1) raise(ErrorKind::InvalidArgument, "m must be positive");
  if (m > kMaxTorsion) raise(ErrorKind::BoundExceeded, "m exceeds 64");
  if (m % static_cast<int>(E.field().characteristic()) == 0) raise(ErrorKind::InvalidArgument, "p divides m");
}

TorsionBasis compute_basis(const Curve& E, int m, int mult) {
  check_torsion_args(E, m);
  Field F = E.field();
  const int r = F.degree();
  const BigInt q = F.order();
  const auto fac = factorize(static_cast<std::uint64_t>(m));
  for (int k = 1; r * k <= kMaxDegree; ++k) {
    if ((r * k) % mult != 0) continue;
    BigInt qk = boost::multiprecision::pow(q, static_cast<unsigned>(k));
    if ((qk - 1) % m != 0) continue;
    BigInt N = E.order_over(k);
    if (N % (m * m) != 0) continue;
    Field L = k == 1 ? F : extension(F, k);
    Curve EL = E.base_change(L);
    std::mt19937_64 rng(0x5eed0000ull + static_cast<std::uint64_t>(m) * 131 + static_cast<std::uint64_t>(k));
    Point P = EL.infinity(), Q = EL.infinity();
    bool ok = true;
    for (auto [ell, e] : fac) {
      Sylow s = sylow_basis(EL, static_cast<std::int64_t>(ell), N, rng);
      if (s.b < e) {
        ok = false;
        break;
      }
      P = P + scalar_mul(ipow(static_cast<std::int64_t>(ell), s.a - e), s.G1);
      Q = Q + scalar_mul(ipow(static_cast<std::int64_t>(ell), s.b - e), s.G2);
    }
    if (ok) return TorsionBasis{P, Q, L};
  }
  raise(ErrorKind::BoundExceeded, "E[" + std::to_string(m) + "] needs an extension beyond degree 24");
}

const TorsionBasis& cached_basis(const Curve& E, int m, int mult) {
  static std::mutex mu;
  static std::map<BasisKey, TorsionBasis> cache;
  BasisKey key{E.data(), m, mult};
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  TorsionBasis b = compute_basis(E, m, mult);
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(key, std::move(b)).first->second;
}

}  // namespace

int torsion_extension_degree(const Curve& E, int m, int degree_multiple) {
  return cached_basis(E, m, degree_multiple).ext.degree() / E.field().degree();
}

TorsionBasis torsion_basis(const Curve& E, int m) { return cached_basis(E, m, 1); }

TorsionFrame::TorsionFrame(Curve base, int m, int degree_multiple) : base_(base), m_(m) {
  const TorsionBasis& b = cached_basis(base, m, degree_multiple);
  ext_curve_ = b.P.curve();
  P_ = b.P;
  Q_ = b.Q;
}

std::shared_ptr<const TorsionFrame> TorsionFrame::get(const Curve& E, int m, int degree_multiple) {
  static std::mutex mu;
  static std::map<BasisKey, std::shared_ptr<const TorsionFrame>> cache;
  BasisKey key{E.data(), m, degree_multiple};
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  auto fr = std::make_shared<const TorsionFrame>(E, m, degree_multiple);
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(key, fr).first->second;
}

Point TorsionFrame::point(std::int64_t i, std::int64_t j) const {
  return scalar_mul(mod(i, m_), P_) + scalar_mul(mod(j, m_), Q_);
}

void TorsionFrame::build_table() const {
  std::call_once(table_once_, [this] {
    table_.reserve(static_cast<std::size_t>(m_ * m_));
    Point Ri = ext_curve_.infinity();
    for (int i = 0; i < m_; ++i) {
      Point R = Ri;
      for (int j = 0; j < m_; ++j) {
        table_.emplace(R, std::make_pair(i, j));
        R = R + Q_;
      }
      Ri = Ri + P_;
    }
    if (table_.size() != static_cast<std::size_t>(m_ * m_)) raise(ErrorKind::DataError, "torsion basis is degenerate");
  });
}

std::optional<std::pair<int, int>> TorsionFrame::coords(const Point& R) const {
  build_table();
  Point S = R;
  if (R.curve() != ext_curve_) {
    if (R.curve().field() == ext_curve_.field()) return std::nullopt;
    S = embed_point(R, ext_curve_.field());
    if (S.curve() != ext_curve_) return std::nullopt;
  }
  auto it = table_.find(S);
  if (it == table_.end()) return std::nullopt;
  return it->second;
}

std::array<std::array<int, 2>, 2> TorsionFrame::frobenius() const {
  const int r = base_.field().degree();
  auto cp = coords(frobenius_point(P_, r));
  auto cq = coords(frobenius_point(Q_, r));
  if (!cp || !cq) raise(ErrorKind::DataError, "Frobenius image outside frame");
  return {{{cp->first, cq->first}, {cp->second, cq->second}}};
}

}  // namespace isogenion
