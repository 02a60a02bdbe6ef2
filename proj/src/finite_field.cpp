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

#include "isogenion/finite_field.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>

namespace isogenion {

using Coeffs = FieldElement::Coeffs;

struct FieldData {
  std::uint32_t p = 0;
  int r = 0;
  BigInt q;
  std::optional<std::uint64_t> q64;
  std::vector<std::uint32_t> modulus;
  std::vector<Coeffs> reduction;  // x^{r+i} mod m
  std::vector<Coeffs> frob;       // (x^i)^p mod m

  mutable std::once_flag squares_once;
  mutable std::vector<std::uint8_t> squares;  // indexed by element index

  mutable std::once_flag ts_once;
  mutable FieldElement nonres;
  mutable int ts_s = 0;
  mutable BigInt ts_t;
  mutable BigInt half;  // (q - 1) / 2
};

namespace {

using Poly = std::vector<std::uint32_t>;  // GF(p)[x], constant term first

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inv_p(std::uint32_t a, std::uint32_t p) {
  return static_cast<std::uint32_t>(invmod(a, p));
}

Poly poly_sub(const Poly& a, const Poly& b, std::uint32_t p) {
  Poly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    std::uint64_t x = i < a.size() ? a[i] : 0;
    std::uint64_t y = i < b.size() ? b[i] : 0;
    out[i] = static_cast<std::uint32_t>((x + p - y) % p);
  }
  trim(out);
  return out;
}

Poly poly_mul(const Poly& a, const Poly& b, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  std::vector<std::uint64_t> t(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      t[i + j] = (t[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p;
    }
  }
  Poly out(t.begin(), t.end());
  trim(out);
  return out;
}

// a = q*b + r
void poly_divmod(const Poly& a, const Poly& b, std::uint32_t p, Poly& q, Poly& r) {
  r = a;
  trim(r);
  q.assign(r.size() >= b.size() ? r.size() - b.size() + 1 : 0, 0);
  std::uint32_t lead_inv = inv_p(b.back(), p);
  while (!r.empty() && r.size() >= b.size()) {
    std::size_t shift = r.size() - b.size();
    std::uint64_t c = static_cast<std::uint64_t>(r.back()) * lead_inv % p;
    q[shift] = static_cast<std::uint32_t>(c);
    for (std::size_t i = 0; i < b.size(); ++i) {
      std::uint64_t sub = c * b[i] % p;
      r[shift + i] = static_cast<std::uint32_t>((r[shift + i] + p - sub) % p);
    }
    trim(r);
  }
  trim(q);
}

Poly poly_mod(const Poly& a, const Poly& m, std::uint32_t p) {
  Poly q, r;
  poly_divmod(a, m, p, q, r);
  return r;
}

Poly poly_gcd(Poly a, Poly b, std::uint32_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

Poly poly_powmod(Poly base, std::uint64_t e, const Poly& m, std::uint32_t p) {
  Poly result{1};
  base = poly_mod(base, m, p);
  while (e) {
    if (e & 1) result = poly_mod(poly_mul(result, base, p), m, p);
    base = poly_mod(poly_mul(base, base, p), m, p);
    e >>= 1;
  }
  return result;
}

bool irreducible(const Poly& f, std::uint32_t p) {
  int r = static_cast<int>(f.size()) - 1;
  std::vector<Poly> xp(static_cast<std::size_t>(r) + 1);
  xp[0] = {0, 1};
  for (int i = 1; i <= r; ++i) xp[static_cast<std::size_t>(i)] = poly_powmod(xp[static_cast<std::size_t>(i) - 1], p, f, p);
  Poly x{0, 1};
  if (poly_sub(xp[static_cast<std::size_t>(r)], x, p) != Poly{}) return false;
  for (auto [s, e] : factorize(static_cast<std::uint64_t>(r))) {
    (void)e;
    Poly g = poly_gcd(f, poly_sub(xp[static_cast<std::size_t>(r / static_cast<int>(s))], x, p), p);
    if (g.size() != 1) return false;
  }
  return true;
}

std::vector<std::uint32_t> least_irreducible(std::uint32_t p, int r) {
  if (r == 1) return {0};
  // Tuples (c0, ..., c_{r-1}) ascending lexicographically: c_{r-1} varies fastest.
  std::vector<std::uint32_t> c(static_cast<std::size_t>(r), 0);
  c[0] = 1;
  while (true) {
    Poly f(c.begin(), c.end());
    f.push_back(1);
    if (irreducible(f, p)) return c;
    int i = r - 1;
    while (i >= 0) {
      if (++c[static_cast<std::size_t>(i)] < p) break;
      c[static_cast<std::size_t>(i)] = 0;
      --i;
    }
    if (i < 0) throw Error(ErrorKind::DataError, "no irreducible polynomial found");
  }
}

Coeffs to_coeffs(const Poly& a) {
  Coeffs c{};
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i];
  return c;
}

Poly from_coeffs(const Coeffs& c, int r) {
  Poly a(c.begin(), c.begin() + r);
  trim(a);
  return a;
}

std::unique_ptr<FieldData> build_field(std::uint32_t p, int r) {
  auto d = std::make_unique<FieldData>();
  d->p = p;
  d->r = r;
  d->q = boost::multiprecision::pow(BigInt(p), static_cast<unsigned>(r));
  if (d->q <= BigInt(std::numeric_limits<std::uint64_t>::max())) {
    d->q64 = static_cast<std::uint64_t>(d->q);
  }
  d->modulus = least_irreducible(p, r);
  Poly m(d->modulus.begin(), d->modulus.end());
  m.push_back(1);
  for (int i = 0; i + 1 < r; ++i) {
    Poly xi(static_cast<std::size_t>(r + i) + 1, 0);
    xi.back() = 1;
    d->reduction.push_back(to_coeffs(poly_mod(xi, m, p)));
  }
  Poly xp = poly_powmod(Poly{0, 1}, p, m, p);
  Poly acc{1};
  for (int i = 0; i < r; ++i) {
    d->frob.push_back(to_coeffs(acc));
    acc = poly_mod(poly_mul(acc, xp, p), m, p);
  }
  if (r == 1) d->frob = {to_coeffs(Poly{1})};
  return d;
}

std::mutex& registry_mutex() {
  static std::mutex m;
  return m;
}

std::map<std::pair<std::uint32_t, int>, std::unique_ptr<FieldData>>& registry() {
  static std::map<std::pair<std::uint32_t, int>, std::unique_ptr<FieldData>> r;
  return r;
}

void check_same(const FieldData* a, const FieldData* b) {
  if (a != b || a == nullptr) throw Error(ErrorKind::FieldMismatch, "operands lie in different fields");
}

}  // namespace

Field field_create(std::uint32_t p, int r) {
  if (r < 1) throw Error(ErrorKind::InvalidArgument, "extension degree must be positive");
  if (p > kMaxPrime) throw Error(ErrorKind::BoundExceeded, "characteristic exceeds 2^16");
  if (r > kMaxDegree) throw Error(ErrorKind::BoundExceeded, "extension degree exceeds 24");
  if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  std::lock_guard<std::mutex> lock(registry_mutex());
  auto& reg = registry();
  auto key = std::make_pair(p, r);
  auto it = reg.find(key);
  if (it == reg.end()) it = reg.emplace(key, build_field(p, r)).first;
  return Field(it->second.get());
}

std::uint32_t Field::characteristic() const { return d_->p; }
int Field::degree() const { return d_->r; }
const BigInt& Field::order() const { return d_->q; }
const std::vector<std::uint32_t>& Field::modulus() const { return d_->modulus; }
std::optional<std::uint64_t> Field::size64() const { return d_->q64; }

FieldElement Field::zero() const {
  FieldElement e;
  e.f_ = d_;
  return e;
}

FieldElement Field::one() const {
  FieldElement e = zero();
  e.c_[0] = 1;
  return e;
}

FieldElement Field::from_int(std::int64_t v) const {
  FieldElement e = zero();
  e.c_[0] = static_cast<std::uint32_t>(mod(v, d_->p));
  return e;
}

FieldElement Field::from_coeffs(const std::vector<std::uint32_t>& c) const {
  if (c.size() > static_cast<std::size_t>(d_->r)) throw Error(ErrorKind::InvalidArgument, "too many coefficients");
  FieldElement e = zero();
  for (std::size_t i = 0; i < c.size(); ++i) e.c_[i] = c[i] % d_->p;
  return e;
}

FieldElement Field::generator() const {
  if (d_->r == 1) return zero();
  FieldElement e = zero();
  e.c_[1] = 1;
  return e;
}

FieldElement Field::element_at(std::uint64_t index) const {
  FieldElement e = zero();
  for (int i = 0; i < d_->r && index > 0; ++i) {
    e.c_[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(index % d_->p);
    index /= d_->p;
  }
  return e;
}

std::string Field::to_string() const {
  if (d_->r == 1) return "GF(" + std::to_string(d_->p) + ")";
  return "GF(" + std::to_string(d_->p) + "^" + std::to_string(d_->r) + ")";
}

namespace {

void init_tonelli(const FieldData* d) {
  std::call_once(d->ts_once, [d] {
    Field F = field_create(d->p, d->r);
    BigInt t = d->q - 1;
    int s = 0;
    while ((t & 1) == 0) {
      t >>= 1;
      ++s;
    }
    d->ts_s = s;
    d->ts_t = t;
    d->half = (d->q - 1) / 2;
    for (std::uint64_t i = 2;; ++i) {
      FieldElement z = F.element_at(i);
      if (z.pow(d->half) != F.one()) {
        d->nonres = z;
        break;
      }
    }
  });
}

void init_squares(const FieldData* d) {
  std::call_once(d->squares_once, [d] {
    if (!d->q64 || *d->q64 > (1ull << 20)) return;
    Field F = field_create(d->p, d->r);
    std::uint64_t q = *d->q64;
    d->squares.assign(q, 0);
    for (std::uint64_t i = 0; i < q; ++i) d->squares[F.element_at(i).square().index()] = 1;
  });
}

}  // namespace

const FieldElement& Field::nonresidue() const {
  init_tonelli(d_);
  return d_->nonres;
}

Field FieldElement::field() const { return Field(f_); }

bool FieldElement::is_zero() const {
  for (int i = 0; i < f_->r; ++i) {
    if (c_[static_cast<std::size_t>(i)] != 0) return false;
  }
  return true;
}

bool FieldElement::is_one() const {
  if (c_[0] != 1) return false;
  for (int i = 1; i < f_->r; ++i) {
    if (c_[static_cast<std::size_t>(i)] != 0) return false;
  }
  return true;
}

std::uint64_t FieldElement::index() const {
  std::uint64_t v = 0;
  for (int i = f_->r - 1; i >= 0; --i) v = v * f_->p + c_[static_cast<std::size_t>(i)];
  return v;
}

std::optional<std::uint32_t> FieldElement::as_prime_field() const {
  for (int i = 1; i < f_->r; ++i) {
    if (c_[static_cast<std::size_t>(i)] != 0) return std::nullopt;
  }
  return c_[0];
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  check_same(f_, o.f_);
  FieldElement e;
  e.f_ = f_;
  const std::uint32_t p = f_->p;
  for (int i = 0; i < f_->r; ++i) {
    std::uint32_t s = c_[static_cast<std::size_t>(i)] + o.c_[static_cast<std::size_t>(i)];
    e.c_[static_cast<std::size_t>(i)] = s >= p ? s - p : s;
  }
  return e;
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
  check_same(f_, o.f_);
  FieldElement e;
  e.f_ = f_;
  const std::uint32_t p = f_->p;
  for (int i = 0; i < f_->r; ++i) {
    std::uint32_t a = c_[static_cast<std::size_t>(i)], b = o.c_[static_cast<std::size_t>(i)];
    e.c_[static_cast<std::size_t>(i)] = a >= b ? a - b : a + p - b;
  }
  return e;
}

FieldElement FieldElement::operator-() const {
  FieldElement e;
  e.f_ = f_;
  const std::uint32_t p = f_->p;
  for (int i = 0; i < f_->r; ++i) {
    std::uint32_t a = c_[static_cast<std::size_t>(i)];
    e.c_[static_cast<std::size_t>(i)] = a == 0 ? 0 : p - a;
  }
  return e;
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
  check_same(f_, o.f_);
  FieldElement e;
  e.f_ = f_;
  const std::uint64_t p = f_->p;
  const int r = f_->r;
  if (r == 1) {
    e.c_[0] = static_cast<std::uint32_t>(static_cast<std::uint64_t>(c_[0]) * o.c_[0] % p);
    return e;
  }
  std::array<std::uint64_t, 2 * kMaxDegree> t{};
  for (int i = 0; i < r; ++i) {
    std::uint64_t a = c_[static_cast<std::size_t>(i)];
    if (a == 0) continue;
    for (int j = 0; j < r; ++j) t[static_cast<std::size_t>(i + j)] += a * o.c_[static_cast<std::size_t>(j)];
  }
  for (int i = r; i < 2 * r - 1; ++i) {
    std::uint64_t hi = t[static_cast<std::size_t>(i)] % p;
    if (hi == 0) continue;
    const Coeffs& red = f_->reduction[static_cast<std::size_t>(i - r)];
    for (int k = 0; k < r; ++k) t[static_cast<std::size_t>(k)] += hi * red[static_cast<std::size_t>(k)];
  }
  for (int k = 0; k < r; ++k) e.c_[static_cast<std::size_t>(k)] = static_cast<std::uint32_t>(t[static_cast<std::size_t>(k)] % p);
  return e;
}

FieldElement FieldElement::scaled(std::int64_t k) const {
  FieldElement e;
  e.f_ = f_;
  const std::uint64_t p = f_->p;
  std::uint64_t kk = static_cast<std::uint64_t>(mod(k, static_cast<std::int64_t>(p)));
  for (int i = 0; i < f_->r; ++i) {
    e.c_[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(c_[static_cast<std::size_t>(i)] * kk % p);
  }
  return e;
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
  const std::uint32_t p = f_->p;
  FieldElement e;
  e.f_ = f_;
  if (f_->r == 1) {
    e.c_[0] = inv_p(c_[0], p);
    return e;
  }
  Poly m(f_->modulus.begin(), f_->modulus.end());
  m.push_back(1);
  Poly r0 = m, r1 = from_coeffs(c_, f_->r);
  Poly s0{}, s1{1};
  while (!r1.empty()) {
    Poly q, rem;
    poly_divmod(r0, r1, p, q, rem);
    Poly s2 = poly_sub(s0, poly_mul(q, s1, p), p);
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  std::uint64_t ci = inv_p(r0[0], p);
  for (std::size_t i = 0; i < s0.size(); ++i) e.c_[i] = static_cast<std::uint32_t>(s0[i] * ci % p);
  return e;
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
  check_same(f_, o.f_);
  if (o.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by zero");
  return *this * o.inverse();
}

FieldElement FieldElement::pow(const BigInt& e) const {
  if (e < 0) return inverse().pow(BigInt(-e));
  FieldElement result = Field(f_).one();
  if (e == 0) return result;
  unsigned top = boost::multiprecision::msb(e);
  for (int i = static_cast<int>(top); i >= 0; --i) {
    result = result.square();
    if (boost::multiprecision::bit_test(e, static_cast<unsigned>(i))) result = result * *this;
  }
  return result;
}

FieldElement FieldElement::pow(std::uint64_t e) const {
  FieldElement result = Field(f_).one();
  FieldElement base = *this;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base.square();
  }
  return result;
}

FieldElement FieldElement::frobenius(int times) const {
  const int r = f_->r;
  times %= r;
  if (times < 0) times += r;
  if (r == 1 || times == 0) return *this;
  const std::uint64_t p = f_->p;
  FieldElement cur = *this;
  for (int t = 0; t < times; ++t) {
    std::array<std::uint64_t, kMaxDegree> acc{};
    for (int i = 0; i < r; ++i) {
      std::uint64_t a = cur.c_[static_cast<std::size_t>(i)];
      if (a == 0) continue;
      const Coeffs& row = f_->frob[static_cast<std::size_t>(i)];
      for (int k = 0; k < r; ++k) acc[static_cast<std::size_t>(k)] += a * row[static_cast<std::size_t>(k)];
    }
    for (int k = 0; k < r; ++k) cur.c_[static_cast<std::size_t>(k)] = static_cast<std::uint32_t>(acc[static_cast<std::size_t>(k)] % p);
  }
  return cur;
}

bool FieldElement::is_square() const {
  if (is_zero()) return true;
  if (f_->q64 && *f_->q64 <= (1ull << 20)) {
    init_squares(f_);
    return f_->squares[index()] != 0;
  }
  init_tonelli(f_);
  return pow(f_->half).is_one();
}

std::optional<std::pair<FieldElement, FieldElement>> FieldElement::sqrt() const {
  if (is_zero()) return std::make_pair(*this, *this);
  Field F(f_);
  if (f_->q64 && *f_->q64 < 1024) {
    std::vector<FieldElement> roots;
    for (std::uint64_t i = 0; i < *f_->q64; ++i) {
      FieldElement x = F.element_at(i);
      if (x.square() == *this) roots.push_back(x);
    }
    if (roots.empty()) return std::nullopt;
    std::sort(roots.begin(), roots.end());
    return std::make_pair(roots.front(), roots.back());
  }
  if (!is_square()) return std::nullopt;
  init_tonelli(f_);
  int m = f_->ts_s;
  FieldElement c = f_->nonres.pow(f_->ts_t);
  FieldElement t = pow(f_->ts_t);
  FieldElement r = pow(BigInt((f_->ts_t + 1) / 2));
  while (!t.is_one()) {
    int i = 0;
    FieldElement tt = t;
    while (!tt.is_one()) {
      tt = tt.square();
      ++i;
    }
    FieldElement b = c;
    for (int k = 0; k < m - i - 1; ++k) b = b.square();
    m = i;
    c = b.square();
    t = t * c;
    r = r * b;
  }
  FieldElement other = -r;
  if (other < r) std::swap(r, other);
  return std::make_pair(r, other);
}

std::string FieldElement::to_string() const {
  if (f_->r == 1) return std::to_string(c_[0]);
  std::ostringstream os;
  bool first = true;
  for (int i = f_->r - 1; i >= 0; --i) {
    std::uint32_t c = c_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    if (!first) os << '+';
    first = false;
    if (i == 0) {
      os << c;
      continue;
    }
    if (c != 1) os << c << '*';
    os << 'z';
    if (i > 1) os << '^' << i;
  }
  if (first) os << '0';
  return os.str();
}

bool operator<(const FieldElement& a, const FieldElement& b) {
  check_same(a.f_, b.f_);
  for (int i = 0; i < a.f_->r; ++i) {
    std::uint32_t x = a.c_[static_cast<std::size_t>(i)], y = b.c_[static_cast<std::size_t>(i)];
    if (x != y) return x < y;
  }
  return false;
}

FieldElement arith(const FieldElement& a, const FieldElement& b, ArithOp op) {
  switch (op) {
    case ArithOp::Add: return a + b;
    case ArithOp::Sub: return a - b;
    case ArithOp::Mul: return a * b;
    case ArithOp::Div: return a / b;
  }
  throw Error(ErrorKind::InvalidArgument, "unknown operation");
}

std::size_t FieldElementHash::operator()(const FieldElement& a) const {
  std::size_t h = 1469598103934665603ull;
  for (int i = 0; i < a.field().degree(); ++i) {
    h ^= a.coeff(i);
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace isogenion
