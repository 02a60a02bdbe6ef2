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

#include "isogenion/polynomial.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <random>
#include <sstream>

namespace isogenion {

Polynomial::Polynomial(Field F, std::vector<FieldElement> c) : F_(F), c_(std::move(c)) {
  for (const auto& e : c_) {
    if (e.field() != F_) throw Error(ErrorKind::FieldMismatch, "coefficient outside polynomial field");
  }
  trim();
}

void Polynomial::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Polynomial Polynomial::constant(const FieldElement& c) { return Polynomial(c.field(), {c}); }

Polynomial Polynomial::x(Field F) { return Polynomial(F, {F.zero(), F.one()}); }

Polynomial Polynomial::linear(const FieldElement& a) { return Polynomial(a.field(), {-a, a.field().one()}); }

FieldElement Polynomial::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return F_.zero();
  return c_[static_cast<std::size_t>(i)];
}

FieldElement Polynomial::leading() const { return c_.empty() ? F_.zero() : c_.back(); }

Polynomial Polynomial::operator+(const Polynomial& o) const {
  if (F_ != o.F_) throw Error(ErrorKind::FieldMismatch, "polynomials over different fields");
  std::vector<FieldElement> out(std::max(c_.size(), o.c_.size()), F_.zero());
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (i < c_.size()) out[i] = out[i] + c_[i];
    if (i < o.c_.size()) out[i] = out[i] + o.c_[i];
  }
  return Polynomial(F_, std::move(out));
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& e : r.c_) e = -e;
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (F_ != o.F_) throw Error(ErrorKind::FieldMismatch, "polynomials over different fields");
  if (c_.empty() || o.c_.empty()) return Polynomial(F_);
  std::vector<FieldElement> out(c_.size() + o.c_.size() - 1, F_.zero());
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) out[i + j] += c_[i] * o.c_[j];
  }
  return Polynomial(F_, std::move(out));
}

Polynomial Polynomial::operator*(const FieldElement& s) const {
  Polynomial r = *this;
  for (auto& e : r.c_) e = e * s;
  r.trim();
  return r;
}

void Polynomial::divmod(const Polynomial& b, Polynomial& q, Polynomial& r) const {
  if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
  r = *this;
  int db = b.degree();
  int dq = degree() - db;
  std::vector<FieldElement> qc(dq >= 0 ? static_cast<std::size_t>(dq) + 1 : 0, F_.zero());
  FieldElement inv = b.leading().inverse();
  while (!r.is_zero() && r.degree() >= db) {
    int shift = r.degree() - db;
    FieldElement c = r.leading() * inv;
    qc[static_cast<std::size_t>(shift)] = c;
    for (int i = 0; i <= db; ++i) {
      r.c_[static_cast<std::size_t>(shift + i)] -= c * b.c_[static_cast<std::size_t>(i)];
    }
    r.trim();
  }
  q = Polynomial(F_, std::move(qc));
}

Polynomial Polynomial::operator%(const Polynomial& m) const {
  Polynomial q, r;
  divmod(m, q, r);
  return r;
}

Polynomial Polynomial::operator/(const Polynomial& m) const {
  Polynomial q, r;
  divmod(m, q, r);
  return q;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return *this * leading().inverse();
}

Polynomial Polynomial::derivative() const {
  if (c_.size() <= 1) return Polynomial(F_);
  std::vector<FieldElement> out;
  for (std::size_t i = 1; i < c_.size(); ++i) out.push_back(c_[i].scaled(static_cast<std::int64_t>(i)));
  return Polynomial(F_, std::move(out));
}

FieldElement Polynomial::operator()(const FieldElement& x) const {
  FieldElement acc = F_.zero();
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

Polynomial Polynomial::compose(const Polynomial& g) const {
  Polynomial acc(F_);
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * g + constant(c_[i]);
  return acc;
}

Polynomial Polynomial::powmod(const BigInt& e, const Polynomial& m) const {
  Polynomial result = constant(F_.one()) % m;
  Polynomial base = *this % m;
  if (e == 0) return result;
  unsigned top = boost::multiprecision::msb(e);
  for (int i = static_cast<int>(top); i >= 0; --i) {
    result = (result * result) % m;
    if (boost::multiprecision::bit_test(e, static_cast<unsigned>(i))) result = (result * base) % m;
  }
  return result;
}

Polynomial Polynomial::squarefree() const {
  if (degree() <= 0) return monic();
  Polynomial g = gcd(*this, derivative());
  return (*this / g).monic();
}

Polynomial Polynomial::map(const Embedding& emb) const {
  if (emb.base() != F_) throw Error(ErrorKind::FieldMismatch, "embedding source differs");
  std::vector<FieldElement> out;
  out.reserve(c_.size());
  for (const auto& e : c_) out.push_back(emb(e));
  return Polynomial(emb.ext(), std::move(out));
}

Polynomial Polynomial::frobenius(int times) const {
  Polynomial r = *this;
  for (auto& e : r.c_) e = e.frobenius(times);
  return r;
}

namespace {

void split_roots(const Polynomial& g, std::mt19937_64& rng, std::vector<FieldElement>& out) {
  Field F = g.field();
  if (g.degree() <= 0) return;
  if (g.degree() == 1) {
    out.push_back(-g.coeff(0) / g.coeff(1));
    return;
  }
  BigInt half = (F.order() - 1) / 2;
  Polynomial one = Polynomial::constant(F.one());
  while (true) {
    std::vector<FieldElement> c(static_cast<std::size_t>(F.degree()), F.zero());
    FieldElement a = F.zero();
    std::vector<std::uint32_t> coeffs(static_cast<std::size_t>(F.degree()));
    for (auto& v : coeffs) v = static_cast<std::uint32_t>(rng() % F.characteristic());
    a = F.from_coeffs(coeffs);
    Polynomial h = Polynomial(F, {a, F.one()}).powmod(half, g) - one;
    Polynomial d = gcd(g, h);
    if (d.degree() > 0 && d.degree() < g.degree()) {
      split_roots(d, rng, out);
      split_roots((g / d).monic(), rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<FieldElement> Polynomial::roots() const {
  if (is_zero()) throw Error(ErrorKind::InvalidArgument, "roots of the zero polynomial");
  std::vector<FieldElement> out;
  if (degree() <= 0) return out;
  Polynomial f = monic();
  if (F_.size64() && *F_.size64() <= 64) {
    for (std::uint64_t i = 0; i < *F_.size64(); ++i) {
      FieldElement x = F_.element_at(i);
      if (f(x).is_zero()) out.push_back(x);
    }
  } else {
    Polynomial X = x(F_);
    Polynomial g = gcd(f, X.powmod(F_.order(), f) - X);
    std::mt19937_64 rng(0x5eed0001ull + static_cast<std::uint64_t>(g.degree()));
    split_roots(g, rng, out);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string Polynomial::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    bool unit = c_[i].is_one();
    if (!unit || i == 0) os << '(' << c_[i].to_string() << ')';
    if (i > 0) os << (unit ? "" : "*") << 'x';
    if (i > 1) os << '^' << i;
  }
  return os.str();
}

Polynomial gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Polynomial product_of_linears(Field F, const std::vector<FieldElement>& roots) {
  Polynomial acc = Polynomial::constant(F.one());
  for (const auto& r : roots) acc = acc * Polynomial::linear(r);
  return acc;
}

Embedding::Embedding(Field base, Field ext) : base_(base), ext_(ext) {
  if (base.characteristic() != ext.characteristic() || ext.degree() % base.degree() != 0) {
    throw Error(ErrorKind::FieldMismatch, base.to_string() + " does not embed in " + ext.to_string());
  }
  int r = base.degree();
  FieldElement theta = ext.zero();
  if (r > 1) {
    std::vector<FieldElement> m;
    for (auto c : base.modulus()) m.push_back(ext.from_int(c));
    m.push_back(ext.one());
    if (base == ext) {
      theta = ext.generator();
    } else {
      auto rts = Polynomial(ext, m).roots();
      if (rts.empty()) throw Error(ErrorKind::DataError, "modulus has no root in extension");
      theta = rts.front();
    }
  }
  FieldElement acc = ext.one();
  for (int i = 0; i < r; ++i) {
    powers_.push_back(acc);
    acc = acc * theta;
  }
}

FieldElement Embedding::operator()(const FieldElement& a) const {
  if (a.field() != base_) throw Error(ErrorKind::FieldMismatch, "element outside embedding source");
  if (base_ == ext_) return a;
  FieldElement out = ext_.zero();
  for (int i = 0; i < base_.degree(); ++i) {
    std::uint32_t c = a.coeff(i);
    if (c != 0) out += powers_[static_cast<std::size_t>(i)].scaled(c);
  }
  return out;
}

std::optional<FieldElement> Embedding::descend(const FieldElement& b) const {
  if (b.field() != ext_) throw Error(ErrorKind::FieldMismatch, "element outside embedding target");
  if (base_ == ext_) return b;
  const int r = base_.degree();
  const int R = ext_.degree();
  const std::int64_t p = ext_.characteristic();
  // Rows: coefficient index in ext; columns: powers of theta, then rhs.
  std::vector<std::vector<std::int64_t>> M(static_cast<std::size_t>(R), std::vector<std::int64_t>(static_cast<std::size_t>(r) + 1));
  for (int i = 0; i < R; ++i) {
    for (int j = 0; j < r; ++j) M[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = powers_[static_cast<std::size_t>(j)].coeff(i);
    M[static_cast<std::size_t>(i)][static_cast<std::size_t>(r)] = b.coeff(i);
  }
  int row = 0;
  std::vector<int> pivcol;
  for (int col = 0; col < r && row < R; ++col) {
    int piv = -1;
    for (int i = row; i < R; ++i) {
      if (M[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)] != 0) {
        piv = i;
        break;
      }
    }
    if (piv < 0) continue;
    std::swap(M[static_cast<std::size_t>(piv)], M[static_cast<std::size_t>(row)]);
    auto& pr = M[static_cast<std::size_t>(row)];
    std::int64_t inv = static_cast<std::int64_t>(invmod(pr[static_cast<std::size_t>(col)], static_cast<std::uint64_t>(p)));
    for (auto& v : pr) v = v * inv % p;
    for (int i = 0; i < R; ++i) {
      if (i == row) continue;
      auto& ri = M[static_cast<std::size_t>(i)];
      std::int64_t f = ri[static_cast<std::size_t>(col)];
      if (f == 0) continue;
      for (int j = 0; j <= r; ++j) ri[static_cast<std::size_t>(j)] = mod(ri[static_cast<std::size_t>(j)] - f * pr[static_cast<std::size_t>(j)], p);
    }
    pivcol.push_back(col);
    ++row;
  }
  for (int i = row; i < R; ++i) {
    if (M[static_cast<std::size_t>(i)][static_cast<std::size_t>(r)] != 0) return std::nullopt;
  }
  std::vector<std::uint32_t> coeffs(static_cast<std::size_t>(r), 0);
  for (int i = 0; i < row; ++i) coeffs[static_cast<std::size_t>(pivcol[static_cast<std::size_t>(i)])] = static_cast<std::uint32_t>(M[static_cast<std::size_t>(i)][static_cast<std::size_t>(r)]);
  return base_.from_coeffs(coeffs);
}

std::optional<Polynomial> Embedding::descend(const Polynomial& f) const {
  std::vector<FieldElement> out;
  for (const auto& c : f.coeffs()) {
    auto d = descend(c);
    if (!d) return std::nullopt;
    out.push_back(*d);
  }
  return Polynomial(base_, std::move(out));
}

const Embedding& embedding(Field base, Field ext) {
  static std::mutex mu;
  static std::map<std::pair<const FieldData*, const FieldData*>, std::unique_ptr<Embedding>> cache;
  auto key = std::make_pair(base.data(), ext.data());
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return *it->second;
  }
  auto emb = std::make_unique<Embedding>(base, ext);
  std::lock_guard<std::mutex> lock(mu);
  auto [it, inserted] = cache.emplace(key, std::move(emb));
  return *it->second;
}

Field extension(Field base, int d) {
  if (d < 1) throw Error(ErrorKind::InvalidArgument, "extension degree must be positive");
  return field_create(base.characteristic(), base.degree() * d);
}

}  // namespace isogenion
