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

#include "isogenion/isogeny.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <mutex>
#include <set>
#include <sstream>

namespace isogenion {

namespace detail {
extern const char* const kEmbeddedModularPolynomials;
}

struct StepMaps {
  std::mutex mu;
  std::map<const FieldData*, std::array<Polynomial, 4>> mapped;
};

namespace {

bool poly_less(const Polynomial& a, const Polynomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return std::lexicographical_compare(a.coeffs().begin(), a.coeffs().end(), b.coeffs().begin(), b.coeffs().end());
}

struct PowerSums {
  FieldElement p1, p2, p3;
};

PowerSums power_sums(const Polynomial& g) {
  Field F = g.field();
  const int n = g.degree();
  auto e = [&](int k) {
    if (k > n) return F.zero();
    FieldElement c = g.coeff(n - k);
    return (k % 2) ? -c : c;
  };
  PowerSums s;
  s.p1 = e(1);
  s.p2 = e(1) * s.p1 - e(2).scaled(2);
  s.p3 = e(1) * s.p2 - e(2) * s.p1 + e(3).scaled(3);
  return s;
}

const std::array<Polynomial, 4>& mapped_maps(const IsogenyStep& st, Field L) {
  std::lock_guard<std::mutex> lock(st.cache->mu);
  auto it = st.cache->mapped.find(L.data());
  if (it != st.cache->mapped.end()) return it->second;
  const Embedding& emb = embedding(st.source.field(), L);
  std::array<Polynomial, 4> m{st.xnum.map(emb), st.xden.map(emb), st.ynum.map(emb), st.yden.map(emb)};
  return st.cache->mapped.emplace(L.data(), std::move(m)).first->second;
}

Point apply_step(const IsogenyStep& st, const Point& R) {
  Field L = R.curve().field();
  Curve T = st.target.base_change(L);
  if (R.is_infinity()) return T.infinity();
  switch (st.kind) {
    case StepKind::Separable: {
      const auto& m = L == st.source.field() ? std::array<Polynomial, 4>{st.xnum, st.xden, st.ynum, st.yden}
                                             : mapped_maps(st, L);
      FieldElement den = m[1](R.x());
      if (den.is_zero()) return T.infinity();
      FieldElement X = m[0](R.x()) / den;
      FieldElement Y = R.y() * m[2](R.x()) / m[3](R.x());
      return Point(T, X, Y);
    }
    case StepKind::Scaling: {
      FieldElement u = L == st.source.field() ? st.u : embedding(st.source.field(), L)(st.u);
      FieldElement u2 = u.square();
      return Point(T, u2 * R.x(), u2 * u * R.y());
    }
    case StepKind::Frobenius: {
      Point S = frobenius_point(R, st.e);
      return Point(T, S.x(), S.y());
    }
  }
  return T.infinity();
}

IsogenyStep scaling_step(const Curve& E1, const Curve& E2, const FieldElement& u) {
  IsogenyStep st;
  st.kind = StepKind::Scaling;
  st.source = E1;
  st.target = E2;
  st.u = u;
  st.degree = 1;
  st.cache = std::make_shared<StepMaps>();
  return st;
}

// Random points on E over a small extension, used to pin down automorphisms.
std::vector<Point> test_points(const Curve& E, int count) {
  Field F = E.field();
  Field L = 2 * F.degree() <= kMaxDegree ? extension(F, 2) : F;
  Curve EL = E.base_change(L);
  std::mt19937_64 rng(0x7e57ull + static_cast<std::uint64_t>(F.characteristic()));
  std::vector<Point> pts;
  for (int i = 0; i < count; ++i) pts.push_back(EL.random_point(rng));
  return pts;
}

// Appends the automorphism-corrected isomorphism from target(phi) to T so that
// the result agrees with `expected` on test points.
template <typename Fn>
Isogeny finish_with(const Isogeny& phi, const Curve& T, Fn expected) {
  auto pts = test_points(phi.source(), 4);
  for (const auto& u : isomorphisms(phi.target(), T)) {
    Isogeny cand = phi.target() == T && u.is_one()
                       ? phi
                       : compose(Isogeny({scaling_step(phi.target(), T, u)}), phi);
    bool ok = true;
    for (const auto& P : pts) {
      if (cand.evaluate(P) != expected(P)) {
        ok = false;
        break;
      }
    }
    if (ok) return cand;
  }
  raise(ErrorKind::DataError, "no automorphism matches the expected map");
}

void check_prime(int ell) {
  if (ell < 2 || !is_prime(static_cast<std::uint64_t>(ell))) raise(ErrorKind::InvalidArgument, "ell must be prime");
}

}  // namespace

// ---------------------------------------------------------------------

Isogeny::Isogeny(std::vector<IsogenyStep> steps) : steps_(std::move(steps)) {
  if (steps_.empty()) raise(ErrorKind::InvalidArgument, "empty isogeny chain");
  source_ = steps_.front().source;
  target_ = steps_.back().target;
  for (std::size_t i = 1; i < steps_.size(); ++i) {
    if (steps_[i].source != steps_[i - 1].target) raise(ErrorKind::CurveMismatch, "isogeny chain does not connect");
  }
}

Isogeny scaling_isogeny(const Curve& E1, const Curve& E2, const FieldElement& u) {
  if (u.is_zero() || E1.a() * u.pow(std::uint64_t{4}) != E2.a() || E1.b() * u.pow(std::uint64_t{6}) != E2.b())
    raise(ErrorKind::ClassMismatch, "scaling does not map the curves");
  return Isogeny({scaling_step(E1, E2, u)});
}

std::vector<Point> sample_points(const Curve& E, int count) { return test_points(E, count); }

Isogeny Isogeny::identity(const Curve& E) {
  Isogeny phi;
  phi.source_ = phi.target_ = E;
  return phi;
}

std::int64_t Isogeny::degree() const {
  std::int64_t d = 1;
  for (const auto& s : steps_) d *= s.degree;
  return d;
}

std::int64_t Isogeny::separable_degree() const {
  std::int64_t d = 1;
  for (const auto& s : steps_)
    if (s.kind == StepKind::Separable) d *= s.degree;
  return d;
}

int Isogeny::insep_exp() const {
  int e = 0;
  for (const auto& s : steps_)
    if (s.kind == StepKind::Frobenius) e += s.e;
  return e;
}

std::vector<std::int64_t> Isogeny::degree_chain() const {
  std::vector<std::int64_t> out;
  for (const auto& s : steps_)
    if (s.degree > 1) out.push_back(s.degree);
  return out;
}

Point Isogeny::evaluate(const Point& P) const {
  Field L = P.curve().field();
  if (L.characteristic() != source_.field().characteristic() || L.degree() % source_.field().degree() != 0 ||
      P.curve() != source_.base_change(L)) {
    raise(ErrorKind::CurveMismatch, "point is not on the source curve");
  }
  Point R = P;
  for (const auto& st : steps_) R = apply_step(st, R);
  return R;
}

Polynomial Isogeny::kernel_polynomial() const {
  Field F = source_.field();
  Polynomial h = Polynomial::constant(F.one());
  for (auto it = steps_.rbegin(); it != steps_.rend(); ++it) {
    const IsogenyStep& st = *it;
    switch (st.kind) {
      case StepKind::Separable: {
        const int k = h.degree();
        Polynomial g = Polynomial::constant(F.one());
        if (k > 0) {
          std::vector<Polynomial> Dpow{Polynomial::constant(F.one())};
          for (int i = 1; i <= k; ++i) Dpow.push_back(Dpow.back() * st.xden);
          g = Polynomial::constant(h.coeff(k));
          for (int i = k - 1; i >= 0; --i) g = g * st.xnum + Dpow[static_cast<std::size_t>(k - i)] * h.coeff(i);
          g = g.monic().squarefree();
        }
        h = (st.kernel * g).monic();
        break;
      }
      case StepKind::Scaling:
        h = h.compose(Polynomial(F, {F.zero(), st.u.square()})).monic();
        break;
      case StepKind::Frobenius:
        h = h.frobenius(static_cast<int>(mod(-st.e, F.degree())));
        break;
    }
  }
  return h;
}

std::string Isogeny::describe() const {
  std::ostringstream os;
  os << "degree " << degree() << " [";
  auto chain = degree_chain();
  for (std::size_t i = 0; i < chain.size(); ++i) os << (i ? "," : "") << chain[i];
  os << "]";
  return os.str();
}

// ---------------------------------------------------------------------

Isogeny velu_from_kernel_polynomial(const Curve& E, const Polynomial& h0) {
  Field F = E.field();
  if (h0.field() != F) raise(ErrorKind::FieldMismatch, "kernel polynomial over a different field");
  if (h0.is_zero()) raise(ErrorKind::InvalidArgument, "zero kernel polynomial");
  if (h0.degree() == 0) return Isogeny::identity(E);
  const Polynomial h = h0.monic();
  const FieldElement A = E.a(), B = E.b();
  const Polynomial R = E.rhs_polynomial();
  const Polynomial H2 = gcd(h, R);
  const Polynomial H = h / H2;
  const int dH = H.degree(), dH2 = H2.degree();
  PowerSums s = power_sums(H), t = power_sums(H2);
  FieldElement v = s.p2.scaled(6) + A.scaled(2 * dH) + t.p2.scaled(3) + A.scaled(dH2);
  FieldElement w = s.p3.scaled(10) + A * s.p1.scaled(6) + B.scaled(4 * dH) + t.p3.scaled(3) + A * t.p1;
  Curve T = Curve::create(A - v.scaled(5), B - w.scaled(7));

  const Polynomial x = Polynomial::x(F);
  const Polynomial Hp = H.derivative(), H2p = H2.derivative();
  const Polynomial x2 = x * x;
  Polynomial Rv = (x2 * F.from_int(6) + Polynomial::constant(A.scaled(2))) * Hp % H;
  Polynomial Ru = (R * F.from_int(4)) * Hp % H;
  Polynomial Rv2 = (x2 * F.from_int(3) + Polynomial::constant(A)) * H2p % H2;
  const Polynomial HH = H * H;
  Polynomial N = x * HH * H2 + Rv * H * H2 + Rv2 * HH + (Ru * Hp - Ru.derivative() * H) * H2;
  Polynomial D = HH * H2;

  IsogenyStep st;
  st.kind = StepKind::Separable;
  st.source = E;
  st.target = T;
  st.degree = 2 * dH + dH2 + 1;
  st.kernel = h;
  st.xnum = N;
  st.xden = D;
  st.ynum = N.derivative() * D - N * D.derivative();
  st.yden = D * D;
  st.cache = std::make_shared<StepMaps>();
  if (E.trace_known()) T.seed_trace(E.trace_big());
  return Isogeny({st});
}

Isogeny velu(const Curve& E, const Point& K, std::int64_t order, bool require_rational) {
  Field L = K.curve().field();
  if (L.characteristic() != E.field().characteristic() || L.degree() % E.field().degree() != 0 ||
      K.curve() != E.base_change(L)) {
    raise(ErrorKind::CurveMismatch, "kernel generator is not on the curve");
  }
  if (order < 1) raise(ErrorKind::InvalidArgument, "order must be positive");
  if (order % E.field().characteristic() == 0) raise(ErrorKind::InvalidArgument, "order divisible by p");
  if (!scalar_mul(order, K).is_infinity()) raise(ErrorKind::WrongOrder, "generator order does not divide n");
  for (auto [ell, e] : factorize(static_cast<std::uint64_t>(order))) {
    if (scalar_mul(order / static_cast<std::int64_t>(ell), K).is_infinity())
      raise(ErrorKind::WrongOrder, "generator order is a proper divisor of n");
  }
  if (order == 1) return Isogeny::identity(E);
  std::set<FieldElement> xs;
  Point M = K;
  for (std::int64_t i = 1; i < order; ++i, M = M + K) xs.insert(M.x());
  Polynomial hL = product_of_linears(L, std::vector<FieldElement>(xs.begin(), xs.end()));
  if (L == E.field()) return velu_from_kernel_polynomial(E, hL);
  if (auto h = embedding(E.field(), L).descend(hL)) return velu_from_kernel_polynomial(E, *h);
  if (require_rational) raise(ErrorKind::NotRational, "kernel is not Galois-stable");
  return velu_from_kernel_polynomial(E.base_change(L), hL);
}

Isogeny isomorphism(const Curve& E1, const Curve& E2) {
  if (E1 == E2) return Isogeny::identity(E1);
  auto us = isomorphisms(E1, E2);
  if (us.empty()) raise(ErrorKind::ClassMismatch, "curves are not isomorphic over the field");
  if (E1.trace_known()) E2.seed_trace(E1.trace_big());
  return Isogeny({scaling_step(E1, E2, us.front())});
}

Isogeny frobenius_isogeny(const Curve& E, int e) {
  if (e < 0) raise(ErrorKind::InvalidArgument, "negative Frobenius exponent");
  if (e == 0) return Isogeny::identity(E);
  IsogenyStep st;
  st.kind = StepKind::Frobenius;
  st.source = E;
  st.target = E.frobenius_conjugate(e);
  st.e = e;
  st.degree = ipow(E.field().characteristic(), e);
  st.cache = std::make_shared<StepMaps>();
  return Isogeny({st});
}

Isogeny compose(const Isogeny& psi, const Isogeny& phi) {
  if (phi.steps().empty() && psi.steps().empty()) {
    if (phi.target() == psi.source()) return phi;
  }
  std::vector<IsogenyStep> steps = phi.steps();
  if (phi.target() != psi.source()) {
    if (phi.target().field() != psi.source().field()) raise(ErrorKind::FieldMismatch, "isogenies over different fields");
    auto us = isomorphisms(phi.target(), psi.source());
    if (us.empty()) raise(ErrorKind::ClassMismatch, "target and source are not isomorphic");
    steps.push_back(scaling_step(phi.target(), psi.source(), us.front()));
  }
  steps.insert(steps.end(), psi.steps().begin(), psi.steps().end());
  if (steps.empty()) return Isogeny::identity(phi.source());
  return Isogeny(std::move(steps));
}

Isogeny multiplication_isogeny(const Curve& E, int m) {
  if (m == 0) raise(ErrorKind::InvalidArgument, "[0] is not an isogeny");
  const int a = m < 0 ? -m : m;
  Isogeny phi = a == 1 ? Isogeny::identity(E) : velu_from_kernel_polynomial(E, torsion_x_polynomial(E, a));
  return finish_with(phi, E, [m](const Point& P) { return scalar_mul(m, P); });
}

namespace {

Isogeny dual_step(const IsogenyStep& st) {
  const Curve &E = st.source, &E2 = st.target;
  switch (st.kind) {
    case StepKind::Scaling:
      return Isogeny({scaling_step(E2, E, st.u.inverse())});
    case StepKind::Frobenius: {
      Field F = E.field();
      const int r = F.degree();
      const std::int64_t p = F.characteristic();
      if (r % 2 != 0 || 2 * st.e != r) raise(ErrorKind::PPartUnsupported, "dual of this Frobenius power");
      const BigInt s = E.trace_big() / 2;
      const BigInt pe = boost::multiprecision::pow(BigInt(p), static_cast<unsigned>(st.e));
      if (s != pe && s != -pe) raise(ErrorKind::PPartUnsupported, "Frobenius dual needs t = +-2p^(r/2)");
      Isogeny back = frobenius_isogeny(E2, st.e);
      if (back.target() != E) raise(ErrorKind::DataError, "Frobenius conjugate does not return");
      if (s == pe) return back;
      return compose(Isogeny({scaling_step(E, E, F.one().scaled(-1))}), back);
    }
    case StepKind::Separable: {
      const int n = static_cast<int>(st.degree);
      auto fr = TorsionFrame::get(E, n);
      Field L = fr->ext();
      Isogeny phi({st});
      Point a = phi.evaluate(fr->P()), b = phi.evaluate(fr->Q());
      std::set<FieldElement> xs;
      Point Ra = E2.base_change(L).infinity();
      for (int i = 0; i < n; ++i, Ra = Ra + a) {
        Point R = Ra;
        for (int j = 0; j < n; ++j, R = R + b)
          if (!R.is_infinity()) xs.insert(R.x());
      }
      Polynomial hL = product_of_linears(L, std::vector<FieldElement>(xs.begin(), xs.end()));
      auto h = embedding(E.field(), L).descend(hL);
      if (!h) raise(ErrorKind::DataError, "dual kernel does not descend");
      Isogeny back = velu_from_kernel_polynomial(E2, *h);
      const Isogeny psi = back;
      auto pts = test_points(E, 4);
      for (const auto& u : isomorphisms(back.target(), E)) {
        Isogeny cand = compose(Isogeny({scaling_step(back.target(), E, u)}), psi);
        bool ok = true;
        for (const auto& P : pts) {
          if (cand.evaluate(phi.evaluate(P)) != scalar_mul(n, P)) {
            ok = false;
            break;
          }
        }
        if (ok) return cand;
      }
      raise(ErrorKind::DataError, "no isomorphism completes the dual");
    }
  }
  raise(ErrorKind::DataError, "unknown step kind");
}

}  // namespace

Isogeny dual(const Isogeny& phi) {
  Isogeny out = Isogeny::identity(phi.target());
  for (auto it = phi.steps().rbegin(); it != phi.steps().rend(); ++it) out = compose(dual_step(*it), out);
  return out;
}

std::vector<Point> kernel_points(const Isogeny& phi) {
  const Curve& E = phi.source();
  Field F = E.field();
  const Polynomial h = phi.kernel_polynomial();
  for (int d = 1; F.degree() * d <= kMaxDegree; ++d) {
    Field L = d == 1 ? F : extension(F, d);
    const Embedding& emb = embedding(F, L);
    auto xs = h.map(emb).roots();
    if (static_cast<int>(xs.size()) != h.degree()) continue;
    Curve EL = E.base_change(L);
    std::vector<Point> pts{EL.infinity()};
    bool ok = true;
    for (const auto& x : xs) {
      auto y = EL.rhs(x).sqrt();
      if (!y) {
        ok = false;
        break;
      }
      pts.push_back(EL.point(x, y->first));
      if (!y->first.is_zero()) pts.push_back(EL.point(x, y->second));
    }
    if (ok) return pts;
  }
  raise(ErrorKind::BoundExceeded, "kernel points beyond degree 24");
}

// ---------------------------------------------------------------------

std::vector<FieldElement> x_multiples(const FieldElement& A, const FieldElement& B, const FieldElement& x0,
                                      int count) {
  std::vector<FieldElement> xs{x0};
  if (count <= 1) return xs;
  const FieldElement rhs = (x0.square() + A) * x0 + B;
  const FieldElement t = x0.square() - A;
  xs.push_back((t.square() - B.scaled(8) * x0) / rhs.scaled(4));
  for (int i = 2; i < count; ++i) {
    const FieldElement& xi = xs.back();
    const FieldElement& xm = xs[xs.size() - 2];
    FieldElement d = x0 - xi;
    FieldElement sum = ((x0 + xi) * (x0 * xi + A) + B.scaled(2)).scaled(2) / d.square();
    xs.push_back(sum - xm);
  }
  return xs;
}

std::vector<Polynomial> rational_kernel_polynomials(const Curve& E, int ell) {
  check_prime(ell);
  Field F = E.field();
  if (static_cast<std::uint32_t>(ell) == F.characteristic()) raise(ErrorKind::InvalidArgument, "ell equals p");
  std::vector<Polynomial> out;
  if (ell == 2) {
    for (const auto& r : E.rhs_polynomial().roots()) out.push_back(Polynomial::linear(r));
    return out;
  }
  const std::int64_t t = static_cast<std::int64_t>(mod(static_cast<std::int64_t>(E.trace_big() % ell), ell));
  const std::int64_t q = static_cast<std::int64_t>(F.order() % ell);
  std::set<int> degrees;
  for (std::int64_t lam = 1; lam < ell; ++lam) {
    if (mod(lam * lam - t * lam + q, ell) != 0) continue;
    std::int64_t v = lam;
    int d = 1;
    while (v != 1 && v != ell - 1) {
      v = v * lam % ell;
      ++d;
    }
    degrees.insert(d);
  }
  if (degrees.empty()) return out;
  const Polynomial psi = torsion_x_polynomial(E, ell);
  for (int d : degrees) {
    if (F.degree() * d > kMaxDegree) raise(ErrorKind::BoundExceeded, "kernel field beyond degree 24");
    Field L = d == 1 ? F : extension(F, d);
    const Embedding& emb = embedding(F, L);
    std::set<FieldElement> assigned;
    for (const auto& x0 : psi.map(emb).roots()) {
      if (assigned.count(x0)) continue;
      auto xs = x_multiples(emb(E.a()), emb(E.b()), x0, (ell - 1) / 2);
      assigned.insert(xs.begin(), xs.end());
      auto h = emb.descend(product_of_linears(L, xs));
      if (h && std::find(out.begin(), out.end(), *h) == out.end()) out.push_back(*h);
    }
  }
  std::sort(out.begin(), out.end(), poly_less);
  return out;
}

std::vector<Isogeny> rational_isogenies(const Curve& E, int ell) {
  std::vector<Isogeny> out;
  for (const auto& h : rational_kernel_polynomials(E, ell)) out.push_back(velu_from_kernel_polynomial(E, h));
  return out;
}

std::vector<Isogeny> closure_isogenies(const Curve& E, int ell) {
  check_prime(ell);
  Field F = E.field();
  if (static_cast<std::uint32_t>(ell) == F.characteristic()) raise(ErrorKind::InvalidArgument, "ell equals p");
  const Polynomial psi = ell == 2 ? E.rhs_polynomial() : torsion_x_polynomial(E, ell);
  const int r = F.degree();
  std::vector<Isogeny> out;
  int covered = 0;
  for (int d = 1; covered < psi.degree(); ++d) {
    if (r * d > kMaxDegree) raise(ErrorKind::BoundExceeded, "torsion field beyond degree 24");
    Field L = d == 1 ? F : extension(F, d);
    const Embedding& emb = embedding(F, L);
    std::set<FieldElement> used;
    for (const auto& x0 : psi.map(emb).roots()) {
      bool smaller = false;
      for (int k = 1; k < d && !smaller; ++k) smaller = d % k == 0 && x0.frobenius(r * k) == x0;
      if (smaller) continue;
      ++covered;
      if (used.count(x0)) continue;
      auto xs = x_multiples(emb(E.a()), emb(E.b()), x0, std::max(1, (ell - 1) / 2));
      for (int i = 0; i < d; ++i)
        for (const auto& x : xs) used.insert(x.frobenius(r * i));
      out.push_back(velu_from_kernel_polynomial(E.base_change(L), product_of_linears(L, xs)));
    }
  }
  return out;
}

// ---------------------------------------------------------------------

ModularPolynomial::ModularPolynomial(int level, std::map<std::pair<int, int>, BigInt> coeffs)
    : level_(level), c_(std::move(coeffs)) {}

const BigInt& ModularPolynomial::coeff(int i, int j) const {
  static const BigInt zero = 0;
  auto it = c_.find({i, j});
  return it == c_.end() ? zero : it->second;
}

Polynomial ModularPolynomial::specialize(const FieldElement& x) const {
  Field F = x.field();
  const std::int64_t p = F.characteristic();
  std::vector<FieldElement> xp{F.one()};
  for (int i = 1; i <= level_ + 1; ++i) xp.push_back(xp.back() * x);
  std::vector<FieldElement> out(static_cast<std::size_t>(level_) + 2, F.zero());
  for (const auto& [ij, c] : c_) {
    const std::int64_t cm = static_cast<std::int64_t>(c % p);
    out[static_cast<std::size_t>(ij.second)] += xp[static_cast<std::size_t>(ij.first)].scaled(cm);
  }
  return Polynomial(F, out);
}

FieldElement ModularPolynomial::evaluate(const FieldElement& x, const FieldElement& y) const {
  return specialize(x)(y);
}

std::map<int, ModularPolynomial> parse_modular_polynomials(const std::string& text) {
  std::map<int, std::map<std::pair<int, int>, BigInt>> raw;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    int ell, i, j;
    std::string cs;
    if (!(ls >> ell)) continue;
    if (!(ls >> i >> j >> cs)) raise(ErrorKind::DataError, "malformed modular polynomial line " + std::to_string(lineno));
    BigInt c;
    try {
      c = BigInt(cs);
    } catch (const std::exception&) {
      raise(ErrorKind::DataError, "bad coefficient on line " + std::to_string(lineno));
    }
    raw[ell][{i, j}] = c;
    raw[ell][{j, i}] = c;
  }
  std::map<int, ModularPolynomial> out;
  for (auto& [ell, c] : raw) {
    ModularPolynomial m(ell, std::move(c));
    if (m.coeff(ell + 1, 0) != 1 || m.coeff(ell, ell) != -1)
      raise(ErrorKind::DataError, "level " + std::to_string(ell) + " data lacks the expected leading terms");
    for (int i = 0; i <= ell + 1; ++i)
      for (int j = 0; j <= ell + 1; ++j)
        if ((i > ell + 1 || j > ell + 1) && m.coeff(i, j) != 0) raise(ErrorKind::DataError, "degree too large");
    out.emplace(ell, std::move(m));
  }
  return out;
}

const ModularPolynomial& modular_polynomial(int ell) {
  static std::once_flag once;
  static std::map<int, ModularPolynomial> table;
  std::call_once(once, [] {
    std::string text;
    if (const char* dir = std::getenv("ISOGENION_DATA"); dir && *dir) {
      std::string path = std::string(dir) + "/modular_polynomials.txt";
      std::ifstream f(path);
      if (!f) raise(ErrorKind::DataError, "cannot read " + path);
      std::stringstream ss;
      ss << f.rdbuf();
      text = ss.str();
    } else {
      text = detail::kEmbeddedModularPolynomials;
    }
    table = parse_modular_polynomials(text);
  });
  auto it = table.find(ell);
  if (it == table.end()) raise(ErrorKind::UnsupportedLevel, "no modular polynomial of level " + std::to_string(ell));
  return it->second;
}

bool modular_adjacent(int ell, const FieldElement& j1, const FieldElement& j2) {
  if (j1.field() != j2.field()) raise(ErrorKind::FieldMismatch, "j-invariants in different fields");
  return modular_polynomial(ell).evaluate(j1, j2).is_zero();
}

}  // namespace isogenion
