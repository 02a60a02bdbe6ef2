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

#include "isogenion/endo_ring.hpp"

#include <mutex>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include "isogenion/error.hpp"
#include "isogenion/isogeny.hpp"
#include "isogenion/numtheory.hpp"

namespace isogenion {

namespace {

constexpr std::int64_t kMaxAnnihilatorExponent = 4096;

std::int64_t small_q(const Curve& E) {
  const BigInt& q = E.field().order();
  if (q > BigInt(1) << 62) raise(ErrorKind::BoundExceeded, "field too large");
  return static_cast<std::int64_t>(q);
}

std::pair<std::int64_t, std::int64_t> frobenius_disc(const Curve& E) {
  if (has_scalar_frobenius(E)) raise(ErrorKind::OrdinaryOnly, "Frobenius is an integer");
  auto df = discriminant_frobenius_order(small_q(E), E.trace());
  if (df.second % static_cast<std::int64_t>(E.field().characteristic()) == 0)
    raise(ErrorKind::OrdinaryOnly, "p divides the conductor of Z[pi]");
  return df;
}

void check_on(const Curve& E, const Point& P) {
  Field L = P.curve().field();
  if (L.characteristic() != E.field().characteristic() || L.degree() % E.field().degree() != 0 ||
      P.curve() != E.base_change(L))
    raise(ErrorKind::CurveMismatch, "point is not on the curve");
}

Point pi_minus(const Curve& E, std::int64_t c, const Point& P) {
  return frobenius_point(P, E.field().degree()) - scalar_mul(c, P);
}

std::int64_t order_of(const Point& P) { return small_point_order(P); }

std::optional<Isogeny> build_fgamma(const Curve& E, const EndoDescriptor& d) {
  try {
    Isogeny psi = Isogeny::identity(E);
    Curve cur = E;
    for (auto [ell, lev] : d.levels) {
      for (int s = lev; s > 0; --s) {
        bool up = false;
        for (const auto& phi : rational_isogenies(cur, static_cast<int>(ell))) {
          if (volcano_level(phi.target(), static_cast<int>(ell)) == s - 1) {
            psi = compose(phi, psi);
            cur = phi.target();
            up = true;
            break;
          }
        }
        if (!up) return std::nullopt;
      }
    }
    const std::int64_t N0 = d.D0 % 4 == 0 ? -d.D0 / 4 : (1 - d.D0) / 4;
    std::vector<Isogeny> cands;
    if (N0 == 1) {
      for (const auto& u : isomorphisms(cur, cur)) cands.push_back(scaling_isogeny(cur, cur, u));
    } else if (N0 <= 13 && is_prime(static_cast<std::uint64_t>(N0)) &&
               static_cast<std::uint32_t>(N0) != E.field().characteristic()) {
      for (const auto& phi : rational_isogenies(cur, static_cast<int>(N0)))
        for (const auto& u : isomorphisms(phi.target(), cur))
          cands.push_back(compose(scaling_isogeny(phi.target(), cur, u), phi));
    }
    const auto pts_s = sample_points(cur, 4);
    for (const auto& X : cands) {
      bool ok = true;
      for (const auto& P : pts_s) ok = ok && scalar_mul(d.f0, X.evaluate(P)) == pi_minus(cur, d.c, P);
      if (!ok) continue;
      Isogeny fg = compose(dual(psi), compose(X, psi));
      for (const auto& P : sample_points(E, 4))
        if (scalar_mul(d.w, fg.evaluate(P)) != pi_minus(E, d.c, P)) raise(ErrorKind::DataError, "f*gamma check");
      return fg;
    }
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::DataError) throw;
  }
  return std::nullopt;
}

struct FgammaCache {
  std::once_flag once;
  std::optional<Isogeny> iso;
};

const std::optional<Isogeny>& explicit_fgamma(const Curve& E, const EndoDescriptor& d) {
  static std::mutex mu;
  static std::map<const CurveData*, std::shared_ptr<FgammaCache>> cache;
  std::shared_ptr<FgammaCache> slot;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto& s = cache[E.data()];
    if (!s) s = std::make_shared<FgammaCache>();
    slot = s;
  }
  std::call_once(slot->once, [&] { slot->iso = build_fgamma(E, d); });
  return slot->iso;
}

Matrix2 to_matrix(const std::array<std::array<int, 2>, 2>& m) {
  return {{{m[0][0], m[0][1]}, {m[1][0], m[1][1]}}};
}

}  // namespace

std::int64_t small_point_order(const Point& P) {
  Point Q = P;
  for (std::int64_t n = 1; n <= kMaxAnnihilatorExponent; ++n, Q = Q + P)
    if (Q.is_infinity()) return n;
  raise(ErrorKind::BoundExceeded, "point order beyond 4096");
}

bool has_scalar_frobenius(const Curve& E) {
  const BigInt& t = E.trace_big();
  return t * t == 4 * E.field().order();
}

int volcano_level(const Curve& E, int ell) {
  auto [D0, f0] = frobenius_disc(E);
  const int d = valuation(f0, ell);
  if (d == 0) return 0;
  static std::mutex mu;
  static std::map<std::pair<const CurveData*, int>, int> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({E.data(), ell});
    if (it != cache.end()) return it->second;
  }
  auto ks = rational_kernel_polynomials(E, ell);
  int level = d;
  if (ks.size() != 1) {
    int best = d + 1;
    for (std::size_t i = 0; i < ks.size() && i < 3; ++i) {
      Curve prev = E;
      Curve cur = velu_from_kernel_polynomial(E, ks[i]).target();
      for (int len = 1; len < best; ++len) {
        auto next = rational_kernel_polynomials(cur, ell);
        if (next.size() == 1) {
          best = len;
          break;
        }
        if (len + 1 >= best) break;
        bool skipped = false;
        std::optional<Curve> step;
        for (const auto& h : next) {
          Curve T = velu_from_kernel_polynomial(cur, h).target();
          if (!skipped && is_isomorphic(T, prev)) {
            skipped = true;
            continue;
          }
          step = T;
          break;
        }
        if (!step) break;
        prev = cur;
        cur = *step;
      }
    }
    if (best > d) raise(ErrorKind::DataError, "no walk reached the floor");
    level = d - best;
  }
  std::lock_guard<std::mutex> lock(mu);
  cache[{E.data(), ell}] = level;
  return level;
}

EndoDescriptor compute_endo_conductor(const Curve& E) {
  auto [D0, f0] = frobenius_disc(E);
  EndoDescriptor d;
  d.curve_class = classify(E);
  d.D0 = D0;
  d.f0 = f0;
  for (auto [ell, e] : factorize(static_cast<std::uint64_t>(f0))) {
    const int v = volcano_level(E, static_cast<int>(ell));
    d.levels[static_cast<std::int64_t>(ell)] = v;
    d.f *= ipow(static_cast<std::int64_t>(ell), v);
  }
  d.w = f0 / d.f;
  d.c = (E.trace() - f0 * (mod(D0, 4) == 1 ? 1 : 0)) / 2;
  return d;
}

FrobeniusMatrix frobenius_matrix(const Curve& E, int m) {
  FrobeniusMatrix out;
  out.m = m;
  if (m == 1) return out;
  out.frame = TorsionFrame::get(E, m);
  out.matrix = to_matrix(out.frame->frobenius());
  return out;
}

Point apply_fgamma(const Curve& E, const Point& P) {
  check_on(E, P);
  EndoDescriptor d = compute_endo_conductor(E);
  if (d.w == 1) return pi_minus(E, d.c, P);
  if (const auto& fg = explicit_fgamma(E, d)) return fg->evaluate(P);
  return apply_fgamma_by_lift(E, P);
}

Point apply_fgamma_by_lift(const Curve& E, const Point& P) {
  check_on(E, P);
  EndoDescriptor d = compute_endo_conductor(E);
  if (P.is_infinity()) return P;
  const std::int64_t m = order_of(P);
  if (m * d.w > kMaxTorsion) raise(ErrorKind::BoundExceeded, "lift needs torsion beyond 64");
  Field L = P.curve().field();
  auto fr = TorsionFrame::get(E, static_cast<int>(m * d.w), L.degree());
  auto ij = fr->coords(P);
  if (!ij || ij->first % d.w != 0 || ij->second % d.w != 0) raise(ErrorKind::DataError, "point outside frame");
  Point P0 = fr->point(ij->first / d.w, ij->second / d.w);
  Point R = pi_minus(E, d.c, P0);
  if (fr->ext() == L || R.is_infinity()) return R.is_infinity() ? P.curve().infinity() : R;
  const Embedding& emb = embedding(L, fr->ext());
  auto x = emb.descend(R.x());
  auto y = emb.descend(R.y());
  if (!x || !y) raise(ErrorKind::DataError, "image does not descend");
  return P.curve().point(*x, *y);
}

Matrix2 fgamma_matrix(const Curve& E, int m) {
  if (m == 1) return {};
  auto fr = TorsionFrame::get(E, m);
  auto a = fr->coords(apply_fgamma(E, fr->P()));
  auto b = fr->coords(apply_fgamma(E, fr->Q()));
  if (!a || !b) raise(ErrorKind::DataError, "f*gamma image outside frame");
  return {{{a->first, b->first}, {a->second, b->second}}};
}

std::optional<OrderElement> to_order_basis(const EndoDescriptor& d, const PiElement& a) {
  if (a.w == 0) raise(ErrorKind::InvalidArgument, "zero denominator");
  const std::int64_t x = a.u + a.v * d.c, y = a.v * d.w;
  if (x % a.w != 0 || y % a.w != 0) return std::nullopt;
  return OrderElement{x / a.w, y / a.w};
}

Point evaluate_order_element(const Curve& E, const OrderElement& a, const Point& P) {
  check_on(E, P);
  Point R = scalar_mul(a.x, P);
  if (a.y != 0) R = R + scalar_mul(a.y, apply_fgamma(E, P));
  return R;
}

Point evaluate_order_element(const Curve& E, const PiElement& a, const Point& P) {
  check_on(E, P);
  if (has_scalar_frobenius(E)) {
    if (a.w == 0) raise(ErrorKind::InvalidArgument, "zero denominator");
    const std::int64_t s = E.trace() / 2;
    if ((a.u + a.v * s) % a.w != 0) raise(ErrorKind::NotInEndomorphismRing, "not an integer");
    return scalar_mul((a.u + a.v * s) / a.w, P);
  }
  auto b = to_order_basis(compute_endo_conductor(E), a);
  if (!b) raise(ErrorKind::NotInEndomorphismRing, "element is not integral at the conductor");
  return evaluate_order_element(E, *b, P);
}

std::int64_t group_exponent(const std::vector<Point>& gens) {
  std::int64_t n = 1;
  for (const auto& P : gens) n = lcm64(n, order_of(P));
  return n;
}

std::vector<Point> subgroup_elements(const std::vector<Point>& gens) {
  if (gens.empty()) return {};
  std::vector<Point> elems{gens.front().curve().infinity()};
  std::unordered_set<Point, PointHash> seen(elems.begin(), elems.end());
  for (const auto& g : gens) {
    const std::vector<Point> base = elems;
    for (Point Q = g; !seen.count(Q); Q = Q + g) {
      for (const auto& e : base) {
        Point R = e + Q;
        if (seen.insert(R).second) elems.push_back(R);
      }
    }
  }
  return elems;
}

AnnihilatorLattice annihilator_lattice(const Curve& E, const std::vector<Point>& gens) {
  if (has_scalar_frobenius(E)) raise(ErrorKind::InvalidArgument, "End(E) is not commutative");
  for (const auto& P : gens) check_on(E, P);
  const std::int64_t n = group_exponent(gens);
  if (n == 1) return {};
  const std::size_t g = gens.size();
  std::vector<std::vector<Point>> K(g), L(g);
  for (std::size_t i = 0; i < g; ++i) {
    const Point Li = apply_fgamma(E, gens[i]);
    Point a = gens[i].curve().infinity(), b = a;
    for (std::int64_t x = 0; x < n; ++x, a = a + gens[i], b = b - Li) {
      K[i].push_back(a);
      L[i].push_back(b);
    }
  }
  const std::int64_t ord0 = order_of(gens[0]);
  std::unordered_map<Point, std::int64_t, PointHash> first;
  for (std::int64_t x = 0; x < ord0; ++x) first.emplace(K[0][static_cast<std::size_t>(x)], x);
  std::vector<char> in(static_cast<std::size_t>(n * n), 0);
  std::int64_t count = 0;
  for (std::int64_t y = 0; y < n; ++y) {
    auto it = first.find(L[0][static_cast<std::size_t>(y)]);
    if (it == first.end()) continue;
    for (std::int64_t x = it->second; x < n; x += ord0) {
      bool ok = true;
      for (std::size_t i = 1; i < g && ok; ++i)
        ok = K[i][static_cast<std::size_t>(x)] == L[i][static_cast<std::size_t>(y)];
      if (ok) {
        in[static_cast<std::size_t>(y * n + x)] = 1;
        ++count;
      }
    }
  }
  AnnihilatorLattice out{n, 0, n};
  for (std::int64_t x = 1; x < n; ++x)
    if (in[static_cast<std::size_t>(x)]) {
      out.A = x;
      break;
    }
  for (std::int64_t y = 1; y < n && out.C == n; ++y)
    for (std::int64_t x = 0; x < n; ++x)
      if (in[static_cast<std::size_t>(y * n + x)]) {
        out.C = y;
        out.B = x % out.A;
        break;
      }
  if (count * out.A * out.C != n * n) raise(ErrorKind::DataError, "annihilator is not a lattice");
  return out;
}

std::int64_t annihilator_index(const Curve& E, const std::vector<Point>& gens) {
  if (!has_scalar_frobenius(E)) return annihilator_lattice(E, gens).index();
  for (const auto& P : gens) check_on(E, P);
  const std::int64_t n = group_exponent(gens);
  if (n == 1) return 1;
  if (n > kMaxTorsion) raise(ErrorKind::BoundExceeded, "exponent beyond 64");
  int deg = 1;
  for (const auto& P : gens) deg = static_cast<int>(lcm64(deg, P.curve().field().degree()));
  auto fr = TorsionFrame::get(E, static_cast<int>(n), deg);
  std::vector<std::pair<int, int>> v;
  for (const auto& P : gens) {
    auto c = fr->coords(P);
    if (!c) raise(ErrorKind::DataError, "generator outside frame");
    v.push_back(*c);
  }
  std::int64_t rows = 0;
  for (std::int64_t r1 = 0; r1 < n; ++r1)
    for (std::int64_t r2 = 0; r2 < n; ++r2) {
      bool ok = true;
      for (auto [a, b] : v) ok = ok && (r1 * a + r2 * b) % n == 0;
      rows += ok;
    }
  return n * n * n * n / (rows * rows);
}

std::int64_t annihilator_index(const Curve& E, const Point& kernel_gen, int m) {
  check_on(E, kernel_gen);
  if (order_of(kernel_gen) != m) raise(ErrorKind::WrongOrder, "generator order differs from m");
  return annihilator_index(E, std::vector<Point>{kernel_gen});
}

}  // namespace isogenion
