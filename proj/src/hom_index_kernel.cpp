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

#include "isogenion/hom_index_kernel.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <unordered_set>

#include "isogenion/error.hpp"
#include "isogenion/numtheory.hpp"

namespace isogenion {

namespace {

void check_isogenous(const Curve& E2, const Curve& E1) {
  if (E2.field() != E1.field()) raise(ErrorKind::FieldMismatch, "curves over different fields");
  if (E2.trace_big() != E1.trace_big()) raise(ErrorKind::TraceMismatch, "traces differ");
}

void check_beta(const Curve& E2, const Curve& E1, const Isogeny& beta) {
  check_isogenous(E2, E1);
  if (!is_isomorphic(beta.source(), E2)) raise(ErrorKind::ClassMismatch, "beta does not start at E2");
  if (!is_isomorphic(beta.target(), E1)) raise(ErrorKind::ClassMismatch, "beta does not end at E1");
}

// A small generating set, largest orders first.
std::vector<Point> generators_of(std::vector<Point> H) {
  std::vector<std::pair<std::int64_t, std::size_t>> ord;
  for (std::size_t i = 0; i < H.size(); ++i) ord.push_back({-small_point_order(H[i]), i});
  std::sort(ord.begin(), ord.end());
  std::vector<Point> gens;
  std::unordered_set<Point, PointHash> span;
  if (!H.empty()) span.insert(H.front().curve().infinity());
  for (auto [o, i] : ord) {
    if (span.count(H[i])) continue;
    gens.push_back(H[i]);
    auto all = subgroup_elements(gens);
    span = std::unordered_set<Point, PointHash>(all.begin(), all.end());
    if (span.size() == H.size()) break;
  }
  return gens;
}

std::vector<Point> separable_kernel(const Isogeny& beta) {
  if (beta.separable_degree() == 1) return {beta.source().infinity()};
  return kernel_points(beta);
}

std::int64_t backtrack_of(const std::vector<Point>& H) {
  const auto n = static_cast<std::int64_t>(H.size());
  std::int64_t best = 1;
  for (std::int64_t m = 2; m * m <= n; ++m) {
    if (n % (m * m) != 0) continue;
    std::int64_t killed = 0;
    for (const auto& P : H) killed += scalar_mul(m, P).is_infinity();
    if (killed == m * m) best = m;
  }
  return best;
}

}  // namespace

int rho(int e) { return e > 0 ? e : 0; }

ConductorRatio conductor_ratio(const Curve& E2, const Curve& E1) {
  check_isogenous(E2, E1);
  EndoDescriptor d2 = compute_endo_conductor(E2), d1 = compute_endo_conductor(E1);
  ConductorRatio out;
  for (auto [ell, v2] : d2.levels) {
    const int e = d1.levels.at(ell) - v2;
    if (e != 0) out[ell] = e;
  }
  return out;
}

std::int64_t backtrack_factor(const Isogeny& beta) { return backtrack_of(separable_kernel(beta)); }

HomIdealDescription hom_index(const Curve& E2, const Curve& E1, const Isogeny& beta) {
  check_beta(E2, E1, beta);
  const Curve& S = beta.source();
  HomIdealDescription out;
  out.source_class = classify(S);
  out.target_class = classify(beta.target());
  out.beta_degree = beta.degree();
  const std::int64_t sep = beta.separable_degree();
  out.insep_degree = out.beta_degree / sep;
  const std::vector<Point> H = separable_kernel(beta);
  out.backtrack_factor = backtrack_of(H);
  const std::vector<Point> gens = generators_of(H);
  if (has_scalar_frobenius(S)) {
    out.full_endomorphisms = true;
    out.formula_index = out.beta_degree * out.beta_degree;
    out.oracle_index = annihilator_index(S, gens) * out.insep_degree * out.insep_degree;
    return out;
  }
  out.ratio = conductor_ratio(S, beta.target());
  for (auto [ell, e] : out.ratio) {
    out.rho_part *= ipow(ell, rho(e));
    out.excess *= ipow(ell, rho(e) - e);
  }
  out.formula_index = out.rho_part * out.beta_degree;
  out.lattice = annihilator_lattice(S, gens);
  out.oracle_index = out.lattice.index() * out.insep_degree;

  const std::int64_t m = out.backtrack_factor;
  const std::int64_t reduced = sep / (m * m);
  const std::int64_t A = out.lattice.A, B = out.lattice.B;
  out.fits_display = A == m * reduced && out.lattice.C == m * out.rho_part;
  const std::int64_t k = mod(m * out.rho_part * out.excess, A);
  const std::int64_t g = std::gcd(k, A);
  if (B % g != 0) {
    out.fits_display = false;
    return out;
  }
  out.b_modulus = A / g;
  out.b = out.b_modulus == 1 ? 0
                             : mod(static_cast<std::int64_t>(
                                       (static_cast<__int128>(B / g) * invmod(k / g, static_cast<std::uint64_t>(out.b_modulus))) %
                                       out.b_modulus),
                                   out.b_modulus);
  return out;
}

std::string HomLatticeBasis::to_string() const {
  std::ostringstream os;
  os << "Z*beta^/" << d1 << " + Z*(" << second.x << " + " << second.y << "*fgamma)*beta^/" << d2;
  return os.str();
}

HomLatticeBasis hom_lattice_basis(const Curve& E2, const Curve& E1, const Isogeny& beta) {
  if (beta.insep_exp() != 0) raise(ErrorKind::PPartUnsupported, "basis for separable beta only");
  HomIdealDescription d = hom_index(E2, E1, beta);
  if (d.full_endomorphisms) raise(ErrorKind::InvalidArgument, "End(E2) is not commutative");
  const std::int64_t m = d.backtrack_factor;
  HomLatticeBasis out;
  out.d1 = d.beta_degree / d.lattice.A;
  out.d2 = d.beta_degree / m;
  out.second = {d.lattice.B / m, d.lattice.C / m};
  return out;
}

std::vector<Isogeny> cyclic_composites(const Curve& E, const std::vector<int>& primes, std::int64_t max_degree) {
  std::vector<Isogeny> out;
  std::vector<Polynomial> seen;
  std::vector<Isogeny> frontier{Isogeny::identity(E)};
  while (!frontier.empty()) {
    std::vector<Isogeny> next;
    for (const auto& phi : frontier) {
      for (int ell : primes) {
        if (phi.degree() * ell > max_degree) continue;
        for (const auto& psi : rational_isogenies(phi.target(), ell)) {
          Isogeny chi = compose(psi, phi);
          Polynomial h = chi.kernel_polynomial();
          if (std::find(seen.begin(), seen.end(), h) != seen.end()) continue;
          seen.push_back(h);
          if (backtrack_factor(chi) != 1) continue;
          next.push_back(chi);
        }
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  std::stable_sort(out.begin(), out.end(), [](const Isogeny& a, const Isogeny& b) { return a.degree() < b.degree(); });
  return out;
}

bool corresponds_to_kernel_ideal(const Curve& E2, const Curve& E1) {
  for (auto [ell, e] : conductor_ratio(E2, E1))
    if (e > 0) return false;
  return true;
}

std::vector<Point> kernel_of_ideal(const Curve& E, const QuadIdeal& I, int degree_multiple) {
  if (has_scalar_frobenius(E)) raise(ErrorKind::InvalidArgument, "End(E) is not commutative");
  EndoDescriptor d = compute_endo_conductor(E);
  if (I.order != d.order()) raise(ErrorKind::OrderMismatch, "ideal is not in End(E)");
  const std::int64_t A = I.A();
  if (A % static_cast<std::int64_t>(E.field().characteristic()) == 0)
    raise(ErrorKind::PPartUnsupported, "ideal norm divisible by p");
  if (A > kMaxTorsion) raise(ErrorKind::BoundExceeded, "ideal needs torsion beyond 64");
  if (A == 1) return {E.infinity()};
  auto fr = TorsionFrame::get(E, static_cast<int>(A), degree_multiple);
  auto gp = fr->coords(apply_fgamma(E, fr->P()));
  auto gq = fr->coords(apply_fgamma(E, fr->Q()));
  if (!gp || !gq) raise(ErrorKind::DataError, "f*gamma image outside frame");
  std::vector<Point> out;
  for (std::int64_t i = 0; i < A; ++i)
    for (std::int64_t j = 0; j < A; ++j) {
      const std::int64_t x = I.B() * i + I.C() * (gp->first * i + gq->first * j);
      const std::int64_t y = I.B() * j + I.C() * (gp->second * i + gq->second * j);
      if (mod(x, A) == 0 && mod(y, A) == 0) out.push_back(fr->point(i, j));
    }
  return out;
}

QuadIdeal annihilator_ideal(const Curve& E, const std::vector<Point>& H) {
  AnnihilatorLattice L = annihilator_lattice(E, generators_of(H));
  if (L.A % L.C != 0 || L.B % L.C != 0) raise(ErrorKind::DataError, "annihilator is not an ideal");
  return ideal_create(compute_endo_conductor(E).order(), L.C, L.A / L.C, L.B / L.C);
}

bool kernel_round_trip(const Isogeny& beta) {
  const Curve& S = beta.source();
  const std::vector<Point> H = separable_kernel(beta);
  const QuadIdeal I = annihilator_ideal(S, H);
  const std::vector<Point> H2 = kernel_of_ideal(S, I, H.front().curve().field().degree());
  if (H2.size() != H.size()) return false;
  std::unordered_set<Point, PointHash> big(H2.begin(), H2.end());
  Field L = H2.front().curve().field();
  for (const auto& P : H)
    if (!big.count(P.curve().field() == L ? P : embed_point(P, L))) return false;
  return true;
}

PPartIdeal p_part_ideal(const Curve& E, int e1, int e) {
  if (E.is_supersingular()) raise(ErrorKind::SupersingularUnsupported, "p-part ideals need an ordinary curve");
  if (e1 < 0 || e < e1) raise(ErrorKind::InvalidArgument, "need 0 <= e1 <= e");
  EndoDescriptor d = compute_endo_conductor(E);
  const QuadOrder O = d.order();
  const auto p = static_cast<std::int64_t>(E.field().characteristic());
  auto ps = primes_above(O, p);
  if (ps.size() != 2) raise(ErrorKind::DataError, "p does not split");
  const OrderElement pi{d.c, d.w};
  PPartIdeal out;
  out.P1 = ps[0].contains(pi) ? ps[0] : ps[1];
  out.P2 = ideal_conjugate(out.P1);
  out.e1 = e1;
  out.e = e;
  out.ideal = unit_ideal(O);
  for (int i = 0; i < e1; ++i) out.ideal = ideal_multiply(out.ideal, out.P1);
  for (int i = e1; i < e; ++i) out.ideal = ideal_multiply(out.ideal, out.P2);
  return out;
}

}  // namespace isogenion
