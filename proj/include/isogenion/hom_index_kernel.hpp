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

#ifndef ISOGENION_HOM_INDEX_KERNEL_HPP
#define ISOGENION_HOM_INDEX_KERNEL_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "isogenion/endo_ring.hpp"
#include "isogenion/isogeny.hpp"
#include "isogenion/quadratic_order.hpp"

namespace isogenion {

int rho(int e);

// ell -> e' with [End(E2) : End(E1)] = prod ell^e'; zero exponents omitted.
using ConductorRatio = std::map<std::int64_t, int>;
ConductorRatio conductor_ratio(const Curve& E2, const Curve& E1);

// Hom(E1, E2) beta inside End(E2) for beta : E2 -> E1. The second generator
// is rho_part * (b * excess + f*gamma), scaled by the backtrack factor.
struct HomIdealDescription {
  CurveClass source_class, target_class;
  std::int64_t beta_degree = 1;
  std::int64_t backtrack_factor = 1;
  std::int64_t insep_degree = 1;
  ConductorRatio ratio;
  std::int64_t rho_part = 1;  // prod ell^rho(e')
  std::int64_t excess = 1;    // prod ell^(rho(e') - e')
  std::int64_t formula_index = 1;
  std::int64_t oracle_index = 1;
  bool full_endomorphisms = false;
  AnnihilatorLattice lattice;  // oracle lattice of the separable kernel
  std::int64_t b = 0;
  std::int64_t b_modulus = 1;
  bool fits_display = true;

  bool agrees() const { return formula_index == oracle_index; }
};
HomIdealDescription hom_index(const Curve& E2, const Curve& E1, const Isogeny& beta);

// Hom(E1, E2) = Z * beta^ / d1 + Z * (x + y*f*gamma) beta^ / d2.
struct HomLatticeBasis {
  std::int64_t d1 = 1;
  OrderElement second{0, 1};
  std::int64_t d2 = 1;
  std::string to_string() const;
};
HomLatticeBasis hom_lattice_basis(const Curve& E2, const Curve& E1, const Isogeny& beta);

// Distinct cyclic composites of k-rational prime-degree isogenies out of E,
// one per kernel, with degree at most max_degree; sorted by degree.
std::vector<Isogeny> cyclic_composites(const Curve& E, const std::vector<int>& primes, std::int64_t max_degree);

bool corresponds_to_kernel_ideal(const Curve& E2, const Curve& E1);

// Largest m with E[m] inside the separable kernel.
std::int64_t backtrack_factor(const Isogeny& beta);

// H(I): the points of E[A] killed by every element of I, where A is the least
// positive integer in I. Points live over an extension of absolute degree
// divisible by `degree_multiple`.
std::vector<Point> kernel_of_ideal(const Curve& E, const QuadIdeal& I, int degree_multiple = 1);
// I(H) as an ideal of End(E).
QuadIdeal annihilator_ideal(const Curve& E, const std::vector<Point>& H);
// Whether H(I(ker beta)) = ker beta.
bool kernel_round_trip(const Isogeny& beta);

struct PPartIdeal {
  QuadIdeal P1, P2;  // P1 contains pi
  int e1 = 0, e = 0;
  QuadIdeal ideal;   // P1^e1 * P2^(e - e1)
};
PPartIdeal p_part_ideal(const Curve& E, int e1, int e);

}  // namespace isogenion

#endif  // ISOGENION_HOM_INDEX_KERNEL_HPP
