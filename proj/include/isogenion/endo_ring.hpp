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

#ifndef ISOGENION_ENDO_RING_HPP
#define ISOGENION_ENDO_RING_HPP

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <vector>

#include "isogenion/elliptic_curve.hpp"
#include "isogenion/quadratic_order.hpp"

namespace isogenion {

using Matrix2 = std::array<std::array<std::int64_t, 2>, 2>;

// End(E) = Z + Z*f*gamma inside the order of discriminant f^2 D0, with
// f*gamma = (pi - c) / w. For t^2 = 4q use the matrix-ring helpers instead.
struct EndoDescriptor {
  CurveClass curve_class;
  std::int64_t D0 = 0, f = 1, f0 = 1;
  std::map<std::int64_t, int> levels;  // ell | f0 -> v_ell(f)
  std::int64_t c = 0, w = 1;

  QuadOrder order() const { return QuadOrder(D0, f); }
  QuadOrder frobenius_order() const { return QuadOrder(D0, f0); }
};

// True when t^2 = 4q: Frobenius is an integer and End(E) is a maximal
// quaternion order acting as the full matrix ring on E[m].
bool has_scalar_frobenius(const Curve& E);

// v_ell(f) from non-backtracking walks down the ell-volcano.
int volcano_level(const Curve& E, int ell);
EndoDescriptor compute_endo_conductor(const Curve& E);

struct FrobeniusMatrix {
  int m = 1;
  std::shared_ptr<const TorsionFrame> frame;  // null for m = 1
  Matrix2 matrix{};
};
FrobeniusMatrix frobenius_matrix(const Curve& E, int m);

// f*gamma applied to a point of E or of a base change of E.
Point apply_fgamma(const Curve& E, const Point& P);
// Same value via a lift P' with w P' = P inside a torsion frame.
Point apply_fgamma_by_lift(const Curve& E, const Point& P);
// Matrix of f*gamma on the frame basis of E[m].
Matrix2 fgamma_matrix(const Curve& E, int m);

// (u + v*pi) / w.
struct PiElement {
  std::int64_t u = 0, v = 0, w = 1;
};
// Coordinates in the basis (1, f*gamma), if the element lies in End(E).
std::optional<OrderElement> to_order_basis(const EndoDescriptor& d, const PiElement& a);
Point evaluate_order_element(const Curve& E, const PiElement& a, const Point& P);
Point evaluate_order_element(const Curve& E, const OrderElement& a, const Point& P);

// I(H) = {x + y*f*gamma : kills H} in Hermite form Z*A + Z*(B + C*f*gamma).
struct AnnihilatorLattice {
  std::int64_t A = 1, B = 0, C = 1;
  std::int64_t index() const { return A * C; }
};
AnnihilatorLattice annihilator_lattice(const Curve& E, const std::vector<Point>& gens);
// [End(E) : I(H)] for H generated by `gens`; matrix-ring count when t^2 = 4q.
std::int64_t annihilator_index(const Curve& E, const std::vector<Point>& gens);
std::int64_t annihilator_index(const Curve& E, const Point& kernel_gen, int m);

// Order of a point of order at most 4096.
std::int64_t small_point_order(const Point& P);
// Exponent of the group generated by the points.
std::int64_t group_exponent(const std::vector<Point>& gens);
// Every element of the subgroup generated by the points.
std::vector<Point> subgroup_elements(const std::vector<Point>& gens);

}  // namespace isogenion

#endif  // ISOGENION_ENDO_RING_HPP
