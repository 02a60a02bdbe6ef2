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

#ifndef ISOGENION_ISOGENY_HPP
#define ISOGENION_ISOGENY_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "isogenion/elliptic_curve.hpp"

namespace isogenion {

enum class StepKind { Separable, Scaling, Frobenius };

struct StepMaps;

// One factor of an isogeny chain. Separable steps carry the Velu rational
// maps x -> xnum/xden, y -> y * ynum/yden.
struct IsogenyStep {
  StepKind kind = StepKind::Scaling;
  Curve source, target;
  std::int64_t degree = 1;
  Polynomial kernel;
  Polynomial xnum, xden, ynum, yden;
  FieldElement u;
  int e = 0;
  std::shared_ptr<StepMaps> cache;
};

class Isogeny {
 public:
  Isogeny() = default;
  explicit Isogeny(std::vector<IsogenyStep> steps);
  static Isogeny identity(const Curve& E);

  const Curve& source() const { return source_; }
  const Curve& target() const { return target_; }
  std::int64_t degree() const;
  std::int64_t separable_degree() const;
  int insep_exp() const;
  const std::vector<IsogenyStep>& steps() const { return steps_; }
  // Degrees of the non-trivial steps in order of application.
  std::vector<std::int64_t> degree_chain() const;

  // P on the source curve or on a base change of it.
  Point evaluate(const Point& P) const;
  // Monic polynomial over the source field whose roots are the x-coordinates
  // of the nonzero points of the separable kernel.
  Polynomial kernel_polynomial() const;

  std::string describe() const;

 private:
  std::vector<IsogenyStep> steps_;
  Curve source_, target_;
};

Isogeny velu_from_kernel_polynomial(const Curve& E, const Polynomial& h);
// Kernel <K> with K of exact order `order`. K may live over an extension;
// with require_rational the kernel must descend to the field of E.
Isogeny velu(const Curve& E, const Point& K, std::int64_t order, bool require_rational = true);
Isogeny isomorphism(const Curve& E1, const Curve& E2);
// (x, y) -> (u^2 x, u^3 y); E2 must be the image of E1.
Isogeny scaling_isogeny(const Curve& E1, const Curve& E2, const FieldElement& u);
Isogeny frobenius_isogeny(const Curve& E, int e);
Isogeny dual(const Isogeny& phi);
// psi after phi; a k-isomorphism is inserted when target(phi) != source(psi).
Isogeny compose(const Isogeny& psi, const Isogeny& phi);
Isogeny multiplication_isogeny(const Curve& E, int m);

// Fixed-seed random points on E over GF(q^2) (GF(q) when that is too large).
std::vector<Point> sample_points(const Curve& E, int count);
// All points of the separable kernel, over the smallest extension holding them.
std::vector<Point> kernel_points(const Isogeny& phi);

// x-coordinates of P, 2P, ..., count*P from x(P) alone.
std::vector<FieldElement> x_multiples(const FieldElement& A, const FieldElement& B, const FieldElement& x0,
                                      int count);

// Kernel polynomials of the k-rational cyclic subgroups of order ell.
std::vector<Polynomial> rational_kernel_polynomials(const Curve& E, int ell);
std::vector<Isogeny> rational_isogenies(const Curve& E, int ell);
// Cyclic ell-isogenies over the algebraic closure, one per Galois orbit,
// each defined over the smallest extension containing its kernel polynomial.
std::vector<Isogeny> closure_isogenies(const Curve& E, int ell);

class ModularPolynomial {
 public:
  ModularPolynomial() = default;
  ModularPolynomial(int level, std::map<std::pair<int, int>, BigInt> coeffs);
  int level() const { return level_; }
  const BigInt& coeff(int i, int j) const;
  FieldElement evaluate(const FieldElement& x, const FieldElement& y) const;
  Polynomial specialize(const FieldElement& x) const;  // Phi(x, Y)

 private:
  int level_ = 0;
  std::map<std::pair<int, int>, BigInt> c_;
};

inline constexpr int kModularLevels[] = {2, 3, 5, 7};

// Data comes from $ISOGENION_DATA/modular_polynomials.txt when set, else
// from the copy compiled into the library.
const ModularPolynomial& modular_polynomial(int ell);
std::map<int, ModularPolynomial> parse_modular_polynomials(const std::string& text);
bool modular_adjacent(int ell, const FieldElement& j1, const FieldElement& j2);

}  // namespace isogenion

#endif  // ISOGENION_ISOGENY_HPP
