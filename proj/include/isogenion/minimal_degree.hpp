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

#ifndef ISOGENION_MINIMAL_DEGREE_HPP
#define ISOGENION_MINIMAL_DEGREE_HPP

#include <array>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "isogenion/elliptic_curve.hpp"
#include "isogenion/isogeny.hpp"

namespace isogenion {

struct MdResult {
  CurveClass first, second;
  std::int64_t md = 0;
  Isogeny witness;
  std::int64_t bound_eB = 0;  // 0 when t^2 = 4q
  bool complete = true;       // every prime up to the bound was searchable
};

// floor((2/pi) sqrt(4q - t^2)).
std::int64_t eB(std::int64_t q, std::int64_t t);

// k-rational isogenies of prime degree <= bound between the classes of one
// trace, plus the p-power Frobenius when p <= bound. Edges are computed on
// first use; not thread-safe.
class DegreeGraph {
 public:
  struct Edge {
    int to = 0;
    std::int64_t degree = 0;
    Isogeny isogeny;  // from the vertex representative
  };

  DegreeGraph(Field F, std::int64_t trace, std::int64_t bound);

  Field field() const { return field_; }
  std::int64_t trace() const { return trace_; }
  std::int64_t bound() const { return bound_; }
  const std::vector<CurveClass>& vertices() const { return vertices_; }
  int index_of(const CurveClass& c) const;

  // Edges of prime degree ell out of v; empty if ell > bound.
  const std::vector<Edge>& edges(int v, std::int64_t ell);
  // Primes up to the bound at which edge computation hit a size limit.
  const std::set<std::int64_t>& skipped_primes() const { return skipped_; }

  // Least degree product of a walk of at least one step from u, per vertex;
  // 0 if none stays within `limit` (the bound when 0).
  std::vector<std::int64_t> distances(int u, std::int64_t limit = 0);
  // Walks u -> v whose degrees multiply to `degree`, as edge lists.
  std::vector<std::vector<const Edge*>> walks(int u, int v, std::int64_t degree);

 private:
  std::vector<std::int64_t> primes_upto(std::int64_t n) const;

  Field field_;
  std::int64_t trace_ = 0, bound_ = 0;
  std::vector<CurveClass> vertices_;
  std::map<std::pair<int, std::int64_t>, std::vector<Edge>> cache_;
  std::set<std::int64_t> skipped_;
};

// Md_k (over_k) or Md over the algebraic closure between two classes.
MdResult md_between(const Curve& E2, const Curve& E1, bool over_k = true, std::int64_t bound = 0);
// All degree chains of walks realizing Md_k between the classes.
std::vector<std::vector<std::int64_t>> minimal_chains(const Curve& E2, const Curve& E1);

// Least degree of an endomorphism other than +-1 over the algebraic closure,
// by searching 2- and 3-isogenies that return to the same j.
int md_closure(const Curve& E);

struct CMTableEntry {
  std::string tau;
  std::int64_t j = 0;
  int md = 0;
  std::array<std::int64_t, 5> a{};  // a1, a2, a3, a4, a6 of the minimal model over Q
  std::string discriminant;
};
const std::vector<CMTableEntry>& cm_table();

// One condition of the classifier: j = table j mod p, the reduction type,
// p mod modulus among residues, p outside excluded (or inside only_primes).
struct MdCondition {
  std::size_t row = 0;  // into cm_table()
  bool supersingular = false;
  std::int64_t modulus = 1;
  std::vector<std::int64_t> residues;
  std::vector<std::int64_t> excluded;
  std::vector<std::int64_t> only_primes;
  int md() const;
};
// Conditions for Md = 2 come before those for Md = 3.
const std::vector<MdCondition>& md_conditions();
int md_classifier(std::int64_t j_residue, std::uint32_t p, bool supersingular);
int md_classifier(const Curve& E);

struct RBResult {
  std::int64_t value = 0;
  CurveClass first, second;
  bool complete = true;
};
RBResult rB(Field F, std::int64_t t);

struct SupersingularBoundReport {
  std::uint32_t p = 0;
  std::int64_t fp_bound = 0;  // floor((4/pi) sqrt(p))
  std::int64_t fp_max = 0;    // largest Md_{F_p} among non-isomorphic pairs
  int fp_pairs = 0, fp_violations = 0;
  bool fp_complete = true;
  int fp2_pairs = 0, fp2_equal_p = 0;  // pairs over GF(p^2), trace != +-2p
  int fp2_incomplete = 0;              // pairs where the search hit a size limit
  int scalar_classes = 0, scalar_agree = 0;  // trace +-2p: Md over GF(p^2) vs closure
  std::vector<std::string> counterexamples;
};
// Sampled check of the supersingular bounds; reports instead of failing.
SupersingularBoundReport md_supersingular_bounds(std::uint32_t p, bool include_fp2 = true);

}  // namespace isogenion

#endif  // ISOGENION_MINIMAL_DEGREE_HPP
