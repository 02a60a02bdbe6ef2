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

#ifndef ISOGENION_ISOGENY_GRAPH_HPP
#define ISOGENION_ISOGENY_GRAPH_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "isogenion/elliptic_curve.hpp"

namespace isogenion {

// Directed kernel count: `multiplicity` k-rational kernels at `from` whose
// quotient lies in class `to`. A loop counts once per kernel.
struct GraphEdge {
  int from = 0, to = 0;
  int multiplicity = 0;
};

struct IsogenyGraph {
  Field field;
  std::int64_t trace = 0;
  int ell = 2;
  std::vector<CurveClass> vertices;  // ascending order
  std::vector<GraphEdge> edges;      // sorted by (from, to)
  std::vector<int> levels;           // v_ell of the conductor of End(E)
  int depth = 0;
  bool modular_consistent = true;    // every edge is a root of Phi_ell

  int index_of(const CurveClass& c) const;
  int multiplicity(int u, int v) const;
  int degree(int v) const;
  // Drawn multiplicity of the undirected edge {u, v}.
  int undirected_multiplicity(int u, int v) const;
};

IsogenyGraph build_graph(Field F, std::int64_t trace, int ell);

enum class EdgeKind { Horizontal, Ascending, Descending };
const char* edge_kind_name(EdgeKind k);
EdgeKind classify_edge(const GraphEdge& e, const IsogenyGraph& g);

struct VolcanoClause {
  std::string name;
  bool pass = true;
  std::vector<int> witnesses;
};
struct VolcanoReport {
  std::vector<VolcanoClause> clauses;  // surface, ascent, degree
  bool pass() const;
};
VolcanoReport verify_volcano(const IsogenyGraph& g);

// Horizontal kernel count at a surface vertex.
int surface_degree(const IsogenyGraph& g, int v);

// Sum of h(O) / ord([l]) over orders Z[pi] <= O <= O_K maximal at ell.
std::int64_t count_components(std::int64_t q, std::int64_t t, int ell);
std::vector<std::vector<int>> graph_components(const IsogenyGraph& g);

std::string to_dot(const IsogenyGraph& g);

}  // namespace isogenion

#endif  // ISOGENION_ISOGENY_GRAPH_HPP
