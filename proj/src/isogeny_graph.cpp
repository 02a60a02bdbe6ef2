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

#include "isogenion/isogeny_graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "isogenion/endo_ring.hpp"
#include "isogenion/error.hpp"
#include "isogenion/isogeny.hpp"
#include "isogenion/numtheory.hpp"
#include "isogenion/quadratic_order.hpp"

namespace isogenion {

int IsogenyGraph::index_of(const CurveClass& c) const {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), c);
  if (it == vertices.end() || !(*it == c)) return -1;
  return static_cast<int>(it - vertices.begin());
}

int IsogenyGraph::multiplicity(int u, int v) const {
  for (const auto& e : edges)
    if (e.from == u && e.to == v) return e.multiplicity;
  return 0;
}

int IsogenyGraph::degree(int v) const {
  int d = 0;
  for (const auto& e : edges)
    if (e.from == v) d += e.multiplicity;
  return d;
}

int IsogenyGraph::undirected_multiplicity(int u, int v) const {
  return std::max(multiplicity(u, v), multiplicity(v, u));
}

IsogenyGraph build_graph(Field F, std::int64_t trace, int ell) {
  if (ell < 2 || !is_prime(static_cast<std::uint64_t>(ell))) raise(ErrorKind::InvalidArgument, "ell must be prime");
  if (static_cast<std::uint32_t>(ell) == F.characteristic()) raise(ErrorKind::InvalidArgument, "ell equals p");
  if (std::find(std::begin(kModularLevels), std::end(kModularLevels), ell) == std::end(kModularLevels))
    raise(ErrorKind::UnsupportedLevel, "no modular polynomial of level " + std::to_string(ell));
  const BigInt q = F.order();
  if (BigInt(trace) * trace > 4 * q) raise(ErrorKind::NoCurveWithTrace, "trace violates the Hasse bound");
  IsogenyGraph g;
  g.field = F;
  g.trace = trace;
  g.ell = ell;
  g.vertices = classes_with_trace(F, trace);
  if (g.vertices.empty()) raise(ErrorKind::NoCurveWithTrace, "no curve has trace " + std::to_string(trace));
  std::sort(g.vertices.begin(), g.vertices.end());
  const ModularPolynomial& phi = modular_polynomial(ell);
  for (int u = 0; u < static_cast<int>(g.vertices.size()); ++u) {
    const CurveClass& cu = g.vertices[static_cast<std::size_t>(u)];
    std::map<int, int> mult;
    for (const auto& iso : rational_isogenies(cu.representative, ell)) {
      int v = g.index_of(classify(iso.target()));
      if (v < 0) raise(ErrorKind::DataError, "isogenous curve outside the vertex set");
      ++mult[v];
      if (!phi.evaluate(cu.j, g.vertices[static_cast<std::size_t>(v)].j).is_zero()) g.modular_consistent = false;
    }
    for (auto [v, m] : mult) g.edges.push_back({u, v, m});
  }
  g.levels.assign(g.vertices.size(), 0);
  const Curve& E0 = g.vertices.front().representative;
  if (!has_scalar_frobenius(E0) && q <= BigInt(1) << 62) {
    auto [D0, f0] = discriminant_frobenius_order(static_cast<std::int64_t>(q), trace);
    if (f0 % static_cast<std::int64_t>(F.characteristic()) != 0) {
      g.depth = valuation(f0, ell);
      if (g.depth > 0)
        for (std::size_t i = 0; i < g.vertices.size(); ++i)
          g.levels[i] = volcano_level(g.vertices[i].representative, ell);
    }
  }
  return g;
}

const char* edge_kind_name(EdgeKind k) {
  switch (k) {
    case EdgeKind::Horizontal:
      return "horizontal";
    case EdgeKind::Ascending:
      return "ascending";
    case EdgeKind::Descending:
      return "descending";
  }
  return "?";
}

EdgeKind classify_edge(const GraphEdge& e, const IsogenyGraph& g) {
  const int a = g.levels.at(static_cast<std::size_t>(e.from)), b = g.levels.at(static_cast<std::size_t>(e.to));
  if (a == b) return EdgeKind::Horizontal;
  return b > a ? EdgeKind::Descending : EdgeKind::Ascending;
}

bool VolcanoReport::pass() const {
  return std::all_of(clauses.begin(), clauses.end(), [](const VolcanoClause& c) { return c.pass; });
}

VolcanoReport verify_volcano(const IsogenyGraph& g) {
  const int n = static_cast<int>(g.vertices.size());
  auto level = [&](int v) { return g.levels[static_cast<std::size_t>(v)]; };
  VolcanoClause surface{"surface", true, {}}, ascent{"ascent", true, {}}, degree{"degree", true, {}};
  int surface_deg = -1;
  for (int v = 0; v < n; ++v) {
    if (level(v) != 0) continue;
    int h = 0;
    for (const auto& e : g.edges)
      if (e.from == v && level(e.to) == 0) h += e.multiplicity;
    if (surface_deg < 0) surface_deg = h;
    if (h > 2 || h != surface_deg) {
      surface.pass = false;
      surface.witnesses.push_back(v);
    }
  }
  for (int v = 0; v < n; ++v) {
    if (level(v) == 0) continue;
    int up = 0;
    for (const auto& e : g.edges)
      if (e.from == v && level(e.to) == level(v) - 1) up += e.multiplicity;
    if (up != 1) {
      ascent.pass = false;
      ascent.witnesses.push_back(v);
    }
  }
  if (g.depth > 0) {
    for (int v = 0; v < n; ++v) {
      const int want = level(v) < g.depth ? g.ell + 1 : 1;
      if (g.degree(v) != want) {
        degree.pass = false;
        degree.witnesses.push_back(v);
      }
    }
  }
  return VolcanoReport{{surface, ascent, degree}};
}

int surface_degree(const IsogenyGraph& g, int v) {
  if (g.levels.at(static_cast<std::size_t>(v)) != 0) raise(ErrorKind::NotOnSurface, "vertex is below the surface");
  int h = 0;
  for (const auto& e : g.edges)
    if (e.from == v && g.levels[static_cast<std::size_t>(e.to)] == 0) h += e.multiplicity;
  return h;
}

std::int64_t count_components(std::int64_t q, std::int64_t t, int ell) {
  auto [D0, f0] = discriminant_frobenius_order(q, t);
  std::int64_t total = 0;
  for (auto f : divisors(static_cast<std::uint64_t>(f0))) {
    if (f % static_cast<std::uint64_t>(ell) == 0) continue;
    QuadOrder O(D0, static_cast<std::int64_t>(f));
    const std::int64_t h = class_group(O).h;
    std::int64_t ord = 1;
    if (kronecker(O.disc(), ell) != -1) ord = ideal_class_order(primes_above(O, ell).front());
    total += h / ord;
  }
  return total;
}

std::vector<std::vector<int>> graph_components(const IsogenyGraph& g) {
  const int n = static_cast<int>(g.vertices.size());
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    return x;
  };
  for (const auto& e : g.edges) parent[static_cast<std::size_t>(find(e.from))] = find(e.to);
  std::map<int, std::vector<int>> groups;
  for (int v = 0; v < n; ++v) groups[find(v)].push_back(v);
  std::vector<std::vector<int>> out;
  for (auto& [r, vs] : groups) out.push_back(vs);
  std::sort(out.begin(), out.end());
  return out;
}

std::string to_dot(const IsogenyGraph& g) {
  std::ostringstream os;
  os << "graph isogenies {\n";
  for (std::size_t v = 0; v < g.vertices.size(); ++v)
    os << "  v" << v << " [label=\"j=" << g.vertices[v].label() << " [L" << g.levels[v] << "]\"];\n";
  const int n = static_cast<int>(g.vertices.size());
  for (int u = 0; u < n; ++u)
    for (int v = u; v < n; ++v)
      for (int k = 0; k < g.undirected_multiplicity(u, v); ++k) os << "  v" << u << " -- v" << v << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace isogenion
