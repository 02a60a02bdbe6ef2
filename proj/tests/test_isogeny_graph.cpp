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

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "doctest.h"
#include "isogenion/error.hpp"
#include "isogenion/isogeny_graph.hpp"
#include "isogenion/numtheory.hpp"

using namespace isogenion;

namespace {

Field gf41() { return field_create(41); }

int vj(const IsogenyGraph& g, std::int64_t j, int twist = 0) {
  for (std::size_t i = 0; i < g.vertices.size(); ++i)
    if (*g.vertices[i].j.as_prime_field() == j && g.vertices[i].twist_index == twist) return static_cast<int>(i);
  FAIL("vertex not found");
  return -1;
}

// E(j, k): the k-th GF(53)-class with invariant j. The numbering of the two
// twists is not canonical; `swap` lists the j whose labels are exchanged.
int labelled_vertex(const IsogenyGraph& g, std::int64_t j, int k, const std::set<std::int64_t>& swap) {
  const int twist = swap.count(j) ? 2 - k : k - 1;
  return vj(g, mod(j, 53), twist);
}

std::set<std::pair<int, int>> undirected(const IsogenyGraph& g) {
  std::set<std::pair<int, int>> out;
  for (const auto& e : g.edges) out.insert({std::min(e.from, e.to), std::max(e.from, e.to)});
  return out;
}

}  // namespace

TEST_CASE("2-volcano over GF(41), t = 6") {
  auto g = build_graph(gf41(), 6, 2);
  REQUIRE(g.vertices.size() == 7);
  CHECK(g.depth == 2);
  CHECK(g.modular_consistent);
  std::map<std::int64_t, int> levels;
  for (std::size_t i = 0; i < g.vertices.size(); ++i) levels[*g.vertices[i].j.as_prime_field()] = g.levels[i];
  CHECK(levels == std::map<std::int64_t, int>{{5, 0}, {22, 1}, {29, 1}, {13, 2}, {25, 2}, {33, 2}, {35, 2}});
  const int v5 = vj(g, 5), v29 = vj(g, 29), v22 = vj(g, 22);
  const std::set<std::pair<int, int>> expected = {
      {v5, v5},
      {std::min(v5, v29), std::max(v5, v29)},
      {std::min(v5, v22), std::max(v5, v22)},
      {std::min(v29, vj(g, 13)), std::max(v29, vj(g, 13))},
      {std::min(v29, vj(g, 33)), std::max(v29, vj(g, 33))},
      {std::min(v22, vj(g, 25, 1)), std::max(v22, vj(g, 25, 1))},
      {std::min(v22, vj(g, 35, 1)), std::max(v22, vj(g, 35, 1))},
  };
  CHECK(undirected(g) == expected);
  CHECK(g.undirected_multiplicity(v5, v5) == 1);
  CHECK(g.degree(v5) == 3);
  CHECK(g.degree(v29) == 3);
  CHECK(g.degree(vj(g, 13)) == 1);
  CHECK(edge_kind_name(classify_edge({v5, v29, 1}, g)) == std::string("descending"));
  CHECK(classify_edge({v29, v5, 1}, g) == EdgeKind::Ascending);
  CHECK(classify_edge({v5, v5, 1}, g) == EdgeKind::Horizontal);
  CHECK(verify_volcano(g).pass());
  CHECK(surface_degree(g, v5) == 1);
  CHECK_THROWS_AS(surface_degree(g, v29), Error);
  CHECK(graph_components(g).size() == 1);
}

TEST_CASE("3-graph over GF(41), t = 6") {
  auto g = build_graph(gf41(), 6, 3);
  const int v5 = vj(g, 5), v29 = vj(g, 29), v22 = vj(g, 22);
  CHECK(g.multiplicity(v5, v5) == 2);
  CHECK(g.undirected_multiplicity(v29, v22) == 2);
  const int v13 = vj(g, 13), v33 = vj(g, 33), v25 = vj(g, 25, 1), v35 = vj(g, 35, 1);
  for (int a : {v13, v33})
    for (int b : {v25, v35}) CHECK(g.undirected_multiplicity(a, b) == 1);
  CHECK(g.undirected_multiplicity(v13, v33) == 0);
  CHECK(g.depth == 0);
  CHECK(verify_volcano(g).pass());
  for (const auto& e : g.edges) CHECK(classify_edge(e, g) == EdgeKind::Horizontal);
}

TEST_CASE("2- and 3-graphs over GF(53), t = 0") {
  Field F = field_create(53);
  auto g2 = build_graph(F, 0, 2);
  auto g3 = build_graph(F, 0, 3);
  REQUIRE(g2.vertices.size() == 6);
  auto edge = [](int a, int b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
  const std::vector<std::pair<std::int64_t, int>> cycle = {{0, 1}, {0, 2}, {-3, 2}, {-7, 1}, {-7, 2}, {-3, 1}};
  int matches = 0;
  for (int mask = 0; mask < 8; ++mask) {
    std::set<std::int64_t> swap;
    if (mask & 1) swap.insert(0);
    if (mask & 2) swap.insert(-3);
    if (mask & 4) swap.insert(-7);
    auto pv = [&](const IsogenyGraph& g, std::int64_t j, int k) { return labelled_vertex(g, j, k, swap); };
    const std::set<std::pair<int, int>> m2 = {edge(pv(g2, 0, 1), pv(g2, -7, 1)), edge(pv(g2, -3, 1), pv(g2, -3, 2)),
                                              edge(pv(g2, 0, 2), pv(g2, -7, 2))};
    std::set<std::pair<int, int>> c3;
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      const auto& [ja, ka] = cycle[i];
      const auto& [jb, kb] = cycle[(i + 1) % cycle.size()];
      c3.insert(edge(pv(g3, ja, ka), pv(g3, jb, kb)));
    }
    if (undirected(g2) == m2 && undirected(g3) == c3) ++matches;
  }
  CHECK(matches > 0);
  for (int v = 0; v < 6; ++v) {
    CHECK(g2.degree(v) == 1);
    CHECK(g3.degree(v) == 2);
  }
  CHECK(graph_components(g2).size() == 3);
  CHECK(graph_components(g3).size() == 1);
  for (const auto& e : g3.edges) CHECK(classify_edge(e, g3) == EdgeKind::Horizontal);
  CHECK(verify_volcano(g2).pass());
  CHECK(verify_volcano(g3).pass());
}

TEST_CASE("mutated graph fails the degree clause") {
  auto g = build_graph(gf41(), 6, 2);
  const int v29 = vj(g, 29), v13 = vj(g, 13);
  g.edges.erase(std::remove_if(g.edges.begin(), g.edges.end(),
                               [&](const GraphEdge& e) {
                                 return (e.from == v29 && e.to == v13) || (e.from == v13 && e.to == v29);
                               }),
                g.edges.end());
  auto rep = verify_volcano(g);
  CHECK_FALSE(rep.pass());
  bool floor_witness = false;
  for (const auto& c : rep.clauses)
    if (!c.pass) floor_witness = floor_witness || std::count(c.witnesses.begin(), c.witnesses.end(), v13) > 0;
  CHECK(floor_witness);
}

TEST_CASE("component counts match the graphs") {
  struct Case {
    std::uint32_t p;
    std::int64_t t;
    int ell;
  };
  for (const auto& c : {Case{41, 6, 2}, Case{41, 6, 3}, Case{53, 0, 2}, Case{53, 0, 3}, Case{53, -4, 2},
                        Case{67, 12, 2}, Case{67, 12, 3}, Case{59, 5, 5}, Case{61, 7, 7}}) {
    auto g = build_graph(field_create(c.p), c.t, c.ell);
    CHECK(count_components(c.p, c.t, c.ell) == static_cast<std::int64_t>(graph_components(g).size()));
  }
  CHECK(count_components(41, 6, 2) == 1);
  CHECK(count_components(53, 0, 3) == 1);
  CHECK(count_components(53, 0, 2) == 3);
}

TEST_CASE("DOT output and errors") {
  auto g = build_graph(gf41(), 6, 2);
  auto dot = to_dot(g);
  CHECK(dot.rfind("graph isogenies {", 0) == 0);
  CHECK(dot.find("label=\"j=5 [L0]\"") != std::string::npos);
  CHECK(std::count(dot.begin(), dot.end(), '\n') >= 14);
  CHECK_THROWS_AS(build_graph(gf41(), 100, 2), Error);
  CHECK_THROWS_AS(build_graph(gf41(), 6, 11), Error);
  CHECK_THROWS_AS(build_graph(gf41(), 6, 4), Error);
}
