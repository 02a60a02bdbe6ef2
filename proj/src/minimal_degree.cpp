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

#include "isogenion/minimal_degree.hpp"

#include <algorithm>
#include <memory>
#include <optional>
#include <queue>

#include "isogenion/error.hpp"
#include "isogenion/numtheory.hpp"
#include "isogenion/quadratic_order.hpp"

namespace isogenion {

std::int64_t eB(std::int64_t q, std::int64_t t) {
  const std::int64_t n = 4 * q - t * t;
  if (n <= 0) raise(ErrorKind::InvalidArgument, "eB needs t^2 < 4q");
  return two_over_pi_sqrt_floor(n);
}

namespace {

std::int64_t field_size(Field F) {
  auto q = F.size64();
  if (!q || *q > (1ull << 40)) raise(ErrorKind::BoundExceeded, "field too large for a degree search");
  return static_cast<std::int64_t>(*q);
}

// Search bound: eB, which over GF(p) is also (4/pi) sqrt(p) for trace 0;
// p for supersingular classes over larger fields.
std::int64_t default_bound(Field F, std::int64_t t) {
  const std::int64_t q = field_size(F);
  const std::int64_t p = F.characteristic();
  if (t % p == 0 && F.degree() > 1) return p;
  return eB(q, t);
}

}  // namespace

DegreeGraph::DegreeGraph(Field F, std::int64_t trace, std::int64_t bound)
    : field_(F), trace_(trace), bound_(bound) {
  vertices_ = classes_with_trace(F, trace);
  if (vertices_.empty()) raise(ErrorKind::NoCurveWithTrace, "no curve with trace " + std::to_string(trace));
  std::sort(vertices_.begin(), vertices_.end());
}

int DegreeGraph::index_of(const CurveClass& c) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), c);
  if (it == vertices_.end() || *it != c) raise(ErrorKind::ClassMismatch, "class " + c.label() + " not in the graph");
  return static_cast<int>(it - vertices_.begin());
}

std::vector<std::int64_t> DegreeGraph::primes_upto(std::int64_t n) const {
  std::vector<std::int64_t> out;
  for (std::int64_t l = 2; l <= std::min(n, bound_); ++l)
    if (is_prime(static_cast<std::uint64_t>(l))) out.push_back(l);
  return out;
}

const std::vector<DegreeGraph::Edge>& DegreeGraph::edges(int v, std::int64_t ell) {
  auto key = std::make_pair(v, ell);
  auto it = cache_.find(key);
  if (it != cache_.end()) return it->second;
  std::vector<Edge> out;
  const Curve& E = vertices_[static_cast<std::size_t>(v)].representative;
  const std::int64_t p = field_.characteristic();
  if (ell <= bound_) {
    if (ell == p) {
      Isogeny fr = frobenius_isogeny(E, 1);
      out.push_back({index_of(classify(fr.target())), p, fr});
    } else {
      try {
        for (auto& iso : rational_isogenies(E, static_cast<int>(ell))) {
          int to = index_of(classify(iso.target()));
          out.push_back({to, ell, std::move(iso)});
        }
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::BoundExceeded) throw;
        skipped_.insert(ell);
        out.clear();
      }
    }
  }
  return cache_.emplace(key, std::move(out)).first->second;
}

std::vector<std::int64_t> DegreeGraph::distances(int u, std::int64_t limit) {
  if (limit <= 0 || limit > bound_) limit = bound_;
  const std::size_t n = vertices_.size();
  std::vector<std::int64_t> dist(n, 0);
  using Item = std::pair<std::int64_t, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
  auto relax = [&](int from, std::int64_t base) {
    for (std::int64_t ell : primes_upto(limit / base))
      for (const auto& e : edges(from, ell)) {
        const std::int64_t d = base * ell;
        auto& slot = dist[static_cast<std::size_t>(e.to)];
        if (slot == 0 || d < slot) {
          slot = d;
          pq.push({d, e.to});
        }
      }
  };
  relax(u, 1);
  while (!pq.empty()) {
    auto [d, v] = pq.top();
    pq.pop();
    if (d != dist[static_cast<std::size_t>(v)]) continue;
    relax(v, d);
  }
  return dist;
}

std::vector<std::vector<const DegreeGraph::Edge*>> DegreeGraph::walks(int u, int v, std::int64_t degree) {
  std::vector<std::vector<const Edge*>> out;
  std::vector<const Edge*> path;
  auto rec = [&](auto&& self, int at, std::int64_t rem) -> void {
    for (std::int64_t ell : primes_upto(rem)) {
      if (rem % ell) continue;
      for (const auto& e : edges(at, ell)) {
        path.push_back(&e);
        if (rem == ell) {
          if (e.to == v) out.push_back(path);
        } else {
          self(self, e.to, rem / ell);
        }
        path.pop_back();
      }
    }
  };
  if (degree >= 2) rec(rec, u, degree);
  return out;
}

namespace {

Isogeny compose_walk(const Curve& E2, const Curve& E1, const std::vector<const DegreeGraph::Edge*>& walk) {
  Isogeny phi = Isogeny::identity(E2);
  for (const auto* e : walk) phi = compose(e->isogeny, phi);
  return compose(Isogeny::identity(E1), phi);
}

// Fewer steps first, then larger leading degrees.
bool walk_before(const std::vector<const DegreeGraph::Edge*>& a, const std::vector<const DegreeGraph::Edge*>& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i]->degree != b[i]->degree) return a[i]->degree > b[i]->degree;
  return false;
}

MdResult md_rational(const Curve& E2, const Curve& E1, std::int64_t bound) {
  if (E2.field() != E1.field()) raise(ErrorKind::FieldMismatch, "curves over different fields");
  const std::int64_t t = E2.trace();
  if (E1.trace() != t) raise(ErrorKind::NotIsogenous, "traces differ");
  Field F = E2.field();
  const std::int64_t q = field_size(F);
  if (bound <= 0) bound = default_bound(F, t);
  MdResult res;
  res.first = classify(E2);
  res.second = classify(E1);
  res.bound_eB = t * t < 4 * q ? eB(q, t) : 0;
  DegreeGraph g(F, t, bound);
  const int u = g.index_of(res.first), v = g.index_of(res.second);
  const bool same = u == v;
  std::int64_t limit = same ? std::min<std::int64_t>(bound, 4) : bound;
  std::int64_t md = g.distances(u, limit)[static_cast<std::size_t>(v)];
  res.complete = g.skipped_primes().empty() ||
                 *g.skipped_primes().begin() > (md ? md : limit);
  if (same && (md == 0 || md >= 4)) {
    res.md = 4;
    res.witness = compose(Isogeny::identity(E1), compose(multiplication_isogeny(res.first.representative, 2),
                                                           Isogeny::identity(E2)));
    return res;
  }
  if (md == 0) {
    if (!res.complete) raise(ErrorKind::BoundExceeded, "degree search incomplete below the bound");
    raise(ErrorKind::SearchExhausted, "no isogeny of degree <= " + std::to_string(bound) + " between " +
                                          res.first.label() + " and " + res.second.label());
  }
  auto ws = g.walks(u, v, md);
  auto best = std::min_element(ws.begin(), ws.end(), walk_before);
  res.md = md;
  res.witness = compose_walk(E2, E1, *best);
  return res;
}

}  // namespace

MdResult md_between(const Curve& E2, const Curve& E1, bool over_k, std::int64_t bound) {
  if (over_k) return md_rational(E2, E1, bound);
  if (E2.field() != E1.field()) raise(ErrorKind::FieldMismatch, "curves over different fields");
  Field F = E2.field();
  const FieldElement j2 = E2.j_invariant(), j1 = E1.j_invariant();
  if (j2 == j1) {
    MdResult res;
    res.first = classify(E2);
    res.second = classify(E1);
    res.md = md_closure(E2);
    const std::int64_t q = field_size(F), t = E2.trace();
    res.bound_eB = t * t < 4 * q ? eB(q, t) : 0;
    if (res.md == 4) {
      res.witness = multiplication_isogeny(E2, 2);
    } else {
      for (const auto& phi : closure_isogenies(E2, res.md))
        if (phi.target().j_invariant() == phi.source().j_invariant()) {
          res.witness = phi;
          break;
        }
    }
    return res;
  }
  std::optional<MdResult> best;
  bool isogenous = false;
  for (const auto& T2 : twist_representatives(F, j2))
    for (const auto& T1 : twist_representatives(F, j1)) {
      if (T2.trace() != T1.trace()) continue;
      isogenous = true;
      MdResult r = md_rational(T2, T1, bound);
      if (!best || r.md < best->md) best = r;
    }
  if (!isogenous) raise(ErrorKind::NotIsogenous, "no twists with a common trace");
  return *best;
}

std::vector<std::vector<std::int64_t>> minimal_chains(const Curve& E2, const Curve& E1) {
  MdResult r = md_rational(E2, E1, 0);
  std::vector<std::vector<std::int64_t>> out;
  DegreeGraph g(E2.field(), E2.trace(), default_bound(E2.field(), E2.trace()));
  const int u = g.index_of(r.first), v = g.index_of(r.second);
  for (const auto& w : g.walks(u, v, r.md)) {
    std::vector<std::int64_t> c;
    for (const auto* e : w) c.push_back(e->degree);
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

int md_closure(const Curve& E) {
  for (int ell : {2, 3})
    for (const auto& phi : closure_isogenies(E, ell))
      if (phi.target().j_invariant() == phi.source().j_invariant()) return ell;
  return 4;
}

// ---------------------------------------------------------------------

const std::vector<CMTableEntry>& cm_table() {
  static const std::vector<CMTableEntry> table = {
      {"sqrt(-1)", 1728, 2, {0, 0, 0, 1, 0}, "2^6"},
      {"sqrt(-2)", 8000, 2, {0, 4, 0, 2, 0}, "2^9"},
      {"(1+sqrt(-7))/2", -3375, 2, {1, -1, 0, -2, -1}, "7^3"},
      {"(1+sqrt(-3))/2", 0, 3, {0, 0, 1, 0, 0}, "3^3"},
      {"sqrt(-3)", 54000, 3, {0, 0, 0, -15, 22}, "2^8*3^3"},
      {"(1+sqrt(-11))/2", -32768, 3, {0, -1, 1, -7, 10}, "11^3"},
  };
  return table;
}

int MdCondition::md() const { return cm_table()[row].md; }

const std::vector<MdCondition>& md_conditions() {
  static const std::vector<MdCondition> conds = {
      // supersingular, Md = 2
      {3, true, 1, {0}, {}, {2, 3}},
      {0, true, 4, {3}, {}, {}},
      {1, true, 8, {5, 7}, {}, {}},
      {2, true, 7, {3, 5, 6}, {}, {}},
      // ordinary, Md = 2
      {0, false, 4, {1}, {}, {}},
      {1, false, 8, {1, 3}, {}, {}},
      {2, false, 7, {1, 2, 4}, {}, {}},
      // supersingular, Md = 3
      {3, true, 3, {2}, {2, 5}, {}},
      {4, true, 3, {2}, {2, 5, 11, 17, 23}, {}},
      {5, true, 11, {2, 6, 7, 8, 10}, {2, 7, 13, 17, 19}, {}},
      // ordinary, Md = 3
      {3, false, 3, {1}, {}, {}},
      {4, false, 3, {1}, {}, {}},
      {5, false, 11, {1, 3, 4, 5, 9}, {}, {}},
  };
  return conds;
}

int md_classifier(std::int64_t j_residue, std::uint32_t p, bool supersingular) {
  const std::int64_t P = p;
  const std::int64_t jr = mod(j_residue, P);
  for (int md : {2, 3})
    for (const auto& c : md_conditions()) {
      if (c.md() != md || c.supersingular != supersingular) continue;
      if (mod(cm_table()[c.row].j, P) != jr) continue;
      if (!c.only_primes.empty() && std::find(c.only_primes.begin(), c.only_primes.end(), P) == c.only_primes.end())
        continue;
      if (std::find(c.excluded.begin(), c.excluded.end(), P) != c.excluded.end()) continue;
      if (std::find(c.residues.begin(), c.residues.end(), mod(P, c.modulus)) == c.residues.end()) continue;
      return md;
    }
  return 4;
}

int md_classifier(const Curve& E) {
  const FieldElement j = E.j_invariant();
  auto jp = j.as_prime_field();
  if (!jp) return 4;
  return md_classifier(static_cast<std::int64_t>(*jp), E.field().characteristic(), E.is_supersingular());
}

// ---------------------------------------------------------------------

RBResult rB(Field F, std::int64_t t) {
  DegreeGraph g(F, t, default_bound(F, t));
  RBResult res;
  const int n = static_cast<int>(g.vertices().size());
  for (int u = 0; u < n; ++u) {
    auto dist = g.distances(u);
    for (int v = u; v < n; ++v) {
      std::int64_t md = dist[static_cast<std::size_t>(v)];
      if (u == v) md = md == 0 ? 4 : std::min<std::int64_t>(md, 4);
      if (md == 0) {
        res.complete = false;
        continue;
      }
      if (md > res.value) {
        res.value = md;
        res.first = g.vertices()[static_cast<std::size_t>(u)];
        res.second = g.vertices()[static_cast<std::size_t>(v)];
      }
    }
  }
  if (!g.skipped_primes().empty() && *g.skipped_primes().begin() <= res.value) res.complete = false;
  return res;
}

SupersingularBoundReport md_supersingular_bounds(std::uint32_t p, bool include_fp2) {
  if (p < 5 || !is_prime(p)) raise(ErrorKind::InvalidArgument, "need a prime p >= 5");
  SupersingularBoundReport rep;
  rep.p = p;
  const std::int64_t P = p;
  rep.fp_bound = two_over_pi_sqrt_floor(4 * P);
  {
    Field F = field_create(p, 1);
    DegreeGraph g(F, 0, rep.fp_bound);
    const int n = static_cast<int>(g.vertices().size());
    for (int u = 0; u < n; ++u) {
      auto dist = g.distances(u);
      for (int v = u + 1; v < n; ++v) {
        ++rep.fp_pairs;
        const std::int64_t md = dist[static_cast<std::size_t>(v)];
        rep.fp_max = std::max(rep.fp_max, md);
        if (md == 0 || md > rep.fp_bound) {
          ++rep.fp_violations;
          rep.counterexamples.push_back("GF(" + std::to_string(p) + ") " + g.vertices()[static_cast<std::size_t>(u)].label() +
                                        " ~ " + g.vertices()[static_cast<std::size_t>(v)].label() + ": " +
                                        (md ? std::to_string(md) : std::string("none <= bound")));
        }
      }
    }
    rep.fp_complete = g.skipped_primes().empty();
  }
  if (!include_fp2) return rep;
  Field F2 = field_create(p, 2);
  for (std::int64_t t : {-P, std::int64_t{0}, P}) {
    std::unique_ptr<DegreeGraph> g;
    try {
      g = std::make_unique<DegreeGraph>(F2, t, P);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::NoCurveWithTrace) continue;
      throw;
    }
    const int n = static_cast<int>(g->vertices().size());
    for (int u = 0; u < n; ++u) {
      auto dist = g->distances(u);
      for (int v = u + 1; v < n; ++v) {
        ++rep.fp2_pairs;
        const std::int64_t md = dist[static_cast<std::size_t>(v)];
        const bool incomplete = !g->skipped_primes().empty() && (md == 0 || *g->skipped_primes().begin() < md);
        if (incomplete) {
          ++rep.fp2_incomplete;
        } else if (md == P) {
          ++rep.fp2_equal_p;
        } else {
          rep.counterexamples.push_back("GF(" + std::to_string(p) + "^2) t=" + std::to_string(t) + " " +
                                        g->vertices()[static_cast<std::size_t>(u)].label() + " ~ " +
                                        g->vertices()[static_cast<std::size_t>(v)].label() + ": " +
                                        (md ? std::to_string(md) : std::string("none <= p")));
        }
      }
    }
  }
  for (std::int64_t t : {-2 * P, 2 * P}) {
    for (const auto& c : classes_with_trace(F2, t)) {
      ++rep.scalar_classes;
      MdResult r = md_rational(c.representative, c.representative, 4);
      if (r.md == md_closure(c.representative)) ++rep.scalar_agree;
    }
  }
  return rep;
}

}  // namespace isogenion
