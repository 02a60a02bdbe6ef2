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

#include <cstdio>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "isogenion/error.hpp"
#include "isogenion/hom_index_kernel.hpp"
#include "isogenion/isogeny_graph.hpp"
#include "isogenion/minimal_degree.hpp"
#include "isogenion/numtheory.hpp"
#include "isogenion/quadratic_order.hpp"

using namespace isogenion;
using Json = nlohmann::ordered_json;

namespace {

constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

Json num(std::int64_t v) {
  const std::int64_t safe = (std::int64_t{1} << 53) - 1;
  if (v > safe || v < -safe) return std::to_string(v);
  return v;
}

void print(const Json& j) { std::cout << j.dump(2) << "\n"; }

// --j values: residues for GF(p); base-p digit indices for GF(p^r).
FieldElement element(Field F, std::int64_t v) {
  if (F.degree() == 1) return F.from_int(v);
  if (v < 0) raise(ErrorKind::InvalidArgument, "element index must be non-negative");
  return F.element_at(static_cast<std::uint64_t>(v));
}

Field make_field(std::int64_t p, int r) {
  if (p < 5 || !is_prime(static_cast<std::uint64_t>(p))) raise(ErrorKind::NotPrime, "p must be a prime >= 5");
  return field_create(static_cast<std::uint32_t>(p), r);
}

Json class_json(const CurveClass& c) {
  return Json{{"label", c.label()}, {"j", c.j.to_string()}, {"twist", c.twist_index}, {"trace", num(c.trace)}};
}

std::vector<std::int64_t> parse_chain(const std::string& s) {
  std::vector<std::int64_t> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    std::int64_t v = std::stoll(tok);
    if (v < 2 || !is_prime(static_cast<std::uint64_t>(v))) raise(ErrorKind::InvalidArgument, "degree chain entries must be primes");
    out.push_back(v);
  }
  return out;
}

// ---------------------------------------------------------------------

Json graph_json(const IsogenyGraph& g) {
  Json verts = Json::array(), edges = Json::array();
  for (std::size_t i = 0; i < g.vertices.size(); ++i) {
    Json v = class_json(g.vertices[i]);
    v["index"] = i;
    v["level"] = g.levels[i];
    verts.push_back(v);
  }
  for (const auto& e : g.edges)
    edges.push_back(Json{{"from", e.from},
                         {"to", e.to},
                         {"multiplicity", e.multiplicity},
                         {"kind", edge_kind_name(classify_edge(e, g))}});
  Json clauses = Json::array();
  for (const auto& c : verify_volcano(g).clauses) clauses.push_back(Json{{"name", c.name}, {"pass", c.pass}, {"witnesses", c.witnesses}});
  return Json{{"p", g.field.characteristic()},
              {"r", g.field.degree()},
              {"trace", num(g.trace)},
              {"ell", g.ell},
              {"depth", g.depth},
              {"vertices", verts},
              {"edges", edges},
              {"modular_consistent", g.modular_consistent},
              {"volcano", clauses}};
}

// Follows the chain through rational isogenies and returns the first walk
// that lands in the class of E1, preferring walks without backtracking.
std::optional<Isogeny> realize_chain(const Curve& E2, const Curve& E1, const std::vector<std::int64_t>& chain) {
  const CurveClass target = classify(E1);
  std::optional<Isogeny> fallback;
  std::optional<Isogeny> found;
  auto rec = [&](auto&& self, const Isogeny& sofar, std::size_t i) -> void {
    if (found) return;
    if (i == chain.size()) {
      if (classify(sofar.target()) != target) return;
      Isogeny beta = compose(Isogeny::identity(E1), sofar);
      if (backtrack_factor(beta) == 1)
        found = beta;
      else if (!fallback)
        fallback = beta;
      return;
    }
    for (const auto& phi : rational_isogenies(sofar.target(), static_cast<int>(chain[i]))) self(self, compose(phi, sofar), i + 1);
  };
  rec(rec, Isogeny::identity(E2), 0);
  return found ? found : fallback;
}

Json index_json(const Curve& E2, const Curve& E1, const Isogeny& beta) {
  auto h = hom_index(E2, E1, beta);
  Json ratio = Json::object();
  for (auto [ell, e] : h.ratio) ratio[std::to_string(ell)] = e;
  Json out{{"source", class_json(h.source_class)},
           {"target", class_json(h.target_class)},
           {"degree_chain", beta.degree_chain()},
           {"degree", num(h.beta_degree)},
           {"backtrack_factor", num(h.backtrack_factor)},
           {"inseparable_degree", num(h.insep_degree)},
           {"conductor_ratio", ratio},
           {"formula_index", num(h.formula_index)},
           {"oracle_index", num(h.oracle_index)},
           {"agrees", h.agrees()},
           {"lattice", Json{{"A", num(h.lattice.A)}, {"B", num(h.lattice.B)}, {"C", num(h.lattice.C)}}},
           {"b", num(h.b)},
           {"b_modulus", num(h.b_modulus)},
           {"fits_display", h.fits_display}};
  if (!h.full_endomorphisms) {
    out["corresponds"] = corresponds_to_kernel_ideal(E2, E1);
    if (beta.insep_exp() == 0) out["basis"] = hom_lattice_basis(E2, E1, beta).to_string();
  }
  return out;
}

Json md_json(const MdResult& r) {
  return Json{{"j1", r.first.label()},
              {"j2", r.second.label()},
              {"md", num(r.md)},
              {"eB", num(r.bound_eB)},
              {"witness_degree_chain", r.witness.degree_chain()},
              {"complete", r.complete}};
}

// ---------------------------------------------------------------------
// repro

struct Diff {
  std::vector<std::string> lines;
  int checks = 0;
  template <class A, class B>
  void expect(const std::string& field, const A& expected, const B& actual) {
    ++checks;
    std::ostringstream e, a;
    e << expected;
    a << actual;
    if (e.str() != a.str()) lines.push_back(field + ": expected " + e.str() + ", got " + a.str());
  }
};

std::string join(const std::vector<std::int64_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

std::string edge_string(const IsogenyGraph& g) {
  std::set<std::string> out;
  for (const auto& e : g.edges) {
    auto a = g.vertices[static_cast<std::size_t>(std::min(e.from, e.to))].label();
    auto b = g.vertices[static_cast<std::size_t>(std::max(e.from, e.to))].label();
    out.insert(a + "-" + b);
  }
  std::string s;
  for (const auto& x : out) s += (s.empty() ? "" : " ") + x;
  return s;
}

void repro1(Diff& d) {
  Field F = field_create(41);
  auto g = build_graph(F, 6, 2);
  std::string levels;
  for (std::size_t i = 0; i < g.vertices.size(); ++i)
    levels += (i ? " " : "") + g.vertices[i].label() + ":" + std::to_string(g.levels[i]);
  d.expect("vertices", 7, g.vertices.size());
  d.expect("levels", "5:0 13:2 22:1 25/1:2 29:1 33:2 35/1:2", levels);
  d.expect("edges", "13-29 22-25/1 22-35/1 29-33 5-22 5-29 5-5", edge_string(g));
  d.expect("depth", 2, g.depth);
  d.expect("volcano", true, verify_volcano(g).pass());
  auto E = [&](std::int64_t j) { return curve_from_j(F, F.from_int(j), 6); };
  auto r = md_between(E(29), E(25));
  d.expect("Md(29,25)", 6, r.md);
  d.expect("Md(29,25) chain", "3,2", join(r.witness.degree_chain()));
  d.expect("Md(29,22)", 3, md_between(E(29), E(22)).md);
  d.expect("[End(29):End(25)]", 2, compute_endo_conductor(E(25)).f / compute_endo_conductor(E(29)).f);
}

void repro2(Diff& d) {
  struct Row {
    std::uint32_t p;
    std::int64_t t, eb, rb;
  };
  for (const auto& row : {Row{41, 6, 7, 6}, Row{53, -4, 8, 7}, Row{67, 12, 7, 5}}) {
    const std::string key = "(" + std::to_string(row.p) + "," + std::to_string(row.t) + ")";
    d.expect("eB" + key, row.eb, eB(row.p, row.t));
    d.expect("rB" + key, row.rb, rB(field_create(row.p), row.t).value);
  }
  auto g3 = build_graph(field_create(41), 6, 3);
  d.expect("3-graph edges", "13-25/1 13-35/1 22-29 25/1-33 33-35/1 5-5", edge_string(g3));
}

void repro3(Diff& d) {
  Field F = field_create(53);
  d.expect("eB(53,0)", 9, eB(53, 0));
  d.expect("h(-212)", 6, class_number(-212));
  auto g2 = build_graph(F, 0, 2), g3 = build_graph(F, 0, 3);
  d.expect("classes", 6, g2.vertices.size());
  // Labels E(0,k), E(-3,k), E(-7,k) are j = 0, 50, 46 here.
  d.expect("2-graph edges", "0-46 0/1-46/1 50-50/1", edge_string(g2));
  d.expect("3-graph edges", "0-0/1 0-50/1 0/1-50 46-46/1 46-50 46/1-50/1", edge_string(g3));
  d.expect("3-graph components", 1, graph_components(g3).size());
  d.expect("rB(53,0)", 6, rB(F, 0).value);
  QuadOrder O(-212, 1);
  const Form one = reduce(ideal_form(unit_ideal(O)));
  std::map<Form, std::int64_t> least;
  for (std::int64_t n = 1; n <= minkowski_bound(O); ++n)
    for (const auto& I : enumerate_ideals(O, n)) {
      Form f = reduce(ideal_form(I));
      if (!(f == one) && !least.count(f)) least[f] = n;
    }
  std::vector<std::int64_t> norms;
  for (const auto& [f, n] : least) norms.push_back(n);
  std::sort(norms.begin(), norms.end());
  d.expect("least norms", "2,3,3,6,6", join(norms));
}

void repro4(Diff& d) {
  QuadOrder O(-8, 4);
  const std::map<std::int64_t, std::pair<std::string, std::string>> table{
      {2, {"", "(2,0,1)"}},
      {4, {"(2,0,2) (4,2,1)", "(4,0,1)"}},
      {8, {"", "(4,0,2) (8,0,1) (8,4,1)"}},
      {16, {"(16,12,1) (16,4,1) (4,0,4) (8,4,2)", "(16,0,1) (16,8,1) (8,0,2)"}},
      {32, {"(32,0,1) (32,16,1) (32,24,1) (32,8,1)", "(16,0,2) (16,8,2) (8,0,4)"}},
  };
  const std::int64_t iG[] = {0, 2, 0, 4, 4}, niG[] = {1, 1, 3, 3, 3};
  for (int n = 1; n <= 5; ++n) {
    const std::int64_t norm = ipow(2, n);
    std::set<std::string> inv, non;
    for (const auto& I : enumerate_ideals(O, norm)) {
      std::string s = "(" + std::to_string(I.A()) + "," + std::to_string(I.B()) + "," + std::to_string(I.C()) + ")";
      (is_invertible(I) ? inv : non).insert(s);
    }
    auto cat = [](const std::set<std::string>& s) {
      std::string o;
      for (const auto& x : s) o += (o.empty() ? "" : " ") + x;
      return o;
    };
    const std::string key = "n=" + std::to_string(n);
    d.expect("iG " + key, iG[n - 1], ideal_count_invertible(4, 2, n, -8));
    d.expect("niG " + key, niG[n - 1], ideal_count_noninvertible(4, 2, n, -8));
    d.expect("invertible " + key, table.at(norm).first, cat(inv));
    d.expect("non-invertible " + key, table.at(norm).second, cat(non));
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Isogenies, endomorphism rings and minimal degrees over finite fields"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "isogenion 0.1.0");

  std::int64_t p = 0, trace = 0, js = 0, jt = 0, D0 = 0, f = 1, ell = 2, disc = 0, jv = 0;
  int r = 1, n = 1, example = 0;
  std::string format = "dot", chain;
  bool closure = false, list = false, no_search = false;
  std::optional<std::int64_t> j1, j2;

  auto* volcano = app.add_subcommand("volcano", "ell-isogeny graph of an isogeny class");
  volcano->add_option("--p", p, "characteristic")->required();
  volcano->add_option("--r", r, "extension degree")->check(CLI::Range(1, 24));
  volcano->add_option("--trace", trace, "Frobenius trace")->required();
  volcano->add_option("--ell", ell, "isogeny degree (2, 3, 5 or 7)")->required();
  volcano->add_option("--format", format, "dot or json")->check(CLI::IsMember({"dot", "json"}));

  auto* index = app.add_subcommand("index", "index of Hom(E1,E2) beta in End(E2)");
  index->add_option("--p", p)->required();
  index->add_option("--r", r)->check(CLI::Range(1, 24));
  index->add_option("--trace", trace)->required();
  index->add_option("--j-source", js)->required();
  index->add_option("--j-target", jt)->required();
  index->add_option("--degree-chain", chain, "comma-separated prime degrees, applied left to right");

  auto* md = app.add_subcommand("md", "minimal degrees in an isogeny class");
  md->add_option("--p", p)->required();
  md->add_option("--r", r)->check(CLI::Range(1, 24));
  md->add_option("--trace", trace)->required();
  md->add_option("--j1", j1);
  md->add_option("--j2", j2);
  md->add_flag("--closure", closure, "minimal degree over the algebraic closure");

  auto* count = app.add_subcommand("count-ideals", "ideals of norm ell^n in the order of conductor f");
  count->add_option("--D0", D0, "fundamental discriminant")->required();
  count->add_option("--f", f, "conductor")->check(CLI::PositiveNumber);
  count->add_option("--ell", ell)->required();
  count->add_option("--n", n)->required()->check(CLI::Range(0, 30));
  count->add_flag("--list", list, "print the Hermite bases");

  auto* classify_md = app.add_subcommand("classify-md", "Md(E) from the CM table");
  classify_md->add_option("--p", p)->required();
  classify_md->add_option("--j", jv)->required();
  classify_md->add_flag("--no-search", no_search, "skip the isogeny search");

  auto* cg = app.add_subcommand("class-group", "class group of an imaginary quadratic order");
  cg->add_option("--D0", D0, "fundamental discriminant");
  cg->add_option("--f", f)->check(CLI::PositiveNumber);
  cg->add_option("--disc", disc, "order discriminant");

  auto* repro = app.add_subcommand("repro", "recompute a worked example and compare");
  repro->add_option("example", example, "1, 2, 3 or 4")->required()->check(CLI::Range(1, 4));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*volcano) {
      auto g = build_graph(make_field(p, r), trace, static_cast<int>(ell));
      if (format == "dot")
        std::cout << to_dot(g);
      else
        print(graph_json(g));
    } else if (*index) {
      Field F = make_field(p, r);
      Curve E2 = curve_from_j(F, element(F, js), trace), E1 = curve_from_j(F, element(F, jt), trace);
      auto degrees = parse_chain(chain);
      auto beta = realize_chain(E2, E1, degrees);
      if (!beta) raise(ErrorKind::NotIsogenous, "no walk with degree chain [" + chain + "] reaches the target class");
      print(index_json(E2, E1, *beta));
    } else if (*md) {
      Field F = make_field(p, r);
      if (j1.has_value() != j2.has_value()) raise(ErrorKind::InvalidArgument, "give both --j1 and --j2 or neither");
      if (j1) {
        Curve A = curve_from_j(F, element(F, *j1), trace), B = curve_from_j(F, element(F, *j2), trace);
        print(md_json(md_between(A, B, !closure)));
      } else {
        Json pairs = Json::array();
        auto cls = classes_with_trace(F, trace);
        std::sort(cls.begin(), cls.end());
        for (std::size_t a = 0; a < cls.size(); ++a)
          for (std::size_t b = a; b < cls.size(); ++b)
            pairs.push_back(md_json(md_between(cls[a].representative, cls[b].representative, !closure)));
        auto rb = rB(F, trace);
        print(Json{{"pairs", pairs},
                   {"rB", num(rb.value)},
                   {"rB_pair", Json::array({rb.first.label(), rb.second.label()})},
                   {"complete", rb.complete}});
      }
    } else if (*count) {
      QuadOrder O(D0, f);
      auto ideals = enumerate_ideals(O, ipow(ell, n));
      std::int64_t inv = 0;
      Json bases = Json::array();
      for (const auto& I : ideals) {
        inv += is_invertible(I);
        bases.push_back(Json{{"A", num(I.A())}, {"B", num(I.B())}, {"C", num(I.C())}, {"invertible", is_invertible(I)}});
      }
      const std::int64_t iG = ideal_count_invertible(f, ell, n, D0), niG = ideal_count_noninvertible(f, ell, n, D0);
      const std::int64_t non = static_cast<std::int64_t>(ideals.size()) - inv;
      Json out{{"D0", D0}, {"f", f}, {"ell", ell}, {"n", n}, {"iG", num(iG)}, {"niG", num(niG)},
               {"enumerated_invertible", num(inv)}, {"enumerated_noninvertible", num(non)},
               {"agrees", iG == inv && niG == non}};
      if (list) out["ideals"] = bases;
      print(out);
      if (iG != inv || niG != non) return kExitMismatch;
    } else if (*classify_md) {
      Field F = make_field(p, 1);
      Curve E = twist_representatives(F, F.from_int(jv)).front();
      const int c = md_classifier(E);
      Json out{{"p", p}, {"j", E.j_invariant().to_string()}, {"supersingular", E.is_supersingular()}, {"classifier", c}};
      if (!no_search) {
        const int s = md_closure(E);
        out["search"] = s;
        out["agrees"] = s == c;
        print(out);
        if (s != c) return kExitMismatch;
      } else {
        print(out);
      }
    } else if (*cg) {
      QuadOrder O = disc ? QuadOrder::from_discriminant(disc) : QuadOrder(D0, f);
      if (!disc && D0 == 0) raise(ErrorKind::InvalidArgument, "give --D0 (and --f) or --disc");
      auto g = class_group(O);
      Json forms = Json::array(), reps = Json::array();
      for (const auto& F : g.forms) forms.push_back(Json::array({num(F.a), num(F.b), num(F.c)}));
      for (const auto& I : g.representatives)
        reps.push_back(Json{{"A", num(I.A())}, {"B", num(I.B())}, {"C", num(I.C())}, {"norm", num(I.norm())},
                            {"order", num(ideal_class_order(I))}});
      print(Json{{"D0", O.D0()}, {"f", O.f()}, {"disc", num(O.disc())}, {"h", num(g.h)}, {"forms", forms},
                 {"representatives", reps}});
    } else if (*repro) {
      Diff d;
      switch (example) {
        case 1: repro1(d); break;
        case 2: repro2(d); break;
        case 3: repro3(d); break;
        default: repro4(d); break;
      }
      for (const auto& line : d.lines) std::cout << "MISMATCH " << line << "\n";
      std::cout << "example " << example << ": " << (d.checks - static_cast<int>(d.lines.size())) << "/" << d.checks
                << " checks match\n";
      return d.lines.empty() ? 0 : kExitMismatch;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return 0;
}
