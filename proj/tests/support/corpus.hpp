#pragma once

// Shared fixture corpus: the small groups, group-groupoids, actions
// and morphisms most tests run over. Everything is constructed
// through the library's validating builders except where a test needs
// a deliberately broken candidate.

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "gpd/gpd.hpp"

namespace corpus {

using namespace gpd;

inline FiniteGroup cyclic(int n) {
  GroupTable t;
  for (int i = 0; i < n; ++i) t.elements.push_back(std::to_string(i));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      t.op[{std::to_string(i), std::to_string(j)}] =
          std::to_string((i + j) % n);
  t.identity = "0";
  return build_group(std::move(t));
}

inline FiniteGroup z1() { return cyclic(1); }
inline FiniteGroup z2() { return cyclic(2); }
inline FiniteGroup z3() { return cyclic(3); }
inline FiniteGroup z4() { return cyclic(4); }
inline FiniteGroup k4() { return direct_product(z2(), z2()); }

// S3 as permutations of {0,1,2}; element names encode the image of
// 0,1,2 (e.g. "p120" maps 0->1, 1->2, 2->0). Identity is "p012".
inline FiniteGroup s3() {
  std::vector<std::array<int, 3>> perms = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                           {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  auto name = [](const std::array<int, 3>& p) {
    return "p" + std::to_string(p[0]) + std::to_string(p[1]) +
           std::to_string(p[2]);
  };
  GroupTable t;
  for (const auto& p : perms) t.elements.push_back(name(p));
  for (const auto& p : perms)
    for (const auto& q : perms) {
      std::array<int, 3> pq = {p[q[0]], p[q[1]], p[q[2]]};
      t.op[{name(p), name(q)}] = name(pq);
    }
  t.identity = "p012";
  return build_group(std::move(t));
}

inline std::vector<std::pair<std::string, FiniteGroup>> groups() {
  return {{"Z1", z1()}, {"Z2", z2()}, {"Z3", z3()},
          {"Z4", z4()}, {"K4", k4()}, {"S3", s3()}};
}

// One object, arrows M, composition equal to addition. A valid
// group-groupoid exactly when M is abelian.
inline GroupGroupoid one_object(const FiniteGroup& m) {
  GroupoidTable t;
  t.objects = {"e"};
  t.arrows = m.elements();
  for (const auto& a : m.elements()) {
    t.src[a] = "e";
    t.tgt[a] = "e";
    t.inv[a] = m.inverse(a);
  }
  t.ident["e"] = m.identity();
  for (const auto& a : m.elements())
    for (const auto& b : m.elements()) t.comp[{a, b}] = m.op(a, b);

  GroupTable objects;
  objects.elements = {"e"};
  objects.op[{"e", "e"}] = "e";
  objects.identity = "e";

  GroupGroupoid g;
  g.gpd = build_groupoid(std::move(t));
  g.arrow_group = m;
  g.object_group = build_group(std::move(objects));
  return g;
}

// The valid fixture group-groupoids, by name.
inline std::vector<std::pair<std::string, GroupGroupoid>> group_groupoids() {
  std::vector<std::pair<std::string, GroupGroupoid>> out;
  for (const auto& [name, g] : groups()) out.push_back({"Banal" + name, banal(g)});
  for (const auto& [name, g] : groups())
    out.push_back({"Discrete" + name, discrete(g)});
  out.push_back({"BanalZ2xDiscreteZ2", product(banal(z2()), discrete(z2()))});
  out.push_back({"BanalZ2xLoopZ2", product(banal(z2()), one_object(z2()))});
  out.push_back({"LoopZ2", one_object(z2())});
  out.push_back({"LoopZ4", one_object(z4())});
  return out;
}

// The action of banal(Z2) on Z2 x Z2 along the first projection:
// (y,x) sends (x,m) to (y,m).
inline GroupAction a4() {
  const FiniteGroup two = z2();
  GroupAction a;
  a.gg = banal(two);
  a.m = k4();
  a.anchor = {a.m, a.gg.object_group, {}};
  for (const auto& x : two.elements())
    for (const auto& m : two.elements()) a.anchor.map[pair_id(x, m)] = x;
  for (const auto& y : two.elements())
    for (const auto& x : two.elements())
      for (const auto& m : two.elements())
        a.act[{pair_id(y, x), pair_id(x, m)}] = pair_id(y, m);
  return a;
}

inline std::vector<std::pair<std::string, GroupAction>> actions() {
  std::vector<std::pair<std::string, GroupAction>> out;
  for (const auto& [name, g] : group_groupoids())
    out.push_back({"Unit" + name, unit_action(g)});
  out.push_back({"A4", a4()});
  return out;
}

// Candidate morphisms for the covering-criterion comparison: the
// coverings generated from the fixture actions plus assorted
// identities and non-coverings.
inline std::vector<std::pair<std::string, GGMorphism>> covering_candidates() {
  std::vector<std::pair<std::string, GGMorphism>> out;
  for (const auto& [name, a] : actions())
    out.push_back({"Gamma" + name, covering_from_action(a).p});
  out.push_back({"IdBanalZ2", identity_gg_morphism(banal(z2()))});
  out.push_back({"IdDiscreteZ3", identity_gg_morphism(discrete(z3()))});

  GroupHom mod2{z4(), z2(), {}};
  for (int i = 0; i < 4; ++i)
    mod2.map[std::to_string(i)] = std::to_string(i % 2);
  out.push_back({"OmegaMod2", omega_on_morphism(mod2)});

  GroupHom collapse{z2(), z1(), {{"0", "0"}, {"1", "0"}}};
  out.push_back({"OmegaCollapse", omega_on_morphism(collapse)});

  GroupHom include{z1(), z2(), {{"0", "0"}}};
  out.push_back({"OmegaInclude", omega_on_morphism(include)});

  // Identity arrows of banal(Z2), included from the discrete
  // group-groupoid; stars are strictly smaller upstairs.
  const FiniteGroup two = z2();
  GGMorphism inc{discrete(two), banal(two), {}, {}};
  for (const auto& x : two.elements()) {
    inc.object_map[x] = x;
    inc.arrow_map[x] = pair_id(x, x);
  }
  out.push_back({"DiscreteToBanalZ2", inc});
  return out;
}

// The three-object chain of action morphisms used by the functor-law
// tests: A4 --first projection--> unit action --x -> (x,0)--> A4.
inline std::pair<ActionMorphism, ActionMorphism> action_chain() {
  const FiniteGroup two = z2();
  GroupAction from = a4();
  GroupAction mid = unit_action(banal(two));
  GroupAction to = a4();
  ActionMorphism f{from, mid, {from.m, mid.m, {}}};
  for (const auto& x : two.elements())
    for (const auto& m : two.elements()) f.f.map[pair_id(x, m)] = x;
  ActionMorphism g{mid, to, {mid.m, to.m, {}}};
  for (const auto& x : two.elements()) g.f.map[x] = pair_id(x, "0");
  return {f, g};
}

}  // namespace corpus
