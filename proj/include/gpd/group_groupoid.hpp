#pragma once

#include <array>
#include <set>
#include <utility>
#include <vector>

#include "gpd/group.hpp"
#include "gpd/groupoid.hpp"
#include "gpd/report.hpp"

namespace gpd {

/// A groupoid whose arrow set and object set carry group structure
/// compatible with all groupoid structure maps. The arrow operation is
/// written additively throughout; no commutativity is implied.
struct GroupGroupoid {
  FiniteGroupoid gpd;
  FiniteGroup arrow_group;
  FiniteGroup object_group;

  friend bool operator==(const GroupGroupoid&, const GroupGroupoid&) = default;
};

/// Verifies the four compatibility conditions (src, tgt, ident, inv
/// are group homomorphisms) and the interchange law
///   (b.a) + (d.c) = (b+d).(a+c).
///
/// The interchange scan runs over every pair of composable pairs.
/// Quadruples whose equation reads off the same three table cells are
/// the same check, so they are counted once; the counter
/// "interchange_instances" reports the number of distinct instances
/// verified and "interchange_pass" how many of them hold. Witnesses
/// are reported as quadruples (b, a, d, c).
///
/// Precondition: gpd and both groups are individually valid. Throws
/// CarrierMismatch when the group carriers differ from the groupoid's
/// arrow and object sets.
inline Report check_group_groupoid(const GroupGroupoid& g) {
  if (g.arrow_group.elements() != g.gpd.arrows())
    throw Error("CarrierMismatch", "arrow group carrier != arrow set");
  if (g.object_group.elements() != g.gpd.objects())
    throw Error("CarrierMismatch", "object group carrier != object set");

  Report report;
  const auto& arrows = g.gpd.arrows();
  for (const auto& a : arrows)
    for (const auto& b : arrows) {
      const Id& sum = g.arrow_group.op(a, b);
      if (g.gpd.src(sum) != g.object_group.op(g.gpd.src(a), g.gpd.src(b)))
        report.add("SourceNotHom", detail::tuple({a, b}));
      if (g.gpd.tgt(sum) != g.object_group.op(g.gpd.tgt(a), g.gpd.tgt(b)))
        report.add("TargetNotHom", detail::tuple({a, b}));
      if (g.gpd.inverse(sum) !=
          g.arrow_group.op(g.gpd.inverse(a), g.gpd.inverse(b)))
        report.add("InverseMapNotHom", detail::tuple({a, b}));
    }
  for (const auto& x : g.gpd.objects())
    for (const auto& y : g.gpd.objects())
      if (g.gpd.identity_arrow(g.object_group.op(x, y)) !=
          g.arrow_group.op(g.gpd.identity_arrow(x), g.gpd.identity_arrow(y)))
        report.add("IdentityMapNotHom", detail::tuple({x, y}));

  const auto& comp = g.gpd.comp_table();
  std::set<std::array<Id, 3>> instances;
  std::size_t passing = 0;
  for (const auto& [pq, ba] : comp) {
    const auto& [b, a] = pq;
    for (const auto& [rs, dc] : comp) {
      const auto& [d, c] = rs;
      const Id& top = g.arrow_group.op(b, d);
      const Id& bottom = g.arrow_group.op(a, c);
      Id rhs = g.gpd.composable(top, bottom) ? g.gpd.compose(top, bottom)
                                             : Id{};
      if (!instances.insert({ba, dc, rhs}).second) continue;
      if (!rhs.empty() && g.arrow_group.op(ba, dc) == rhs) {
        ++passing;
      } else {
        report.add("Interchange", detail::tuple({b, a, d, c}));
      }
    }
  }
  report.set_counter("interchange_instances", instances.size());
  report.set_counter("interchange_pass", passing);
  return report;
}

/// The banal group-groupoid of a group M: the pair groupoid M x M over
/// M with componentwise addition, (y,x)+(t,z) = (y+t, x+z).
inline GroupGroupoid banal(const FiniteGroup& m) {
  GroupGroupoid g;
  g.gpd = pair_groupoid(m.elements());
  g.object_group = m;
  GroupTable arrows;
  arrows.elements = g.gpd.arrows();
  for (const auto& y1 : m.elements())
    for (const auto& x1 : m.elements())
      for (const auto& y2 : m.elements())
        for (const auto& x2 : m.elements())
          arrows.op[{pair_id(y1, x1), pair_id(y2, x2)}] =
              pair_id(m.op(y1, y2), m.op(x1, x2));
  arrows.identity = pair_id(m.identity(), m.identity());
  g.arrow_group = build_group(std::move(arrows));
  return g;
}

/// The discrete group-groupoid of M: identity arrows only, each named
/// after its object.
inline GroupGroupoid discrete(const FiniteGroup& m) {
  GroupoidTable t;
  t.objects = m.elements();
  t.arrows = m.elements();
  for (const auto& x : m.elements()) {
    t.src[x] = x;
    t.tgt[x] = x;
    t.ident[x] = x;
    t.inv[x] = x;
    t.comp[{x, x}] = x;
  }
  GroupGroupoid g;
  g.gpd = build_groupoid(std::move(t));
  g.arrow_group = m;
  g.object_group = m;
  return g;
}

/// Componentwise product; carriers are canonical pair ids.
inline GroupGroupoid product(const GroupGroupoid& a, const GroupGroupoid& b) {
  GroupoidTable t;
  for (const auto& x : a.gpd.objects())
    for (const auto& y : b.gpd.objects()) t.objects.push_back(pair_id(x, y));
  for (const auto& u : a.gpd.arrows())
    for (const auto& v : b.gpd.arrows()) {
      Id w = pair_id(u, v);
      t.arrows.push_back(w);
      t.src[w] = pair_id(a.gpd.src(u), b.gpd.src(v));
      t.tgt[w] = pair_id(a.gpd.tgt(u), b.gpd.tgt(v));
      t.inv[w] = pair_id(a.gpd.inverse(u), b.gpd.inverse(v));
    }
  for (const auto& x : a.gpd.objects())
    for (const auto& y : b.gpd.objects())
      t.ident[pair_id(x, y)] =
          pair_id(a.gpd.identity_arrow(x), b.gpd.identity_arrow(y));
  for (const auto& [ka, ca] : a.gpd.comp_table())
    for (const auto& [kb, cb] : b.gpd.comp_table())
      t.comp[{pair_id(ka.first, kb.first), pair_id(ka.second, kb.second)}] =
          pair_id(ca, cb);
  GroupGroupoid g;
  g.gpd = build_groupoid(std::move(t));
  g.arrow_group = direct_product(a.arrow_group, b.arrow_group);
  g.object_group = direct_product(a.object_group, b.object_group);
  return g;
}

/// A morphism of group-groupoids: a groupoid morphism whose arrow and
/// object maps are additionally group homomorphisms.
struct GGMorphism {
  GroupGroupoid domain;
  GroupGroupoid codomain;
  IdTable object_map;
  IdTable arrow_map;

  GroupoidMorphism underlying() const {
    return {domain.gpd, codomain.gpd, object_map, arrow_map};
  }
  GroupHom arrow_hom() const {
    return {domain.arrow_group, codomain.arrow_group, arrow_map};
  }
  GroupHom object_hom() const {
    return {domain.object_group, codomain.object_group, object_map};
  }
  const Id& on_object(const Id& x) const {
    auto it = object_map.find(x);
    if (it == object_map.end()) throw Error("UnknownId", x);
    return it->second;
  }
  const Id& on_arrow(const Id& a) const {
    auto it = arrow_map.find(a);
    if (it == arrow_map.end()) throw Error("UnknownId", a);
    return it->second;
  }

  friend bool operator==(const GGMorphism&, const GGMorphism&) = default;
};

/// Groupoid-morphism conditions plus the two addition-preservation
/// conditions, with codes telling the levels apart.
inline Report check_gg_morphism(const GGMorphism& f) {
  Report report = check_groupoid_morphism(f.underlying());
  Report arrows = check_hom(f.arrow_hom());
  for (const auto& v : arrows.violations())
    report.add("ArrowAdditionNotPreserved", v.witness);
  Report objects = check_hom(f.object_hom());
  for (const auto& v : objects.violations())
    report.add("ObjectAdditionNotPreserved", v.witness);
  return report;
}

inline GGMorphism identity_gg_morphism(const GroupGroupoid& g) {
  GGMorphism f{g, g, {}, {}};
  for (const auto& x : g.gpd.objects()) f.object_map[x] = x;
  for (const auto& a : g.gpd.arrows()) f.arrow_map[a] = a;
  return f;
}

inline GGMorphism compose_gg_morphisms(const GGMorphism& g,
                                       const GGMorphism& f) {
  if (!(f.codomain == g.domain))
    throw Error("DomainMismatch", "group-groupoid morphism composition");
  GGMorphism out{f.domain, g.codomain, {}, {}};
  for (const auto& [x, y] : f.object_map) out.object_map[x] = g.on_object(y);
  for (const auto& [a, b] : f.arrow_map) out.arrow_map[a] = g.on_arrow(b);
  return out;
}

/// The banal construction on morphisms: a group homomorphism f
/// induces banal(dom f) -> banal(cod f), (y,x) -> (f(y), f(x)). This
/// is functorial; identity and composition preservation are covered by
/// the test suite.
inline GGMorphism omega_on_morphism(const GroupHom& f) {
  if (!check_hom(f).ok())
    throw Error("InvalidHom", "omega applied to a non-homomorphism");
  GGMorphism out{banal(f.domain), banal(f.codomain), f.map, {}};
  for (const auto& y : f.domain.elements())
    for (const auto& x : f.domain.elements())
      out.arrow_map[pair_id(y, x)] = pair_id(f.apply(y), f.apply(x));
  if (!check_gg_morphism(out).ok())
    throw Error("InternalContradiction", "omega image is not a morphism");
  return out;
}

/// The full substructure on the transitive component of the object
/// unit, together with the normality verdicts for both carriers.
struct IdentityComponent {
  GroupGroupoid component;
  bool objects_normal = false;
  bool arrows_normal = false;
};

/// Cuts out the component of the unit object e: objects are everything
/// connected to e, arrows are all arrows between those objects. On
/// valid input the result is again a group-groupoid and both carriers
/// are normal subgroups; a failure of either claim throws
/// InternalContradiction (the input was invalid or there is a bug).
inline IdentityComponent identity_component(const GroupGroupoid& g) {
  const Id& e = g.object_group.identity();
  std::vector<Id> block;
  for (const auto& b : g.gpd.components())
    if (std::binary_search(b.begin(), b.end(), e)) block = b;
  std::set<Id> objects(block.begin(), block.end());

  GroupoidTable t;
  t.objects = block;
  std::set<Id> arrows;
  for (const auto& a : g.gpd.arrows())
    if (objects.count(g.gpd.src(a)) && objects.count(g.gpd.tgt(a))) {
      arrows.insert(a);
      t.arrows.push_back(a);
      t.src[a] = g.gpd.src(a);
      t.tgt[a] = g.gpd.tgt(a);
      t.inv[a] = g.gpd.inverse(a);
    }
  for (const auto& x : block) t.ident[x] = g.gpd.identity_arrow(x);
  for (const auto& [key, c] : g.gpd.comp_table())
    if (arrows.count(key.first) && arrows.count(key.second))
      t.comp[{key.first, key.second}] = c;

  auto restrict_group = [](const FiniteGroup& big, const std::vector<Id>& s) {
    GroupTable t2;
    t2.elements = s;
    for (const auto& a : s)
      for (const auto& b : s) t2.op[{a, b}] = big.op(a, b);
    t2.identity = big.identity();
    return build_group(std::move(t2));
  };

  IdentityComponent out;
  try {
    out.component.gpd = build_groupoid(std::move(t));
    out.component.object_group = restrict_group(g.object_group, block);
    out.component.arrow_group =
        restrict_group(g.arrow_group, out.component.gpd.arrows());
  } catch (const ValidationError& e) {
    throw Error("InternalContradiction",
                std::string("unit component is not closed: ") + e.what());
  }
  if (!check_group_groupoid(out.component).ok())
    throw Error("InternalContradiction",
                "unit component fails the group-groupoid checks");
  out.objects_normal = is_normal(g.object_group, out.component.gpd.objects());
  out.arrows_normal = is_normal(g.arrow_group, out.component.gpd.arrows());
  if (!out.objects_normal || !out.arrows_normal)
    throw Error("InternalContradiction", "unit component is not normal");
  return out;
}

/// A verified pair of mutually inverse group homomorphisms.
struct GroupIso {
  GroupHom forward;
  GroupHom backward;
};

/// The left-translation isomorphism G{e} -> G{x}, a -> 1_x + a, with
/// inverse b -> 1_(-x) + b. Verified exhaustively; on valid input it
/// always succeeds.
inline GroupIso vertex_iso(const GroupGroupoid& g, const Id& x) {
  if (!g.gpd.has_object(x)) throw Error("UnknownObject", x);
  const Id& e = g.object_group.identity();
  FiniteGroup at_e = g.gpd.vertex_group(e);
  FiniteGroup at_x = g.gpd.vertex_group(x);

  GroupIso iso;
  iso.forward = {at_e, at_x, {}};
  iso.backward = {at_x, at_e, {}};
  const Id& unit_x = g.gpd.identity_arrow(x);
  const Id& unit_minus_x =
      g.gpd.identity_arrow(g.object_group.inverse(x));
  for (const auto& a : at_e.elements())
    iso.forward.map[a] = g.arrow_group.op(unit_x, a);
  for (const auto& b : at_x.elements())
    iso.backward.map[b] = g.arrow_group.op(unit_minus_x, b);

  bool ok = check_hom(iso.forward).ok() && check_hom(iso.backward).ok();
  for (const auto& a : at_e.elements())
    if (!ok || iso.backward.apply(iso.forward.apply(a)) != a) ok = false;
  for (const auto& b : at_x.elements())
    if (!ok || iso.forward.apply(iso.backward.apply(b)) != b) ok = false;
  if (!ok)
    throw Error("InternalContradiction",
                "left translation is not an isomorphism at " + x);
  return iso;
}

}  // namespace gpd
