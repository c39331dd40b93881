#pragma once

#include <set>
#include <utility>
#include <vector>

#include "gpd/group.hpp"
#include "gpd/group_groupoid.hpp"
#include "gpd/report.hpp"

namespace gpd {

/// An action of a group-groupoid G on a group M via an anchor
/// homomorphism w : M -> G0. The table act[(a, x)] = a.x is defined
/// exactly on the pairs with src(a) == w(x).
struct GroupAction {
  GroupGroupoid gg;
  FiniteGroup m;
  GroupHom anchor;
  PairTable act;

  const Id& apply(const Id& a, const Id& x) const {
    auto it = act.find({a, x});
    if (it == act.end()) throw Error("AnchorMismatch", detail::tuple({a, x}));
    return it->second;
  }

  friend bool operator==(const GroupAction&, const GroupAction&) = default;
};

/// Checks the four action conditions over the whole fiber-product
/// domain: target w(a.x) = tgt(a), functoriality b.(a.x) = (b.a).x,
/// unit 1_w(x).x = x, and interchange (b.y)+(a.x) = (b+a).(y+x).
/// Also checks that the anchor is a homomorphism and that the act
/// table's domain is exact. Counter "action_pairs" reports the number
/// of defined pairs.
inline Report check_action(const GroupAction& a) {
  if (!(a.anchor.domain == a.m))
    throw Error("CarrierMismatch", "anchor domain is not the acted-on group");
  if (!(a.anchor.codomain == a.gg.object_group))
    throw Error("CarrierMismatch", "anchor codomain is not the object group");

  Report report;
  Report anchor_report = check_hom(a.anchor);
  for (const auto& v : anchor_report.violations())
    report.add("AnchorNotHom", v.witness);

  bool domain_ok = true;
  for (const auto& [key, value] : a.act) {
    const auto& [arrow, x] = key;
    if (!a.gg.gpd.has_arrow(arrow) || !a.m.contains(x) ||
        !a.m.contains(value)) {
      report.add("UnknownId", detail::tuple({arrow, x}));
      domain_ok = false;
    } else if (a.gg.gpd.src(arrow) != a.anchor.apply(x)) {
      report.add("ActDomain", detail::tuple({arrow, x}) + " not anchored");
      domain_ok = false;
    }
  }
  std::size_t pairs = 0;
  for (const auto& arrow : a.gg.gpd.arrows())
    for (const auto& x : a.m.elements())
      if (a.gg.gpd.src(arrow) == a.anchor.apply(x)) {
        ++pairs;
        if (!a.act.count({arrow, x})) {
          report.add("ActDomain", detail::tuple({arrow, x}) + " undefined");
          domain_ok = false;
        }
      }
  report.set_counter("action_pairs", pairs);
  if (!domain_ok || !report.ok()) return report;

  for (const auto& [key, value] : a.act) {
    const auto& [arrow, x] = key;
    if (a.anchor.apply(value) != a.gg.gpd.tgt(arrow))
      report.add("TargetCondition", detail::tuple({arrow, x}));
  }
  if (!report.ok()) return report;

  for (const auto& [key, value] : a.act) {
    const auto& [arrow, x] = key;
    for (const auto& b : a.gg.gpd.arrows()) {
      if (!a.gg.gpd.composable(b, arrow)) continue;
      if (a.apply(b, value) != a.apply(a.gg.gpd.compose(b, arrow), x))
        report.add("Functoriality", detail::tuple({b, arrow, x}));
    }
  }
  for (const auto& x : a.m.elements())
    if (a.apply(a.gg.gpd.identity_arrow(a.anchor.apply(x)), x) != x)
      report.add("UnitCondition", x);
  for (const auto& [k1, by] : a.act)
    for (const auto& [k2, ax] : a.act) {
      const auto& [b, y] = k1;
      const auto& [arrow, x] = k2;
      if (a.m.op(by, ax) !=
          a.apply(a.gg.arrow_group.op(b, arrow), a.m.op(y, x)))
        report.add("ActionInterchange", detail::tuple({b, y, arrow, x}));
    }
  return report;
}

/// G acting on its own object group via the identity anchor, a.x =
/// tgt(a).
inline GroupAction unit_action(const GroupGroupoid& g) {
  GroupAction a;
  a.gg = g;
  a.m = g.object_group;
  a.anchor = identity_hom(g.object_group);
  for (const auto& arrow : g.gpd.arrows())
    a.act[{arrow, g.gpd.src(arrow)}] = g.gpd.tgt(arrow);
  return a;
}

/// The action groupoid G|xM: arrows are the anchored pairs (a, x),
/// running x -> a.x, with (b, a.x).(a, x) = (b.a, x) and componentwise
/// addition. Arrow ids are canonical pairs. The result is validated
/// before it is returned.
inline GroupGroupoid action_groupoid(const GroupAction& a) {
  if (!check_action(a).ok())
    throw Error("InvalidAction", "action groupoid of an invalid action");

  GroupoidTable t;
  t.objects = a.m.elements();
  for (const auto& [key, value] : a.act) {
    const auto& [arrow, x] = key;
    Id w = pair_id(arrow, x);
    t.arrows.push_back(w);
    t.src[w] = x;
    t.tgt[w] = value;
    t.inv[w] = pair_id(a.gg.gpd.inverse(arrow), value);
  }
  for (const auto& x : a.m.elements())
    t.ident[x] = pair_id(a.gg.gpd.identity_arrow(a.anchor.apply(x)), x);
  // comp: (b, y).(a, x) with y == a.x composes to (b.a, x).
  for (const auto& [k1, v1] : a.act) {
    const auto& [b, y] = k1;
    for (const auto& [k2, v2] : a.act) {
      const auto& [arrow, x] = k2;
      if (y == v2)
        t.comp[{pair_id(b, y), pair_id(arrow, x)}] =
            pair_id(a.gg.gpd.compose(b, arrow), x);
    }
  }

  GroupTable arrows;
  arrows.elements = t.arrows;
  for (const auto& [k1, v1] : a.act)
    for (const auto& [k2, v2] : a.act)
      arrows.op[{pair_id(k1.first, k1.second), pair_id(k2.first, k2.second)}] =
          pair_id(a.gg.arrow_group.op(k1.first, k2.first),
                  a.m.op(k1.second, k2.second));
  arrows.identity =
      pair_id(a.gg.gpd.identity_arrow(a.anchor.apply(a.m.identity())),
              a.m.identity());

  GroupGroupoid out;
  out.gpd = build_groupoid(std::move(t));
  out.arrow_group = build_group(std::move(arrows));
  out.object_group = a.m;
  if (!check_group_groupoid(out).ok())
    throw Error("InternalContradiction",
                "action groupoid fails the group-groupoid checks");
  return out;
}

/// A morphism of actions over the same G: a homomorphism of the
/// acted-on groups commuting with the anchors and the action.
struct ActionMorphism {
  GroupAction from;
  GroupAction to;
  GroupHom f;

  friend bool operator==(const ActionMorphism&, const ActionMorphism&) =
      default;
};

inline Report check_action_morphism(const ActionMorphism& m) {
  if (!(m.from.gg == m.to.gg))
    throw Error("DomainMismatch", "actions live over different group-groupoids");
  if (!(m.f.domain == m.from.m) || !(m.f.codomain == m.to.m))
    throw Error("DomainMismatch", "hom carriers do not match the actions");

  Report report;
  Report hom_report = check_hom(m.f);
  for (const auto& v : hom_report.violations())
    report.add("NotHomomorphism", v.witness);
  for (const auto& x : m.from.m.elements())
    if (m.to.anchor.apply(m.f.apply(x)) != m.from.anchor.apply(x))
      report.add("AnchorTriangle", x);
  if (!report.ok()) return report;
  for (const auto& [key, value] : m.from.act) {
    const auto& [arrow, x] = key;
    if (m.f.apply(value) != m.to.apply(arrow, m.f.apply(x)))
      report.add("Equivariance", detail::tuple({arrow, x}));
  }
  return report;
}

inline ActionMorphism identity_action_morphism(const GroupAction& a) {
  return {a, a, identity_hom(a.m)};
}

inline ActionMorphism compose_action_morphisms(const ActionMorphism& g,
                                               const ActionMorphism& f) {
  if (!(f.to == g.from))
    throw Error("DomainMismatch", "action morphism composition");
  return {f.from, g.to, compose_homs(g.f, f.f)};
}

}  // namespace gpd
