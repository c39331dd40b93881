#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "gpd/action.hpp"
#include "gpd/group_groupoid.hpp"
#include "gpd/report.hpp"

namespace gpd {

/// Both characterizations of a covering morphism, evaluated
/// independently: (i) the restriction of p to each star is a
/// bijection; (ii) the pairing h -> (p(h), src(h)) is a bijection onto
/// the fiber product of base arrows and total objects. They agree on
/// every morphism; check_covering enforces that.
struct CoveringCriteria {
  bool star_bijective = false;
  bool pairing_bijective = false;
  Report star_report;  // witnesses phrased per object star
};

inline CoveringCriteria covering_criteria(const GGMorphism& p) {
  CoveringCriteria out;
  const auto& total = p.domain;
  const auto& base = p.codomain;

  out.star_bijective = true;
  for (const auto& x : total.gpd.objects()) {
    auto up = total.gpd.star(x);
    auto down = base.gpd.star(p.on_object(x));
    std::set<Id> down_set(down.begin(), down.end());
    std::map<Id, Id> seen;
    bool injective = true;
    for (const auto& h : up) {
      auto [it, fresh] = seen.emplace(p.on_arrow(h), h);
      if (!fresh) {
        out.star_report.add("StarNotInjective",
                            "star(" + x + "): " + it->second + ", " + h +
                                " both over " + p.on_arrow(h));
        injective = false;
      }
    }
    if (up.size() != down.size()) {
      out.star_report.add("StarNotBijective",
                          "star(" + x + "): " + std::to_string(up.size()) +
                              " arrows over " + std::to_string(down.size()));
      out.star_bijective = false;
    } else if (!injective) {
      out.star_bijective = false;
    }
  }

  std::set<std::pair<Id, Id>> image;
  bool pairing_injective = true;
  for (const auto& h : total.gpd.arrows())
    if (!image.insert({p.on_arrow(h), total.gpd.src(h)}).second)
      pairing_injective = false;
  std::size_t fiber_pairs = 0;
  for (const auto& a : base.gpd.arrows())
    for (const auto& x : total.gpd.objects())
      if (base.gpd.src(a) == p.on_object(x)) ++fiber_pairs;
  out.pairing_bijective = pairing_injective && image.size() == fiber_pairs;
  return out;
}

/// Validates that p is a covering morphism of group-groupoids: a valid
/// morphism whose star restrictions are bijections. Runs both
/// criteria and throws CriteriaDisagree if they differ (that would be
/// an implementation bug, the two are equivalent).
inline Report check_covering(const GGMorphism& p) {
  Report report = check_gg_morphism(p);
  if (!report.ok()) return report;
  CoveringCriteria criteria = covering_criteria(p);
  if (criteria.star_bijective != criteria.pairing_bijective)
    throw Error("CriteriaDisagree", "star and pairing criteria differ");
  report.merge(criteria.star_report);
  return report;
}

/// A validated covering with its lifting table: (base arrow a, total
/// object x over src(a)) -> the unique arrow in star(x) over a.
struct Covering {
  GGMorphism p;
  PairTable lift_table;

  const GroupGroupoid& total() const { return p.domain; }
  const GroupGroupoid& base() const { return p.codomain; }

  friend bool operator==(const Covering&, const Covering&) = default;
};

/// Throws NotACovering (with the first witness) unless check_covering
/// passes.
inline Covering make_covering(GGMorphism p) {
  Report report = check_covering(p);
  if (!report.ok())
    throw Error("NotACovering", report.violations().front().code + " " +
                                    report.violations().front().witness);
  Covering c{std::move(p), {}};
  for (const auto& h : c.total().gpd.arrows())
    c.lift_table[{c.p.on_arrow(h), c.total().gpd.src(h)}] = h;
  return c;
}

/// The unique arrow starting at x over the base arrow a. Requires
/// p0(x) == src(a).
inline const Id& lift(const Covering& c, const Id& a, const Id& x) {
  if (!c.base().gpd.has_arrow(a)) throw Error("UnknownId", a);
  if (!c.total().gpd.has_object(x)) throw Error("UnknownObject", x);
  auto it = c.lift_table.find({a, x});
  if (it == c.lift_table.end())
    throw Error("AnchorMismatch", detail::tuple({a, x}));
  return it->second;
}

/// The action induced by a covering: the base acts on the total
/// object group via the anchor p0, with a.x the target of the lift of
/// a at x.
inline GroupAction action_from_covering(const Covering& c) {
  GroupAction a;
  a.gg = c.base();
  a.m = c.total().object_group;
  a.anchor = {a.m, c.base().object_group, c.p.object_map};
  for (const auto& [key, h] : c.lift_table)
    a.act[key] = c.total().gpd.tgt(h);
  if (!check_action(a).ok())
    throw Error("InternalContradiction",
                "covering did not induce a valid action");
  return a;
}

/// The covering induced by an action: the projection from the action
/// groupoid, (a, x) -> a on arrows and the anchor on objects.
inline Covering covering_from_action(const GroupAction& a) {
  GroupGroupoid k = action_groupoid(a);
  GGMorphism p{k, a.gg, a.anchor.map, {}};
  for (const auto& [key, value] : a.act)
    p.arrow_map[pair_id(key.first, key.second)] = key.first;
  return make_covering(std::move(p));
}

}  // namespace gpd
