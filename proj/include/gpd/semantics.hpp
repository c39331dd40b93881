#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gpd/action.hpp"
#include "gpd/dsl.hpp"
#include "gpd/group.hpp"
#include "gpd/group_groupoid.hpp"
#include "gpd/groupoid.hpp"
#include "gpd/report.hpp"

namespace gpd {

/// Values built from a document, keyed by declaration name (names are
/// unique per kind). Only declarations whose checks passed appear.
struct Env {
  std::map<std::string, FiniteGroup> groups;
  std::map<std::string, GroupGroupoid> groupoids;
  std::map<std::string, GGMorphism> morphisms;
  std::map<std::string, GroupAction> actions;
};

struct DeclCheck {
  std::string kind;
  std::string name;
  Report report;
};

struct Elaboration {
  Env env;
  std::vector<DeclCheck> checks;

  bool ok() const {
    for (const auto& c : checks)
      if (!c.report.ok()) return false;
    return true;
  }
};

namespace detail {

// Groupoid identities and inverses are never declared; they are read
// off the composition table. The identity at x is the unique loop
// acting as a two-sided unit on every arrow through x.
inline std::optional<Id> derive_identity_arrow(const dsl::GgdDecl& d,
                                               const Id& x, Report& report) {
  std::vector<Id> candidates;
  for (const auto& u : d.arrows) {
    if (d.src.at(u) != x || d.tgt.at(u) != x) continue;
    bool unit = true;
    for (const auto& a : d.arrows) {
      if (d.src.at(a) == x) {
        auto it = d.compose.find({a, u});
        if (it == d.compose.end() || it->second != a) unit = false;
      }
      if (d.tgt.at(a) == x) {
        auto it = d.compose.find({u, a});
        if (it == d.compose.end() || it->second != a) unit = false;
      }
    }
    if (unit) candidates.push_back(u);
  }
  if (candidates.size() == 1) return candidates.front();
  report.add(candidates.empty() ? "NoIdentityArrow" : "AmbiguousIdentityArrow",
             x);
  return std::nullopt;
}

inline std::optional<Id> derive_group_identity(const std::vector<Id>& elements,
                                               const PairTable& op) {
  for (const auto& e : elements) {
    bool unit = true;
    for (const auto& a : elements) {
      auto l = op.find({e, a});
      auto r = op.find({a, e});
      if (l == op.end() || r == op.end() || l->second != a || r->second != a)
        unit = false;
    }
    if (unit) return e;
  }
  return std::nullopt;
}

inline bool check_table_ids(const PairTable& table, const dsl::GgdDecl& d,
                            Report& report) {
  bool ok = true;
  std::set<Id> arrows(d.arrows.begin(), d.arrows.end());
  for (const auto& [key, value] : table)
    for (const auto& id : {key.first, key.second, value})
      if (!arrows.count(id)) {
        report.add("UnknownId", id);
        ok = false;
      }
  return ok;
}

}  // namespace detail

inline Report elaborate_group(const dsl::GroupDecl& d, FiniteGroup& out) {
  GroupTable t{d.elements, d.table, d.identity};
  Report report = validate_group(t);
  if (report.ok()) out = build_group(std::move(t));
  return report;
}

inline Report elaborate_ggd(const dsl::GgdDecl& d, const FiniteGroup& objects,
                            GroupGroupoid& out) {
  Report report;

  std::set<Id> object_ids(objects.elements().begin(),
                          objects.elements().end());
  for (const auto& a : d.arrows) {
    if (!object_ids.count(d.src.at(a)))
      report.add("UnknownId", "src(" + a + ") = " + d.src.at(a));
    if (!object_ids.count(d.tgt.at(a)))
      report.add("UnknownId", "tgt(" + a + ") = " + d.tgt.at(a));
  }
  if (!detail::check_table_ids(d.compose, d, report)) return report;
  if (!detail::check_table_ids(d.add, d, report)) return report;
  if (!report.ok()) return report;

  auto add_identity = detail::derive_group_identity(d.arrows, d.add);
  if (!add_identity) {
    report.add("NoIdentity", "arrow addition has no unit");
    return report;
  }
  Report arrow_report = validate_group({d.arrows, d.add, *add_identity});
  report.merge(arrow_report);
  if (!arrow_report.ok()) return report;
  FiniteGroup arrow_group = build_group({d.arrows, d.add, *add_identity});

  GroupoidTable t;
  t.objects = objects.elements();
  t.arrows = d.arrows;
  t.src = d.src;
  t.tgt = d.tgt;
  t.comp = d.compose;
  for (const auto& x : t.objects) {
    auto u = detail::derive_identity_arrow(d, x, report);
    if (u) t.ident[x] = *u;
  }
  if (!report.ok()) return report;
  for (const auto& a : d.arrows) {
    std::optional<Id> found;
    const Id& unit_src = t.ident.at(d.src.at(a));
    const Id& unit_tgt = t.ident.at(d.tgt.at(a));
    for (const auto& b : d.arrows) {
      auto left = d.compose.find({b, a});
      auto right = d.compose.find({a, b});
      if (left != d.compose.end() && left->second == unit_src &&
          right != d.compose.end() && right->second == unit_tgt)
        found = b;
    }
    if (!found) {
      report.add("NoInverseArrow", a);
      continue;
    }
    t.inv[a] = *found;
  }
  if (!report.ok()) return report;

  Report gpd_report = validate_groupoid(t);
  report.merge(gpd_report);
  if (!gpd_report.ok()) return report;

  GroupGroupoid candidate{build_groupoid(std::move(t)), arrow_group, objects};
  report.merge(check_group_groupoid(candidate));
  if (report.ok()) out = std::move(candidate);
  return report;
}

inline Report elaborate_morphism(const dsl::MorphismDecl& d,
                                 const GroupGroupoid& domain,
                                 const GroupGroupoid& codomain,
                                 GGMorphism& out) {
  Report report;
  GGMorphism f{domain, codomain, d.object_map, d.arrow_map};
  for (const auto& x : domain.gpd.objects())
    if (!d.object_map.count(x))
      report.add("UnknownId", "object map undefined at " + x);
  for (const auto& [x, y] : d.object_map) {
    if (!domain.gpd.has_object(x)) report.add("UnknownId", x);
    if (!codomain.gpd.has_object(y)) report.add("UnknownId", y);
  }
  for (const auto& a : domain.gpd.arrows())
    if (!d.arrow_map.count(a))
      report.add("UnknownId", "arrow map undefined at " + a);
  for (const auto& [a, b] : d.arrow_map) {
    if (!domain.gpd.has_arrow(a)) report.add("UnknownId", a);
    if (!codomain.gpd.has_arrow(b)) report.add("UnknownId", b);
  }
  if (!report.ok()) return report;
  report.merge(check_gg_morphism(f));
  if (report.ok()) out = std::move(f);
  return report;
}

inline Report elaborate_action(const dsl::ActionDecl& d,
                               const GroupGroupoid& gg, const FiniteGroup& m,
                               GroupAction& out) {
  Report report;
  for (const auto& x : m.elements())
    if (!d.anchor.count(x)) report.add("UnknownId", "anchor undefined at " + x);
  for (const auto& [x, y] : d.anchor) {
    if (!m.contains(x)) report.add("UnknownId", x);
    if (!gg.gpd.has_object(y)) report.add("UnknownId", y);
  }
  for (const auto& [key, value] : d.act) {
    if (!gg.gpd.has_arrow(key.first)) report.add("UnknownId", key.first);
    if (!m.contains(key.second)) report.add("UnknownId", key.second);
    if (!m.contains(value)) report.add("UnknownId", value);
  }
  if (!report.ok()) return report;
  GroupAction a{gg, m, {m, gg.object_group, d.anchor}, d.act};
  report.merge(check_action(a));
  if (report.ok()) out = std::move(a);
  return report;
}

/// Builds and validates every declaration, in dependency order
/// (groups, then group-groupoids, then morphisms and actions) while
/// reporting in document order. A declaration whose dependency failed
/// is reported with an InvalidDependency violation.
inline Elaboration elaborate(const dsl::Document& doc) {
  Elaboration result;
  std::map<const void*, std::size_t> slot;
  for (const auto& d : doc.decls) {
    std::visit(
        [&](const auto& decl) {
          using T = std::decay_t<decltype(decl)>;
          const char* kind = std::is_same_v<T, dsl::GroupDecl> ? "group"
                             : std::is_same_v<T, dsl::GgdDecl>
                                 ? "groupgroupoid"
                             : std::is_same_v<T, dsl::MorphismDecl>
                                 ? "morphism"
                                 : "action";
          slot[&decl] = result.checks.size();
          result.checks.push_back({kind, decl.name, {}});
        },
        d);
  }

  auto report_of = [&](const void* key) -> Report& {
    return result.checks[slot.at(key)].report;
  };

  for (const auto& d : doc.decls)
    if (auto* g = std::get_if<dsl::GroupDecl>(&d)) {
      FiniteGroup built;
      Report r = elaborate_group(*g, built);
      if (r.ok()) result.env.groups.emplace(g->name, std::move(built));
      report_of(g) = std::move(r);
    }
  for (const auto& d : doc.decls)
    if (auto* g = std::get_if<dsl::GgdDecl>(&d)) {
      auto it = result.env.groups.find(g->object_group);
      if (it == result.env.groups.end()) {
        report_of(g).add("InvalidDependency", "group " + g->object_group);
        continue;
      }
      GroupGroupoid built;
      Report r = elaborate_ggd(*g, it->second, built);
      if (r.ok()) result.env.groupoids.emplace(g->name, std::move(built));
      report_of(g) = std::move(r);
    }
  for (const auto& d : doc.decls) {
    if (auto* m = std::get_if<dsl::MorphismDecl>(&d)) {
      auto dom = result.env.groupoids.find(m->domain);
      auto cod = result.env.groupoids.find(m->codomain);
      if (dom == result.env.groupoids.end() ||
          cod == result.env.groupoids.end()) {
        report_of(m).add("InvalidDependency",
                         dom == result.env.groupoids.end() ? m->domain
                                                           : m->codomain);
        continue;
      }
      GGMorphism built;
      Report r = elaborate_morphism(*m, dom->second, cod->second, built);
      if (r.ok()) result.env.morphisms.emplace(m->name, std::move(built));
      report_of(m) = std::move(r);
    }
    if (auto* a = std::get_if<dsl::ActionDecl>(&d)) {
      auto gg = result.env.groupoids.find(a->groupoid);
      auto m = result.env.groups.find(a->group);
      if (gg == result.env.groupoids.end() || m == result.env.groups.end()) {
        report_of(a).add("InvalidDependency",
                         gg == result.env.groupoids.end() ? a->groupoid
                                                          : a->group);
        continue;
      }
      GroupAction built;
      Report r = elaborate_action(*a, gg->second, m->second, built);
      if (r.ok()) result.env.actions.emplace(a->name, std::move(built));
      report_of(a) = std::move(r);
    }
  }
  return result;
}

// ---------------------------------------------------------------------------
// Declaration builders: core values back to canonical document form.
// Used by the constructive CLI subcommands and by the golden-file
// tests.
// ---------------------------------------------------------------------------

inline dsl::GroupDecl group_decl(std::string name, const FiniteGroup& g) {
  return {std::move(name), g.elements(), g.identity(), g.op_table()};
}

inline dsl::GgdDecl ggd_decl(std::string name, std::string object_group_name,
                             const GroupGroupoid& g) {
  dsl::GgdDecl d;
  d.name = std::move(name);
  d.object_group = std::move(object_group_name);
  d.arrows = g.gpd.arrows();
  for (const auto& a : d.arrows) {
    d.src[a] = g.gpd.src(a);
    d.tgt[a] = g.gpd.tgt(a);
  }
  d.compose = g.gpd.comp_table();
  d.add = g.arrow_group.op_table();
  return d;
}

inline dsl::MorphismDecl morphism_decl(std::string name, std::string domain,
                                       std::string codomain,
                                       const GGMorphism& f) {
  return {std::move(name), std::move(domain), std::move(codomain),
          f.object_map, f.arrow_map};
}

inline dsl::ActionDecl action_decl(std::string name, std::string groupoid,
                                   std::string group, const GroupAction& a) {
  return {std::move(name), std::move(groupoid), std::move(group),
          a.anchor.map, a.act};
}

}  // namespace gpd
