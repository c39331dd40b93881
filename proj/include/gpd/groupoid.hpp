#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "gpd/group.hpp"
#include "gpd/report.hpp"

namespace gpd {

/// Raw description of a finite groupoid. comp is a partial table:
/// comp[(b, a)] = b.a, defined exactly when src(b) == tgt(a). Invalid
/// structures are representable on purpose; validate_groupoid is the
/// arbiter.
struct GroupoidTable {
  std::vector<Id> objects;
  std::vector<Id> arrows;
  IdTable src;
  IdTable tgt;
  IdTable ident;  // object -> identity arrow
  IdTable inv;    // arrow -> inverse arrow
  PairTable comp;
};

/// Exhaustive scan of the five groupoid axioms plus table
/// well-formedness. Violation codes: UnknownId, DuplicateId,
/// CompositionDomainMismatch, Axiom1 .. Axiom5.
inline Report validate_groupoid(const GroupoidTable& t) {
  Report report;
  std::set<Id> objects, arrows;
  for (const auto& x : t.objects)
    if (!objects.insert(x).second) report.add("DuplicateId", "object " + x);
  for (const auto& a : t.arrows)
    if (!arrows.insert(a).second) report.add("DuplicateId", "arrow " + a);
  if (objects.empty()) {
    report.add("UnknownId", "empty object set");
    return report;
  }

  bool tables_ok = true;
  auto need = [&](const IdTable& table, const Id& key, const std::set<Id>& range,
                  const char* what) -> const Id* {
    auto it = table.find(key);
    if (it == table.end()) {
      report.add("UnknownId", std::string(what) + " undefined for " + key);
      tables_ok = false;
      return nullptr;
    }
    if (!range.count(it->second)) {
      report.add("UnknownId",
                 std::string(what) + "(" + key + ") = " + it->second);
      tables_ok = false;
      return nullptr;
    }
    return &it->second;
  };
  for (const auto& a : arrows) {
    need(t.src, a, objects, "src");
    need(t.tgt, a, objects, "tgt");
    need(t.inv, a, arrows, "inv");
  }
  for (const auto& x : objects) need(t.ident, x, arrows, "ident");
  if (!tables_ok) return report;

  // comp is defined on exactly the composable pairs.
  auto comp = [&](const Id& b, const Id& a) -> const Id* {
    auto it = t.comp.find({b, a});
    return it == t.comp.end() ? nullptr : &it->second;
  };
  for (const auto& [key, value] : t.comp) {
    const auto& [b, a] = key;
    if (!arrows.count(b) || !arrows.count(a) || !arrows.count(value)) {
      report.add("UnknownId", "comp entry " + detail::tuple({b, a}));
      continue;
    }
    if (t.src.at(b) != t.tgt.at(a))
      report.add("CompositionDomainMismatch",
                 detail::tuple({b, a}) + " not composable");
  }
  for (const auto& b : arrows)
    for (const auto& a : arrows)
      if (t.src.at(b) == t.tgt.at(a) && !comp(b, a))
        report.add("CompositionDomainMismatch",
                   detail::tuple({b, a}) + " undefined");
  if (!report.ok()) return report;

  // (1) source/target of a composite.
  for (const auto& [key, c] : t.comp) {
    const auto& [b, a] = key;
    if (t.src.at(c) != t.src.at(a) || t.tgt.at(c) != t.tgt.at(b))
      report.add("Axiom1", detail::tuple({b, a}));
  }
  // (2) associativity over all composable triples.
  for (const auto& c : arrows)
    for (const auto& b : arrows) {
      if (t.src.at(c) != t.tgt.at(b)) continue;
      for (const auto& a : arrows) {
        if (t.src.at(b) != t.tgt.at(a)) continue;
        const Id* ba = comp(b, a);
        const Id* cb = comp(c, b);
        if (!ba || !cb) continue;
        const Id* left = comp(c, *ba);
        const Id* right = comp(*cb, a);
        if (!left || !right || *left != *right)
          report.add("Axiom2", detail::tuple({c, b, a}));
      }
    }
  // (3) identities are loops.
  for (const auto& x : objects) {
    const Id& u = t.ident.at(x);
    if (t.src.at(u) != x || t.tgt.at(u) != x) report.add("Axiom3", x);
  }
  // (4) identities are units.
  for (const auto& a : arrows) {
    const Id* right = comp(a, t.ident.at(t.src.at(a)));
    const Id* left = comp(t.ident.at(t.tgt.at(a)), a);
    if (!right || *right != a || !left || *left != a)
      report.add("Axiom4", a);
  }
  // (5) inverses.
  for (const auto& a : arrows) {
    const Id& ai = t.inv.at(a);
    if (t.src.at(ai) != t.tgt.at(a) || t.tgt.at(ai) != t.src.at(a)) {
      report.add("Axiom5", a);
      continue;
    }
    const Id* left = comp(ai, a);
    const Id* right = comp(a, ai);
    if (!left || *left != t.ident.at(t.src.at(a)) || !right ||
        *right != t.ident.at(t.tgt.at(a)))
      report.add("Axiom5", a);
  }
  return report;
}

/// A finite groupoid with validated tables. Carriers are stored
/// sorted; all queries are deterministic.
class FiniteGroupoid {
 public:
  FiniteGroupoid() = default;

  const std::vector<Id>& objects() const { return objects_; }
  const std::vector<Id>& arrows() const { return arrows_; }

  bool has_object(const Id& x) const {
    return std::binary_search(objects_.begin(), objects_.end(), x);
  }
  bool has_arrow(const Id& a) const {
    return std::binary_search(arrows_.begin(), arrows_.end(), a);
  }

  const Id& src(const Id& a) const { return at(src_, a); }
  const Id& tgt(const Id& a) const { return at(tgt_, a); }
  const Id& inverse(const Id& a) const { return at(inv_, a); }

  const Id& identity_arrow(const Id& x) const {
    auto it = ident_.find(x);
    if (it == ident_.end()) throw Error("UnknownObject", x);
    return it->second;
  }

  bool composable(const Id& b, const Id& a) const {
    return comp_.count({b, a}) != 0;
  }

  /// b.a ("a, then b"). Throws unless src(b) == tgt(a).
  const Id& compose(const Id& b, const Id& a) const {
    auto it = comp_.find({b, a});
    if (it == comp_.end())
      throw Error("CompositionDomainMismatch", detail::tuple({b, a}));
    return it->second;
  }

  const PairTable& comp_table() const { return comp_; }

  std::vector<Id> star(const Id& x) const {
    require_object(x);
    std::vector<Id> out;
    for (const auto& a : arrows_)
      if (src(a) == x) out.push_back(a);
    return out;
  }

  std::vector<Id> costar(const Id& x) const {
    require_object(x);
    std::vector<Id> out;
    for (const auto& a : arrows_)
      if (tgt(a) == x) out.push_back(a);
    return out;
  }

  std::vector<Id> hom_set(const Id& x, const Id& y) const {
    require_object(x);
    require_object(y);
    std::vector<Id> out;
    for (const auto& a : arrows_)
      if (src(a) == x && tgt(a) == y) out.push_back(a);
    return out;
  }

  /// Loops at x under composition, as a validated FiniteGroup.
  FiniteGroup vertex_group(const Id& x) const {
    GroupTable t;
    t.elements = hom_set(x, x);
    for (const auto& a : t.elements)
      for (const auto& b : t.elements) t.op[{a, b}] = compose(a, b);
    t.identity = identity_arrow(x);
    return build_group(std::move(t));
  }

  /// Partition of objects into transitive components; blocks sorted,
  /// ordered by least object id.
  std::vector<std::vector<Id>> components() const {
    std::map<Id, Id> parent;
    for (const auto& x : objects_) parent[x] = x;
    std::function<Id(const Id&)> find = [&](const Id& x) -> Id {
      return parent[x] == x ? x : parent[x] = find(parent[x]);
    };
    for (const auto& a : arrows_) {
      Id u = find(src(a)), v = find(tgt(a));
      if (u != v) parent[std::max(u, v)] = std::min(u, v);
    }
    std::map<Id, std::vector<Id>> blocks;
    for (const auto& x : objects_) blocks[find(x)].push_back(x);
    std::vector<std::vector<Id>> out;
    for (auto& [root, block] : blocks) out.push_back(std::move(block));
    return out;
  }

  friend bool operator==(const FiniteGroupoid&, const FiniteGroupoid&) = default;

  friend FiniteGroupoid build_groupoid(GroupoidTable t);

 private:
  const Id& at(const IdTable& table, const Id& a) const {
    auto it = table.find(a);
    if (it == table.end()) throw Error("UnknownId", a);
    return it->second;
  }
  void require_object(const Id& x) const {
    if (!has_object(x)) throw Error("UnknownObject", x);
  }

  std::vector<Id> objects_;
  std::vector<Id> arrows_;
  IdTable src_, tgt_, ident_, inv_;
  PairTable comp_;
};

inline FiniteGroupoid build_groupoid(GroupoidTable t) {
  Report report = validate_groupoid(t);
  if (!report.ok()) throw ValidationError("groupoid tables rejected", report);
  FiniteGroupoid g;
  g.objects_ = detail::sorted_unique(t.objects);
  g.arrows_ = detail::sorted_unique(t.arrows);
  g.src_ = std::move(t.src);
  g.tgt_ = std::move(t.tgt);
  g.ident_ = std::move(t.ident);
  g.inv_ = std::move(t.inv);
  g.comp_ = std::move(t.comp);
  return g;
}

/// The groupoid S x S over S: arrow (y, x) runs x -> y, composition
/// (z, y).(y, x) = (z, x), inverse (y, x) -> (x, y).
inline FiniteGroupoid pair_groupoid(std::vector<Id> objects) {
  objects = detail::sorted_unique(objects);
  if (objects.empty()) throw Error("EmptyObjectSet", "pair groupoid");
  GroupoidTable t;
  t.objects = objects;
  for (const auto& y : objects)
    for (const auto& x : objects) {
      Id a = pair_id(y, x);
      t.arrows.push_back(a);
      t.src[a] = x;
      t.tgt[a] = y;
      t.inv[a] = pair_id(x, y);
    }
  for (const auto& x : objects) t.ident[x] = pair_id(x, x);
  for (const auto& z : objects)
    for (const auto& y : objects)
      for (const auto& x : objects)
        t.comp[{pair_id(z, y), pair_id(y, x)}] = pair_id(z, x);
  return build_groupoid(std::move(t));
}

/// A pair of tables (arrow map, object map) between groupoids.
struct GroupoidMorphism {
  FiniteGroupoid domain;
  FiniteGroupoid codomain;
  IdTable object_map;
  IdTable arrow_map;

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

  friend bool operator==(const GroupoidMorphism&, const GroupoidMorphism&) =
      default;
};

/// Checks source/target compatibility and preservation of composition.
/// Identity and inverse preservation follow and are not re-checked
/// here. Throws UnknownId when the maps are not total maps between the
/// carriers.
inline Report check_groupoid_morphism(const GroupoidMorphism& f) {
  for (const auto& x : f.domain.objects())
    if (!f.codomain.has_object(f.on_object(x)))
      throw Error("UnknownId", "object map lands outside codomain at " + x);
  for (const auto& a : f.domain.arrows())
    if (!f.codomain.has_arrow(f.on_arrow(a)))
      throw Error("UnknownId", "arrow map lands outside codomain at " + a);

  Report report;
  for (const auto& a : f.domain.arrows()) {
    if (f.codomain.src(f.on_arrow(a)) != f.on_object(f.domain.src(a)))
      report.add("SourceCompat", a);
    if (f.codomain.tgt(f.on_arrow(a)) != f.on_object(f.domain.tgt(a)))
      report.add("TargetCompat", a);
  }
  for (const auto& [key, c] : f.domain.comp_table()) {
    const auto& [b, a] = key;
    if (!f.codomain.composable(f.on_arrow(b), f.on_arrow(a))) {
      report.add("CompositionPreservation",
                 detail::tuple({b, a}) + " image not composable");
      continue;
    }
    if (f.codomain.compose(f.on_arrow(b), f.on_arrow(a)) != f.on_arrow(c))
      report.add("CompositionPreservation", detail::tuple({b, a}));
  }
  return report;
}

inline GroupoidMorphism identity_groupoid_morphism(const FiniteGroupoid& g) {
  GroupoidMorphism f{g, g, {}, {}};
  for (const auto& x : g.objects()) f.object_map[x] = x;
  for (const auto& a : g.arrows()) f.arrow_map[a] = a;
  return f;
}

/// g after f, tablewise. Throws DomainMismatch unless
/// codomain(f) == domain(g).
inline GroupoidMorphism compose_morphisms(const GroupoidMorphism& g,
                                          const GroupoidMorphism& f) {
  if (!(f.codomain == g.domain))
    throw Error("DomainMismatch", "groupoid morphism composition");
  GroupoidMorphism out{f.domain, g.codomain, {}, {}};
  for (const auto& [x, y] : f.object_map) out.object_map[x] = g.on_object(y);
  for (const auto& [a, b] : f.arrow_map) out.arrow_map[a] = g.on_arrow(b);
  return out;
}

}  // namespace gpd
