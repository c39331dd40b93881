#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "gpd/report.hpp"

namespace gpd {

/// Table keyed by an ordered pair of ids.
using PairTable = std::map<std::pair<Id, Id>, Id>;
/// Table keyed by a single id.
using IdTable = std::map<Id, Id>;

/// Raw description of a finite group: carrier, total operation table
/// and designated identity. Inverses are never supplied; they are
/// derived on construction.
struct GroupTable {
  std::vector<Id> elements;
  PairTable op;
  Id identity;
};

namespace detail {

inline std::vector<Id> sorted_unique(std::vector<Id> ids) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return ids;
}

inline std::string tuple(std::initializer_list<Id> parts) {
  std::string out = "(";
  bool first = true;
  for (const auto& p : parts) {
    if (!first) out += ", ";
    out += p;
    first = false;
  }
  out += ")";
  return out;
}

}  // namespace detail

/// Checks the group axioms exhaustively. The report lists every
/// violation found, not just the first.
inline Report validate_group(const GroupTable& t) {
  Report report;
  std::set<Id> seen;
  for (const auto& e : t.elements) {
    if (!seen.insert(e).second) report.add("DuplicateElement", e);
  }
  const std::vector<Id> carrier(seen.begin(), seen.end());
  if (carrier.empty()) {
    report.add("NoIdentity", "empty carrier");
    return report;
  }
  if (!seen.count(t.identity)) {
    report.add("NoIdentity", t.identity + " not in carrier");
    return report;
  }

  // Totality and closure. Entries keyed outside the carrier are
  // ignored: the table is read as its restriction to the carrier.
  auto lookup = [&](const Id& a, const Id& b) -> const Id* {
    auto it = t.op.find({a, b});
    if (it == t.op.end()) return nullptr;
    return &it->second;
  };
  bool total = true;
  for (const auto& a : carrier) {
    for (const auto& b : carrier) {
      const Id* c = lookup(a, b);
      if (!c) {
        report.add("NotClosed", detail::tuple({a, b}) + " undefined");
        total = false;
      } else if (!seen.count(*c)) {
        report.add("NotClosed", detail::tuple({a, b}) + " -> " + *c);
        total = false;
      }
    }
  }
  if (!total) return report;

  for (const auto& a : carrier) {
    if (*lookup(a, t.identity) != a || *lookup(t.identity, a) != a)
      report.add("NoIdentity", "unit law fails at " + a);
  }
  for (const auto& a : carrier)
    for (const auto& b : carrier)
      for (const auto& c : carrier)
        if (*lookup(*lookup(a, b), c) != *lookup(a, *lookup(b, c)))
          report.add("NotAssociative", detail::tuple({a, b, c}));
  for (const auto& a : carrier) {
    bool found = false;
    for (const auto& b : carrier)
      if (*lookup(a, b) == t.identity && *lookup(b, a) == t.identity)
        found = true;
    if (!found) report.add("NoInverse", a);
  }
  return report;
}

/// A finite group with a validated Cayley table. Immutable; carrier is
/// stored sorted so equal groups compare equal memberwise.
class FiniteGroup {
 public:
  FiniteGroup() = default;

  const std::vector<Id>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool contains(const Id& x) const {
    return std::binary_search(elements_.begin(), elements_.end(), x);
  }
  const Id& identity() const { return identity_; }

  const Id& op(const Id& a, const Id& b) const {
    auto it = op_.find({a, b});
    if (it == op_.end())
      throw Error("UnknownElement", detail::tuple({a, b}));
    return it->second;
  }

  const Id& inverse(const Id& a) const {
    auto it = inverse_.find(a);
    if (it == inverse_.end()) throw Error("UnknownElement", a);
    return it->second;
  }

  const PairTable& op_table() const { return op_; }

  friend bool operator==(const FiniteGroup&, const FiniteGroup&) = default;

  friend FiniteGroup build_group(GroupTable t);

 private:
  std::vector<Id> elements_;
  PairTable op_;
  IdTable inverse_;
  Id identity_;
};

/// Validates and constructs. Throws ValidationError listing every
/// axiom failure on bad input.
inline FiniteGroup build_group(GroupTable t) {
  Report report = validate_group(t);
  if (!report.ok()) throw ValidationError("group table rejected", report);
  FiniteGroup g;
  g.elements_ = detail::sorted_unique(t.elements);
  g.identity_ = t.identity;
  for (const auto& a : g.elements_)
    for (const auto& b : g.elements_) {
      const Id& c = t.op.at({a, b});
      g.op_[{a, b}] = c;
      if (c == t.identity) g.inverse_[a] = b;
    }
  return g;
}

/// Componentwise product; element ids are canonical pairs.
inline FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  GroupTable t;
  for (const auto& x : a.elements())
    for (const auto& y : b.elements()) t.elements.push_back(pair_id(x, y));
  for (const auto& x1 : a.elements())
    for (const auto& y1 : b.elements())
      for (const auto& x2 : a.elements())
        for (const auto& y2 : b.elements())
          t.op[{pair_id(x1, y1), pair_id(x2, y2)}] =
              pair_id(a.op(x1, x2), b.op(y1, y2));
  t.identity = pair_id(a.identity(), b.identity());
  return build_group(std::move(t));
}

/// True iff the subset is a subgroup closed under conjugation by every
/// group element.
inline bool is_normal(const FiniteGroup& g, const std::vector<Id>& subset) {
  std::set<Id> s;
  for (const auto& x : subset) {
    if (!g.contains(x)) throw Error("UnknownElement", x);
    s.insert(x);
  }
  if (!s.count(g.identity())) return false;
  for (const auto& x : s) {
    if (!s.count(g.inverse(x))) return false;
    for (const auto& y : s)
      if (!s.count(g.op(x, y))) return false;
  }
  for (const auto& x : g.elements())
    for (const auto& n : s)
      if (!s.count(g.op(g.op(x, n), g.inverse(x)))) return false;
  return true;
}

/// A map between finite groups, given by a total table on the domain
/// carrier.
struct GroupHom {
  FiniteGroup domain;
  FiniteGroup codomain;
  IdTable map;

  const Id& apply(const Id& x) const {
    auto it = map.find(x);
    if (it == map.end()) throw Error("UnknownElement", x);
    return it->second;
  }

  friend bool operator==(const GroupHom&, const GroupHom&) = default;
};

/// Reports every pair (x, y) with f(x + y) != f(x) + f(y). Throws
/// DomainMismatch when the table is not a total map into the codomain.
inline Report check_hom(const GroupHom& f) {
  for (const auto& [x, y] : f.map) {
    if (!f.domain.contains(x))
      throw Error("DomainMismatch", x + " not in domain");
    if (!f.codomain.contains(y))
      throw Error("DomainMismatch", y + " not in codomain");
  }
  for (const auto& x : f.domain.elements())
    if (!f.map.count(x)) throw Error("DomainMismatch", "map undefined at " + x);

  Report report;
  for (const auto& x : f.domain.elements())
    for (const auto& y : f.domain.elements())
      if (f.apply(f.domain.op(x, y)) !=
          f.codomain.op(f.apply(x), f.apply(y)))
        report.add("NotHomomorphism", detail::tuple({x, y}));
  return report;
}

inline GroupHom identity_hom(const FiniteGroup& g) {
  GroupHom f{g, g, {}};
  for (const auto& x : g.elements()) f.map[x] = x;
  return f;
}

/// g after f. Throws DomainMismatch unless codomain(f) == domain(g).
inline GroupHom compose_homs(const GroupHom& g, const GroupHom& f) {
  if (!(f.codomain == g.domain))
    throw Error("DomainMismatch", "hom composition carriers differ");
  GroupHom out{f.domain, g.codomain, {}};
  for (const auto& [x, y] : f.map) out.map[x] = g.apply(y);
  return out;
}

}  // namespace gpd
