#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gpd/action.hpp"
#include "gpd/covering.hpp"
#include "gpd/group_groupoid.hpp"
#include "gpd/report.hpp"

namespace gpd {

/// A morphism in the category of coverings of a fixed base: a
/// group-groupoid morphism r between the total spaces with p = q o r.
struct CoveringMorphism {
  Covering from;  // p : H -> G
  Covering to;    // q : K -> G
  GGMorphism r;   // H -> K

  friend bool operator==(const CoveringMorphism&, const CoveringMorphism&) =
      default;
};

inline CoveringMorphism identity_covering_morphism(const Covering& c) {
  return {c, c, identity_gg_morphism(c.total())};
}

inline CoveringMorphism compose_covering_morphisms(const CoveringMorphism& g,
                                                   const CoveringMorphism& f) {
  if (!(f.to == g.from))
    throw Error("DomainMismatch", "covering morphism composition");
  return {f.from, g.to, compose_gg_morphisms(g.r, f.r)};
}

/// The functor from actions to coverings, on morphisms: an action
/// morphism f induces r(a, x) = (a, f(x)) between the action
/// groupoids, with r0 = f. The triangle p = q o r and the morphism
/// conditions are verified before returning.
inline CoveringMorphism gamma_on_morphism(const ActionMorphism& f) {
  if (!check_action_morphism(f).ok())
    throw Error("InvalidActionMorphism", "gamma applied to a non-morphism");
  CoveringMorphism out{covering_from_action(f.from),
                       covering_from_action(f.to),
                       {}};
  out.r.domain = out.from.total();
  out.r.codomain = out.to.total();
  out.r.object_map = f.f.map;
  for (const auto& [key, value] : f.from.act)
    out.r.arrow_map[pair_id(key.first, key.second)] =
        pair_id(key.first, f.f.apply(key.second));
  if (!check_gg_morphism(out.r).ok())
    throw Error("InternalContradiction", "gamma image is not a morphism");
  if (!(compose_gg_morphisms(out.to.p, out.r) == out.from.p))
    throw Error("InternalContradiction", "gamma image breaks the triangle");
  return out;
}

/// The functor from coverings to actions, on morphisms: restriction
/// to objects. Throws TriangleFails when p != q o r; equivariance of
/// the restriction then holds and is verified.
inline ActionMorphism phi_on_morphism(const CoveringMorphism& m) {
  if (!(compose_gg_morphisms(m.to.p, m.r) == m.from.p))
    throw Error("TriangleFails", "p != q o r");
  ActionMorphism out{action_from_covering(m.from), action_from_covering(m.to),
                     {}};
  out.f = {out.from.m, out.to.m, m.r.object_map};
  if (!check_action_morphism(out).ok())
    throw Error("InternalContradiction",
                "object restriction is not an action morphism");
  return out;
}

/// The comparison isomorphism from a covering's total space to the
/// action groupoid it induces: identity on objects, h -> (p(h),
/// src(h)) on arrows. Verified to be an isomorphism of
/// group-groupoids commuting with the two projections.
inline GGMorphism natural_T(const Covering& c) {
  Covering rebuilt = covering_from_action(action_from_covering(c));
  GGMorphism t{c.total(), rebuilt.total(), {}, {}};
  for (const auto& x : c.total().gpd.objects()) t.object_map[x] = x;
  for (const auto& h : c.total().gpd.arrows())
    t.arrow_map[h] = pair_id(c.p.on_arrow(h), c.total().gpd.src(h));

  if (!check_gg_morphism(t).ok())
    throw Error("InternalContradiction", "comparison map is not a morphism");
  std::set<Id> image;
  for (const auto& [h, w] : t.arrow_map) image.insert(w);
  if (image.size() != rebuilt.total().gpd.arrows().size())
    throw Error("InternalContradiction", "comparison map is not a bijection");
  if (!(compose_gg_morphisms(rebuilt.p, t) == c.p))
    throw Error("InternalContradiction",
                "comparison map breaks the projection triangle");
  return t;
}

/// Naturality of the comparison isomorphism: for a covering morphism
/// r the square T_q o r = GammaPhi(r) o T_p commutes tablewise.
inline bool naturality_square_commutes(const CoveringMorphism& m) {
  GGMorphism left = compose_gg_morphisms(natural_T(m.to), m.r);
  CoveringMorphism induced = gamma_on_morphism(phi_on_morphism(m));
  GGMorphism right = compose_gg_morphisms(induced.r, natural_T(m.from));
  return left == right;
}

/// One round-trip verdict for a corpus instance.
struct RoundtripEntry {
  std::string name;
  std::string check;
  bool pass = false;
  std::string detail;
};

struct Corpus {
  std::vector<std::pair<std::string, GroupAction>> actions;
  std::vector<std::pair<std::string, GGMorphism>> coverings;
};

/// Runs both round-trips over a corpus: for every action A, the
/// induced covering is validated and PhiGamma(A) must equal A
/// componentwise; for every covering p, the comparison map must be an
/// isomorphism over the base. Invalid instances are reported as such
/// and skipped. Entry order follows corpus order.
inline std::vector<RoundtripEntry> roundtrip_report(const Corpus& corpus) {
  std::vector<RoundtripEntry> out;
  auto check_t = [&](const std::string& name, const Covering& c) {
    RoundtripEntry entry{name, std::string("Γ∘Φ ≅ id via T′"), false, ""};
    try {
      natural_T(c);
      entry.pass = true;
    } catch (const Error& e) {
      entry.detail = e.what();
    }
    out.push_back(entry);
  };

  for (const auto& [name, action] : corpus.actions) {
    Report valid = check_action(action);
    if (!valid.ok()) {
      out.push_back({name, "check_action", false,
                     valid.violations().front().code + " " +
                         valid.violations().front().witness});
      continue;
    }
    Covering c = covering_from_action(action);
    GroupAction back = action_from_covering(c);
    out.push_back({name, "Φ∘Γ = id", back == action,
                   back == action ? "" : "recovered action differs"});
    check_t(name, c);
  }
  for (const auto& [name, p] : corpus.coverings) {
    Report valid;
    try {
      valid = check_covering(p);
    } catch (const Error& e) {
      out.push_back({name, "check_covering", false, e.what()});
      continue;
    }
    if (!valid.ok()) {
      out.push_back({name, "check_covering", false,
                     valid.violations().front().code + " " +
                         valid.violations().front().witness});
      continue;
    }
    check_t(name, make_covering(p));
  }
  return out;
}

}  // namespace gpd
