#include <catch2/catch_amalgamated.hpp>

#include <string>
#include <vector>

#include "gpd/groupoid.hpp"

#include "support/corpus.hpp"

using namespace gpd;

namespace {

FiniteGroupoid discrete_on(std::vector<Id> objects) {
  GroupoidTable t;
  t.objects = objects;
  for (const auto& x : objects) {
    Id a = "id_" + x;
    t.arrows.push_back(a);
    t.src[a] = x;
    t.tgt[a] = x;
    t.inv[a] = a;
    t.ident[x] = a;
    t.comp[{a, a}] = a;
  }
  return build_groupoid(std::move(t));
}

}  // namespace

TEST_CASE("discrete groupoid on one object is valid") {
  FiniteGroupoid g = discrete_on({"x"});
  REQUIRE(g.arrows() == std::vector<Id>{"id_x"});
  REQUIRE(g.star("x") == std::vector<Id>{"id_x"});
  REQUIRE(g.vertex_group("x").size() == 1);
}

TEST_CASE("pair groupoid on two objects") {
  FiniteGroupoid g = pair_groupoid({"x", "y"});
  REQUIRE(g.arrows().size() == 4);
  REQUIRE(g.compose(pair_id("x", "y"), pair_id("y", "x")) == pair_id("x", "x"));
  REQUIRE(g.star("x") == std::vector<Id>{pair_id("x", "x"), pair_id("y", "x")});
  REQUIRE(g.hom_set("x", "y") == std::vector<Id>{pair_id("y", "x")});
  REQUIRE(g.vertex_group("x").size() == 1);
}

TEST_CASE("self-inverse non-loop breaks axiom 5") {
  // Pair groupoid tables, but (y,x) declared self-inverse.
  FiniteGroupoid good = pair_groupoid({"x", "y"});
  GroupoidTable t;
  t.objects = good.objects();
  t.arrows = good.arrows();
  for (const auto& a : good.arrows()) {
    t.src[a] = good.src(a);
    t.tgt[a] = good.tgt(a);
    t.inv[a] = good.inverse(a);
  }
  for (const auto& x : good.objects()) t.ident[x] = good.identity_arrow(x);
  t.comp = good.comp_table();
  t.inv[pair_id("y", "x")] = pair_id("y", "x");

  Report report = validate_groupoid(t);
  REQUIRE_FALSE(report.ok());
  bool witnessed = false;
  for (const auto& v : report.violations())
    if (v.code == "Axiom5" && v.witness == pair_id("y", "x")) witnessed = true;
  REQUIRE(witnessed);
}

TEST_CASE("missing composable entry is flagged") {
  FiniteGroupoid good = pair_groupoid({"x", "y"});
  GroupoidTable t;
  t.objects = good.objects();
  t.arrows = good.arrows();
  for (const auto& a : good.arrows()) {
    t.src[a] = good.src(a);
    t.tgt[a] = good.tgt(a);
    t.inv[a] = good.inverse(a);
  }
  for (const auto& x : good.objects()) t.ident[x] = good.identity_arrow(x);
  t.comp = good.comp_table();
  t.comp.erase({pair_id("x", "y"), pair_id("y", "x")});
  Report report = validate_groupoid(t);
  REQUIRE_FALSE(report.ok());
  REQUIRE(report.violations().front().code == "CompositionDomainMismatch");
}

TEST_CASE("empty object set is rejected everywhere") {
  REQUIRE_THROWS_AS(pair_groupoid({}), Error);
  GroupoidTable t;
  REQUIRE_FALSE(validate_groupoid(t).ok());
}

TEST_CASE("stars and costars have equal size on every fixture") {
  for (int n = 1; n <= 5; ++n) {
    std::vector<Id> objects;
    for (int i = 0; i < n; ++i) objects.push_back("o" + std::to_string(i));
    FiniteGroupoid g = pair_groupoid(objects);
    for (const auto& x : g.objects())
      REQUIRE(g.star(x).size() == g.costar(x).size());
    REQUIRE(g.components().size() == 1);
    for (const auto& x : g.objects())
      REQUIRE(g.vertex_group(x).size() == 1);
  }
}

TEST_CASE("vertex group with three loops is cyclic of order three") {
  GroupoidTable t;
  t.objects = {"x"};
  t.arrows = {"a", "b", "u"};  // u = identity, b = a.a, a.a.a = u
  for (const auto& a : t.arrows) {
    t.src[a] = "x";
    t.tgt[a] = "x";
  }
  t.ident["x"] = "u";
  t.inv["a"] = "b";
  t.inv["b"] = "a";
  t.inv["u"] = "u";
  t.comp[{"u", "u"}] = "u";
  t.comp[{"u", "a"}] = "a";
  t.comp[{"a", "u"}] = "a";
  t.comp[{"u", "b"}] = "b";
  t.comp[{"b", "u"}] = "b";
  t.comp[{"a", "a"}] = "b";
  t.comp[{"a", "b"}] = "u";
  t.comp[{"b", "a"}] = "u";
  t.comp[{"b", "b"}] = "a";
  FiniteGroupoid g = build_groupoid(std::move(t));
  FiniteGroup v = g.vertex_group("x");
  REQUIRE(v.size() == 3);
  REQUIRE(v.identity() == "u");
  REQUIRE(v.op("a", "a") == "b");
  // Cyclic: a generates everything.
  REQUIRE(v.op("a", v.op("a", "a")) == "u");
}

TEST_CASE("components partition objects by reachability") {
  FiniteGroupoid pair = pair_groupoid({"x", "y"});
  REQUIRE(pair.components() == std::vector<std::vector<Id>>{{"x", "y"}});

  FiniteGroupoid disc = discrete_on({"x", "y"});
  REQUIRE(disc.components() == std::vector<std::vector<Id>>{{"x"}, {"y"}});

  // Disjoint union of a pair groupoid on {x, y} and a point z.
  GroupoidTable t;
  FiniteGroupoid p = pair_groupoid({"x", "y"});
  t.objects = p.objects();
  t.objects.push_back("z");
  t.arrows = p.arrows();
  for (const auto& a : p.arrows()) {
    t.src[a] = p.src(a);
    t.tgt[a] = p.tgt(a);
    t.inv[a] = p.inverse(a);
  }
  for (const auto& x : p.objects()) t.ident[x] = p.identity_arrow(x);
  t.comp = p.comp_table();
  t.arrows.push_back("id_z");
  t.src["id_z"] = "z";
  t.tgt["id_z"] = "z";
  t.inv["id_z"] = "id_z";
  t.ident["z"] = "id_z";
  t.comp[{"id_z", "id_z"}] = "id_z";
  FiniteGroupoid g = build_groupoid(std::move(t));
  REQUIRE(g.components() == std::vector<std::vector<Id>>{{"x", "y"}, {"z"}});
}

TEST_CASE("groupoid morphisms") {
  FiniteGroupoid pair = pair_groupoid({"x", "y"});
  FiniteGroupoid point = discrete_on({"s"});

  SECTION("identity morphism is valid") {
    REQUIRE(check_groupoid_morphism(identity_groupoid_morphism(pair)).ok());
  }
  SECTION("collapse to a point is valid") {
    GroupoidMorphism f{pair, point, {}, {}};
    for (const auto& x : pair.objects()) f.object_map[x] = "s";
    for (const auto& a : pair.arrows()) f.arrow_map[a] = "id_s";
    REQUIRE(check_groupoid_morphism(f).ok());

    SECTION("composition with the identity is the identity law") {
      REQUIRE(compose_morphisms(identity_groupoid_morphism(point), f) == f);
      REQUIRE(compose_morphisms(f, identity_groupoid_morphism(pair)) == f);
    }
  }
  SECTION("arrow swap with identity object map breaks source compatibility") {
    GroupoidMorphism f = identity_groupoid_morphism(pair);
    f.arrow_map[pair_id("y", "x")] = pair_id("x", "y");
    f.arrow_map[pair_id("x", "y")] = pair_id("y", "x");
    Report report = check_groupoid_morphism(f);
    REQUIRE_FALSE(report.ok());
    bool witnessed = false;
    for (const auto& v : report.violations())
      if (v.code == "SourceCompat" && v.witness == pair_id("y", "x"))
        witnessed = true;
    REQUIRE(witnessed);
  }
  SECTION("identity and inverse preservation are consequences") {
    GroupoidMorphism f{pair, point, {}, {}};
    for (const auto& x : pair.objects()) f.object_map[x] = "s";
    for (const auto& a : pair.arrows()) f.arrow_map[a] = "id_s";
    REQUIRE(check_groupoid_morphism(f).ok());
    for (const auto& x : pair.objects())
      REQUIRE(f.on_arrow(pair.identity_arrow(x)) ==
              point.identity_arrow(f.on_object(x)));
    for (const auto& a : pair.arrows())
      REQUIRE(f.on_arrow(pair.inverse(a)) == point.inverse(f.on_arrow(a)));
  }
  SECTION("composition of mismatched morphisms throws") {
    GroupoidMorphism f{pair, point, {}, {}};
    for (const auto& x : pair.objects()) f.object_map[x] = "s";
    for (const auto& a : pair.arrows()) f.arrow_map[a] = "id_s";
    REQUIRE_THROWS_AS(compose_morphisms(f, f), Error);
  }
}

TEST_CASE("star and hom_set reject unknown objects") {
  FiniteGroupoid g = pair_groupoid({"x", "y"});
  REQUIRE_THROWS_AS(g.star("nope"), Error);
  REQUIRE_THROWS_AS(g.hom_set("x", "nope"), Error);
  REQUIRE_THROWS_AS(g.vertex_group("nope"), Error);
}
