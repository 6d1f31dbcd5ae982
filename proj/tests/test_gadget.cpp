#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracle.hpp"
#include "regmis/errors.hpp"
#include "regmis/gadget.hpp"
#include "regmis/solver.hpp"

using namespace regmis;

TEST_CASE("general gadget degrees") {
  for (int d : {3, 5, 7, 9}) {
    auto g = build_general_gadget(d);
    const auto n = static_cast<std::size_t>((d - 1) * (d - 1) + d);
    REQUIRE(g.graph.vertex_count() == n);
    REQUIRE(g.layout.port.has_value());
    for (Vertex v = 0; v < n; ++v) {
      CHECK(g.graph.degree(v) == static_cast<std::size_t>(v == *g.layout.port ? d - 1 : d));
    }
    CHECK(triangle_count(g.graph) == 0);
    CHECK(g.layout.roles.size() == n);
    CHECK(g.layout.roles[*g.layout.port].to_string() == "h");
  }
}

TEST_CASE("even or small degrees are rejected") {
  for (int d : {-1, 0, 1, 2, 4, 6}) CHECK_THROWS_AS(build_general_gadget(d), InputError);
}

TEST_CASE("degree-3 gadget roles") {
  auto g = build_general_gadget(3);
  std::vector<std::string> roles;
  for (const auto& r : g.layout.roles) roles.push_back(r.to_string());
  CHECK(roles == std::vector<std::string>{"A1", "A1", "B1", "B1", "a1", "b1", "h"});
}

TEST_CASE("gadget independence number against the subset oracle") {
  int a3 = 0;
  oracle::maximum_sets(build_general_gadget(3).graph, &a3);
  CHECK(a3 == 3);
  CHECK(gadget_alpha(3) == 3);
  CHECK(oracle::alpha(build_general_gadget(5).graph) == 10);
  CHECK(gadget_alpha(5) == 10);
  CHECK(gadget_alpha(7) == 21);
  for (int d : {3, 5, 7}) CHECK(gadget_alpha(d) == d * (d - 1) / 2);
}

TEST_CASE("layout witness is a maximum independent set") {
  for (int d : {3, 5, 7}) {
    auto g = build_general_gadget(d);
    IndependentSet w(g.layout.witness);
    CHECK(is_independent_set(g.graph, w));
    CHECK(static_cast<std::int64_t>(w.size()) == g.layout.internal_alpha);
    CHECK_FALSE(w.contains(*g.layout.port));
  }
}

TEST_CASE("clique cover bound is valid but not tight") {
  for (int d : {3, 5, 7}) {
    CHECK(gadget_clique_cover_bound(d) >= gadget_alpha(d));
    CHECK(gadget_clique_cover_bound(d) != gadget_alpha(d));
  }
}

TEST_CASE("port profiles") {
  auto g3 = build_general_gadget(3);
  auto p3 = port_profile(g3.graph, *g3.layout.port);
  CHECK(p3.alpha == 3);
  CHECK(p3.with_port == 3);
  CHECK(p3.with_port == oracle::alpha_through(g3.graph, *g3.layout.port));
  CHECK(p3.without_port == 3);

  auto g5 = build_general_gadget(5);
  auto p5 = port_profile(g5.graph, *g5.layout.port);
  CHECK(p5.alpha == 10);
  CHECK(p5.with_port == 9);
  CHECK(p5.with_port == oracle::alpha_through(g5.graph, *g5.layout.port));
  CHECK(p5.without_port == 10);

  auto gp = build_planar_gadget();
  auto pp = port_profile(gp.graph, *gp.layout.port);
  CHECK(pp.alpha == 8);
  CHECK(pp.with_port == 7);
  CHECK(pp.without_port == 8);
}

TEST_CASE("icosahedron gadget") {
  auto x = build_icosa_gadget();
  CHECK(x.graph.vertex_count() == 12);
  CHECK(x.graph.edge_count() == 29);
  CHECK_FALSE(x.layout.port.has_value());
  CHECK(x.graph.degree(0) == 4);
  CHECK(x.graph.degree(1) == 4);
  for (Vertex v = 2; v < 12; ++v) CHECK(x.graph.degree(v) == 5);
  CHECK_FALSE(x.graph.has_edge(0, 1));
  CHECK(triangle_count(x.graph) > 0);
  int alpha = 0;
  auto sets = oracle::maximum_sets(x.graph, &alpha);
  CHECK(alpha == 4);
  REQUIRE(sets.size() == 1);
  // a, b, f, k
  CHECK(sets[0] == ((1u << 0) | (1u << 1) | (1u << 5) | (1u << 10)));
  CHECK(x.layout.internal_alpha == 4);
}

TEST_CASE("planar gadget") {
  auto p = build_planar_gadget();
  REQUIRE(p.graph.vertex_count() == 25);
  const Vertex h = *p.layout.port;
  CHECK(h == 24);
  CHECK(p.graph.degree(h) == 4);
  for (Vertex v = 0; v < 24; ++v) CHECK(p.graph.degree(v) == 5);
  CHECK(p.graph.edge_count() <= 3 * 25 - 6);
  CHECK(p.layout.internal_alpha == 8);
  CHECK(p.layout.roles[0].to_string() == "X1.a");
  CHECK(p.layout.roles[12].to_string() == "X2.a");
  CHECK(is_independent_set(p.graph, IndependentSet(p.layout.witness)));
}

TEST_CASE("blueprints are deterministic") {
  for (auto kind : {GadgetKind::GeneralOdd, GadgetKind::Icosahedron, GadgetKind::Planar5}) {
    auto a = gadget_blueprint(kind, 5);
    auto b = gadget_blueprint(kind, 5);
    CHECK(a.graph == b.graph);
    CHECK(a.roles == b.roles);
    CHECK(a.witness == b.witness);
  }
}

TEST_CASE("kind names round trip") {
  for (auto kind : {GadgetKind::GeneralOdd, GadgetKind::Icosahedron, GadgetKind::Planar5}) {
    CHECK(parse_gadget_kind(gadget_kind_name(kind)) == kind);
  }
  CHECK(parse_gadget_kind("planar") == GadgetKind::Planar5);
  CHECK_THROWS_AS(parse_gadget_kind("tree"), InputError);
}
