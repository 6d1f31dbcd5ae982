// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "mutations.hpp"
#include "oracle.hpp"
#include "regmis/gadget.hpp"
#include "regmis/graph_io.hpp"
#include "regmis/regularizer.hpp"
#include "regmis/solver.hpp"
#include "regmis/verifier.hpp"

using namespace regmis;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream detail;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail << "[violated: " << what << "] ";
    }
  }
};

using Criterion = std::function<void(Outcome&)>;

Graph k4_minus_edge() {
  const std::vector<Edge> edges{{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  return graph_from_edges(4, edges);
}

bool is_regular(const Graph& g, std::size_t d) {
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) != d) return false;
  }
  return true;
}

IndependentSet greedy_maximal(const Graph& g, std::mt19937_64& rng) {
  std::vector<Vertex> order(g.vertex_count());
  for (Vertex v = 0; v < order.size(); ++v) order[v] = v;
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<bool> blocked(g.vertex_count(), false);
  std::vector<Vertex> members;
  for (Vertex v : order) {
    if (blocked[v]) continue;
    members.push_back(v);
    blocked[v] = true;
    for (Vertex w : g.neighbors(v)) blocked[w] = true;
  }
  return IndependentSet(std::move(members));
}

void gadget_structure(Outcome& o) {
  for (int d : {3, 5, 7}) {
    const auto g = build_general_gadget(d);
    const auto n = static_cast<std::size_t>((d - 1) * (d - 1) + d);
    std::size_t low = 0;
    std::size_t full = 0;
    for (Vertex v = 0; v < g.graph.vertex_count(); ++v) {
      if (g.graph.degree(v) == static_cast<std::size_t>(d - 1)) ++low;
      if (g.graph.degree(v) == static_cast<std::size_t>(d)) ++full;
    }
    o.expect(g.graph.vertex_count() == n, "vertex count at degree " + std::to_string(d));
    o.expect(low == 1 && full == n - 1, "degree profile at degree " + std::to_string(d));
    o.expect(g.layout.port && g.graph.degree(*g.layout.port) == static_cast<std::size_t>(d - 1),
             "port is the low-degree vertex");
    o.detail << "D=" << d << ": n=" << g.graph.vertex_count() << ", one vertex of degree " << d - 1 << "; ";
  }
}

void gadget_constant(Outcome& o) {
  int enumerated = 0;
  oracle::maximum_sets(build_general_gadget(3).graph, &enumerated);
  const auto a3 = gadget_alpha(3);
  const auto a5 = gadget_alpha(5);
  const auto bf5 = mis_bruteforce(build_general_gadget(5).graph).alpha;
  o.expect(enumerated == 3 && a3 == 3, "alpha at degree 3 is 3");
  o.expect(a5 == 10 && bf5 == 10, "alpha at degree 5 is 10");
  for (int d : {3, 5}) {
    const auto alpha = gadget_alpha(d);
    const auto printed = gadget_clique_cover_bound(d);
    o.expect(alpha == d * (d - 1) / 2, "alpha equals D(D-1)/2");
    o.expect(printed != alpha, "closed form (D-1)^2/2 + D - 1 differs from the oracle");
    o.detail << "D=" << d << ": oracle alpha=" << alpha << " = D(D-1)/2, closed form (D-1)^2/2+D-1=" << printed
             << " DISAGREES; ";
  }
}

void port_exclusion(Outcome& o) {
  const auto g5 = build_general_gadget(5);
  const auto g3 = build_general_gadget(3);
  const auto gp = build_planar_gadget();
  const auto p5 = port_profile(g5.graph, *g5.layout.port);
  const auto p3 = port_profile(g3.graph, *g3.layout.port);
  const auto pp = port_profile(gp.graph, *gp.layout.port);
  o.expect(p5.alpha == 10 && p5.with_port == 9, "degree 5: 10 vs 9");
  o.expect(pp.alpha == 8 && pp.with_port == 7, "planar: 8 vs 7");
  o.expect(p3.alpha == 3 && p3.with_port == 3, "degree 3: tie 3 vs 3");
  o.expect(oracle::alpha_through(g5.graph, *g5.layout.port) == 9, "subset oracle agrees at degree 5");
  o.expect(oracle::alpha_through(g3.graph, *g3.layout.port) == 3, "subset oracle agrees at degree 3");
  o.detail << "D=5 " << p5.alpha << " vs " << p5.with_port << "; planar " << pp.alpha << " vs " << pp.with_port
           << "; D=3 " << p3.alpha << " vs " << p3.with_port << " (tie)";
}

void icosahedron(Outcome& o) {
  const auto x = build_icosa_gadget();
  int alpha = 0;
  const auto sets = oracle::maximum_sets(x.graph, &alpha);
  const std::uint64_t abkf = (1u << 0) | (1u << 1) | (1u << 10) | (1u << 5);
  o.expect(x.graph.vertex_count() == 12 && x.graph.edge_count() == 29, "12 vertices, 29 edges");
  o.expect(alpha == 4, "alpha is 4");
  o.expect(sets.size() == 1 && sets[0] == abkf, "unique maximum set {a,b,k,f}");
  o.detail << "alpha=" << alpha << ", " << sets.size() << " maximum set(s) among 4096 subsets, witness {a,b,k,f}";
}

void offset_relation(Outcome& o) {
  const auto k4e = regularize(k4_minus_edge(), 3);
  const auto k1 = regularize(empty_graph(1), 3);
  const int a_k4e = oracle::alpha(k4e.graph);
  const int a_k1 = oracle::alpha(k1.graph);
  o.expect(k4e.graph.vertex_count() == 18 && a_k4e == 8 && k4e.certificate.total_offset == 6, "K4-e: 8 = 2 + 6");
  o.expect(k1.graph.vertex_count() == 22 && a_k1 == 10 && k1.certificate.total_offset == 9, "K1: 10 = 1 + 9");

  std::mt19937_64 rng(515);
  int agreed = 0;
  std::size_t largest = 0;
  for (int t = 0; t < 120; ++t) {
    const std::size_t n = 1 + rng() % 12;
    const auto g = oracle::random_bounded_degree_graph(rng, n, 3, 0.2 + 0.1 * (t % 6));
    const auto r = reduce_to_regular(g, 3);
    largest = std::max(largest, r.graph.vertex_count());
    const auto lhs = static_cast<std::int64_t>(mis_branch_bound(r.graph).alpha);
    const auto rhs = oracle::alpha(g) + r.certificate.total_offset;
    if (lhs == rhs) ++agreed;
  }
  o.expect(agreed == 120, "random instances");
  o.detail << "K4-e: alpha(G')=" << a_k4e << " on 18 vertices; K1: alpha(G')=" << a_k1 << " on 22 vertices; "
           << agreed << "/120 random graphs agree (largest G' " << largest << " vertices)";
}

void sandwich(Outcome& o) {
  const auto g = complete_graph(4);
  const auto r = regularize_planar(g);
  const IndependentSet i{0};
  const auto image = forward_map(g, i, r.certificate);
  const auto c = check_sandwich(g, r.graph, r.certificate, i);
  o.expect(r.graph.vertex_count() == 204 && is_regular(r.graph, 5), "204 vertices, 5-regular");
  o.expect(is_independent_set(r.graph, image), "forward witness independent");
  o.expect(image.size() == 65, "forward witness has 65 vertices");
  o.expect(c.status == CheckStatus::Pass, "sandwich check passes");
  o.detail << "n'=" << r.graph.vertex_count() << ", |forward witness|=" << image.size() << ", " << c.detail;
}

void round_trip(Outcome& o) {
  std::mt19937_64 rng(77);
  std::vector<std::pair<Graph, Reduction>> instances;
  instances.emplace_back(k4_minus_edge(), regularize(k4_minus_edge(), 3));
  instances.emplace_back(empty_graph(1), regularize(empty_graph(1), 3));
  instances.emplace_back(complete_graph(4), regularize_planar(complete_graph(4)));
  instances.emplace_back(cycle_graph(5), reduce_to_regular(cycle_graph(5), 3));
  for (int t = 0; t < 40; ++t) {
    auto g = oracle::random_bounded_degree_graph(rng, 1 + rng() % 10, 4, 0.4);
    auto r = reduce_to_regular(g, 5);
    instances.emplace_back(std::move(g), std::move(r));
  }
  std::size_t identities = 0;
  std::size_t bounds = 0;
  std::size_t total_bounds = 0;
  for (const auto& [g, r] : instances) {
    const auto i = greedy_maximal(g, rng);
    if (recover(r.graph, forward_map(g, i, r.certificate), r.certificate) == i) ++identities;
    std::vector<IndependentSet> candidates{greedy_maximal(r.graph, rng), greedy_maximal(r.graph, rng),
                                           forward_map(g, i, r.certificate)};
    if (r.graph.vertex_count() <= 60) candidates.push_back(solve_mis(r.graph).witness);
    for (const auto& ip : candidates) {
      ++total_bounds;
      const auto rec = recover(r.graph, ip, r.certificate);
      const bool ok = is_independent_set(g, rec) &&
                      static_cast<std::int64_t>(rec.size()) >=
                          static_cast<std::int64_t>(ip.size()) - r.certificate.total_offset;
      if (ok) ++bounds;
    }
  }
  o.expect(identities == instances.size(), "recover(forward_map(I)) = I");
  o.expect(bounds == total_bounds, "|recover(I')| >= |I'| - offset");
  o.detail << identities << "/" << instances.size() << " identities, " << bounds << "/" << total_bounds
           << " recovery bounds";
}

void triangle_preservation(Outcome& o) {
  std::mt19937_64 rng(808);
  int agreed = 0;
  for (int t = 0; t < 100; ++t) {
    const int d = t % 2 == 0 ? 3 : 5;
    const auto g = oracle::random_bounded_degree_graph(rng, 3 + rng() % 20, static_cast<std::size_t>(d), 0.5);
    const auto r = regularize(g, d);
    bool same = triangle_count(g) == triangle_count(r.graph);
    for (int k : {3, 4}) same = same && has_clique_k(g, k).has_value() == has_clique_k(r.graph, k).has_value();
    if (same) ++agreed;
  }
  o.expect(agreed == 100, "triangle counts and clique answers agree");
  o.detail << agreed << "/100 random inputs agree on triangle count and K3/K4 detection";
}

void padding(Outcome& o) {
  std::mt19937_64 rng(99);
  int parity_cases = 0;
  int pad_cases = 0;
  for (int t = 0; t < 200 && (parity_cases < 40 || pad_cases < 40); ++t) {
    const std::size_t n = 2 + rng() % 9;
    const auto g = oracle::random_graph(rng, n, 0.2 + 0.1 * (t % 5));
    const auto delta = g.max_degree();
    if (delta > 0 && delta % 2 == 0) {
      const auto p = ensure_odd_delta(g);
      const bool shape = p.step && p.step->kind == ReductionStep::Kind::ParityFix && p.step->size == delta + 2 &&
                         p.step->alpha_offset == 1 && p.graph.vertex_count() == n + delta + 2 &&
                         p.graph == disjoint_union(g, complete_graph(delta + 2));
      o.expect(shape, "parity fix adds one K_{D+2}");
      o.expect(oracle::alpha(p.graph) == oracle::alpha(g) + 1, "parity fix offset 1");
      ++parity_cases;
    }
    const int d = static_cast<int>(delta) + 1 + static_cast<int>(rng() % 4);
    const auto p = pad_to_target(g, d);
    o.expect(p.step && p.step->alpha_offset == d && p.graph.max_degree() == static_cast<std::size_t>(d),
             "star pad raises the maximum degree");
    o.expect(oracle::alpha(p.graph) == oracle::alpha(g) + d, "star pad offset d");
    ++pad_cases;
  }
  o.detail << parity_cases << " parity fixes and " << pad_cases << " star pads confirmed by subset enumeration";
}

void mutation_kill(Outcome& o) {
  const auto cases = mutation::suite();
  std::size_t killed = 0;
  for (const auto& mc : cases) {
    const auto c = mc.run();
    if (c.name == mc.target && c.status == CheckStatus::Fail) {
      ++killed;
    } else {
      o.detail << "survivor: " << mc.name << " (" << mc.target << "); ";
    }
  }
  o.expect(killed == cases.size(), "every mutation killed");
  o.detail << killed << "/" << cases.size() << " mutations killed";
}

void solver_cross_validation(Outcome& o) {
  std::mt19937_64 rng(2025);
  int agreed = 0;
  for (int t = 0; t < 500; ++t) {
    const auto g = oracle::random_graph(rng, 1 + rng() % 18, 0.05 + 0.9 * static_cast<double>(t % 10) / 9.0);
    const auto bb = mis_branch_bound(g);
    if (bb.alpha == mis_bruteforce(g).alpha && is_independent_set(g, bb.witness) && bb.witness.size() == bb.alpha) {
      ++agreed;
    }
  }
  o.expect(agreed == 500, "branch and bound equals brute force");
  o.detail << agreed << "/500 random graphs agree";
}

}  // namespace

int main() {
  struct Entry {
    int id;
    const char* name;
    double limit_seconds;
    Criterion run;
  };
  const std::vector<Entry> criteria{
      {1, "gadget structure", 1, gadget_structure},
      {2, "gadget independence constant", 10, gadget_constant},
      {3, "port exclusion", 30, port_exclusion},
      {4, "icosahedron gadget", 1, icosahedron},
      {5, "offset relation", 300, offset_relation},
      {6, "sandwich certification", 1, sandwich},
      {7, "round trip", 1, round_trip},
      {8, "triangle and clique preservation", 60, triangle_preservation},
      {9, "parity and star padding", 10, padding},
      {10, "mutation detection", 60, mutation_kill},
      {11, "solver cross-validation", 300, solver_cross_validation},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail << "exception: " << e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs <= c.limit_seconds;
    const bool ok = o.ok && in_time;
    if (!ok) ++failures;
    std::printf("%s criterion %2d (%s): %s [%.3fs of %.0fs%s]\n", ok ? "PASS" : "FAIL", c.id, c.name,
                o.detail.str().c_str(), secs, c.limit_seconds, in_time ? "" : ", over time");
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
