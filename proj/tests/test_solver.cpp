#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <random>

#include "oracle.hpp"
#include "regmis/errors.hpp"
#include "regmis/gadget.hpp"
#include "regmis/reductions.hpp"
#include "regmis/solver.hpp"

using namespace regmis;

namespace {

void check_sound(const Graph& g, const std::function<void(ReductionKernel&)>& apply) {
  ReductionKernel k(g);
  apply(k);
  const auto r = k.residual();
  const auto expected = oracle::alpha(g);
  CHECK(k.offset() + oracle::weighted_alpha(r.graph, r.weights) == expected);
  const auto lifted = k.lift(oracle::best_weighted_set(r.graph, r.weights));
  CHECK(is_independent_set(g, lifted));
  CHECK(static_cast<int>(lifted.size()) == expected);
}

}  // namespace

TEST_CASE("small known independence numbers") {
  CHECK(solve_mis(empty_graph(0)).alpha == 0);
  CHECK(solve_mis(empty_graph(4)).alpha == 4);
  CHECK(solve_mis(complete_graph(6)).alpha == 1);
  CHECK(solve_mis(cycle_graph(7)).alpha == 3);
  CHECK(solve_mis(path_graph(5)).alpha == 3);
  CHECK(solve_mis(disjoint_union(cycle_graph(5), complete_graph(4))).alpha == 3);
  CHECK(mis_branch_bound(complete_bipartite_graph(4, 6)).alpha == 6);
}

TEST_CASE("each reduction rule alone is exact") {
  std::mt19937_64 rng(101);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 2 + rng() % 11;
    auto g = oracle::random_graph(rng, n, 0.15 + 0.1 * (t % 5));
    check_sound(g, [](ReductionKernel& k) { while (k.isolated_rule()) {} });
    check_sound(g, [](ReductionKernel& k) { while (k.degree_one_rule()) {} });
    check_sound(g, [](ReductionKernel& k) { while (k.fold_rule()) {} });
    check_sound(g, [](ReductionKernel& k) { while (k.twin_rule()) {} });
    check_sound(g, [](ReductionKernel& k) { while (k.dominance_rule()) {} });
    check_sound(g, [](ReductionKernel& k) { k.reduce(); });
  }
}

TEST_CASE("rules stay exact after branching decisions") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 100; ++t) {
    auto g = oracle::random_graph(rng, 10, 0.35);
    ReductionKernel k(g);
    k.reduce();
    if (k.active_count() == 0) continue;
    const auto v = k.branching_vertex();
    ReductionKernel with_v = k;
    with_v.take(v);
    with_v.reduce();
    k.discard(v);
    k.reduce();
    const auto r1 = with_v.residual();
    const auto r2 = k.residual();
    const auto best = std::max(with_v.offset() + oracle::weighted_alpha(r1.graph, r1.weights),
                               k.offset() + oracle::weighted_alpha(r2.graph, r2.weights));
    CHECK(best == oracle::alpha(g));
  }
}

TEST_CASE("clique cover bound is an upper bound") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 100; ++t) {
    auto g = oracle::random_graph(rng, 12, 0.3);
    ReductionKernel k(g);
    CHECK(k.clique_cover_bound() >= oracle::alpha(g));
  }
}

TEST_CASE("twin collapse shrinks the degree-5 gadget") {
  ReductionKernel k(build_general_gadget(5).graph);
  k.reduce();
  CHECK(k.active_count() <= 9);
  const auto r = k.residual();
  CHECK(k.offset() + oracle::weighted_alpha(r.graph, r.weights) == 10);
}

TEST_CASE("branch and bound agrees with brute force on random graphs") {
  std::mt19937_64 rng(2024);
  for (int t = 0; t < 500; ++t) {
    const std::size_t n = 1 + rng() % 18;
    auto g = oracle::random_graph(rng, n, 0.1 + 0.8 * static_cast<double>(t % 9) / 8.0);
    const auto bf = mis_bruteforce(g);
    const auto bb = mis_branch_bound(g);
    REQUIRE(bf.alpha == bb.alpha);
    CHECK(is_independent_set(g, bb.witness));
    CHECK(bb.witness.size() == bb.alpha);
    CHECK(bf.method == SolveMethod::BruteForce);
    CHECK(bb.method == SolveMethod::BranchBound);
  }
}

TEST_CASE("brute force matches the subset oracle") {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 100; ++t) {
    auto g = oracle::random_graph(rng, 1 + rng() % 14, 0.4);
    CHECK(static_cast<int>(mis_bruteforce(g).alpha) == oracle::alpha(g));
  }
}

TEST_CASE("brute force refuses graphs above its limit") {
  SolverLimits limits;
  limits.max_brute_n = 10;
  CHECK_THROWS_AS(mis_bruteforce(empty_graph(11), limits), ResourceLimitError);
  CHECK(solve_mis(empty_graph(11), limits).method == SolveMethod::BranchBound);
}

TEST_CASE("node budget exhaustion reports a lower bound") {
  std::mt19937_64 rng(1);
  auto g = oracle::random_graph(rng, 60, 0.15);
  SolverLimits limits;
  limits.node_budget = 3;
  try {
    mis_branch_bound(g, limits);
    FAIL("expected budget exhaustion");
  } catch (const ResourceLimitError& e) {
    CHECK(e.lower_bound() <= 60);
  }
}

TEST_CASE("invalid limits are input errors") {
  SolverLimits limits;
  limits.node_budget = 0;
  CHECK_THROWS_AS(solve_mis(path_graph(3), limits), InputError);
}

TEST_CASE("vertex cover is the complement of a maximum independent set") {
  std::mt19937_64 rng(77);
  for (int t = 0; t < 50; ++t) {
    auto g = oracle::random_graph(rng, 12, 0.3);
    auto vc = min_vertex_cover(g);
    CHECK(vc.size == g.vertex_count() - static_cast<std::size_t>(oracle::alpha(g)));
    for (auto [u, v] : g.edges()) {
      CHECK((std::binary_search(vc.witness.begin(), vc.witness.end(), u) ||
             std::binary_search(vc.witness.begin(), vc.witness.end(), v)));
    }
  }
}

TEST_CASE("clique detection") {
  CHECK(has_clique_k(complete_graph(4), 4).has_value());
  CHECK_FALSE(has_clique_k(complete_graph(4), 5).has_value());
  CHECK_FALSE(has_clique_k(build_general_gadget(5).graph, 3).has_value());
  CHECK(has_clique_k(build_icosa_gadget().graph, 3).has_value());
  CHECK_FALSE(has_clique_k(build_icosa_gadget().graph, 4).has_value());
  auto w = has_clique_k(complete_graph(6), 5);
  REQUIRE(w.has_value());
  CHECK(w->size() == 5);
  CHECK_THROWS_AS(has_clique_k(complete_graph(4), 2), InputError);
  CHECK_THROWS_AS(has_clique_k(complete_graph(4), 6), InputError);
}

TEST_CASE("solver results are deterministic") {
  std::mt19937_64 rng(5);
  auto g = oracle::random_graph(rng, 30, 0.2);
  auto a = mis_branch_bound(g);
  auto b = mis_branch_bound(g);
  CHECK(a.witness == b.witness);
  CHECK(a.nodes_explored == b.nodes_explored);
}
