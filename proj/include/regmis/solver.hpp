#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "regmis/graph.hpp"

namespace regmis {

struct SolverLimits {
  /// Largest graph mis_bruteforce accepts; at most 64.
  std::size_t max_brute_n = 26;
  std::optional<std::uint64_t> node_budget;
  std::optional<std::chrono::milliseconds> time_budget;

  /// Throws InputError when a cap is zero or max_brute_n exceeds 64.
  void validate() const;
};

enum class SolveMethod { BruteForce, BranchBound };

std::string_view method_name(SolveMethod method);

struct SolveResult {
  std::size_t alpha = 0;
  IndependentSet witness;
  std::uint64_t nodes_explored = 0;
  SolveMethod method = SolveMethod::BruteForce;
};

/// Exhaustive search over the independent subsets of g in vertex order.
/// Throws ResourceLimitError when g is larger than limits.max_brute_n.
SolveResult mis_bruteforce(const Graph& g, const SolverLimits& limits = {});

/// Branch and reduce: every node applies the kernel rules of
/// ReductionKernel to a fixpoint, bounds by a weighted greedy clique cover
/// and branches on a maximum-degree vertex (smallest id on ties).
/// Budget exhaustion throws ResourceLimitError, never an inexact answer.
SolveResult mis_branch_bound(const Graph& g, const SolverLimits& limits = {});

/// Brute force for graphs of at most min(20, max_brute_n) vertices,
/// branch and bound otherwise.
SolveResult solve_mis(const Graph& g, const SolverLimits& limits = {});

struct VertexCover {
  std::size_t size = 0;
  std::vector<Vertex> witness;
};

/// Complement of a maximum independent set.
VertexCover min_vertex_cover(const Graph& g, const SolverLimits& limits = {});

/// Returns a k-clique of g if one exists. k must lie in [3, 5].
std::optional<std::vector<Vertex>> has_clique_k(const Graph& g, int k);

}  // namespace regmis
