#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "regmis/graph.hpp"

namespace regmis {

/// A graph with positive integer vertex weights, as left behind by kernel
/// rules. `ids` maps each local vertex to its kernel pool id.
struct WeightedGraph {
  Graph graph;
  std::vector<std::int64_t> weights;
  std::vector<std::size_t> ids;
};

/// Weighted MIS kernel over a copy of an unweighted graph. Every rule
/// preserves  alpha(original) = offset() + alpha_w(residual)  and logs how
/// to turn a residual solution back into one of the original graph.
///
/// Weights appear because twins are merged: non-adjacent vertices with equal
/// open neighborhoods are either all taken or all skipped by some optimum, so
/// they collapse into one vertex carrying their combined weight.
class ReductionKernel {
 public:
  explicit ReductionKernel(const Graph& g);

  /// Takes every vertex without neighbors.
  bool isolated_rule();
  /// Leaf u with neighbor v: take u when w(u) >= w(v), otherwise move w(u)
  /// into the offset and lower w(v) by w(u).
  bool degree_one_rule();
  /// Degree-2 vertex v with non-adjacent neighbors x, y and
  /// w(v) >= max(w(x), w(y)): take v if w(v) >= w(x) + w(y), else fold
  /// {v, x, y} into a new vertex of weight w(x) + w(y) - w(v).
  bool fold_rule();
  /// Merges non-adjacent vertices with identical open neighborhoods.
  bool twin_rule();
  /// Adjacent u, v with N[u] a subset of N[v] and w(u) >= w(v): drop v.
  bool dominance_rule();
  /// Runs all rules until none applies.
  void reduce();

  /// Forces v into the solution and deletes its closed neighborhood.
  void take(std::size_t v);
  /// Deletes v without taking it.
  void discard(std::size_t v);

  std::size_t active_count() const { return alive_.count(); }
  std::int64_t offset() const { return offset_; }
  /// Weighted greedy clique cover of the residual graph; bounds alpha_w.
  std::int64_t clique_cover_bound() const;
  /// Alive vertex of maximum degree, smallest pool id on ties.
  std::size_t branching_vertex() const;

  WeightedGraph residual() const;
  /// Maps an independent set of residual().graph (local ids) back to an
  /// independent set of the original graph of weight offset() + w(solution).
  IndependentSet lift(std::span<const Vertex> residual_solution) const;

 private:
  enum class RecordKind { Take, LeafShift, Fold, Twin };
  struct Record {
    RecordKind kind;
    std::size_t a = 0;  // Take: v. LeafShift: leaf. Fold: v. Twin: kept.
    std::size_t b = 0;  // LeafShift: neighbor. Fold: x. Twin: merged.
    std::size_t c = 0;  // Fold: y.
    std::size_t d = 0;  // Fold: new vertex.
  };

  void remove(std::size_t v);
  std::size_t degree(std::size_t v) const { return adj_[v].count(); }

  std::size_t original_n_;
  std::size_t next_id_;
  boost::dynamic_bitset<> alive_;
  std::vector<boost::dynamic_bitset<>> adj_;
  std::vector<std::int64_t> weight_;
  std::int64_t offset_ = 0;
  std::vector<Record> log_;
};

}  // namespace regmis
