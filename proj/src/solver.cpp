#include "regmis/solver.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

#include "regmis/errors.hpp"
#include "regmis/reductions.hpp"

namespace regmis {

namespace {

using Clock = std::chrono::steady_clock;

class Budget {
 public:
  explicit Budget(const SolverLimits& limits) : limits_(limits), start_(Clock::now()) {}

  /// Counts one node; throws once a budget is exceeded.
  void tick(std::size_t best_so_far) {
    ++nodes_;
    if (limits_.node_budget && nodes_ > *limits_.node_budget) {
      throw ResourceLimitError("node budget of " + std::to_string(*limits_.node_budget) + " exhausted",
                               best_so_far);
    }
    if (limits_.time_budget && (nodes_ & 0xff) == 0 && Clock::now() - start_ > *limits_.time_budget) {
      throw ResourceLimitError("time budget exhausted", best_so_far);
    }
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  const SolverLimits& limits_;
  Clock::time_point start_;
  std::uint64_t nodes_ = 0;
};

class BruteForce {
 public:
  BruteForce(const Graph& g, Budget& budget) : budget_(budget) {
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      std::uint64_t mask = 0;
      for (Vertex u : g.neighbors(v)) mask |= std::uint64_t{1} << u;
      neighbors_.push_back(mask);
    }
  }

  void run() {
    const std::size_t n = neighbors_.size();
    const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    extend(all, 0, 0);
  }

  std::size_t best_size() const { return best_size_; }
  std::uint64_t best_set() const { return best_set_; }

 private:
  // Candidates are the later vertices not adjacent to anything chosen, so only
  // independent subsets are ever visited.
  void extend(std::uint64_t candidates, std::uint64_t chosen, std::size_t size) {
    budget_.tick(best_size_);
    if (size > best_size_) {
      best_size_ = size;
      best_set_ = chosen;
    }
    if (candidates == 0) return;
    if (size + static_cast<std::size_t>(std::popcount(candidates)) <= best_size_) return;
    const int v = std::countr_zero(candidates);
    const std::uint64_t bit = std::uint64_t{1} << v;
    extend(candidates & ~bit & ~neighbors_[v], chosen | bit, size + 1);
    extend(candidates & ~bit, chosen, size);
  }

  Budget& budget_;
  std::vector<std::uint64_t> neighbors_;
  std::size_t best_size_ = 0;
  std::uint64_t best_set_ = 0;
};

class BranchAndReduce {
 public:
  explicit BranchAndReduce(Budget& budget) : budget_(budget) {}

  void search(ReductionKernel kernel) {
    budget_.tick(best_ < 0 ? 0 : static_cast<std::size_t>(best_));
    kernel.reduce();
    if (kernel.active_count() == 0) {
      if (kernel.offset() > best_) {
        best_ = kernel.offset();
        witness_ = kernel.lift({});
      }
      return;
    }
    if (kernel.offset() + kernel.clique_cover_bound() <= best_) return;

    const auto v = kernel.branching_vertex();
    ReductionKernel with_v = kernel;
    with_v.take(v);
    search(std::move(with_v));
    kernel.discard(v);
    search(std::move(kernel));
  }

  std::int64_t best() const { return best_; }
  IndependentSet witness() const { return witness_; }

 private:
  Budget& budget_;
  std::int64_t best_ = -1;
  IndependentSet witness_;
};

void check_witness(const Graph& g, const SolveResult& r) {
  if (r.witness.size() != r.alpha || !is_independent_set(g, r.witness)) {
    throw std::logic_error("solver produced an invalid witness");
  }
}

}  // namespace

void SolverLimits::validate() const {
  if (max_brute_n == 0 || max_brute_n > 64) throw InputError("max_brute_n must lie in [1, 64]");
  if (node_budget && *node_budget == 0) throw InputError("node budget must be positive");
  if (time_budget && time_budget->count() <= 0) throw InputError("time budget must be positive");
}

std::string_view method_name(SolveMethod method) {
  return method == SolveMethod::BruteForce ? "brute" : "bb";
}

SolveResult mis_bruteforce(const Graph& g, const SolverLimits& limits) {
  limits.validate();
  if (g.vertex_count() > limits.max_brute_n) {
    throw ResourceLimitError("brute force limited to " + std::to_string(limits.max_brute_n) +
                                 " vertices, graph has " + std::to_string(g.vertex_count()),
                             0);
  }
  Budget budget(limits);
  BruteForce search(g, budget);
  search.run();

  SolveResult result;
  result.method = SolveMethod::BruteForce;
  result.alpha = search.best_size();
  result.nodes_explored = budget.nodes();
  std::vector<Vertex> members;
  for (std::uint64_t rest = search.best_set(); rest != 0; rest &= rest - 1) {
    members.push_back(static_cast<Vertex>(std::countr_zero(rest)));
  }
  result.witness = IndependentSet(std::move(members));
  check_witness(g, result);
  return result;
}

SolveResult mis_branch_bound(const Graph& g, const SolverLimits& limits) {
  limits.validate();
  Budget budget(limits);
  BranchAndReduce search(budget);
  search.search(ReductionKernel(g));

  SolveResult result;
  result.method = SolveMethod::BranchBound;
  result.alpha = static_cast<std::size_t>(search.best());
  result.witness = search.witness();
  result.nodes_explored = budget.nodes();
  check_witness(g, result);
  return result;
}

SolveResult solve_mis(const Graph& g, const SolverLimits& limits) {
  if (g.vertex_count() <= std::min<std::size_t>(20, limits.max_brute_n)) return mis_bruteforce(g, limits);
  return mis_branch_bound(g, limits);
}

VertexCover min_vertex_cover(const Graph& g, const SolverLimits& limits) {
  auto mis = solve_mis(g, limits);
  VertexCover cover;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (!mis.witness.contains(v)) cover.witness.push_back(v);
  }
  cover.size = cover.witness.size();
  return cover;
}

namespace {

bool extend_clique(const Graph& g, std::vector<Vertex>& clique, const std::vector<Vertex>& candidates,
                   std::size_t k) {
  if (clique.size() == k) return true;
  if (clique.size() + candidates.size() < k) return false;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    const Vertex w = candidates[i];
    auto nb = g.neighbors(w);
    std::vector<Vertex> next;
    std::set_intersection(candidates.begin() + static_cast<std::ptrdiff_t>(i) + 1, candidates.end(),
                          nb.begin(), nb.end(), std::back_inserter(next));
    clique.push_back(w);
    if (extend_clique(g, clique, next, k)) return true;
    clique.pop_back();
  }
  return false;
}

}  // namespace

std::optional<std::vector<Vertex>> has_clique_k(const Graph& g, int k) {
  if (k < 3 || k > 5) throw InputError("clique order must lie in [3, 5], got " + std::to_string(k));
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    if (g.degree(u) + 1 < static_cast<std::size_t>(k)) continue;
    auto nb = g.neighbors(u);
    std::vector<Vertex> later(std::upper_bound(nb.begin(), nb.end(), u), nb.end());
    std::vector<Vertex> clique{u};
    if (extend_clique(g, clique, later, static_cast<std::size_t>(k))) return clique;
  }
  return std::nullopt;
}

}  // namespace regmis
