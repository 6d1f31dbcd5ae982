#include "regmis/reductions.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "regmis/errors.hpp"

namespace regmis {

namespace {

constexpr auto npos = boost::dynamic_bitset<>::npos;

std::vector<std::size_t> members_of(const boost::dynamic_bitset<>& bits) {
  std::vector<std::size_t> out;
  for (auto i = bits.find_first(); i != npos; i = bits.find_next(i)) out.push_back(i);
  return out;
}

}  // namespace

ReductionKernel::ReductionKernel(const Graph& g)
    : original_n_(g.vertex_count()), next_id_(g.vertex_count()) {
  // Each fold retires three vertices and creates one, so at most n/2 new ids.
  const std::size_t capacity = original_n_ + original_n_ / 2 + 1;
  alive_.resize(capacity);
  adj_.assign(capacity, boost::dynamic_bitset<>(capacity));
  weight_.assign(capacity, 0);
  for (Vertex v = 0; v < original_n_; ++v) {
    alive_.set(v);
    weight_[v] = 1;
    for (Vertex u : g.neighbors(v)) adj_[v].set(u);
  }
}

void ReductionKernel::remove(std::size_t v) {
  for (auto u = adj_[v].find_first(); u != npos; u = adj_[v].find_next(u)) adj_[u].reset(v);
  adj_[v].reset();
  alive_.reset(v);
}

void ReductionKernel::take(std::size_t v) {
  if (v >= alive_.size() || !alive_.test(v)) throw InputError("take: vertex not in the kernel");
  log_.push_back({RecordKind::Take, v});
  offset_ += weight_[v];
  for (auto u : members_of(adj_[v])) remove(u);
  remove(v);
}

void ReductionKernel::discard(std::size_t v) {
  if (v >= alive_.size() || !alive_.test(v)) throw InputError("discard: vertex not in the kernel");
  remove(v);
}

bool ReductionKernel::isolated_rule() {
  bool changed = false;
  for (auto v = alive_.find_first(); v != npos; v = alive_.find_next(v)) {
    if (adj_[v].none()) {
      take(v);
      changed = true;
    }
  }
  return changed;
}

bool ReductionKernel::degree_one_rule() {
  bool changed = false;
  for (auto v = alive_.find_first(); v != npos; v = alive_.find_next(v)) {
    if (degree(v) != 1) continue;
    auto u = adj_[v].find_first();
    if (weight_[v] >= weight_[u]) {
      take(v);
    } else {
      log_.push_back({RecordKind::LeafShift, v, u});
      offset_ += weight_[v];
      weight_[u] -= weight_[v];
      remove(v);
    }
    changed = true;
  }
  return changed;
}

bool ReductionKernel::fold_rule() {
  bool changed = false;
  for (auto v = alive_.find_first(); v != npos; v = alive_.find_next(v)) {
    if (degree(v) != 2) continue;
    auto x = adj_[v].find_first();
    auto y = adj_[v].find_next(x);
    if (adj_[x].test(y)) continue;
    const auto wv = weight_[v];
    const auto wx = weight_[x];
    const auto wy = weight_[y];
    if (wv >= wx + wy) {
      take(v);
      changed = true;
      continue;
    }
    if (wv < std::max(wx, wy)) continue;

    if (next_id_ >= alive_.size()) throw std::logic_error("fold: kernel id pool exhausted");
    const auto z = next_id_++;
    auto nz = adj_[x] | adj_[y];
    nz.reset(v);
    remove(v);
    remove(x);
    remove(y);
    alive_.set(z);
    adj_[z] = nz;
    for (auto u = nz.find_first(); u != npos; u = nz.find_next(u)) adj_[u].set(z);
    weight_[z] = wx + wy - wv;
    offset_ += wv;
    log_.push_back({RecordKind::Fold, v, x, y, z});
    changed = true;
  }
  return changed;
}

bool ReductionKernel::twin_rule() {
  bool changed = false;
  // Keys may go stale when a merge removes a vertex; a stale key still
  // mentions the removed vertex, so it can only miss a merge, never fake one.
  std::map<boost::dynamic_bitset<>, std::size_t> by_neighborhood;
  for (auto v = alive_.find_first(); v != npos; v = alive_.find_next(v)) {
    if (adj_[v].none()) continue;
    auto [it, inserted] = by_neighborhood.try_emplace(adj_[v], v);
    if (inserted) continue;
    const auto keep = it->second;
    if (!alive_.test(keep) || adj_[keep] != adj_[v]) {
      it->second = v;
      continue;
    }
    weight_[keep] += weight_[v];
    log_.push_back({RecordKind::Twin, keep, v});
    remove(v);
    changed = true;
  }
  return changed;
}

bool ReductionKernel::dominance_rule() {
  bool changed = false;
  for (auto u = alive_.find_first(); u != npos; u = alive_.find_next(u)) {
    for (auto v : members_of(adj_[u])) {
      if (!alive_.test(u)) break;
      if (!alive_.test(v) || weight_[u] < weight_[v]) continue;
      auto open = adj_[u];
      open.reset(v);
      if (open.is_subset_of(adj_[v])) {
        remove(v);
        changed = true;
      }
    }
  }
  return changed;
}

void ReductionKernel::reduce() {
  bool changed = true;
  while (changed) {
    changed = isolated_rule();
    changed = degree_one_rule() || changed;
    changed = dominance_rule() || changed;
    changed = twin_rule() || changed;
    changed = fold_rule() || changed;
  }
}

std::int64_t ReductionKernel::clique_cover_bound() const {
  auto order = members_of(alive_);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return weight_[a] > weight_[b]; });
  std::vector<boost::dynamic_bitset<>> cliques;
  std::int64_t bound = 0;
  for (auto v : order) {
    bool placed = false;
    for (auto& clique : cliques) {
      if (clique.is_subset_of(adj_[v])) {
        clique.set(v);
        placed = true;
        break;
      }
    }
    if (!placed) {
      // Heaviest member comes first, so it carries the clique's weight.
      cliques.emplace_back(alive_.size()).set(v);
      bound += weight_[v];
    }
  }
  return bound;
}

std::size_t ReductionKernel::branching_vertex() const {
  std::size_t best = npos;
  std::size_t best_degree = 0;
  for (auto v = alive_.find_first(); v != npos; v = alive_.find_next(v)) {
    if (best == npos || degree(v) > best_degree) {
      best = v;
      best_degree = degree(v);
    }
  }
  return best;
}

WeightedGraph ReductionKernel::residual() const {
  WeightedGraph out;
  out.ids = members_of(alive_);
  std::vector<Vertex> local(alive_.size(), 0);
  for (std::size_t i = 0; i < out.ids.size(); ++i) local[out.ids[i]] = static_cast<Vertex>(i);
  GraphBuilder b(out.ids.size());
  for (std::size_t i = 0; i < out.ids.size(); ++i) {
    const auto& nb = adj_[out.ids[i]];
    for (auto u = nb.find_first(); u != npos; u = nb.find_next(u)) {
      if (local[u] > i) b.add_edge(static_cast<Vertex>(i), local[u]);
    }
    out.weights.push_back(weight_[out.ids[i]]);
  }
  out.graph = std::move(b).build();
  return out;
}

IndependentSet ReductionKernel::lift(std::span<const Vertex> residual_solution) const {
  auto ids = members_of(alive_);
  boost::dynamic_bitset<> chosen(alive_.size());
  for (Vertex local : residual_solution) {
    if (local >= ids.size()) throw InputError("lift: residual vertex out of range");
    chosen.set(ids[local]);
  }
  for (auto it = log_.rbegin(); it != log_.rend(); ++it) {
    switch (it->kind) {
      case RecordKind::Take:
        chosen.set(it->a);
        break;
      case RecordKind::LeafShift:
        if (!chosen.test(it->b)) chosen.set(it->a);
        break;
      case RecordKind::Fold:
        if (chosen.test(it->d)) {
          chosen.reset(it->d);
          chosen.set(it->b);
          chosen.set(it->c);
        } else {
          chosen.set(it->a);
        }
        break;
      case RecordKind::Twin:
        if (chosen.test(it->a)) chosen.set(it->b);
        break;
    }
  }
  std::vector<Vertex> members;
  for (auto v = chosen.find_first(); v != npos && v < original_n_; v = chosen.find_next(v)) {
    members.push_back(static_cast<Vertex>(v));
  }
  return IndependentSet(std::move(members));
}

}  // namespace regmis
