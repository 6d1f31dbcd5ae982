#include "regmis/graph.hpp"

#include <algorithm>
#include <string>

#include "regmis/errors.hpp"

namespace regmis {

namespace {

void require_vertex(const Graph& g, Vertex v) {
  if (v >= g.vertex_count()) {
    throw InputError("vertex " + std::to_string(v) + " out of range (n=" +
                     std::to_string(g.vertex_count()) + ")");
  }
}

}  // namespace

std::span<const Vertex> Graph::neighbors(Vertex v) const {
  return {neighbors_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
}

std::size_t Graph::degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (u >= vertex_count() || v >= vertex_count()) return false;
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::size_t Graph::max_degree() const {
  std::size_t best = 0;
  for (Vertex v = 0; v < vertex_count(); ++v) best = std::max(best, degree(v));
  return best;
}

std::size_t Graph::min_degree() const {
  if (vertex_count() == 0) return 0;
  std::size_t best = degree(0);
  for (Vertex v = 1; v < vertex_count(); ++v) best = std::min(best, degree(v));
  return best;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (Vertex u = 0; u < vertex_count(); ++u) {
    for (Vertex v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Vertex GraphBuilder::add_vertices(std::size_t count) {
  auto first = static_cast<Vertex>(n_);
  n_ += count;
  return first;
}

void GraphBuilder::add_edge(Vertex u, Vertex v) {
  if (u >= n_ || v >= n_) {
    throw InputError("edge {" + std::to_string(u) + "," + std::to_string(v) +
                     "} references a vertex out of range (n=" + std::to_string(n_) + ")");
  }
  if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
  edges_.emplace_back(std::min(u, v), std::max(u, v));
}

void GraphBuilder::add_graph(const Graph& g, Vertex shift) {
  for (auto [u, v] : g.edges()) add_edge(u + shift, v + shift);
}

Graph GraphBuilder::build() && {
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());

  Graph g;
  g.offsets_.assign(n_ + 1, 0);
  for (auto [u, v] : edges_) {
    ++g.offsets_[u + 1];
    ++g.offsets_[v + 1];
  }
  for (std::size_t i = 0; i < n_; ++i) g.offsets_[i + 1] += g.offsets_[i];
  g.neighbors_.resize(2 * edges_.size());
  std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  // With edges sorted by (u, v), filling the smaller-neighbor side first keeps
  // every list increasing.
  for (auto [u, v] : edges_) g.neighbors_[cursor[v]++] = u;
  for (auto [u, v] : edges_) g.neighbors_[cursor[u]++] = v;
  return g;
}

IndependentSet::IndependentSet(std::vector<Vertex> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

IndependentSet::IndependentSet(std::initializer_list<Vertex> members)
    : IndependentSet(std::vector<Vertex>(members)) {}

bool IndependentSet::contains(Vertex v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

std::size_t degree(const Graph& g, Vertex v) {
  require_vertex(g, v);
  return g.degree(v);
}

bool is_independent_set(const Graph& g, const IndependentSet& s) {
  for (Vertex v : s) require_vertex(g, v);
  for (Vertex u : s) {
    for (Vertex w : g.neighbors(u)) {
      if (s.contains(w)) return false;
    }
  }
  return true;
}

Graph disjoint_union(const Graph& g1, const Graph& g2) {
  GraphBuilder b(g1.vertex_count() + g2.vertex_count());
  b.add_graph(g1, 0);
  b.add_graph(g2, static_cast<Vertex>(g1.vertex_count()));
  return std::move(b).build();
}

std::size_t triangle_count(const Graph& g) {
  std::size_t count = 0;
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    auto nu = g.neighbors(u);
    for (Vertex v : nu) {
      if (v <= u) continue;
      auto nv = g.neighbors(v);
      // Count common neighbors w > v.
      auto i = std::upper_bound(nu.begin(), nu.end(), v);
      auto j = std::upper_bound(nv.begin(), nv.end(), v);
      while (i != nu.end() && j != nv.end()) {
        if (*i < *j) {
          ++i;
        } else if (*j < *i) {
          ++j;
        } else {
          ++count;
          ++i;
          ++j;
        }
      }
    }
  }
  return count;
}

std::pair<Graph, std::vector<Vertex>> induced_subgraph(const Graph& g, std::vector<Vertex> keep) {
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  for (Vertex v : keep) require_vertex(g, v);

  constexpr auto kAbsent = static_cast<Vertex>(-1);
  std::vector<Vertex> local(g.vertex_count(), kAbsent);
  for (std::size_t i = 0; i < keep.size(); ++i) local[keep[i]] = static_cast<Vertex>(i);

  GraphBuilder b(keep.size());
  for (std::size_t i = 0; i < keep.size(); ++i) {
    for (Vertex w : g.neighbors(keep[i])) {
      if (local[w] != kAbsent && local[w] > i) b.add_edge(static_cast<Vertex>(i), local[w]);
    }
  }
  return {std::move(b).build(), std::move(keep)};
}

Graph empty_graph(std::size_t n) { return GraphBuilder(n).build(); }

Graph complete_graph(std::size_t n) {
  GraphBuilder b(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) b.add_edge(u, v);
  }
  return std::move(b).build();
}

Graph path_graph(std::size_t n) {
  GraphBuilder b(n);
  for (Vertex v = 1; v < n; ++v) b.add_edge(v - 1, v);
  return std::move(b).build();
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw InputError("a cycle needs at least 3 vertices");
  GraphBuilder b(n);
  for (Vertex v = 0; v < n; ++v) b.add_edge(v, static_cast<Vertex>((v + 1) % n));
  return std::move(b).build();
}

Graph star_graph(std::size_t leaves) {
  GraphBuilder b(leaves + 1);
  for (Vertex v = 1; v <= leaves; ++v) b.add_edge(0, v);
  return std::move(b).build();
}

Graph complete_bipartite_graph(std::size_t left, std::size_t right) {
  GraphBuilder b(left + right);
  for (Vertex u = 0; u < left; ++u) {
    for (Vertex v = 0; v < right; ++v) b.add_edge(u, static_cast<Vertex>(left + v));
  }
  return std::move(b).build();
}

Graph graph_from_edges(std::size_t n, std::span<const Edge> edges) {
  GraphBuilder b(n);
  for (auto [u, v] : edges) b.add_edge(u, v);
  return std::move(b).build();
}

}  // namespace regmis
