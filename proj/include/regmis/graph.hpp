#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace regmis {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Half-open interval [first, last) of vertex ids.
struct VertexRange {
  Vertex first = 0;
  Vertex last = 0;

  std::size_t size() const { return last - first; }
  bool contains(Vertex v) const { return v >= first && v < last; }
  friend bool operator==(const VertexRange&, const VertexRange&) = default;
};

/// Immutable undirected simple graph on vertices 0..n-1 in CSR form.
/// Adjacency lists are strictly increasing and symmetric, with no loops.
/// Instances are produced by GraphBuilder and safe to share across readers.
class Graph {
 public:
  Graph() : offsets_{0} {}

  std::size_t vertex_count() const { return offsets_.size() - 1; }
  std::size_t edge_count() const { return neighbors_.size() / 2; }

  std::span<const Vertex> neighbors(Vertex v) const;
  std::size_t degree(Vertex v) const;
  bool has_edge(Vertex u, Vertex v) const;

  /// 0 for the empty graph.
  std::size_t max_degree() const;
  std::size_t min_degree() const;

  /// All edges as (u, v) with u < v, sorted lexicographically.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  friend class GraphBuilder;

  std::vector<std::size_t> offsets_;
  std::vector<Vertex> neighbors_;
};

/// Single-owner accumulator for Graph. Duplicate edges collapse silently;
/// self-loops and out-of-range endpoints throw InputError.
class GraphBuilder {
 public:
  explicit GraphBuilder(std::size_t n = 0) : n_(n) {}

  std::size_t vertex_count() const { return n_; }

  /// Appends `count` isolated vertices and returns the id of the first.
  Vertex add_vertices(std::size_t count);
  void add_edge(Vertex u, Vertex v);
  /// Copies every edge of `g`, shifted by `shift`.
  void add_graph(const Graph& g, Vertex shift);

  Graph build() &&;

 private:
  std::size_t n_;
  std::vector<Edge> edges_;
};

/// A set of vertex ids kept sorted and duplicate free. Whether it is
/// actually independent is a property relative to a graph; see
/// is_independent_set.
class IndependentSet {
 public:
  IndependentSet() = default;
  explicit IndependentSet(std::vector<Vertex> members);
  IndependentSet(std::initializer_list<Vertex> members);

  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(Vertex v) const;
  const std::vector<Vertex>& members() const { return members_; }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  friend bool operator==(const IndependentSet&, const IndependentSet&) = default;

 private:
  std::vector<Vertex> members_;
};

/// Throws InputError when v is not a vertex of g.
std::size_t degree(const Graph& g, Vertex v);

/// Throws InputError when a member is not a vertex of g.
bool is_independent_set(const Graph& g, const IndependentSet& s);

/// Vertices of g2 are shifted by g1.vertex_count().
Graph disjoint_union(const Graph& g1, const Graph& g2);

std::size_t triangle_count(const Graph& g);

/// Subgraph induced by `keep` (ids of g, any order). The i-th vertex of the
/// result is the i-th element of the sorted `keep`; that mapping is returned.
std::pair<Graph, std::vector<Vertex>> induced_subgraph(const Graph& g, std::vector<Vertex> keep);

Graph empty_graph(std::size_t n);
Graph complete_graph(std::size_t n);
Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
/// Star K_{1,leaves}; the center is vertex 0.
Graph star_graph(std::size_t leaves);
Graph complete_bipartite_graph(std::size_t left, std::size_t right);
Graph graph_from_edges(std::size_t n, std::span<const Edge> edges);

}  // namespace regmis
