#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "regmis/graph.hpp"
#include "regmis/solver.hpp"

namespace regmis {

enum class GadgetKind {
  /// Complete-bipartite blocks behind hub pairs, for odd target degree.
  GeneralOdd,
  /// Icosahedron with the edge {a, b} removed; a building block only.
  Icosahedron,
  /// Two icosahedron blocks joined through a degree-4 port.
  Planar5,
};

std::string_view gadget_kind_name(GadgetKind kind);
GadgetKind parse_gadget_kind(std::string_view name);

struct VertexRole {
  enum class Kind {
    Original,
    PartA,
    PartB,
    HubA,
    HubB,
    Port,
    IcosaLabel,
    ParityClique,
    PadStarCenter,
    PadStarLeaf,
  };

  Kind kind = Kind::Original;
  int block = 0;    // 1-based block index for PartA, PartB, HubA, HubB
  char label = 0;   // 'a'..'l' for IcosaLabel
  int copy = 0;     // icosahedron copy (1 or 2) inside a planar gadget, else 0

  /// "A1", "b2", "h", "X1.k", "star-leaf", ...
  std::string to_string() const;
  friend bool operator==(const VertexRole&, const VertexRole&) = default;
};

/// Structure of a gadget without any solver involvement.
struct GadgetBlueprint {
  GadgetKind kind = GadgetKind::GeneralOdd;
  int delta = 0;
  Graph graph;
  /// Indexed by local vertex id; local ids follow role order.
  std::vector<VertexRole> roles;
  /// Absent for the bare icosahedron block.
  std::optional<Vertex> port;
  /// Constructive maximum independent set avoiding the port.
  std::vector<Vertex> witness;
};

struct GadgetLayout {
  GadgetKind kind = GadgetKind::GeneralOdd;
  int delta = 0;
  std::vector<VertexRole> roles;
  std::optional<Vertex> port;
  /// Exact independence number of the gadget graph, by oracle.
  std::int64_t internal_alpha = 0;
  std::vector<Vertex> witness;
};

struct Gadget {
  Graph graph;
  GadgetLayout layout;
};

/// Throws InputError unless delta is odd and at least 3.
void require_odd_degree(int delta);

/// Number of vertices of the general gadget: (delta-1)^2 + delta.
std::size_t general_gadget_order(int delta);

/// Blueprint of a gadget kind; `delta` is only read for GeneralOdd.
GadgetBlueprint gadget_blueprint(GadgetKind kind, int delta = 5);

Gadget build_general_gadget(int delta);
Gadget build_icosa_gadget();
Gadget build_planar_gadget();

/// Exact independence number of the general gadget, memoized per delta.
std::int64_t gadget_alpha(int delta);
/// Exact independence number of any gadget kind, memoized per (kind, delta).
/// Safe to call concurrently.
std::int64_t gadget_alpha(GadgetKind kind, int delta);

/// Size of the greedy cover of the general gadget by its block edges, one
/// hub-port edge and singleton hubs: (delta-1)^2/2 + delta - 1. An upper
/// bound on the gadget's independence number, tight for no delta >= 3.
std::int64_t gadget_clique_cover_bound(int delta);

/// Independence numbers of a graph relative to one distinguished vertex.
struct PortProfile {
  std::int64_t alpha = 0;
  /// 1 + alpha(g - N[port]).
  std::int64_t with_port = 0;
  /// alpha(g - port).
  std::int64_t without_port = 0;
};

PortProfile port_profile(const Graph& g, Vertex port, const SolverLimits& limits = {});

}  // namespace regmis
