#include "regmis/gadget.hpp"

#include <array>
#include <map>
#include <mutex>
#include <string>
#include <utility>

#include "regmis/errors.hpp"

namespace regmis {

namespace {

using Role = VertexRole;

// Icosahedron minus {a, b}, labels a..l as vertices 0..11.
constexpr std::array<std::pair<char, char>, 29> kIcosaEdges{{
    {'a', 'c'}, {'b', 'c'}, {'d', 'e'}, {'e', 'f'}, {'f', 'g'}, {'g', 'h'}, {'h', 'i'}, {'i', 'd'},
    {'b', 'd'}, {'b', 'i'}, {'b', 'e'}, {'i', 'a'}, {'h', 'a'}, {'g', 'a'}, {'e', 'c'}, {'f', 'c'},
    {'g', 'c'}, {'l', 'k'}, {'j', 'k'}, {'j', 'l'}, {'j', 'e'}, {'j', 'f'}, {'j', 'd'}, {'l', 'f'},
    {'l', 'g'}, {'l', 'h'}, {'k', 'h'}, {'k', 'i'}, {'k', 'd'},
}};
constexpr std::size_t kIcosaOrder = 12;
constexpr std::array<char, 4> kIcosaWitness{'a', 'b', 'k', 'f'};

Vertex icosa_id(char label) { return static_cast<Vertex>(label - 'a'); }

void add_icosa_block(GraphBuilder& b, std::vector<Role>& roles, std::vector<Vertex>& witness, int copy) {
  const Vertex base = b.add_vertices(kIcosaOrder);
  for (std::size_t i = 0; i < kIcosaOrder; ++i) {
    roles.push_back({Role::Kind::IcosaLabel, 0, static_cast<char>('a' + i), copy});
  }
  for (auto [x, y] : kIcosaEdges) b.add_edge(base + icosa_id(x), base + icosa_id(y));
  for (char label : kIcosaWitness) witness.push_back(base + icosa_id(label));
}

GadgetBlueprint general_blueprint(int delta) {
  require_odd_degree(delta);
  const auto side = static_cast<std::size_t>(delta - 1);
  const auto blocks = side / 2;

  GadgetBlueprint bp;
  bp.kind = GadgetKind::GeneralOdd;
  bp.delta = delta;
  GraphBuilder b;
  std::vector<Vertex> part_a(blocks);
  std::vector<Vertex> part_b(blocks);
  for (std::size_t i = 0; i < blocks; ++i) {
    const int block = static_cast<int>(i) + 1;
    part_a[i] = b.add_vertices(side);
    bp.roles.insert(bp.roles.end(), side, Role{Role::Kind::PartA, block});
    part_b[i] = b.add_vertices(side);
    bp.roles.insert(bp.roles.end(), side, Role{Role::Kind::PartB, block});
    for (std::size_t x = 0; x < side; ++x) {
      for (std::size_t y = 0; y < side; ++y) {
        b.add_edge(part_a[i] + static_cast<Vertex>(x), part_b[i] + static_cast<Vertex>(y));
      }
    }
  }
  const Vertex hub_a = b.add_vertices(blocks);
  for (std::size_t i = 0; i < blocks; ++i) bp.roles.push_back({Role::Kind::HubA, static_cast<int>(i) + 1});
  const Vertex hub_b = b.add_vertices(blocks);
  for (std::size_t i = 0; i < blocks; ++i) bp.roles.push_back({Role::Kind::HubB, static_cast<int>(i) + 1});
  const Vertex port = b.add_vertices(1);
  bp.roles.push_back({Role::Kind::Port});

  for (std::size_t i = 0; i < blocks; ++i) {
    const auto ha = hub_a + static_cast<Vertex>(i);
    const auto hb = hub_b + static_cast<Vertex>(i);
    for (std::size_t x = 0; x < side; ++x) {
      b.add_edge(ha, part_a[i] + static_cast<Vertex>(x));
      b.add_edge(hb, part_b[i] + static_cast<Vertex>(x));
    }
    b.add_edge(port, ha);
    b.add_edge(port, hb);
  }

  // Every A side plus every b hub.
  for (std::size_t i = 0; i < blocks; ++i) {
    for (std::size_t x = 0; x < side; ++x) bp.witness.push_back(part_a[i] + static_cast<Vertex>(x));
  }
  for (std::size_t i = 0; i < blocks; ++i) bp.witness.push_back(hub_b + static_cast<Vertex>(i));

  bp.port = port;
  bp.graph = std::move(b).build();
  return bp;
}

GadgetBlueprint icosa_blueprint() {
  GadgetBlueprint bp;
  bp.kind = GadgetKind::Icosahedron;
  bp.delta = 5;
  GraphBuilder b;
  add_icosa_block(b, bp.roles, bp.witness, 0);
  bp.graph = std::move(b).build();
  return bp;
}

GadgetBlueprint planar_blueprint() {
  GadgetBlueprint bp;
  bp.kind = GadgetKind::Planar5;
  bp.delta = 5;
  GraphBuilder b;
  add_icosa_block(b, bp.roles, bp.witness, 1);
  add_icosa_block(b, bp.roles, bp.witness, 2);
  const Vertex port = b.add_vertices(1);
  bp.roles.push_back({Role::Kind::Port});
  for (Vertex base : {Vertex{0}, static_cast<Vertex>(kIcosaOrder)}) {
    b.add_edge(port, base + icosa_id('a'));
    b.add_edge(port, base + icosa_id('b'));
  }
  bp.port = port;
  bp.graph = std::move(b).build();
  return bp;
}

Gadget assemble(GadgetBlueprint bp) {
  Gadget g;
  g.layout.kind = bp.kind;
  g.layout.delta = bp.delta;
  g.layout.internal_alpha = gadget_alpha(bp.kind, bp.delta);
  g.layout.roles = std::move(bp.roles);
  g.layout.port = bp.port;
  g.layout.witness = std::move(bp.witness);
  g.graph = std::move(bp.graph);
  return g;
}

}  // namespace

std::string_view gadget_kind_name(GadgetKind kind) {
  switch (kind) {
    case GadgetKind::GeneralOdd:
      return "general";
    case GadgetKind::Icosahedron:
      return "icosa";
    case GadgetKind::Planar5:
      return "planar5";
  }
  return "?";
}

GadgetKind parse_gadget_kind(std::string_view name) {
  if (name == "general") return GadgetKind::GeneralOdd;
  if (name == "icosa") return GadgetKind::Icosahedron;
  if (name == "planar5" || name == "planar") return GadgetKind::Planar5;
  throw InputError("unknown gadget kind '" + std::string(name) + "'");
}

std::string VertexRole::to_string() const {
  switch (kind) {
    case Kind::Original:
      return "original";
    case Kind::PartA:
      return "A" + std::to_string(block);
    case Kind::PartB:
      return "B" + std::to_string(block);
    case Kind::HubA:
      return "a" + std::to_string(block);
    case Kind::HubB:
      return "b" + std::to_string(block);
    case Kind::Port:
      return "h";
    case Kind::IcosaLabel:
      return copy == 0 ? std::string(1, label) : "X" + std::to_string(copy) + "." + std::string(1, label);
    case Kind::ParityClique:
      return "parity-clique";
    case Kind::PadStarCenter:
      return "star-center";
    case Kind::PadStarLeaf:
      return "star-leaf";
  }
  return "?";
}

void require_odd_degree(int delta) {
  if (delta < 3 || delta % 2 == 0) {
    throw InputError("gadget degree must be odd and at least 3, got " + std::to_string(delta));
  }
}

std::size_t general_gadget_order(int delta) {
  require_odd_degree(delta);
  const auto d = static_cast<std::size_t>(delta);
  return (d - 1) * (d - 1) + d;
}

GadgetBlueprint gadget_blueprint(GadgetKind kind, int delta) {
  switch (kind) {
    case GadgetKind::GeneralOdd:
      return general_blueprint(delta);
    case GadgetKind::Icosahedron:
      return icosa_blueprint();
    case GadgetKind::Planar5:
      return planar_blueprint();
  }
  throw InputError("unknown gadget kind");
}

Gadget build_general_gadget(int delta) { return assemble(general_blueprint(delta)); }
Gadget build_icosa_gadget() { return assemble(icosa_blueprint()); }
Gadget build_planar_gadget() { return assemble(planar_blueprint()); }

std::int64_t gadget_alpha(int delta) { return gadget_alpha(GadgetKind::GeneralOdd, delta); }

std::int64_t gadget_alpha(GadgetKind kind, int delta) {
  if (kind != GadgetKind::GeneralOdd) delta = 5;
  const auto key = std::make_pair(kind, delta);
  static std::mutex mutex;
  static std::map<std::pair<GadgetKind, int>, std::int64_t> memo;
  {
    std::lock_guard lock(mutex);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
  }
  // Computed outside the lock; concurrent callers may both compute the same value.
  const auto bp = gadget_blueprint(kind, delta);
  const auto alpha = static_cast<std::int64_t>(solve_mis(bp.graph).alpha);
  std::lock_guard lock(mutex);
  memo[key] = alpha;
  return alpha;
}

std::int64_t gadget_clique_cover_bound(int delta) {
  require_odd_degree(delta);
  const std::int64_t d = delta;
  return (d - 1) * (d - 1) / 2 + d - 1;
}

PortProfile port_profile(const Graph& g, Vertex port, const SolverLimits& limits) {
  if (port >= g.vertex_count()) throw InputError("port vertex out of range");
  std::vector<Vertex> outside_closed;
  std::vector<Vertex> all_but_port;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (v != port) all_but_port.push_back(v);
    if (v != port && !g.has_edge(port, v)) outside_closed.push_back(v);
  }
  PortProfile p;
  p.alpha = static_cast<std::int64_t>(solve_mis(g, limits).alpha);
  p.with_port = 1 + static_cast<std::int64_t>(solve_mis(induced_subgraph(g, outside_closed).first, limits).alpha);
  p.without_port = static_cast<std::int64_t>(solve_mis(induced_subgraph(g, all_but_port).first, limits).alpha);
  return p;
}

}  // namespace regmis
