#include "regmis/regularizer.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "regmis/errors.hpp"
#include "regmis/graph_io.hpp"

namespace regmis {

namespace {

Reduction attach_gadgets(const Graph& source, const Graph& padded, std::vector<ReductionStep> steps,
                         Pipeline pipeline, int delta) {
  const GadgetKind kind = pipeline == Pipeline::Planar ? GadgetKind::Planar5 : GadgetKind::GeneralOdd;
  const auto bp = gadget_blueprint(kind, delta);
  const auto port = *bp.port;
  const auto order = bp.graph.vertex_count();
  const auto per_gadget_alpha = gadget_alpha(kind, delta);
  if (static_cast<std::int64_t>(bp.witness.size()) != per_gadget_alpha) {
    throw std::logic_error("gadget witness is not maximum");
  }

  const auto dmax = static_cast<std::size_t>(delta);
  std::size_t total_gadgets = 0;
  for (Vertex v = 0; v < padded.vertex_count(); ++v) {
    if (padded.degree(v) > dmax) {
      throw InputError("vertex " + std::to_string(v) + " has degree " + std::to_string(padded.degree(v)) +
                       " above the target degree " + std::to_string(delta));
    }
    total_gadgets += dmax - padded.degree(v);
  }

  ReductionCertificate cert;
  cert.target_degree = delta;
  cert.pipeline = pipeline;
  cert.source_n = source.vertex_count();
  cert.steps = std::move(steps);
  cert.per_gadget_alpha = per_gadget_alpha;
  cert.origin_range = {0, static_cast<Vertex>(padded.vertex_count())};
  cert.gadgets.reserve(total_gadgets);

  GraphBuilder b(padded.vertex_count());
  b.add_graph(padded, 0);
  for (Vertex v = 0; v < padded.vertex_count(); ++v) {
    const auto deficiency = dmax - padded.degree(v);
    for (std::size_t j = 1; j <= deficiency; ++j) {
      const Vertex base = b.add_vertices(order);
      b.add_graph(bp.graph, base);
      b.add_edge(base + port, v);
      cert.gadgets.push_back({v, static_cast<int>(j), kind, base, base + port});
    }
  }
  Graph result = std::move(b).build();

  cert.total_offset = static_cast<std::int64_t>(cert.gadgets.size()) * per_gadget_alpha;
  for (const auto& step : cert.steps) cert.total_offset += step.alpha_offset;
  cert.source_hash = content_hash(source);
  cert.result_hash = content_hash(result);
  return {std::move(result), std::move(cert)};
}

void require_source(const Graph& g, const ReductionCertificate& cert) {
  if (g.vertex_count() != cert.source_n) {
    throw InputError("graph has " + std::to_string(g.vertex_count()) + " vertices, certificate expects " +
                     std::to_string(cert.source_n));
  }
}

void require_independent(const Graph& g, const IndependentSet& s, const char* what) {
  if (!is_independent_set(g, s)) throw InputError(std::string(what) + " is not an independent set");
}

}  // namespace

PaddingResult ensure_odd_delta(const Graph& g) {
  if (g.vertex_count() == 0) throw InputError("parity fix needs a non-empty graph");
  const auto delta = g.max_degree();
  if (delta == 0) throw InputError("parity fix needs maximum degree at least 1");
  if (delta % 2 == 1) return {g, std::nullopt};

  const auto clique = delta + 2;
  const auto first = static_cast<Vertex>(g.vertex_count());
  ReductionStep step{ReductionStep::Kind::ParityFix, clique, {first, static_cast<Vertex>(first + clique)}, 1};
  return {disjoint_union(g, complete_graph(clique)), step};
}

PaddingResult pad_to_target(const Graph& g, int d) {
  const auto delta = g.max_degree();
  if (d < 0 || static_cast<std::size_t>(d) < delta) {
    throw InputError("padding target " + std::to_string(d) + " below maximum degree " + std::to_string(delta));
  }
  const auto leaves = static_cast<std::size_t>(d);
  if (leaves == delta) return {g, std::nullopt};

  const auto first = static_cast<Vertex>(g.vertex_count());
  ReductionStep step{ReductionStep::Kind::StarPad, leaves, {first, static_cast<Vertex>(first + leaves + 1)},
                     static_cast<std::int64_t>(leaves)};
  return {disjoint_union(g, star_graph(leaves)), step};
}

Reduction regularize(const Graph& g, int delta) {
  require_odd_degree(delta);
  return attach_gadgets(g, g, {}, Pipeline::General, delta);
}

Reduction regularize_planar(const Graph& g) {
  if (g.max_degree() > 5) {
    throw InputError("planar pipeline needs maximum degree at most 5, got " + std::to_string(g.max_degree()));
  }
  return attach_gadgets(g, g, {}, Pipeline::Planar, 5);
}

Reduction reduce_to_regular(const Graph& g, int degree, PipelineOptions options) {
  require_odd_degree(degree);
  if (g.max_degree() > static_cast<std::size_t>(degree)) {
    throw InputError("maximum degree " + std::to_string(g.max_degree()) + " exceeds target degree " +
                     std::to_string(degree));
  }
  if (g.vertex_count() == 0) return attach_gadgets(g, g, {}, Pipeline::General, degree);

  std::vector<ReductionStep> steps;
  Graph padded = g;
  const auto delta = g.max_degree();
  if (delta % 2 == 0 && options.strict) {
    throw InputError("strict mode: maximum degree " + std::to_string(delta) + " is even");
  }
  if (delta % 2 == 0 && delta > 0) {
    auto fixed = ensure_odd_delta(padded);
    padded = std::move(fixed.graph);
    steps.push_back(*fixed.step);
  }
  if (padded.max_degree() < static_cast<std::size_t>(degree)) {
    auto star = pad_to_target(padded, degree);
    padded = std::move(star.graph);
    steps.push_back(*star.step);
  }
  return attach_gadgets(g, padded, std::move(steps), Pipeline::General, degree);
}

std::size_t gadget_order(const ReductionCertificate& cert) {
  return cert.pipeline == Pipeline::Planar ? 25 : general_gadget_order(cert.target_degree);
}

IndependentSet forward_map(const Graph& g, const IndependentSet& i, const ReductionCertificate& cert) {
  require_source(g, cert);
  require_independent(g, i, "forward_map input");

  std::vector<Vertex> members(i.begin(), i.end());
  for (const auto& step : cert.steps) {
    if (step.kind == ReductionStep::Kind::ParityFix) {
      members.push_back(step.added.first);
    } else {
      for (Vertex v = step.added.first + 1; v < step.added.last; ++v) members.push_back(v);
    }
  }
  const auto bp = gadget_blueprint(cert.gadget_kind(), cert.target_degree);
  for (const auto& gadget : cert.gadgets) {
    for (Vertex w : bp.witness) members.push_back(gadget.id_offset + w);
  }
  return IndependentSet(std::move(members));
}

IndependentSet recover(const Graph& g_prime, const IndependentSet& i_prime, const ReductionCertificate& cert) {
  require_independent(g_prime, i_prime, "recover input");
  std::vector<Vertex> members;
  for (Vertex v : i_prime) {
    if (v < cert.source_n) members.push_back(v);
  }
  return IndependentSet(std::move(members));
}

IndependentSet normalize(const Graph& g_prime, const IndependentSet& i_prime, const ReductionCertificate& cert) {
  require_independent(g_prime, i_prime, "normalize input");
  const auto bp = gadget_blueprint(cert.gadget_kind(), cert.target_degree);
  const auto order = static_cast<Vertex>(bp.graph.vertex_count());

  std::vector<Vertex> members;
  auto it = i_prime.begin();
  for (; it != i_prime.end() && *it < cert.origin_range.last; ++it) members.push_back(*it);

  // Gadgets are laid out in increasing id order, so one sweep suffices.
  for (const auto& gadget : cert.gadgets) {
    std::vector<Vertex> inside;
    while (it != i_prime.end() && *it < gadget.id_offset) members.push_back(*it++);
    while (it != i_prime.end() && *it < gadget.id_offset + order) inside.push_back(*it++);
    const bool holds_port = std::find(inside.begin(), inside.end(), gadget.port) != inside.end();
    if (holds_port || inside.size() < bp.witness.size()) {
      inside.clear();
      for (Vertex w : bp.witness) inside.push_back(gadget.id_offset + w);
    }
    members.insert(members.end(), inside.begin(), inside.end());
  }
  members.insert(members.end(), it, i_prime.end());
  return IndependentSet(std::move(members));
}

}  // namespace regmis
