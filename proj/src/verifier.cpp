#include "regmis/verifier.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <string>

#include "regmis/errors.hpp"
#include "regmis/graph_io.hpp"

namespace regmis {

namespace {

Check pass(std::string name, std::string detail) { return {std::move(name), CheckStatus::Pass, std::move(detail)}; }
Check fail(std::string name, std::string detail) { return {std::move(name), CheckStatus::Fail, std::move(detail)}; }
Check skip(std::string name, std::string detail) {
  return {std::move(name), CheckStatus::Skipped, std::move(detail)};
}

std::string str(std::int64_t v) { return std::to_string(v); }

void require_matching_hashes(const Graph& g, const Graph& g_prime, const ReductionCertificate& cert) {
  if (content_hash(g) != cert.source_hash) throw InputError("source graph does not match the certificate hash");
  if (content_hash(g_prime) != cert.result_hash) {
    throw InputError("reduced graph does not match the certificate hash");
  }
}

struct PaddedSource {
  std::optional<Graph> graph;
  std::string problem;
};

/// Replays the padding steps on g.
PaddedSource rebuild_padded(const Graph& g, const ReductionCertificate& cert) {
  if (g.vertex_count() != cert.source_n) {
    return {std::nullopt, "source has " + std::to_string(g.vertex_count()) + " vertices, certificate says " +
                              std::to_string(cert.source_n)};
  }
  Graph padded = g;
  for (std::size_t s = 0; s < cert.steps.size(); ++s) {
    const auto& step = cert.steps[s];
    const std::string where = "step " + std::to_string(s) + ": ";
    if (step.added.first != padded.vertex_count()) return {std::nullopt, where + "range does not follow previous vertices"};
    if (step.kind == ReductionStep::Kind::ParityFix) {
      if (step.size != padded.max_degree() + 2 || padded.max_degree() % 2 != 0 || padded.max_degree() == 0) {
        return {std::nullopt, where + "parity clique order does not match an even maximum degree"};
      }
      if (step.added.size() != step.size) return {std::nullopt, where + "range size differs from clique order"};
      padded = disjoint_union(padded, complete_graph(step.size));
    } else {
      if (step.size <= padded.max_degree()) return {std::nullopt, where + "star does not raise the maximum degree"};
      if (step.added.size() != step.size + 1) return {std::nullopt, where + "range size differs from star order"};
      padded = disjoint_union(padded, star_graph(step.size));
    }
  }
  return {std::move(padded), ""};
}

bool gadget_ranges_valid(const Graph& g_prime, const ReductionCertificate& cert, std::size_t order) {
  return std::all_of(cert.gadgets.begin(), cert.gadgets.end(), [&](const GadgetInstance& gi) {
    return static_cast<std::size_t>(gi.id_offset) + order <= g_prime.vertex_count();
  });
}

Check check_origin_induced(const Graph& g_prime, const ReductionCertificate& cert, const PaddedSource& padded) {
  const std::string name = "origin-induced";
  if (!padded.graph) return fail(name, padded.problem);
  const Graph& p = *padded.graph;
  if (cert.origin_range.first != 0 || cert.origin_range.last != p.vertex_count()) {
    return fail(name, "origin range does not cover exactly the padded source [0, " +
                          std::to_string(p.vertex_count()) + ")");
  }
  if (p.vertex_count() > g_prime.vertex_count()) return fail(name, "reduced graph smaller than the padded source");
  for (Vertex u = 0; u < p.vertex_count(); ++u) {
    auto nb = g_prime.neighbors(u);
    std::vector<Vertex> inside(nb.begin(), std::lower_bound(nb.begin(), nb.end(), cert.origin_range.last));
    auto expected = p.neighbors(u);
    if (!std::equal(inside.begin(), inside.end(), expected.begin(), expected.end())) {
      return fail(name, "edges at origin vertex " + std::to_string(u) + " differ from the padded source");
    }
  }
  return pass(name, std::to_string(p.vertex_count()) + " origin vertices induce the padded source");
}

Check check_blueprints(const Graph& g_prime, const ReductionCertificate& cert, const GadgetBlueprint& bp) {
  const std::string name = "gadget-blueprints";
  const auto order = bp.graph.vertex_count();
  std::size_t expected_offset = cert.origin_range.last;
  for (std::size_t k = 0; k < cert.gadgets.size(); ++k) {
    const auto& gi = cert.gadgets[k];
    const std::string where = "gadget " + std::to_string(k) + ": ";
    if (gi.kind != cert.gadget_kind()) return fail(name, where + "kind does not match the pipeline");
    if (gi.id_offset != expected_offset) return fail(name, where + "id range is not contiguous with its predecessor");
    if (expected_offset + order > g_prime.vertex_count()) return fail(name, where + "id range exceeds the graph");
    if (gi.port != gi.id_offset + *bp.port) return fail(name, where + "port is not the blueprint port");
    for (Vertex x = 0; x < order; ++x) {
      auto nb = g_prime.neighbors(gi.id_offset + x);
      auto lo = std::lower_bound(nb.begin(), nb.end(), gi.id_offset);
      auto hi = std::lower_bound(nb.begin(), nb.end(), static_cast<Vertex>(gi.id_offset + order));
      auto expected = bp.graph.neighbors(x);
      if (static_cast<std::size_t>(hi - lo) != expected.size() ||
          !std::equal(lo, hi, expected.begin(), [&](Vertex got, Vertex want) { return got - gi.id_offset == want; })) {
        return fail(name, where + "internal edges at local vertex " + std::to_string(x) + " (" +
                              bp.roles[x].to_string() + ") differ from the blueprint");
      }
    }
    expected_offset += order;
  }
  if (expected_offset != g_prime.vertex_count()) {
    return fail(name, "gadgets do not cover the vertices after the origin range");
  }
  return pass(name, std::to_string(cert.gadgets.size()) + " gadgets match the " +
                        std::string(gadget_kind_name(cert.gadget_kind())) + " blueprint");
}

Check check_port_attachment(const Graph& g_prime, const ReductionCertificate& cert, std::size_t order) {
  const std::string name = "port-attachment";
  if (!gadget_ranges_valid(g_prime, cert, order)) return fail(name, "gadget id ranges exceed the graph");
  for (std::size_t k = 0; k < cert.gadgets.size(); ++k) {
    const auto& gi = cert.gadgets[k];
    const std::string where = "gadget " + std::to_string(k) + ": ";
    if (gi.owner >= cert.origin_range.last) return fail(name, where + "owner is not an origin vertex");
    for (Vertex x = gi.id_offset; x < gi.id_offset + order; ++x) {
      std::vector<Vertex> outside;
      for (Vertex w : g_prime.neighbors(x)) {
        if (w < gi.id_offset || w >= gi.id_offset + order) outside.push_back(w);
      }
      if (x == gi.port) {
        if (outside.size() != 1 || outside[0] != gi.owner) {
          return fail(name, where + "port is not attached to exactly its owner " + std::to_string(gi.owner));
        }
      } else if (!outside.empty()) {
        return fail(name, where + "non-port vertex " + std::to_string(x) + " has an edge leaving the gadget");
      }
    }
  }
  return pass(name, "every port reaches exactly its owner");
}

Check check_gadget_counts(const ReductionCertificate& cert, const PaddedSource& padded) {
  const std::string name = "gadget-counts";
  if (!padded.graph) return fail(name, "padded source unavailable: " + padded.problem);
  const Graph& p = *padded.graph;
  const auto d = static_cast<std::size_t>(std::max(cert.target_degree, 0));
  std::vector<std::size_t> count(p.vertex_count(), 0);
  Vertex previous_owner = 0;
  for (const auto& gi : cert.gadgets) {
    if (gi.owner >= p.vertex_count()) return fail(name, "gadget owner " + std::to_string(gi.owner) + " out of range");
    if (gi.owner < previous_owner) return fail(name, "gadgets are not ordered by owner");
    previous_owner = gi.owner;
    if (gi.index != static_cast<int>(++count[gi.owner])) {
      return fail(name, "gadget indices of vertex " + std::to_string(gi.owner) + " are not 1, 2, ...");
    }
  }
  for (Vertex v = 0; v < p.vertex_count(); ++v) {
    if (p.degree(v) > d || count[v] != d - p.degree(v)) {
      return fail(name, "vertex " + std::to_string(v) + " of degree " + std::to_string(p.degree(v)) + " has " +
                            std::to_string(count[v]) + " gadgets, expected " +
                            (p.degree(v) > d ? std::string("none possible") : std::to_string(d - p.degree(v))));
    }
  }
  return pass(name, "every vertex v carries target - d_v gadgets");
}

Check check_vertex_count(const Graph& g_prime, const ReductionCertificate& cert, const PaddedSource& padded,
                         std::size_t order) {
  const std::string name = "vertex-count";
  if (!padded.graph) return fail(name, "padded source unavailable: " + padded.problem);
  const Graph& p = *padded.graph;
  const auto d = static_cast<std::size_t>(std::max(cert.target_degree, 0));
  std::size_t expected = p.vertex_count();
  for (Vertex v = 0; v < p.vertex_count(); ++v) {
    if (p.degree(v) <= d) expected += (d - p.degree(v)) * order;
  }
  const std::size_t bound = p.vertex_count() * (1 + d * order);
  if (g_prime.vertex_count() != expected) {
    return fail(name, "reduced graph has " + std::to_string(g_prime.vertex_count()) + " vertices, expected " +
                          std::to_string(expected));
  }
  if (g_prime.vertex_count() > bound) return fail(name, "vertex count exceeds the size bound " + std::to_string(bound));
  return pass(name, std::to_string(expected) + " vertices, within the bound " + std::to_string(bound));
}

Check check_offset_arithmetic(const ReductionCertificate& cert) {
  const std::string name = "offset-arithmetic";
  std::int64_t total = 0;
  for (const auto& step : cert.steps) {
    const std::int64_t expected =
        step.kind == ReductionStep::Kind::ParityFix ? 1 : static_cast<std::int64_t>(step.size);
    if (step.alpha_offset != expected) {
      return fail(name, "step offset " + str(step.alpha_offset) + " should be " + str(expected));
    }
    total += step.alpha_offset;
  }
  total += static_cast<std::int64_t>(cert.gadgets.size()) * cert.per_gadget_alpha;
  if (total != cert.total_offset) {
    return fail(name, "total_offset " + str(cert.total_offset) + " but steps and gadgets sum to " + str(total));
  }
  return pass(name, "total_offset " + str(total) + " = steps + " + std::to_string(cert.gadgets.size()) + " x " +
                        str(cert.per_gadget_alpha));
}

std::optional<GadgetBlueprint> blueprint_for(const ReductionCertificate& cert, std::string* problem) {
  try {
    if (cert.pipeline == Pipeline::Planar && cert.target_degree != 5) {
      *problem = "planar pipeline must target degree 5";
      return std::nullopt;
    }
    return gadget_blueprint(cert.gadget_kind(), cert.target_degree);
  } catch (const InputError& e) {
    *problem = e.what();
    return std::nullopt;
  }
}

}  // namespace

std::string_view check_status_name(CheckStatus status) {
  switch (status) {
    case CheckStatus::Pass:
      return "pass";
    case CheckStatus::Fail:
      return "fail";
    case CheckStatus::Skipped:
      return "skipped";
  }
  return "?";
}

bool VerificationReport::passed() const {
  return std::none_of(checks.begin(), checks.end(), [](const Check& c) { return c.status == CheckStatus::Fail; });
}

const Check* VerificationReport::find(std::string_view name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

Check check_regular(const Graph& g, int d) {
  const std::string name = "regular";
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (d < 0 || g.degree(v) != static_cast<std::size_t>(d)) {
      return fail(name, "vertex " + std::to_string(v) + " has degree " + std::to_string(g.degree(v)) +
                            ", expected " + std::to_string(d));
    }
  }
  return pass(name, "all " + std::to_string(g.vertex_count()) + " vertices have degree " + std::to_string(d));
}

VerificationReport check_certificate(const Graph& g, const Graph& g_prime, const ReductionCertificate& cert) {
  require_matching_hashes(g, g_prime, cert);
  VerificationReport report;
  report.checks.push_back(check_regular(g_prime, cert.target_degree));

  const auto padded = rebuild_padded(g, cert);
  report.checks.push_back(check_origin_induced(g_prime, cert, padded));

  std::string problem;
  const auto bp = blueprint_for(cert, &problem);
  if (bp) {
    const auto order = bp->graph.vertex_count();
    report.checks.push_back(check_blueprints(g_prime, cert, *bp));
    report.checks.push_back(check_port_attachment(g_prime, cert, order));
    report.checks.push_back(check_gadget_counts(cert, padded));
    report.checks.push_back(check_vertex_count(g_prime, cert, padded, order));
  } else {
    for (const char* name : {"gadget-blueprints", "port-attachment", "gadget-counts", "vertex-count"}) {
      report.checks.push_back(fail(name, "no blueprint: " + problem));
    }
  }
  report.checks.push_back(check_offset_arithmetic(cert));
  return report;
}

Check check_alpha_relation(const Graph& g, const Graph& g_prime, const ReductionCertificate& cert,
                           const SolverLimits& limits) {
  const std::string name = "alpha-relation";
  try {
    const auto a = static_cast<std::int64_t>(solve_mis(g, limits).alpha);
    const auto b = static_cast<std::int64_t>(solve_mis(g_prime, limits).alpha);
    const std::string detail = "alpha(G')=" + str(b) + ", alpha(G)=" + str(a) + ", offset=" + str(cert.total_offset);
    return b == a + cert.total_offset ? pass(name, detail) : fail(name, detail);
  } catch (const ResourceLimitError& e) {
    return skip(name, std::string("solver budget exhausted: ") + e.what());
  }
}

Check check_sandwich(const Graph& g, const Graph& g_prime, const ReductionCertificate& cert,
                     const IndependentSet& i) {
  const std::string name = "sandwich";
  if (!is_independent_set(g, i)) throw InputError("claimed maximum set is not independent in the source graph");

  const auto structure = check_certificate(g, g_prime, cert);
  for (const auto& c : structure.checks) {
    if (c.status == CheckStatus::Fail) return fail(name, "structure check '" + c.name + "' failed: " + c.detail);
  }

  const auto image = forward_map(g, i, cert);
  if (!is_independent_set(g_prime, image)) return fail(name, "forward image is not independent in G'");
  const auto lower = static_cast<std::int64_t>(image.size());
  const auto claimed = static_cast<std::int64_t>(i.size()) + cert.total_offset;
  if (lower != claimed) {
    return fail(name, "forward image has " + str(lower) + " vertices, certificate promises " + str(claimed));
  }

  std::int64_t upper = static_cast<std::int64_t>(i.size());
  for (const auto& step : cert.steps) {
    upper += step.kind == ReductionStep::Kind::ParityFix ? 1 : static_cast<std::int64_t>(step.size);
  }
  const auto gadget_cap = gadget_alpha(cert.gadget_kind(), cert.target_degree);
  upper += static_cast<std::int64_t>(cert.gadgets.size()) * gadget_cap;
  if (upper != lower) {
    return fail(name, "lower bound " + str(lower) + " and structural upper bound " + str(upper) + " differ");
  }
  return pass(name, "alpha(G') = " + str(lower) + " certified without solving G', conditional on |I| = " +
                        std::to_string(i.size()) + " being alpha(G)");
}

Check check_triangle_preservation(const Graph& g, const Graph& g_prime, const ReductionCertificate& cert) {
  const std::string name = "triangle-preservation";
  if (cert.pipeline == Pipeline::Planar) return skip(name, "planar gadgets contain triangles");
  const auto padded = rebuild_padded(g, cert);
  if (!padded.graph) return fail(name, "padded source unavailable: " + padded.problem);
  if (cert.origin_range.last > g_prime.vertex_count()) return fail(name, "origin range exceeds the reduced graph");

  std::vector<Vertex> origin(cert.origin_range.size());
  for (std::size_t k = 0; k < origin.size(); ++k) origin[k] = cert.origin_range.first + static_cast<Vertex>(k);
  const auto total = triangle_count(g_prime);
  const auto among_origin = triangle_count(induced_subgraph(g_prime, origin).first);
  const auto source = triangle_count(*padded.graph);
  std::ostringstream detail;
  detail << "G' has " << total << " triangles, " << among_origin << " among origin vertices; padded source has "
         << source << " (input alone " << triangle_count(g) << ")";
  return total == source && total == among_origin ? pass(name, detail.str()) : fail(name, detail.str());
}

Check check_port_exclusion(const Graph& gadget, Vertex port, const SolverLimits& limits) {
  const std::string name = "port-exclusion";
  try {
    const auto p = port_profile(gadget, port, limits);
    std::ostringstream detail;
    detail << "alpha=" << p.alpha << ", best with port=" << p.with_port << ", best without port="
           << p.without_port << (p.with_port < p.alpha ? " (strict)" : " (tie)");
    const bool ok = p.with_port <= p.alpha && p.without_port == p.alpha;
    return ok ? pass(name, detail.str()) : fail(name, detail.str());
  } catch (const ResourceLimitError& e) {
    return skip(name, std::string("solver budget exhausted: ") + e.what());
  }
}

Check check_port_exclusion(GadgetKind kind, int delta, const SolverLimits& limits) {
  const auto bp = gadget_blueprint(kind, delta);
  if (!bp.port) throw InputError("gadget kind has no port");
  return check_port_exclusion(bp.graph, *bp.port, limits);
}

Check check_planarity_necessary(const Graph& g_prime, const ReductionCertificate& cert) {
  const std::string name = "planarity-necessary";
  if (cert.pipeline != Pipeline::Planar) return skip(name, "not a planar pipeline");
  const auto n = g_prime.vertex_count();
  const auto m = g_prime.edge_count();
  if (n >= 3 && m > 3 * n - 6) {
    return fail(name, "m=" + std::to_string(m) + " exceeds 3n-6=" + std::to_string(3 * n - 6));
  }
  const std::size_t order = gadget_order(cert);
  if (!gadget_ranges_valid(g_prime, cert, order)) return fail(name, "gadget id ranges exceed the graph");
  for (std::size_t k = 0; k < cert.gadgets.size(); ++k) {
    const auto& gi = cert.gadgets[k];
    std::size_t leaving = 0;
    bool via_port = false;
    for (Vertex x = gi.id_offset; x < gi.id_offset + order; ++x) {
      for (Vertex w : g_prime.neighbors(x)) {
        if (w < gi.id_offset || w >= gi.id_offset + order) {
          ++leaving;
          via_port = x == gi.port && w == gi.owner;
        }
      }
    }
    if (leaving != 1 || !via_port) {
      return fail(name, "gadget " + std::to_string(k) + " is not attached by a single cut edge (" +
                            std::to_string(leaving) + " edges leave it)");
    }
  }
  return pass(name, "m=" + std::to_string(m) + " <= 3n-6=" + std::to_string(n >= 3 ? 3 * n - 6 : 0) +
                        "; every gadget hangs off a single cut edge");
}

VerificationReport verify_reduction(const Graph& g, const Graph& g_prime, const ReductionCertificate& cert,
                                    const VerifyOptions& options) {
  auto report = check_certificate(g, g_prime, cert);
  report.checks.push_back(check_triangle_preservation(g, g_prime, cert));
  report.checks.push_back(check_planarity_necessary(g_prime, cert));

  if (options.with_oracle) {
    report.checks.push_back(check_alpha_relation(g, g_prime, cert, options.limits));
    report.checks.push_back(check_port_exclusion(cert.gadget_kind(), cert.target_degree, options.limits));
  } else {
    report.checks.push_back(skip("alpha-relation", "oracle checks disabled"));
    report.checks.push_back(skip("port-exclusion", "oracle checks disabled"));
  }

  std::optional<IndependentSet> maximum = options.claimed_maximum;
  std::string sandwich_skip = "no maximum independent set of G supplied";
  if (!maximum && options.with_oracle) {
    try {
      maximum = solve_mis(g, options.limits).witness;
    } catch (const ResourceLimitError& e) {
      sandwich_skip = std::string("solver budget exhausted on G: ") + e.what();
    }
  }
  report.checks.push_back(maximum ? check_sandwich(g, g_prime, cert, *maximum) : skip("sandwich", sandwich_skip));
  return report;
}

}  // namespace regmis
