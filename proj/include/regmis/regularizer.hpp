#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "regmis/gadget.hpp"
#include "regmis/graph.hpp"

namespace regmis {

/// A disjoint component added in front of gadget attachment.
struct ReductionStep {
  enum class Kind {
    /// Complete graph on Δ+2 vertices; alpha contribution 1.
    ParityFix,
    /// Star with `size` leaves; alpha contribution `size`.
    StarPad,
  };

  Kind kind = Kind::ParityFix;
  /// Clique order for ParityFix, leaf count for StarPad.
  std::size_t size = 0;
  VertexRange added;
  std::int64_t alpha_offset = 0;

  friend bool operator==(const ReductionStep&, const ReductionStep&) = default;
};

enum class Pipeline { General, Planar };

struct GadgetInstance {
  Vertex owner = 0;
  /// 1-based position among the gadgets of `owner`.
  int index = 1;
  GadgetKind kind = GadgetKind::GeneralOdd;
  Vertex id_offset = 0;
  Vertex port = 0;

  friend bool operator==(const GadgetInstance&, const GadgetInstance&) = default;
};

/// Everything needed to relate independent sets of the source graph G and
/// the regular graph G':  alpha(G') = alpha(G) + total_offset.
///
/// Layout of G': the padded source (G followed by the step components) is
/// origin_range = [0, n_padded); gadgets follow in owner, index order.
struct ReductionCertificate {
  int target_degree = 0;
  Pipeline pipeline = Pipeline::General;
  std::size_t source_n = 0;
  std::vector<ReductionStep> steps;
  std::vector<GadgetInstance> gadgets;
  std::int64_t per_gadget_alpha = 0;
  std::int64_t total_offset = 0;
  VertexRange origin_range;
  std::string source_hash;
  std::string result_hash;

  GadgetKind gadget_kind() const {
    return pipeline == Pipeline::Planar ? GadgetKind::Planar5 : GadgetKind::GeneralOdd;
  }

  friend bool operator==(const ReductionCertificate&, const ReductionCertificate&) = default;
};

struct PaddingResult {
  Graph graph;
  std::optional<ReductionStep> step;
};

struct Reduction {
  Graph graph;
  ReductionCertificate certificate;
};

/// Makes the maximum degree odd by adding K_{Δ+2} when Δ is even.
/// Requires Δ(g) >= 1.
PaddingResult ensure_odd_delta(const Graph& g);

/// Adds a star with d leaves unless Δ(g) already equals d. Requires d >= Δ(g).
PaddingResult pad_to_target(const Graph& g, int d);

/// Attaches Δ - d_v general gadgets to every vertex v of g. Requires delta
/// odd >= 3 and Δ(g) <= delta; the result is delta-regular.
Reduction regularize(const Graph& g, int delta);

/// Attaches 5 - d_v planar gadgets to every vertex. Requires Δ(g) <= 5;
/// planarity of g is the caller's claim and is not tested.
Reduction regularize_planar(const Graph& g);

struct PipelineOptions {
  /// Reject inputs of even maximum degree instead of adding a parity clique.
  bool strict = false;
};

/// Parity fix, star padding and gadget attachment, in that order, recorded
/// in one certificate against the unpadded input. An empty input yields an
/// empty (vacuously regular) result.
Reduction reduce_to_regular(const Graph& g, int degree, PipelineOptions options = {});

/// Extends an independent set of the source graph to one of G' of size
/// |i| + total_offset. Throws InputError if `i` is not independent in `g`.
IndependentSet forward_map(const Graph& g, const IndependentSet& i, const ReductionCertificate& cert);

/// Restricts an independent set of G' to the source vertices.
IndependentSet recover(const Graph& g_prime, const IndependentSet& i_prime, const ReductionCertificate& cert);

/// Replaces the part of `i_prime` inside every gadget that holds the port or
/// is below the gadget's independence number by the gadget's port-free
/// maximum set. Never shrinks the set.
IndependentSet normalize(const Graph& g_prime, const IndependentSet& i_prime, const ReductionCertificate& cert);

/// Number of vertices of a gadget of the certificate's kind.
std::size_t gadget_order(const ReductionCertificate& cert);

}  // namespace regmis
