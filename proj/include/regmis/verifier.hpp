#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "regmis/gadget.hpp"
#include "regmis/graph.hpp"
#include "regmis/regularizer.hpp"
#include "regmis/solver.hpp"

namespace regmis {

enum class CheckStatus { Pass, Fail, Skipped };

std::string_view check_status_name(CheckStatus status);

struct Check {
  std::string name;
  CheckStatus status = CheckStatus::Skipped;
  std::string detail;
};

/// Checks in a fixed order. Skipped checks never fail the report.
struct VerificationReport {
  std::vector<Check> checks;

  bool passed() const;
  /// nullptr when no check carries that name.
  const Check* find(std::string_view name) const;
};

Check check_regular(const Graph& g, int d);

/// Purely structural re-verification of a reduction, in this order:
///   regular, origin-induced, gadget-blueprints, port-attachment,
///   gadget-counts, vertex-count, offset-arithmetic.
/// Gadget structure is compared against freshly built blueprints. Never
/// calls a solver. Throws InputError when the certificate hashes do not
/// match `g` and `g_prime`.
VerificationReport check_certificate(const Graph& g, const Graph& g_prime, const ReductionCertificate& cert);

/// alpha(g_prime) == alpha(g) + total_offset, both solved exactly. Skipped
/// when a solver budget runs out.
Check check_alpha_relation(const Graph& g, const Graph& g_prime, const ReductionCertificate& cert,
                           const SolverLimits& limits = {});

/// Certifies alpha(g_prime) = |i| + total_offset without solving g_prime,
/// provided |i| = alpha(g): the forward image of i is a lower bound, and the
/// partition of g_prime into the padded source and gadgets caps any
/// independent set at alpha(g) + padding + |gadgets| * alpha(gadget). The
/// gadget constant comes from the memoized per-kind oracle.
/// Throws InputError if `i` is not independent in `g`.
Check check_sandwich(const Graph& g, const Graph& g_prime, const ReductionCertificate& cert,
                     const IndependentSet& i);

/// General pipeline only: g_prime has exactly the triangles of the padded
/// source and all of them among origin vertices.
Check check_triangle_preservation(const Graph& g, const Graph& g_prime, const ReductionCertificate& cert);

/// Some maximum independent set avoids the port, and no independent set
/// through the port beats alpha. Records whether the port is strictly worse.
Check check_port_exclusion(GadgetKind kind, int delta, const SolverLimits& limits = {});
Check check_port_exclusion(const Graph& gadget, Vertex port, const SolverLimits& limits = {});

/// Planar pipeline only: m <= 3n - 6 and every gadget hangs off its owner
/// by a single cut edge.
Check check_planarity_necessary(const Graph& g_prime, const ReductionCertificate& cert);

struct VerifyOptions {
  bool with_oracle = false;
  SolverLimits limits;
  /// A maximum independent set of g, used for the sandwich check. Solved for
  /// when absent and with_oracle is set.
  std::optional<IndependentSet> claimed_maximum;
};

/// check_certificate followed by triangle, planarity, alpha-relation,
/// port-exclusion and sandwich checks.
VerificationReport verify_reduction(const Graph& g, const Graph& g_prime, const ReductionCertificate& cert,
                                    const VerifyOptions& options = {});

}  // namespace regmis
