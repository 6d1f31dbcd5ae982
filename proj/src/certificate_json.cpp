#include "regmis/certificate_json.hpp"

#include "regmis/errors.hpp"

namespace regmis {

namespace {

using nlohmann::json;

json range_to_json(VertexRange r) { return json::array({r.first, r.last}); }

VertexRange range_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2) throw InputError("vertex range must be [first, last]");
  VertexRange r{j.at(0).get<Vertex>(), j.at(1).get<Vertex>()};
  if (r.last < r.first) throw InputError("vertex range is reversed");
  return r;
}

std::string_view step_kind_name(ReductionStep::Kind kind) {
  return kind == ReductionStep::Kind::ParityFix ? "parity-fix" : "star-pad";
}

ReductionStep::Kind parse_step_kind(const std::string& name) {
  if (name == "parity-fix") return ReductionStep::Kind::ParityFix;
  if (name == "star-pad") return ReductionStep::Kind::StarPad;
  throw InputError("unknown reduction step '" + name + "'");
}

std::string_view pipeline_name(Pipeline p) { return p == Pipeline::Planar ? "planar" : "general"; }

Pipeline parse_pipeline(const std::string& name) {
  if (name == "general") return Pipeline::General;
  if (name == "planar") return Pipeline::Planar;
  throw InputError("unknown pipeline '" + name + "'");
}

}  // namespace

json certificate_to_json(const ReductionCertificate& cert) {
  json steps = json::array();
  for (const auto& s : cert.steps) {
    steps.push_back({{"kind", step_kind_name(s.kind)},
                     {"size", s.size},
                     {"added_vertex_range", range_to_json(s.added)},
                     {"alpha_offset", s.alpha_offset}});
  }
  json gadgets = json::array();
  for (const auto& g : cert.gadgets) {
    gadgets.push_back({{"owner", g.owner},
                       {"index", g.index},
                       {"kind", gadget_kind_name(g.kind)},
                       {"id_offset", g.id_offset},
                       {"port", g.port}});
  }
  return {{"target_degree", cert.target_degree},
          {"pipeline", pipeline_name(cert.pipeline)},
          {"source_n", cert.source_n},
          {"steps", std::move(steps)},
          {"gadgets", std::move(gadgets)},
          {"per_gadget_alpha", cert.per_gadget_alpha},
          {"total_offset", cert.total_offset},
          {"origin_range", range_to_json(cert.origin_range)},
          {"source_hash", cert.source_hash},
          {"result_hash", cert.result_hash}};
}

ReductionCertificate certificate_from_json(const json& j) {
  try {
    ReductionCertificate cert;
    cert.target_degree = j.at("target_degree").get<int>();
    cert.pipeline = parse_pipeline(j.at("pipeline").get<std::string>());
    cert.source_n = j.at("source_n").get<std::size_t>();
    for (const auto& s : j.at("steps")) {
      cert.steps.push_back({parse_step_kind(s.at("kind").get<std::string>()), s.at("size").get<std::size_t>(),
                            range_from_json(s.at("added_vertex_range")), s.at("alpha_offset").get<std::int64_t>()});
    }
    for (const auto& g : j.at("gadgets")) {
      cert.gadgets.push_back({g.at("owner").get<Vertex>(), g.at("index").get<int>(),
                              parse_gadget_kind(g.at("kind").get<std::string>()), g.at("id_offset").get<Vertex>(),
                              g.at("port").get<Vertex>()});
    }
    cert.per_gadget_alpha = j.at("per_gadget_alpha").get<std::int64_t>();
    cert.total_offset = j.at("total_offset").get<std::int64_t>();
    cert.origin_range = range_from_json(j.at("origin_range"));
    cert.source_hash = j.at("source_hash").get<std::string>();
    cert.result_hash = j.at("result_hash").get<std::string>();
    return cert;
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed certificate: ") + e.what());
  }
}

std::string dump_certificate(const ReductionCertificate& cert) { return certificate_to_json(cert).dump(2) + "\n"; }

ReductionCertificate parse_certificate(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw InputError(std::string("certificate is not valid JSON: ") + e.what());
  }
  return certificate_from_json(j);
}

json report_to_json(const VerificationReport& report) {
  json checks = json::array();
  for (const auto& c : report.checks) {
    checks.push_back({{"name", c.name}, {"status", check_status_name(c.status)}, {"detail", c.detail}});
  }
  return {{"overall", report.passed() ? "pass" : "fail"}, {"checks", std::move(checks)}};
}

}  // namespace regmis
