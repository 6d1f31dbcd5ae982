#include "cli.hpp"

#include <chrono>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "regmis/certificate_json.hpp"
#include "regmis/errors.hpp"
#include "regmis/gadget.hpp"
#include "regmis/graph_io.hpp"
#include "regmis/regularizer.hpp"
#include "regmis/solver.hpp"
#include "regmis/verifier.hpp"

namespace regmis::cli {

namespace {

using nlohmann::json;

/// A request that is well formed but cannot be satisfied.
class Infeasible : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SolverFlags {
  std::optional<std::uint64_t> budget_nodes;
  std::optional<double> budget_secs;
  std::size_t max_brute_n = 26;

  void attach(CLI::App* cmd) {
    cmd->add_option("--budget-nodes", budget_nodes, "Branch-and-bound node cap");
    cmd->add_option("--budget-secs", budget_secs, "Wall-clock cap in seconds");
    cmd->add_option("--max-brute-n", max_brute_n, "Largest graph the brute-force solver accepts")
        ->capture_default_str();
  }

  SolverLimits limits() const {
    SolverLimits l;
    l.max_brute_n = max_brute_n;
    l.node_budget = budget_nodes;
    if (budget_secs) {
      if (*budget_secs <= 0) throw InputError("--budget-secs must be positive");
      l.time_budget = std::chrono::milliseconds(static_cast<std::int64_t>(*budget_secs * 1000.0 + 0.5));
    }
    l.validate();
    return l;
  }
};

Graph load_graph(const std::string& path, GraphFormat format, std::ostream& err) {
  std::vector<std::string> warnings;
  auto g = read_graph_file(path, format, &warnings);
  for (const auto& w : warnings) err << "warning: " << path << ": " << w << '\n';
  return g;
}

IndependentSet read_solution(const std::string& path) {
  std::istringstream in(read_text_file(path));
  std::vector<Vertex> ids;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    auto last = line.find_last_not_of(" \t\r");
    auto token = line.substr(first, last - first + 1);
    std::size_t used = 0;
    unsigned long value = 0;
    try {
      value = std::stoul(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != token.size() || token.front() == '-') {
      throw InputError(path + ":" + std::to_string(line_no) + ": expected a vertex id, got '" + token + "'");
    }
    ids.push_back(static_cast<Vertex>(value));
  }
  return IndependentSet(std::move(ids));
}

std::string solution_text(const IndependentSet& s) {
  std::ostringstream out;
  for (Vertex v : s) out << v << '\n';
  return out.str();
}

json degree_histogram(const Graph& g) {
  std::map<std::size_t, std::size_t> hist;
  for (Vertex v = 0; v < g.vertex_count(); ++v) ++hist[g.degree(v)];
  json out = json::object();
  for (auto [d, count] : hist) out[std::to_string(d)] = count;
  return out;
}

void emit(std::ostream& out, const json& j, bool as_json) {
  if (as_json) {
    out << j.dump(2) << '\n';
    return;
  }
  for (const auto& [key, value] : j.items()) out << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Degree-regularizing reductions for maximum independent set"};
  app.require_subcommand(1);
  std::optional<std::uint64_t> seed;
  app.add_option("--seed", seed, "Reserved for randomized features; currently unused");

  std::string format_name_arg = "dimacs-col";
  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format_name_arg, "dimacs-col or edge-list")->capture_default_str();
  };

  // regularize
  auto* reg = app.add_subcommand("regularize", "Reduce a graph to a regular graph plus certificate");
  std::string reg_input, reg_output, reg_cert;
  std::optional<int> reg_degree;
  bool reg_planar = false, reg_strict = false, reg_json = false;
  reg->add_option("-i,--input", reg_input, "Input graph")->required();
  reg->add_option("-o,--output", reg_output, "Output path for the regular graph")->required();
  reg->add_option("--cert", reg_cert, "Output path for the certificate JSON")->required();
  reg->add_option("--degree", reg_degree, "Odd target degree >= 3");
  reg->add_flag("--planar", reg_planar, "5-regular planar pipeline");
  reg->add_flag("--strict", reg_strict, "Reject inputs of even maximum degree");
  reg->add_flag("--json", reg_json, "Print the summary as JSON");
  add_format(reg);

  // solve
  auto* solve = app.add_subcommand("solve", "Exact maximum independent set");
  std::string solve_input, solve_method = "auto";
  SolverFlags solve_flags;
  solve->add_option("-i,--input", solve_input, "Input graph")->required();
  solve->add_option("--method", solve_method, "auto, brute or bb")
      ->check(CLI::IsMember({"auto", "brute", "bb"}))
      ->capture_default_str();
  solve_flags.attach(solve);
  add_format(solve);

  // verify
  auto* verify = app.add_subcommand("verify", "Re-verify a reduction against its certificate");
  std::string ver_graph, ver_reduced, ver_cert, ver_witness;
  bool ver_oracle = false;
  SolverFlags ver_flags;
  verify->add_option("--graph", ver_graph, "Source graph")->required();
  verify->add_option("--reduced", ver_reduced, "Regular graph")->required();
  verify->add_option("--cert", ver_cert, "Certificate JSON")->required();
  verify->add_option("--witness", ver_witness, "Maximum independent set of the source, one id per line");
  verify->add_flag("--with-oracle", ver_oracle, "Run solver-backed checks");
  ver_flags.attach(verify);
  add_format(verify);

  // recover
  auto* rec = app.add_subcommand("recover", "Map an independent set of G' back to G");
  std::string rec_reduced, rec_cert, rec_solution, rec_output;
  bool rec_json = false;
  rec->add_option("--reduced", rec_reduced, "Regular graph")->required();
  rec->add_option("--cert", rec_cert, "Certificate JSON")->required();
  rec->add_option("--solution", rec_solution, "Independent set of G', one id per line")->required();
  rec->add_option("-o,--output", rec_output, "Write the recovered set here");
  rec->add_flag("--json", rec_json, "Print the summary as JSON");
  add_format(rec);

  // gadget
  auto* gad = app.add_subcommand("gadget", "Dump a gadget and its role map");
  std::string gad_kind = "general", gad_output, gad_roles;
  int gad_degree = 3;
  bool gad_json = false;
  gad->add_option("--kind", gad_kind, "general, icosa or planar")
      ->check(CLI::IsMember({"general", "icosa", "planar", "planar5"}))
      ->capture_default_str();
  gad->add_option("--degree", gad_degree, "Degree of the general gadget")->capture_default_str();
  gad->add_option("-o,--output", gad_output, "Graph output path (stdout if omitted)");
  gad->add_option("--roles", gad_roles, "Role map JSON output path");
  gad->add_flag("--json", gad_json, "Print graph text, roles, port and alpha as one JSON document");
  add_format(gad);

  // stats
  auto* stats = app.add_subcommand("stats", "Instance statistics");
  std::string stats_input;
  bool stats_json = false;
  stats->add_option("-i,--input", stats_input, "Input graph")->required();
  stats->add_flag("--json", stats_json, "Print as JSON");
  add_format(stats);

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kBadInput;
  }

  try {
    const auto format = parse_format_name(format_name_arg);

    if (*reg) {
      if (reg_planar == reg_degree.has_value()) throw InputError("regularize needs exactly one of --degree or --planar");
      auto g = load_graph(reg_input, format, err);
      Reduction r;
      if (reg_planar) {
        if (g.max_degree() > 5) throw Infeasible("maximum degree " + std::to_string(g.max_degree()) + " exceeds 5");
        r = regularize_planar(g);
      } else {
        require_odd_degree(*reg_degree);
        if (g.max_degree() > static_cast<std::size_t>(*reg_degree)) {
          throw Infeasible("maximum degree " + std::to_string(g.max_degree()) + " exceeds target degree " +
                           std::to_string(*reg_degree));
        }
        r = reduce_to_regular(g, *reg_degree, {reg_strict});
      }
      write_text_file(reg_output, serialize_graph(r.graph, format));
      write_text_file(reg_cert, dump_certificate(r.certificate));
      emit(out,
           {{"n", r.graph.vertex_count()},
            {"m", r.graph.edge_count()},
            {"target_degree", r.certificate.target_degree},
            {"steps", r.certificate.steps.size()},
            {"gadgets", r.certificate.gadgets.size()},
            {"per_gadget_alpha", r.certificate.per_gadget_alpha},
            {"total_offset", r.certificate.total_offset}},
           reg_json);
      return kOk;
    }

    if (*solve) {
      auto g = load_graph(solve_input, format, err);
      const auto limits = solve_flags.limits();
      const auto start = std::chrono::steady_clock::now();
      try {
        SolveResult result = solve_method == "brute" ? mis_bruteforce(g, limits)
                             : solve_method == "bb"  ? mis_branch_bound(g, limits)
                                                     : solve_mis(g, limits);
        const auto millis =
            std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
        out << json{{"alpha", result.alpha},
                    {"witness", result.witness.members()},
                    {"nodes", result.nodes_explored},
                    {"millis", millis},
                    {"method", method_name(result.method)}}
                   .dump(2)
            << '\n';
        return kOk;
      } catch (const ResourceLimitError& e) {
        out << json{{"error", e.what()}, {"lower_bound", e.lower_bound()}}.dump(2) << '\n';
        return kOutOfBudget;
      }
    }

    if (*verify) {
      auto g = load_graph(ver_graph, format, err);
      auto gp = load_graph(ver_reduced, format, err);
      auto cert = parse_certificate(read_text_file(ver_cert));
      VerifyOptions options;
      options.with_oracle = ver_oracle;
      options.limits = ver_flags.limits();
      if (!ver_witness.empty()) options.claimed_maximum = read_solution(ver_witness);
      auto report = verify_reduction(g, gp, cert, options);
      out << report_to_json(report).dump(2) << '\n';
      return report.passed() ? kOk : kFailed;
    }

    if (*rec) {
      auto gp = load_graph(rec_reduced, format, err);
      auto cert = parse_certificate(read_text_file(rec_cert));
      if (content_hash(gp) != cert.result_hash) throw InputError("reduced graph does not match the certificate hash");
      auto i_prime = read_solution(rec_solution);
      auto recovered = recover(gp, i_prime, cert);
      const auto input_size = static_cast<std::int64_t>(i_prime.size());
      const auto bound = std::max<std::int64_t>(0, input_size - cert.total_offset);
      const bool meets = static_cast<std::int64_t>(recovered.size()) >= bound;
      if (!rec_output.empty()) write_text_file(rec_output, solution_text(recovered));
      emit(out,
           {{"input_size", input_size},
            {"total_offset", cert.total_offset},
            {"bound", bound},
            {"recovered_size", recovered.size()},
            {"meets_bound", meets},
            {"recovered", recovered.members()}},
           rec_json);
      return meets ? kOk : kFailed;
    }

    if (*gad) {
      const auto kind = parse_gadget_kind(gad_kind);
      Gadget g = kind == GadgetKind::GeneralOdd  ? build_general_gadget(gad_degree)
                 : kind == GadgetKind::Planar5   ? build_planar_gadget()
                                                 : build_icosa_gadget();
      json roles = json::object();
      for (std::size_t v = 0; v < g.layout.roles.size(); ++v) roles[std::to_string(v)] = g.layout.roles[v].to_string();
      const auto text = serialize_graph(g.graph, format);
      if (gad_json) {
        json doc{{"kind", gadget_kind_name(kind)},
                 {"graph", text},
                 {"roles", roles},
                 {"alpha", g.layout.internal_alpha},
                 {"witness", g.layout.witness}};
        doc["port"] = g.layout.port ? json(*g.layout.port) : json(nullptr);
        out << doc.dump(2) << '\n';
      } else if (gad_output.empty()) {
        out << text;
      } else {
        write_text_file(gad_output, text);
      }
      if (!gad_roles.empty()) write_text_file(gad_roles, roles.dump(2) + "\n");
      return kOk;
    }

    if (*stats) {
      auto g = load_graph(stats_input, format, err);
      const bool regular = g.vertex_count() == 0 || g.min_degree() == g.max_degree();
      emit(out,
           {{"n", g.vertex_count()},
            {"m", g.edge_count()},
            {"min_degree", g.min_degree()},
            {"max_degree", g.max_degree()},
            {"regular", regular},
            {"degree_histogram", degree_histogram(g)},
            {"triangles", triangle_count(g)}},
           stats_json);
      return kOk;
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const Infeasible& e) {
    err << "infeasible: " << e.what() << '\n';
    return kFailed;
  } catch (const ResourceLimitError& e) {
    err << "budget exhausted: " << e.what() << " (lower bound " << e.lower_bound() << ")\n";
    return kOutOfBudget;
  }
  return kBadInput;
}

}  // namespace regmis::cli
