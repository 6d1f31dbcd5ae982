#include "regmis/graph_io.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <cstdint>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <vector>

#include "regmis/errors.hpp"

namespace regmis {

namespace {

std::vector<std::string_view> split_words(std::string_view line) {
  std::vector<std::string_view> words;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) words.push_back(line.substr(i, j - i));
    i = j;
  }
  return words;
}

std::uint64_t parse_uint(std::string_view word, std::size_t line_no) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
  if (ec != std::errc() || ptr != word.data() + word.size()) {
    throw InputError("line " + std::to_string(line_no) + ": expected a non-negative integer, got '" +
                     std::string(word) + "'");
  }
  return value;
}

template <typename Fn>
void for_each_line(std::string_view text, Fn&& fn) {
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    fn(text.substr(start, end - start), line_no);
    if (end == text.size()) break;
    start = end + 1;
  }
}

class EdgeCollector {
 public:
  explicit EdgeCollector(std::vector<std::string>* warnings) : warnings_(warnings) {}

  void add(std::uint64_t u, std::uint64_t v, std::size_t line_no) {
    if (u == v) throw InputError("line " + std::to_string(line_no) + ": self-loop at vertex " + std::to_string(u));
    Edge e{static_cast<Vertex>(std::min(u, v)), static_cast<Vertex>(std::max(u, v))};
    if (!seen_.insert(e).second) {
      ++duplicates_;
      if (warnings_ != nullptr) {
        warnings_->push_back("line " + std::to_string(line_no) + ": duplicate edge {" +
                             std::to_string(e.first) + "," + std::to_string(e.second) + "} ignored");
      }
      return;
    }
    edges_.push_back(e);
  }

  std::size_t duplicates() const { return duplicates_; }
  Graph build(std::size_t n) const { return graph_from_edges(n, edges_); }

 private:
  std::vector<std::string>* warnings_;
  std::set<Edge> seen_;
  std::vector<Edge> edges_;
  std::size_t duplicates_ = 0;
};

constexpr std::uint64_t kMaxVertices = std::uint64_t{1} << 31;

Graph parse_dimacs(std::string_view text, std::vector<std::string>* warnings) {
  bool have_header = false;
  std::uint64_t n = 0;
  std::uint64_t declared_m = 0;
  std::size_t edge_lines = 0;
  EdgeCollector edges(warnings);

  for_each_line(text, [&](std::string_view line, std::size_t line_no) {
    auto words = split_words(line);
    if (words.empty() || words[0] == "c") return;
    if (words[0] == "p") {
      if (have_header) throw InputError("line " + std::to_string(line_no) + ": second 'p' header");
      if (words.size() != 4 || (words[1] != "edge" && words[1] != "col")) {
        throw InputError("line " + std::to_string(line_no) + ": malformed header, expected 'p edge <n> <m>'");
      }
      n = parse_uint(words[2], line_no);
      declared_m = parse_uint(words[3], line_no);
      if (n > kMaxVertices) throw InputError("line " + std::to_string(line_no) + ": vertex count too large");
      have_header = true;
      return;
    }
    if (words[0] == "e") {
      if (!have_header) throw InputError("line " + std::to_string(line_no) + ": edge before 'p edge' header");
      if (words.size() != 3) throw InputError("line " + std::to_string(line_no) + ": malformed edge line");
      auto u = parse_uint(words[1], line_no);
      auto v = parse_uint(words[2], line_no);
      if (u < 1 || u > n || v < 1 || v > n) {
        throw InputError("line " + std::to_string(line_no) + ": edge references vertex outside 1.." +
                         std::to_string(n));
      }
      edges.add(u - 1, v - 1, line_no);
      ++edge_lines;
      return;
    }
    throw InputError("line " + std::to_string(line_no) + ": unrecognized line '" + std::string(line) + "'");
  });

  if (!have_header) throw InputError("missing 'p edge <n> <m>' header");
  if (edge_lines != declared_m && warnings != nullptr) {
    warnings->push_back("header declares " + std::to_string(declared_m) + " edges, found " +
                        std::to_string(edge_lines));
  }
  return edges.build(n);
}

Graph parse_edge_list(std::string_view text, std::vector<std::string>* warnings) {
  std::optional<std::uint64_t> declared_n;
  std::uint64_t implied_n = 0;
  struct Pending {
    std::uint64_t u, v;
    std::size_t line_no;
  };
  std::vector<Pending> pending;

  for_each_line(text, [&](std::string_view line, std::size_t line_no) {
    auto words = split_words(line);
    if (words.empty()) return;
    if (words[0].starts_with('#')) {
      // "# n=<n>" or "#n=<n>"; other comments are ignored.
      std::string_view rest = line.substr(line.find('#') + 1);
      auto body = split_words(rest);
      if (!body.empty() && body[0].starts_with("n=")) {
        if (declared_n || !pending.empty()) {
          throw InputError("line " + std::to_string(line_no) + ": '# n=' header must come first and only once");
        }
        declared_n = parse_uint(body[0].substr(2), line_no);
        if (*declared_n > kMaxVertices) throw InputError("line " + std::to_string(line_no) + ": vertex count too large");
      }
      return;
    }
    if (words.size() != 2) throw InputError("line " + std::to_string(line_no) + ": expected 'u v'");
    auto u = parse_uint(words[0], line_no);
    auto v = parse_uint(words[1], line_no);
    if (u >= kMaxVertices || v >= kMaxVertices) throw InputError("line " + std::to_string(line_no) + ": vertex id too large");
    implied_n = std::max({implied_n, u + 1, v + 1});
    pending.push_back({u, v, line_no});
  });

  std::uint64_t n = declared_n.value_or(implied_n);
  EdgeCollector edges(warnings);
  for (const auto& p : pending) {
    if (p.u >= n || p.v >= n) {
      throw InputError("line " + std::to_string(p.line_no) + ": edge references vertex outside 0.." +
                       std::to_string(n == 0 ? 0 : n - 1));
    }
    edges.add(p.u, p.v, p.line_no);
  }
  return edges.build(n);
}

}  // namespace

GraphFormat parse_format_name(std::string_view name) {
  if (name == "dimacs-col" || name == "dimacs" || name == "col") return GraphFormat::DimacsCol;
  if (name == "edge-list" || name == "edgelist") return GraphFormat::EdgeList;
  throw InputError("unknown graph format '" + std::string(name) + "'");
}

std::string_view format_name(GraphFormat format) {
  return format == GraphFormat::DimacsCol ? "dimacs-col" : "edge-list";
}

Graph parse_graph(std::string_view text, GraphFormat format, std::vector<std::string>* warnings) {
  return format == GraphFormat::DimacsCol ? parse_dimacs(text, warnings) : parse_edge_list(text, warnings);
}

std::string serialize_graph(const Graph& g, GraphFormat format) {
  std::ostringstream out;
  auto edges = g.edges();
  if (format == GraphFormat::DimacsCol) {
    out << "p edge " << g.vertex_count() << ' ' << edges.size() << '\n';
    for (auto [u, v] : edges) out << "e " << u + 1 << ' ' << v + 1 << '\n';
  } else {
    std::size_t implied = 0;
    for (auto [u, v] : edges) implied = std::max<std::size_t>(implied, v + 1);
    if (implied != g.vertex_count()) out << "# n=" << g.vertex_count() << '\n';
    for (auto [u, v] : edges) out << u << ' ' << v << '\n';
  }
  return out.str();
}

std::string content_hash(const Graph& g) {
  // FNV-1a, 64 bit.
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : serialize_graph(g, GraphFormat::EdgeList)) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string("fnv1a64:") + buf;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << text;
}

Graph read_graph_file(const std::string& path, GraphFormat format, std::vector<std::string>* warnings) {
  return parse_graph(read_text_file(path), format, warnings);
}

}  // namespace regmis
