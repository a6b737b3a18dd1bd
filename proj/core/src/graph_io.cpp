#include "extremal/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string_view>
#include <vector>

namespace extremal {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

std::optional<std::size_t> parse_index(std::string_view token) {
  std::size_t value = 0;
  const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || end != token.data() + token.size()) return std::nullopt;
  return value;
}

std::vector<std::string_view> split(std::string_view s) {
  std::vector<std::string_view> out;
  while (true) {
    s = trim(s);
    if (s.empty()) break;
    const auto cut = s.find_first_of(" \t");
    out.push_back(s.substr(0, cut));
    if (cut == std::string_view::npos) break;
    s.remove_prefix(cut);
  }
  return out;
}

}  // namespace

void write_graph(std::ostream& out, const Graph& g) {
  out << "n " << g.order() << '\n';
  for (Vertex v = 0; v < g.order(); ++v) {
    if (!g.label(v).empty()) out << "# label " << v << ' ' << g.label(v) << '\n';
  }
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

std::string to_text(const Graph& g) {
  std::ostringstream out;
  write_graph(out, g);
  return out.str();
}

Graph parse_graph(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  std::optional<std::size_t> n;
  std::vector<Edge> edges;
  std::set<Edge> seen;
  std::vector<std::string> labels;

  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view text = trim(line);
    if (text.empty()) continue;

    if (!n) {
      const auto tokens = split(text);
      if (tokens.size() != 2 || tokens[0] != "n") {
        throw GraphParseError(line_no, "expected header 'n <count>'");
      }
      n = parse_index(tokens[1]);
      if (!n) throw GraphParseError(line_no, "bad vertex count '" + std::string(tokens[1]) + "'");
      continue;
    }

    if (text.front() == '#') {
      std::string_view rest = trim(text.substr(1));
      if (!rest.starts_with("label")) continue;  // plain comment
      rest = trim(rest.substr(5));
      const auto cut = rest.find_first_of(" \t");
      const auto v = parse_index(rest.substr(0, cut));
      if (!v || *v >= *n) throw GraphParseError(line_no, "bad label vertex");
      if (labels.empty()) labels.assign(*n, {});
      labels[*v] = cut == std::string_view::npos ? std::string{}
                                                 : std::string(trim(rest.substr(cut)));
      continue;
    }

    const auto tokens = split(text);
    if (tokens.size() != 2) throw GraphParseError(line_no, "expected edge 'u v'");
    const auto u = parse_index(tokens[0]);
    const auto v = parse_index(tokens[1]);
    if (!u || !v) throw GraphParseError(line_no, "edge endpoints must be non-negative integers");
    if (*u >= *n || *v >= *n) throw GraphParseError(line_no, "edge endpoint out of range");
    if (*u == *v) throw GraphParseError(line_no, "self-loop");
    Edge e{static_cast<Vertex>(std::min(*u, *v)), static_cast<Vertex>(std::max(*u, *v))};
    if (!seen.insert(e).second) throw GraphParseError(line_no, "repeated edge");
    edges.push_back(e);
  }
  if (!n) throw GraphParseError(line_no + 1, "missing header 'n <count>'");
  return Graph::from_edges(*n, edges, std::move(labels));
}

Graph parse_graph(const std::string& text) {
  std::istringstream in(text);
  return parse_graph(in);
}

Graph read_graph_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return parse_graph(in);
}

void write_graph_file(const std::filesystem::path& path, const Graph& g) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  write_graph(out, g);
}

}  // namespace extremal
