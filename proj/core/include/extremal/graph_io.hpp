#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "extremal/graph.hpp"

namespace extremal {

// Text format:
//
//   n <count>
//   # label <v> <text>      (zero or more, ascending v)
//   <u> <v>                 (one per edge, u < v, ascending)
//
// write_graph emits exactly this layout, so write(parse(write(g))) is
// byte-identical. The parser also accepts blank lines and edges in any order.
class GraphParseError : public std::runtime_error {
 public:
  GraphParseError(std::size_t line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

void write_graph(std::ostream& out, const Graph& g);
std::string to_text(const Graph& g);

Graph parse_graph(std::istream& in);
Graph parse_graph(const std::string& text);
Graph read_graph_file(const std::filesystem::path& path);
void write_graph_file(const std::filesystem::path& path, const Graph& g);

}  // namespace extremal
