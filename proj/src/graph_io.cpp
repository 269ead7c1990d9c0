#include "topochrom/graph_io.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "topochrom/error.hpp"

namespace topochrom {

namespace {

long long parse_count(std::istringstream& fields, const char* what, std::size_t line) {
  long long value = 0;
  if (!(fields >> value)) throw FormatError(std::string("expected integer ") + what, line);
  if (value < 0) throw FormatError(std::string(what) + " must be non-negative", line);
  return value;
}

}  // namespace

Graph read_edge_list(std::istream& in) {
  std::string text;
  std::size_t line_no = 0;
  bool have_header = false;
  std::size_t n = 0;
  std::size_t m = 0;
  std::vector<Edge> edges;

  while (std::getline(in, text)) {
    ++line_no;
    std::istringstream fields(text);
    std::string tag;
    if (!(fields >> tag) || tag == "c") continue;

    if (tag == "p") {
      if (have_header) throw FormatError("duplicate 'p' header", line_no);
      n = static_cast<std::size_t>(parse_count(fields, "vertex count", line_no));
      m = static_cast<std::size_t>(parse_count(fields, "edge count", line_no));
      have_header = true;
    } else if (tag == "e") {
      if (!have_header) throw FormatError("edge before 'p' header", line_no);
      auto u = parse_count(fields, "endpoint", line_no);
      auto v = parse_count(fields, "endpoint", line_no);
      if (static_cast<std::size_t>(u) >= n || static_cast<std::size_t>(v) >= n)
        throw FormatError("endpoint out of range 0.." + std::to_string(n) + "-1", line_no);
      if (u == v) throw FormatError("loop at vertex " + std::to_string(u), line_no);
      edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    } else {
      throw FormatError("unknown line tag '" + tag + "'", line_no);
    }
    std::string extra;
    if (fields >> extra) throw FormatError("trailing token '" + extra + "'", line_no);
  }
  if (!have_header) throw FormatError("missing 'p <n> <m>' header", line_no);
  if (edges.size() != m)
    throw FormatError("header declares " + std::to_string(m) + " edges, found " +
                          std::to_string(edges.size()),
                      line_no);
  return make_graph(n, edges);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << "p " << g.order() << ' ' << g.size() << '\n';
  for (auto [u, v] : g.edges()) out << "e " << u << ' ' << v << '\n';
}

Graph read_edge_list_file(const std::string& path) {
  if (path == "-") return read_edge_list(std::cin);
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open graph file '" + path + "'");
  return read_edge_list(in);
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  write_edge_list(out, g);
  return out.str();
}

}  // namespace topochrom
