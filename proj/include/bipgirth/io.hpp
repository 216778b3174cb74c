#pragma once

// Edge-list text formats and DOT export.
//
//   bipartite <a_size> <b_size>        digraph <n>
//   A<i> B<j>                          <i> <j>
//   B<j> A<i>                          ...
//
// Tail first, one edge per line, LF-terminated, 0-based indices. Writers
// emit A->B edges then B->A edges, each sorted by (tail, head).

#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <variant>

#include "bipgirth/digraph.hpp"

namespace bipgirth {

inline void write_edge_list(std::ostream& os, const BipartiteDigraph& g) {
  os << "bipartite " << g.a_size() << ' ' << g.b_size() << '\n';
  for (const auto& [u, v] : g.edges()) os << to_string(u) << ' ' << to_string(v) << '\n';
}

inline void write_edge_list(std::ostream& os, const GeneralDigraph& g) {
  os << "digraph " << g.size() << '\n';
  for (const auto& [u, v] : g.edges()) os << u << ' ' << v << '\n';
}

template <class Graph>
std::string to_edge_list(const Graph& g) {
  std::ostringstream os;
  write_edge_list(os, g);
  return os.str();
}

using AnyDigraph = std::variant<BipartiteDigraph, GeneralDigraph>;

namespace detail {

inline std::size_t parse_index(const std::string& token, int line_no) {
  if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos)
    throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": bad index '" + token + "'");
  return std::stoul(token);
}

}  // namespace detail

/// Reads either format, dispatching on the header keyword.
inline AnyDigraph read_edge_list(std::istream& is) {
  std::string line;
  int line_no = 0;
  auto next_line = [&]() -> bool {
    while (std::getline(is, line)) {
      ++line_no;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (!line.empty()) return true;
    }
    return false;
  };
  if (!next_line()) throw Error(ErrorCode::ParseError, "empty input");
  std::istringstream header(line);
  std::string kind;
  header >> kind;
  if (kind == "bipartite") {
    std::string sa, sb, extra;
    header >> sa >> sb;
    if (header >> extra) throw Error(ErrorCode::ParseError, "trailing tokens in header");
    BipartiteDigraph::Builder builder(detail::parse_index(sa, line_no), detail::parse_index(sb, line_no));
    while (next_line()) {
      std::istringstream ls(line);
      std::string tail, head;
      if (!(ls >> tail >> head) || (ls >> extra))
        throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": expected two vertices");
      builder.add_edge(parse_vertex(tail), parse_vertex(head));
    }
    return std::move(builder).build();
  }
  if (kind == "digraph") {
    std::string sn, extra;
    header >> sn;
    if (header >> extra) throw Error(ErrorCode::ParseError, "trailing tokens in header");
    GeneralDigraph g(detail::parse_index(sn, line_no));
    while (next_line()) {
      std::istringstream ls(line);
      std::string tail, head;
      if (!(ls >> tail >> head) || (ls >> extra))
        throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": expected two indices");
      g.add_edge(detail::parse_index(tail, line_no), detail::parse_index(head, line_no));
    }
    return g;
  }
  throw Error(ErrorCode::ParseError, "unknown header '" + kind + "'");
}

inline AnyDigraph parse_edge_list(const std::string& text) {
  std::istringstream is(text);
  return read_edge_list(is);
}

/// A-vertices are drawn as boxes, B-vertices as ovals.
inline void write_dot(std::ostream& os, const BipartiteDigraph& g) {
  os << "digraph G {\n";
  for (std::size_t i = 0; i < g.a_size(); ++i) os << "  A" << i << " [shape=box];\n";
  for (std::size_t j = 0; j < g.b_size(); ++j) os << "  B" << j << " [shape=oval];\n";
  for (const auto& [u, v] : g.edges()) os << "  " << to_string(u) << " -> " << to_string(v) << ";\n";
  os << "}\n";
}

inline void write_dot(std::ostream& os, const GeneralDigraph& g) {
  os << "digraph G {\n";
  for (std::size_t i = 0; i < g.size(); ++i) os << "  " << i << ";\n";
  for (const auto& [u, v] : g.edges()) os << "  " << u << " -> " << v << ";\n";
  os << "}\n";
}

}  // namespace bipgirth
