#include "istforge/edge_list.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <unordered_set>

#include "istforge/errors.hpp"

namespace istforge {

namespace {

// Parses exactly two non-negative integers separated by one space.
bool parse_pair(const std::string& line, std::uint64_t& a, std::uint64_t& b) {
  const char* first = line.data();
  const char* last = line.data() + line.size();
  if (!line.empty() && line.back() == '\r') --last;
  auto r1 = std::from_chars(first, last, a);
  if (r1.ec != std::errc() || r1.ptr == last || *r1.ptr != ' ') return false;
  auto r2 = std::from_chars(r1.ptr + 1, last, b);
  return r2.ec == std::errc() && r2.ptr == last;
}

}  // namespace

void write_edge_list(const Graph& g, std::ostream& out) {
  out << g.n() << ' ' << g.m() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

void write_edge_list(const Graph& g, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path + " for writing");
  write_edge_list(g, out);
  if (!out) throw IoError("failed writing " + path);
}

Graph read_edge_list(std::istream& in) {
  std::string line;
  std::size_t line_no = 1;
  if (!std::getline(in, line)) throw ParseError(1, "missing header line \"n m\"");
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  if (!parse_pair(line, n, m)) throw ParseError(1, "header must be \"n m\"");
  if (n >= kNoVertex) throw ParseError(1, "vertex count too large");

  std::vector<Edge> edges;
  edges.reserve(m);
  std::unordered_set<std::uint64_t> seen;
  seen.reserve(m);
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line == "\r") {
      // Only trailing blank lines are tolerated.
      std::string rest;
      while (std::getline(in, rest)) {
        if (!rest.empty() && rest != "\r") throw ParseError(line_no, "blank line inside edge list");
      }
      break;
    }
    std::uint64_t u = 0;
    std::uint64_t v = 0;
    if (!parse_pair(line, u, v)) throw ParseError(line_no, "expected \"u v\", got \"" + line + "\"");
    if (u >= n || v >= n) throw ParseError(line_no, "vertex out of range (n=" + std::to_string(n) + ")");
    if (u == v) throw ParseError(line_no, "self-loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
    if (!seen.insert(u * n + v).second) {
      throw ParseError(line_no, "duplicate edge " + std::to_string(u) + " " + std::to_string(v));
    }
    if (edges.size() == m) throw ParseError(line_no, "more edges than the header declares");
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  if (edges.size() != m) {
    throw ParseError(line_no, "header declares " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
  }
  return Graph::from_edges(n, std::move(edges));
}

Graph read_edge_list(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  return read_edge_list(in);
}

}  // namespace istforge
