#include "commgraph/graph_io.hpp"

#include <istream>
#include <ostream>
#include <sstream>

#include "commgraph/error.hpp"

namespace commgraph {

void write_edge_list(std::ostream& out, const UndirectedGraph& g) {
  out << g.size() << ' ' << g.edge_count() << '\n';
  for (Vertex u = 0; u < g.size(); ++u) {
    for (Vertex v : g.neighbor_list(u)) {
      if (v > u) out << u << ' ' << v << '\n';
    }
  }
}

UndirectedGraph read_edge_list(std::istream& in) {
  std::size_t n = 0;
  std::size_t m = 0;
  if (!(in >> n >> m)) fail(ErrorCode::ParseError, "edge list header 'n m' expected");
  UndirectedGraph g(n);
  for (std::size_t e = 0; e < m; ++e) {
    long long u = 0;
    long long v = 0;
    if (!(in >> u >> v)) fail(ErrorCode::ParseError, "edge " + std::to_string(e + 1) + " missing");
    if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= n || static_cast<std::size_t>(v) >= n) {
      fail(ErrorCode::ParseError, "edge endpoint out of range");
    }
    if (u == v) fail(ErrorCode::ParseError, "loop in edge list");
    if (g.adjacent(static_cast<Vertex>(u), static_cast<Vertex>(v))) {
      fail(ErrorCode::ParseError, "repeated edge in edge list");
    }
    g.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  std::string extra;
  if (in >> extra) fail(ErrorCode::ParseError, "trailing data after edge list");
  return g;
}

std::string to_packed(const UndirectedGraph& g) {
  const std::size_t n = g.size();
  std::string out;
  auto put6 = [&](std::uint64_t value, int groups) {
    for (int k = groups - 1; k >= 0; --k) out += static_cast<char>(((value >> (6 * k)) & 63) + 63);
  };
  if (n <= 62) {
    out += static_cast<char>(n + 63);
  } else if (n <= 258047) {
    out += '~';
    put6(n, 3);
  } else {
    out += "~~";
    put6(n, 6);
  }
  int filled = 0;
  unsigned acc = 0;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      acc = (acc << 1) | (g.adjacent(u, v) ? 1U : 0U);
      if (++filled == 6) {
        out += static_cast<char>(acc + 63);
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out += static_cast<char>((acc << (6 - filled)) + 63);
  return out;
}

UndirectedGraph from_packed(std::string_view text) {
  std::size_t pos = 0;
  auto take6 = [&](int groups) {
    std::uint64_t v = 0;
    for (int k = 0; k < groups; ++k) {
      if (pos >= text.size()) fail(ErrorCode::ParseError, "truncated packed graph");
      int c = static_cast<unsigned char>(text[pos++]) - 63;
      if (c < 0 || c > 63) fail(ErrorCode::ParseError, "invalid packed byte");
      v = (v << 6) | static_cast<std::uint64_t>(c);
    }
    return v;
  };
  if (text.empty()) fail(ErrorCode::ParseError, "empty packed graph");
  std::size_t n = 0;
  if (text[0] != '~') {
    n = take6(1);
  } else if (text.size() > 1 && text[1] == '~') {
    pos = 2;
    n = take6(6);
  } else {
    pos = 1;
    n = take6(3);
  }
  const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (text.size() - pos != bytes) fail(ErrorCode::ParseError, "packed graph has the wrong length");
  UndirectedGraph g(n);
  std::size_t k = 0;
  std::uint64_t cur = 0;
  int left = 0;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (left == 0) {
        cur = take6(1);
        left = 6;
      }
      --left;
      if ((cur >> left) & 1U) g.add_edge(u, v);
      ++k;
    }
  }
  if (left > 0 && (cur & ((std::uint64_t{1} << left) - 1)) != 0) {
    fail(ErrorCode::ParseError, "non-zero padding in packed graph");
  }
  return g;
}

}  // namespace commgraph
