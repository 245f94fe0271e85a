#include "commgraph/graph.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "commgraph/error.hpp"
#include "commgraph/group_ops.hpp"
#include "commgraph/parallel.hpp"

namespace commgraph {

UndirectedGraph::UndirectedGraph(std::size_t n)
    : n_(n), words_((n + 63) / 64), bits_(n * ((n + 63) / 64), 0) {}

void UndirectedGraph::add_edge(Vertex u, Vertex v) {
  if (u >= n_ || v >= n_) fail(ErrorCode::IndexOutOfRange, "edge endpoint out of range");
  if (u == v) fail(ErrorCode::BadParameter, "loops are not allowed");
  bits_[std::size_t{u} * words_ + (v >> 6)] |= std::uint64_t{1} << (v & 63);
  bits_[std::size_t{v} * words_ + (u >> 6)] |= std::uint64_t{1} << (u & 63);
}

void UndirectedGraph::remove_edge(Vertex u, Vertex v) {
  if (u >= n_ || v >= n_) fail(ErrorCode::IndexOutOfRange, "edge endpoint out of range");
  bits_[std::size_t{u} * words_ + (v >> 6)] &= ~(std::uint64_t{1} << (v & 63));
  bits_[std::size_t{v} * words_ + (u >> 6)] &= ~(std::uint64_t{1} << (u & 63));
}

std::vector<Vertex> UndirectedGraph::neighbor_list(Vertex v) const {
  std::vector<Vertex> out;
  auto r = row(v);
  for (std::size_t wi = 0; wi < words_; ++wi) {
    for (std::uint64_t x = r[wi]; x; x &= x - 1) {
      out.push_back(static_cast<Vertex>((wi << 6) + std::countr_zero(x)));
    }
  }
  return out;
}

std::size_t UndirectedGraph::degree(Vertex v) const {
  std::size_t d = 0;
  for (auto x : row(v)) d += static_cast<std::size_t>(std::popcount(x));
  return d;
}

std::size_t UndirectedGraph::edge_count() const {
  std::size_t total = 0;
  for (auto x : bits_) total += static_cast<std::size_t>(std::popcount(x));
  return total / 2;
}

void UndirectedGraph::set_labels(std::vector<Element> labels) {
  if (!labels.empty() && labels.size() != n_) fail(ErrorCode::BadParameter, "label count differs from vertex count");
  labels_ = std::move(labels);
}

void UndirectedGraph::symmetrize_from_upper() {
  for (std::size_t u = 0; u < n_; ++u) {
    const std::uint64_t* r = bits_.data() + u * words_;
    for (std::size_t wi = u >> 6; wi < words_; ++wi) {
      std::uint64_t x = r[wi];
      if (wi == (u >> 6)) x &= ~((std::uint64_t{2} << (u & 63)) - 1);  // keep v > u
      for (; x; x &= x - 1) {
        std::size_t v = (wi << 6) + static_cast<std::size_t>(std::countr_zero(x));
        bits_[v * words_ + (u >> 6)] |= std::uint64_t{1} << (u & 63);
      }
    }
  }
}

UndirectedGraph commuting_graph(const Group& g, VertexScope scope, std::size_t threads) {
  std::vector<Element> verts;
  if (scope == VertexScope::All) {
    verts.resize(g.order());
    for (Element x = 0; x < g.order(); ++x) verts[x] = x;
  } else {
    auto z = center(g);
    for (Element x = 0; x < g.order(); ++x) {
      if (!z.contains(x)) verts.push_back(x);
    }
  }
  const std::size_t n = verts.size();
  UndirectedGraph out(n);
  if (threads == 0) threads = thread_count();
  threads = std::max<std::size_t>(1, std::min(threads, n / 64 + 1));

  const Element* table = g.table_data();
  const std::size_t order = g.order();
  const std::size_t degree = g.degree();
  std::vector<const Point*> img;
  if (!table) {
    img.resize(n);
    for (std::size_t i = 0; i < n; ++i) img[i] = g.images(verts[i]).data();
  }

  // Worker w fills upper-triangle bits of rows i = w, w + T, ...; every
  // write lands in row i, so workers never share a word.
  run_workers(threads, [&](std::size_t w, std::size_t t) {
    for (std::size_t i = w; i < n; i += t) {
      std::uint64_t* r = out.mutable_row(static_cast<Vertex>(i));
      if (table) {
        const std::size_t gi = verts[i];
        const Element* row_i = table + gi * order;
        for (std::size_t j = i + 1; j < n; ++j) {
          const std::size_t gj = verts[j];
          if (row_i[gj] == table[gj * order + gi]) r[j >> 6] |= std::uint64_t{1} << (j & 63);
        }
      } else {
        const Point* a = img[i];
        for (std::size_t j = i + 1; j < n; ++j) {
          if (images_commute(a, img[j], degree)) r[j >> 6] |= std::uint64_t{1} << (j & 63);
        }
      }
    }
  });
  out.symmetrize_from_upper();
  out.set_labels(std::move(verts));
  return out;
}

UndirectedGraph induced_subgraph(const UndirectedGraph& g, std::span<const Vertex> vertices) {
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i] >= g.size()) fail(ErrorCode::IndexOutOfRange, "induced vertex out of range");
    if (i > 0 && vertices[i] <= vertices[i - 1]) {
      fail(ErrorCode::BadParameter, "induced vertex list must be strictly increasing");
    }
  }
  const std::size_t m = vertices.size();
  UndirectedGraph out(m);
  for (std::size_t i = 0; i < m; ++i) {
    std::uint64_t* r = out.mutable_row(static_cast<Vertex>(i));
    for (std::size_t j = 0; j < m; ++j) {
      if (g.adjacent(vertices[i], vertices[j])) r[j >> 6] |= std::uint64_t{1} << (j & 63);
    }
  }
  {
    std::vector<Element> labels(m);
    for (std::size_t i = 0; i < m; ++i) labels[i] = g.label(vertices[i]);
    out.set_labels(std::move(labels));
  }
  return out;
}

UndirectedGraph complement(const UndirectedGraph& g) {
  const std::size_t n = g.size();
  UndirectedGraph out(n);
  for (std::size_t v = 0; v < n; ++v) {
    auto src = g.row(static_cast<Vertex>(v));
    std::uint64_t* dst = out.mutable_row(static_cast<Vertex>(v));
    for (std::size_t wi = 0; wi < g.words_per_row(); ++wi) dst[wi] = ~src[wi];
    if (n & 63) dst[g.words_per_row() - 1] &= (std::uint64_t{1} << (n & 63)) - 1;
    dst[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
  }
  out.set_labels(g.labels());
  return out;
}

UndirectedGraph strong_product(const UndirectedGraph& g1, const UndirectedGraph& g2,
                               std::size_t max_vertices) {
  const std::size_t n1 = g1.size(), n2 = g2.size();
  if (n1 != 0 && n2 > max_vertices / n1) fail(ErrorCode::SizeCap, "strong product too large");
  const std::size_t n = n1 * n2;
  UndirectedGraph out(n);
  for (std::size_t v1 = 0; v1 < n1; ++v1) {
    for (std::size_t w1 = 0; w1 < n2; ++w1) {
      const std::size_t a = v1 * n2 + w1;
      std::uint64_t* r = out.mutable_row(static_cast<Vertex>(a));
      for (std::size_t v2 = 0; v2 < n1; ++v2) {
        const bool first = v1 == v2 || g1.adjacent(static_cast<Vertex>(v1), static_cast<Vertex>(v2));
        if (!first) continue;
        for (std::size_t w2 = 0; w2 < n2; ++w2) {
          const bool second = w1 == w2 || g2.adjacent(static_cast<Vertex>(w1), static_cast<Vertex>(w2));
          const std::size_t b = v2 * n2 + w2;
          if (second && a != b) r[b >> 6] |= std::uint64_t{1} << (b & 63);
        }
      }
    }
  }
  return out;
}

DominantRemoval remove_dominant(const UndirectedGraph& g) {
  const std::size_t n = g.size();
  Bitset alive(n);
  alive.set_all();
  std::vector<std::size_t> deg(n);
  for (std::size_t v = 0; v < n; ++v) deg[v] = g.degree(static_cast<Vertex>(v));
  std::size_t remaining = n;
  std::vector<Vertex> removed;
  // Deleting a dominant vertex lowers every other degree by one and keeps
  // the rest of the graph; iterate until no vertex is dominant.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t v = 0; v < n; ++v) {
      if (!alive.test(v) || deg[v] + 1 != remaining) continue;
      alive.reset(v);
      removed.push_back(static_cast<Vertex>(v));
      --remaining;
      g.neighbors(static_cast<Vertex>(v)).for_each([&](std::size_t u) { --deg[u]; });
      changed = true;
    }
  }
  std::sort(removed.begin(), removed.end());
  std::vector<Vertex> kept;
  alive.for_each([&](std::size_t v) { kept.push_back(static_cast<Vertex>(v)); });
  return {induced_subgraph(g, kept), std::move(removed), std::move(kept)};
}

UndirectedGraph complete_graph(std::size_t n) {
  UndirectedGraph g(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
  }
  return g;
}

UndirectedGraph path_graph(std::size_t n) {
  UndirectedGraph g(n);
  for (Vertex v = 1; v < n; ++v) g.add_edge(v - 1, v);
  return g;
}

UndirectedGraph cycle_graph(std::size_t n) {
  if (n < 3) fail(ErrorCode::BadParameter, "cycles need at least 3 vertices");
  UndirectedGraph g = path_graph(n);
  g.add_edge(0, static_cast<Vertex>(n - 1));
  return g;
}

UndirectedGraph two_k2() {
  UndirectedGraph g(4);
  g.add_edge(0, 1);
  g.add_edge(2, 3);
  return g;
}

UndirectedGraph star_graph(std::size_t leaves) {
  UndirectedGraph g(leaves + 1);
  for (Vertex v = 1; v <= leaves; ++v) g.add_edge(0, v);
  return g;
}

UndirectedGraph graph_from_edges(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edges) {
  UndirectedGraph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

}  // namespace commgraph
