#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "commgraph/bitset.hpp"
#include "commgraph/group.hpp"

namespace commgraph {

using Vertex = std::uint32_t;

// Simple undirected graph on vertices 0..n-1 with a full packed adjacency
// matrix (each row is a bitset; the matrix is kept symmetric). Vertices may
// carry labels, which for commuting graphs are group element indices.
class UndirectedGraph {
 public:
  UndirectedGraph() = default;
  explicit UndirectedGraph(std::size_t n);

  std::size_t size() const noexcept { return n_; }
  std::size_t words_per_row() const noexcept { return words_; }

  bool adjacent(Vertex u, Vertex v) const {
    return (bits_[std::size_t{u} * words_ + (v >> 6)] >> (v & 63)) & 1U;
  }
  void add_edge(Vertex u, Vertex v);
  void remove_edge(Vertex u, Vertex v);

  std::span<const std::uint64_t> row(Vertex v) const {
    return {bits_.data() + std::size_t{v} * words_, words_};
  }
  Bitset neighbors(Vertex v) const { return Bitset::from_words(n_, row(v)); }
  std::vector<Vertex> neighbor_list(Vertex v) const;

  std::size_t degree(Vertex v) const;
  std::size_t edge_count() const;

  // Empty when unlabeled; otherwise one label per vertex.
  const std::vector<Element>& labels() const noexcept { return labels_; }
  void set_labels(std::vector<Element> labels);
  Element label(Vertex v) const { return labels_.empty() ? v : labels_[v]; }

  // Raw row access for builders that fill disjoint rows concurrently.
  std::uint64_t* mutable_row(Vertex v) { return bits_.data() + std::size_t{v} * words_; }
  // Copies every upper-triangle bit to its mirror position.
  void symmetrize_from_upper();

  // Adjacency equality; labels are not compared.
  friend bool operator==(const UndirectedGraph& a, const UndirectedGraph& b) {
    return a.n_ == b.n_ && a.bits_ == b.bits_;
  }

 private:
  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
  std::vector<Element> labels_;
};

enum class VertexScope { All, NonCentral };

// Vertices are the chosen elements in index order, labelled by element
// index; g ~ h iff g != h and gh = hg. Rows are built in parallel blocks
// (COMMGRAPH_THREADS); the result does not depend on the thread count.
UndirectedGraph commuting_graph(const Group& g, VertexScope scope = VertexScope::All,
                                std::size_t threads = 0);

// Subgraph on a strictly increasing vertex list; labels follow the vertices.
UndirectedGraph induced_subgraph(const UndirectedGraph& g, std::span<const Vertex> vertices);

UndirectedGraph complement(const UndirectedGraph& g);

// Vertex (v, w) has index v * |g2| + w. Throws SizeCap beyond max_vertices.
UndirectedGraph strong_product(const UndirectedGraph& g1, const UndirectedGraph& g2,
                               std::size_t max_vertices = 1u << 16);

struct DominantRemoval {
  UndirectedGraph graph;
  std::vector<Vertex> removed;  // indices in the input graph
  std::vector<Vertex> kept;     // input index of each remaining vertex
};

// Repeatedly deletes vertices adjacent to every other remaining vertex.
DominantRemoval remove_dominant(const UndirectedGraph& g);

UndirectedGraph complete_graph(std::size_t n);
UndirectedGraph path_graph(std::size_t n);
UndirectedGraph cycle_graph(std::size_t n);
UndirectedGraph two_k2();
UndirectedGraph star_graph(std::size_t leaves);

// The graph on `edges.size()` pairs, or from an explicit vertex count.
UndirectedGraph graph_from_edges(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edges);

}  // namespace commgraph
