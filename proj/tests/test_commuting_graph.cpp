#include <gtest/gtest.h>

#include <cstdlib>
#include <sstream>

#include "commgraph/error.hpp"
#include "commgraph/families.hpp"
#include "commgraph/graph.hpp"
#include "commgraph/graph_io.hpp"
#include "commgraph/group_ops.hpp"
#include "oracles.hpp"

using namespace commgraph;

namespace {

std::vector<Element> all_elements(const Group& g) {
  std::vector<Element> v(g.order());
  std::iota(v.begin(), v.end(), Element{0});
  return v;
}

std::vector<Element> noncentral(const Group& g) {
  auto z = oracle::center(g);
  std::vector<Element> v;
  for (Element x = 0; x < g.order(); ++x) {
    if (!std::binary_search(z.begin(), z.end(), x)) v.push_back(x);
  }
  return v;
}

bool is_p4_in_order(const UndirectedGraph& g) {
  return g.size() == 4 && g.edge_count() == 3 && g.adjacent(0, 1) && g.adjacent(1, 2) && g.adjacent(2, 3);
}

}  // namespace

TEST(CommutingGraph, AbelianIsComplete) {
  for (const char* name : {"cyclic:7", "abelian:2,2,2", "abelian:3,4"}) {
    Group g = build_family(parse_family(name));
    EXPECT_EQ(commuting_graph(g, VertexScope::All), complete_graph(g.order())) << name;
    EXPECT_EQ(commuting_graph(g, VertexScope::NonCentral).size(), 0u);
  }
}

TEST(CommutingGraph, GeneralizedDihedralOddIsCliquePlusPendants) {
  for (const char* name : {"gendihedral:7", "gendihedral:3,3", "dihedral:5"}) {
    Group g = build_family(parse_family(name));
    const std::size_t m = g.order() / 2;
    UndirectedGraph gr = commuting_graph(g, VertexScope::All);
    // Indices 0..m-1 are A, the rest the involutions outside A.
    for (Vertex u = 0; u < g.order(); ++u) {
      for (Vertex v = u + 1; v < g.order(); ++v) {
        bool expected = v < m || u == 0;
        EXPECT_EQ(gr.adjacent(u, v), expected) << name << " " << u << "," << v;
      }
    }
  }
}

TEST(CommutingGraph, Q8NonCentralIsThreeEdges) {
  Group q8 = build_family(parse_family("quaternion:2"));
  UndirectedGraph g = commuting_graph(q8, VertexScope::NonCentral);
  EXPECT_EQ(g.size(), 6u);
  EXPECT_EQ(g.edge_count(), 3u);
  for (Vertex v = 0; v < 6; ++v) EXPECT_EQ(g.degree(v), 1u);
}

TEST(CommutingGraph, QuaternionShape) {
  for (std::int64_t m = 2; m <= 8; ++m) {
    Group q = build_family({Family::GeneralizedQuaternion, {m}});
    UndirectedGraph g = commuting_graph(q, VertexScope::NonCentral);
    const std::size_t clique = 2 * m - 2;
    EXPECT_EQ(g.size(), clique + 2 * m);
    EXPECT_EQ(g.edge_count(), clique * (clique - 1) / 2 + m) << m;
  }
}

TEST(CommutingGraph, MatchesMultiplicationOracle) {
  for (const char* name : {"sym:4", "alt:5", "dihedral:6", "quaternion:3", "extraspecial:-", "psl2:7"}) {
    Group g = build_family(parse_family(name));
    UndirectedGraph all = commuting_graph(g, VertexScope::All);
    EXPECT_TRUE(oracle::matches(all, oracle::commuting_matrix(g, all_elements(g)))) << name;
    UndirectedGraph nc = commuting_graph(g, VertexScope::NonCentral);
    auto verts = noncentral(g);
    EXPECT_TRUE(oracle::matches(nc, oracle::commuting_matrix(g, verts))) << name;
    EXPECT_EQ(nc.labels(), verts);
  }
}

TEST(CommutingGraph, ThreadCountDoesNotMatter) {
  Group g = build_family(parse_family("psl2:13"));
  UndirectedGraph one = commuting_graph(g, VertexScope::All, 1);
  UndirectedGraph many = commuting_graph(g, VertexScope::All, 5);
  EXPECT_EQ(one, many);
  ::setenv("COMMGRAPH_THREADS", "3", 1);
  EXPECT_EQ(commuting_graph(g, VertexScope::All), one);
  ::unsetenv("COMMGRAPH_THREADS");
}

TEST(InducedSubgraph, Examples) {
  Group s4 = build_family(parse_family("sym:4"));
  UndirectedGraph g = commuting_graph(s4, VertexScope::All);
  std::vector<Vertex> all(g.size());
  std::iota(all.begin(), all.end(), Vertex{0});
  EXPECT_EQ(induced_subgraph(g, all), g);
  EXPECT_EQ(induced_subgraph(g, std::vector<Vertex>{}).size(), 0u);

  std::vector<std::pair<Vertex, const char*>> path;
  for (const char* c : {"(1 2)", "(1 2)(3 4)", "(1 3)(2 4)", "(1 3)"}) {
    path.push_back({*s4.index_of(Permutation::parse_cycles(c, 4)), c});
  }
  std::vector<Vertex> sorted;
  for (auto& p : path) sorted.push_back(p.first);
  std::sort(sorted.begin(), sorted.end());
  UndirectedGraph sub = induced_subgraph(g, sorted);
  EXPECT_EQ(sub.edge_count(), 3u);
  // Rebuild it in path order to check the shape.
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex i = 0; i < 4; ++i) {
    for (Vertex j = i + 1; j < 4; ++j) {
      if (g.adjacent(path[i].first, path[j].first)) edges.push_back({i, j});
    }
  }
  EXPECT_TRUE(is_p4_in_order(graph_from_edges(4, edges)));
  EXPECT_EQ(sub.labels(), sorted);
}

TEST(Complement, Examples) {
  EXPECT_EQ(complement(complete_graph(5)).edge_count(), 0u);
  UndirectedGraph p4c = complement(path_graph(4));
  EXPECT_EQ(p4c.edge_count(), 3u);
  EXPECT_TRUE(oracle::subset_is(p4c, {0, 1, 2, 3}, oracle::Shape::P4));
  UndirectedGraph c5c = complement(cycle_graph(5));
  EXPECT_TRUE(oracle::subset_is(c5c, {0, 1, 2, 3, 4}, oracle::Shape::C5));
  oracle::GraphGen gen(7);
  for (int i = 0; i < 20; ++i) {
    auto g = gen.gnp(9, 0.4);
    EXPECT_EQ(complement(complement(g)), g);
    EXPECT_EQ(complement(g).edge_count() + g.edge_count(), 36u);
  }
}

TEST(StrongProduct, Examples) {
  EXPECT_EQ(strong_product(complete_graph(3), complete_graph(4)), complete_graph(12));
  UndirectedGraph p = path_graph(5);
  EXPECT_EQ(strong_product(complete_graph(1), p), p);
  EXPECT_EQ(strong_product(p, complete_graph(1)), p);

  Group s3 = build_family(parse_family("sym:3"));
  UndirectedGraph g = commuting_graph(s3, VertexScope::All);
  EXPECT_EQ(strong_product(g, g), commuting_graph(direct_product(s3, s3), VertexScope::All));
}

TEST(StrongProduct, MatchesDefinition) {
  oracle::GraphGen gen(11);
  for (int i = 0; i < 10; ++i) {
    auto a = gen.gnp(5, 0.5), b = gen.gnp(6, 0.5);
    auto s = strong_product(a, b);
    for (Vertex x = 0; x < 30; ++x) {
      for (Vertex y = 0; y < 30; ++y) {
        Vertex a1 = x / 6, b1 = x % 6, a2 = y / 6, b2 = y % 6;
        bool ea = a1 == a2 || a.adjacent(a1, a2);
        bool eb = b1 == b2 || b.adjacent(b1, b2);
        ASSERT_EQ(s.adjacent(x, y), x != y && ea && eb);
      }
    }
  }
  EXPECT_THROW(strong_product(complete_graph(300), complete_graph(300)), Error);
}

TEST(RemoveDominant, Examples) {
  auto k = remove_dominant(complete_graph(5));
  EXPECT_EQ(k.graph.size(), 0u);
  EXPECT_EQ(k.removed.size(), 5u);

  Group s4 = build_family(parse_family("sym:4"));
  auto r = remove_dominant(commuting_graph(s4, VertexScope::All));
  EXPECT_EQ(r.removed, std::vector<Vertex>{0});
  EXPECT_EQ(r.graph.size(), 23u);

  auto star = remove_dominant(star_graph(6));
  EXPECT_EQ(star.removed.size(), 1u);
  EXPECT_EQ(star.graph.size(), 6u);
  EXPECT_EQ(star.graph.edge_count(), 0u);
}

TEST(RemoveDominant, CentreOfGroupIsDominant) {
  for (const char* name : {"quaternion:4", "dihedral:6", "extraspecial:+"}) {
    Group g = build_family(parse_family(name));
    auto r = remove_dominant(commuting_graph(g, VertexScope::All));
    const auto z = center(g).elements();
    EXPECT_EQ(r.removed, std::vector<Vertex>(z.begin(), z.end())) << name;
    EXPECT_EQ(r.graph, commuting_graph(g, VertexScope::NonCentral));
  }
}

TEST(GraphIo, EdgeListRoundTrip) {
  oracle::GraphGen gen(3);
  for (std::size_t n : {0u, 1u, 7u, 40u}) {
    auto g = gen.gnp(n, 0.3);
    std::stringstream ss;
    write_edge_list(ss, g);
    EXPECT_EQ(read_edge_list(ss), g);
  }
  std::stringstream out;
  write_edge_list(out, path_graph(3));
  EXPECT_EQ(out.str(), "3 2\n0 1\n1 2\n");
}

TEST(GraphIo, EdgeListErrors) {
  for (const char* bad : {"", "3", "2 1\n0 2\n", "2 2\n0 1\n", "2 1\n1 1\n", "x y"}) {
    std::stringstream ss(bad);
    EXPECT_THROW(read_edge_list(ss), Error) << bad;
  }
}

TEST(GraphIo, PackedRoundTrip) {
  oracle::GraphGen gen(5);
  for (std::size_t n : {0u, 1u, 2u, 5u, 62u, 63u, 100u}) {
    auto g = gen.gnp(n, 0.5);
    EXPECT_EQ(from_packed(to_packed(g)), g) << n;
  }
  // The path on three vertices: header 'B', then bits 1,0,1 padded to 101000.
  EXPECT_EQ(to_packed(path_graph(3)), std::string("B") + static_cast<char>(0b101000 + 63));
  EXPECT_THROW(from_packed(""), Error);
  EXPECT_THROW(from_packed("B"), Error);
}
