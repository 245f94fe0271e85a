#pragma once

// Slow, direct implementations used to cross-check the library. None of
// them call into the algorithms they are checking; they only read
// adjacency bits and permutation images.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "commgraph/graph.hpp"
#include "commgraph/group.hpp"
#include "commgraph/permutation.hpp"

namespace oracle {

using commgraph::Group;
using commgraph::UndirectedGraph;
using commgraph::Vertex;
using Images = std::vector<commgraph::Point>;

inline Images compose(const Images& g, const Images& h) {
  Images out(g.size());
  for (std::size_t x = 0; x < g.size(); ++x) out[x] = g[h[x]];
  return out;
}

inline Images images_of(const commgraph::Permutation& p) {
  return {p.images().begin(), p.images().end()};
}

// Every product of generators, by saturation over an ordered set.
inline std::set<Images> closure(const std::vector<commgraph::Permutation>& gens, std::size_t degree) {
  Images id(degree);
  std::iota(id.begin(), id.end(), commgraph::Point{0});
  std::set<Images> seen{id};
  std::vector<Images> frontier{id};
  while (!frontier.empty()) {
    std::vector<Images> next;
    for (const auto& x : frontier) {
      for (const auto& s : gens) {
        Images y = compose(x, images_of(s));
        if (seen.insert(y).second) next.push_back(std::move(y));
      }
    }
    frontier = std::move(next);
  }
  return seen;
}

// Element indices commuting with everything, by scanning the table.
inline std::vector<commgraph::Element> center(const Group& g) {
  std::vector<commgraph::Element> out;
  for (commgraph::Element x = 0; x < g.order(); ++x) {
    bool all = true;
    for (commgraph::Element y = 0; y < g.order() && all; ++y) {
      all = g.multiply(x, y) == g.multiply(y, x);
    }
    if (all) out.push_back(x);
  }
  return out;
}

inline std::vector<commgraph::Element> centralizer(const Group& g, commgraph::Element x) {
  std::vector<commgraph::Element> out;
  for (commgraph::Element y = 0; y < g.order(); ++y) {
    if (g.multiply(x, y) == g.multiply(y, x)) out.push_back(y);
  }
  return out;
}

inline bool subset_commutes(const Group& g, const std::vector<commgraph::Element>& s) {
  for (auto a : s) {
    for (auto b : s) {
      if (g.multiply(a, b) != g.multiply(b, a)) return false;
    }
  }
  return true;
}

// Adjacency matrix of the commuting graph on `elements`, straight from the
// multiplication.
inline std::vector<std::vector<bool>> commuting_matrix(const Group& g,
                                                       const std::vector<commgraph::Element>& elements) {
  const std::size_t n = elements.size();
  std::vector<std::vector<bool>> m(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      auto a = elements[i], b = elements[j];
      m[i][j] = g.multiply(a, b) == g.multiply(b, a);
    }
  }
  return m;
}

inline bool matches(const UndirectedGraph& g, const std::vector<std::vector<bool>>& m) {
  if (g.size() != m.size()) return false;
  for (Vertex i = 0; i < g.size(); ++i) {
    for (Vertex j = 0; j < g.size(); ++j) {
      if (g.adjacent(i, j) != m[i][j]) return false;
    }
  }
  return true;
}

// ---- graph patterns by subset enumeration --------------------------------

enum class Shape { P4, C4, C5, TwoK2 };

inline bool subset_is(const UndirectedGraph& g, const std::vector<Vertex>& s, Shape shape) {
  std::vector<int> deg(s.size(), 0);
  int edges = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      if (g.adjacent(s[i], s[j])) {
        ++deg[i];
        ++deg[j];
        ++edges;
      }
    }
  }
  std::sort(deg.begin(), deg.end());
  switch (shape) {
    case Shape::P4: return s.size() == 4 && edges == 3 && deg == std::vector<int>{1, 1, 2, 2};
    case Shape::C4: return s.size() == 4 && edges == 4 && deg == std::vector<int>{2, 2, 2, 2};
    case Shape::TwoK2: return s.size() == 4 && edges == 2 && deg == std::vector<int>{1, 1, 1, 1};
    case Shape::C5: return s.size() == 5 && edges == 5 && deg == std::vector<int>(5, 2);
  }
  return false;
}

// Lexicographically least vertex set inducing the shape.
inline std::optional<std::vector<Vertex>> least_copy(const UndirectedGraph& g, Shape shape) {
  const std::size_t k = shape == Shape::C5 ? 5 : 4;
  const std::size_t n = g.size();
  if (n < k) return std::nullopt;
  std::vector<Vertex> s(k);
  std::iota(s.begin(), s.end(), Vertex{0});
  while (true) {
    if (subset_is(g, s, shape)) return s;
    std::size_t i = k;
    while (i > 0 && s[i - 1] == n - k + i - 1) --i;
    if (i == 0) return std::nullopt;
    ++s[i - 1];
    for (std::size_t j = i; j < k; ++j) s[j] = s[j - 1] + 1;
  }
}

inline bool has(const UndirectedGraph& g, Shape shape) { return least_copy(g, shape).has_value(); }

// Chordless cycle of length >= 4 on exactly these vertices.
inline bool is_hole(const UndirectedGraph& g, const std::vector<Vertex>& s) {
  if (s.size() < 4) return false;
  for (std::size_t i = 0; i < s.size(); ++i) {
    int d = 0;
    for (std::size_t j = 0; j < s.size(); ++j) d += (i != j && g.adjacent(s[i], s[j])) ? 1 : 0;
    if (d != 2) return false;
  }
  // 2-regular; connected iff one walk covers everything.
  std::vector<bool> seen(s.size(), false);
  std::size_t prev = s.size(), cur = 0, steps = 0;
  do {
    seen[cur] = true;
    std::size_t nxt = s.size();
    for (std::size_t j = 0; j < s.size(); ++j) {
      if (j != cur && j != prev && g.adjacent(s[cur], s[j])) {
        nxt = j;
        break;
      }
    }
    prev = cur;
    cur = nxt;
    ++steps;
  } while (cur != 0 && cur < s.size() && steps <= s.size());
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

// Shortest hole by checking every subset in order of size; only for tiny n.
inline std::optional<std::size_t> shortest_hole_by_subsets(const UndirectedGraph& g) {
  const std::size_t n = g.size();
  for (std::size_t k = 4; k <= n; ++k) {
    std::vector<bool> pick(n, false);
    std::fill(pick.end() - static_cast<std::ptrdiff_t>(k), pick.end(), true);
    do {
      std::vector<Vertex> s;
      for (Vertex v = 0; v < n; ++v) {
        if (pick[v]) s.push_back(v);
      }
      if (is_hole(g, s)) return k;
    } while (std::next_permutation(pick.begin(), pick.end()));
  }
  return std::nullopt;
}

// ---- class membership by definition ---------------------------------------

// Split: some vertex subset is a clique whose complement is independent.
inline bool is_split(const UndirectedGraph& g) {
  const std::size_t n = g.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    bool ok = true;
    for (Vertex u = 0; u < n && ok; ++u) {
      for (Vertex v = u + 1; v < n && ok; ++v) {
        bool in_u = (mask >> u) & 1U, in_v = (mask >> v) & 1U;
        if (in_u && in_v && !g.adjacent(u, v)) ok = false;
        if (!in_u && !in_v && g.adjacent(u, v)) ok = false;
      }
    }
    if (ok) return true;
  }
  return false;
}

// Cograph: every induced subgraph on two or more vertices is disconnected
// or has a disconnected complement.
inline bool is_cograph(const UndirectedGraph& g, std::vector<Vertex> verts) {
  if (verts.size() <= 1) return true;
  for (bool comp : {false, true}) {
    std::vector<int> part(verts.size(), -1);
    int parts = 0;
    for (std::size_t s = 0; s < verts.size(); ++s) {
      if (part[s] >= 0) continue;
      std::vector<std::size_t> stack{s};
      part[s] = parts;
      while (!stack.empty()) {
        auto x = stack.back();
        stack.pop_back();
        for (std::size_t y = 0; y < verts.size(); ++y) {
          if (y == x || part[y] >= 0) continue;
          if (g.adjacent(verts[x], verts[y]) != comp) {
            part[y] = parts;
            stack.push_back(y);
          }
        }
      }
      ++parts;
    }
    if (parts > 1) {
      for (int p = 0; p < parts; ++p) {
        std::vector<Vertex> sub;
        for (std::size_t i = 0; i < verts.size(); ++i) {
          if (part[i] == p) sub.push_back(verts[i]);
        }
        if (!is_cograph(g, sub)) return false;
      }
      return true;
    }
  }
  return false;
}

inline bool is_cograph(const UndirectedGraph& g) {
  std::vector<Vertex> all(g.size());
  std::iota(all.begin(), all.end(), Vertex{0});
  return is_cograph(g, all);
}

// Chordal: simplicial vertices can be deleted one by one until nothing is
// left.
inline bool is_chordal(const UndirectedGraph& g) {
  const std::size_t n = g.size();
  std::vector<bool> gone(n, false);
  for (std::size_t round = 0; round < n; ++round) {
    bool removed = false;
    for (Vertex v = 0; v < n && !removed; ++v) {
      if (gone[v]) continue;
      std::vector<Vertex> nb;
      for (Vertex u = 0; u < n; ++u) {
        if (!gone[u] && u != v && g.adjacent(u, v)) nb.push_back(u);
      }
      bool clique = true;
      for (std::size_t i = 0; i < nb.size() && clique; ++i) {
        for (std::size_t j = i + 1; j < nb.size() && clique; ++j) clique = g.adjacent(nb[i], nb[j]);
      }
      if (clique) {
        gone[v] = true;
        removed = true;
      }
    }
    if (!removed) return false;
  }
  return true;
}

// Threshold: 2K2, C4 and P4 are all absent.
inline bool is_threshold(const UndirectedGraph& g) {
  return !has(g, Shape::TwoK2) && !has(g, Shape::C4) && !has(g, Shape::P4);
}

// ---- seeded graph generators ----------------------------------------------

class GraphGen {
 public:
  explicit GraphGen(std::uint64_t seed) : rng_(seed) {}

  UndirectedGraph gnp(std::size_t n, double p) {
    UndirectedGraph g(n);
    std::bernoulli_distribution coin(p);
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) {
        if (coin(rng_)) g.add_edge(u, v);
      }
    }
    return g;
  }

  UndirectedGraph split(std::size_t n) {
    std::vector<bool> in_clique(n);
    std::bernoulli_distribution half(0.5);
    for (auto&& b : in_clique) b = half(rng_);
    std::bernoulli_distribution cross(uniform01());
    UndirectedGraph g(n);
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) {
        if (in_clique[u] && in_clique[v]) g.add_edge(u, v);
        else if ((in_clique[u] || in_clique[v]) && cross(rng_)) g.add_edge(u, v);
      }
    }
    return shuffled(g);
  }

  UndirectedGraph threshold(std::size_t n) {
    UndirectedGraph g(n);
    std::bernoulli_distribution dom(uniform01());
    for (Vertex v = 1; v < n; ++v) {
      if (dom(rng_)) {
        for (Vertex u = 0; u < v; ++u) g.add_edge(u, v);
      }
    }
    return shuffled(g);
  }

  UndirectedGraph cograph(std::size_t n) {
    UndirectedGraph g(n);
    std::vector<Vertex> all(n);
    std::iota(all.begin(), all.end(), Vertex{0});
    build_cotree(g, all);
    return shuffled(g);
  }

  // Each new vertex is joined to a clique inside an earlier vertex's closed
  // neighbourhood, so the reverse insertion order is a perfect elimination.
  UndirectedGraph chordal(std::size_t n) {
    UndirectedGraph g(n);
    for (Vertex v = 1; v < n; ++v) {
      if (std::bernoulli_distribution(0.1)(rng_)) continue;
      Vertex anchor = pick(v);
      std::vector<Vertex> clique{anchor};
      std::vector<Vertex> cand;
      for (Vertex u = 0; u < v; ++u) {
        if (u != anchor && g.adjacent(u, anchor)) cand.push_back(u);
      }
      std::shuffle(cand.begin(), cand.end(), rng_);
      std::bernoulli_distribution take(uniform01());
      for (Vertex u : cand) {
        bool ok = std::all_of(clique.begin(), clique.end(), [&](Vertex w) { return g.adjacent(u, w); });
        if (ok && take(rng_)) clique.push_back(u);
      }
      for (Vertex u : clique) g.add_edge(u, v);
    }
    return shuffled(g);
  }

  UndirectedGraph flip_one(UndirectedGraph g) {
    if (g.size() < 2) return g;
    Vertex u = pick(static_cast<Vertex>(g.size()));
    Vertex v = pick(static_cast<Vertex>(g.size() - 1));
    if (v >= u) ++v;
    if (g.adjacent(u, v)) g.remove_edge(u, v);
    else g.add_edge(u, v);
    return g;
  }

  // A mix weighted towards the interesting classes and their boundaries.
  UndirectedGraph mixed(std::size_t n) {
    switch (pick(10)) {
      case 0:
      case 1: return gnp(n, uniform01());
      case 2: return split(n);
      case 3: return threshold(n);
      case 4: return cograph(n);
      case 5: return chordal(n);
      case 6: return flip_one(split(n));
      case 7: return flip_one(threshold(n));
      case 8: return flip_one(cograph(n));
      default: return flip_one(chordal(n));
    }
  }

  Vertex pick(Vertex bound) { return std::uniform_int_distribution<Vertex>(0, bound - 1)(rng_); }
  double uniform01() { return std::uniform_real_distribution<double>(0.0, 1.0)(rng_); }
  std::mt19937_64& rng() { return rng_; }

 private:
  void build_cotree(UndirectedGraph& g, std::vector<Vertex> verts) {
    if (verts.size() <= 1) return;
    std::shuffle(verts.begin(), verts.end(), rng_);
    std::size_t cut = 1 + pick(static_cast<Vertex>(verts.size() - 1));
    std::vector<Vertex> a(verts.begin(), verts.begin() + static_cast<std::ptrdiff_t>(cut));
    std::vector<Vertex> b(verts.begin() + static_cast<std::ptrdiff_t>(cut), verts.end());
    build_cotree(g, a);
    build_cotree(g, b);
    if (pick(2) == 0) {
      for (Vertex x : a) {
        for (Vertex y : b) g.add_edge(x, y);
      }
    }
  }

  UndirectedGraph shuffled(const UndirectedGraph& g) {
    std::vector<Vertex> perm(g.size());
    std::iota(perm.begin(), perm.end(), Vertex{0});
    std::shuffle(perm.begin(), perm.end(), rng_);
    UndirectedGraph out(g.size());
    for (Vertex u = 0; u < g.size(); ++u) {
      for (Vertex v = u + 1; v < g.size(); ++v) {
        if (g.adjacent(u, v)) out.add_edge(perm[u], perm[v]);
      }
    }
    return out;
  }

  std::mt19937_64 rng_;
};

// Labelled graph number `code` on n vertices: bit i of the code is the i-th
// pair (u, v), u < v, in row order.
inline UndirectedGraph graph_from_code(std::size_t n, std::uint64_t code) {
  UndirectedGraph g(n);
  std::size_t bit = 0;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v, ++bit) {
      if ((code >> bit) & 1U) g.add_edge(u, v);
    }
  }
  return g;
}

}  // namespace oracle
