#include "commgraph/induced_search.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "commgraph/error.hpp"

namespace commgraph {

namespace {

// Edge slots for the pair (i, j), i < j, are numbered j(j-1)/2 + i so that the
// mask of a prefix of positions is just the low bits of the full mask.
constexpr unsigned slot(unsigned i, unsigned j) { return j * (j - 1) / 2 + i; }
constexpr unsigned slots(unsigned k) { return k * (k - 1) / 2; }

struct PatternTable {
  unsigned k = 0;
  // allowed[j][mask]: some labelling of the pattern restricts to `mask` on
  // positions 0..j-1.
  std::array<std::vector<bool>, 6> allowed;
};

PatternTable make_table(PatternKind kind) {
  std::vector<std::pair<unsigned, unsigned>> edges;
  unsigned k = 4;
  switch (kind) {
    case PatternKind::P4: edges = {{0, 1}, {1, 2}, {2, 3}}; break;
    case PatternKind::C4: edges = {{0, 1}, {1, 2}, {2, 3}, {3, 0}}; break;
    case PatternKind::C5:
      k = 5;
      edges = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}};
      break;
    case PatternKind::TwoK2: edges = {{0, 1}, {2, 3}}; break;
    case PatternKind::Hole: fail(ErrorCode::Internal, "no fixed table for holes");
  }
  PatternTable t;
  t.k = k;
  for (unsigned j = 0; j <= k; ++j) t.allowed[j].assign(std::size_t{1} << slots(j), false);
  std::vector<unsigned> perm(k);
  std::iota(perm.begin(), perm.end(), 0U);
  do {
    unsigned mask = 0;
    for (auto [a, b] : edges) {
      unsigned i = std::min(perm[a], perm[b]);
      unsigned j = std::max(perm[a], perm[b]);
      mask |= 1U << slot(i, j);
    }
    for (unsigned j = 0; j <= k; ++j) t.allowed[j][mask & ((1U << slots(j)) - 1)] = true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return t;
}

const PatternTable& table_for(PatternKind kind) {
  static const std::array<PatternTable, 4> tables = {
      make_table(PatternKind::P4), make_table(PatternKind::C4), make_table(PatternKind::C5),
      make_table(PatternKind::TwoK2)};
  return tables[static_cast<std::size_t>(kind)];
}

class FixedSearch {
 public:
  FixedSearch(const UndirectedGraph& g, const PatternTable& t) : g_(g), t_(t) {}

  std::optional<std::vector<Vertex>> run() {
    if (g_.size() < t_.k) return std::nullopt;
    chosen_.clear();
    if (descend(0)) return chosen_;
    return std::nullopt;
  }

 private:
  bool descend(unsigned mask) {
    const unsigned j = static_cast<unsigned>(chosen_.size());
    if (j == t_.k) return true;
    const std::size_t n = g_.size();
    const std::size_t start = j == 0 ? 0 : chosen_.back() + 1;
    if (start >= n) return false;

    // Candidates for position j: vertices past the last one whose adjacency to
    // the prefix extends `mask` to an allowed pattern.
    Bitset cand(n);
    Bitset above(n);
    above.set_all();
    for (std::size_t w = 0; w < (start >> 6); ++w) above.words()[w] = 0;
    if (start & 63) above.words()[start >> 6] &= ~std::uint64_t{0} << (start & 63);

    const unsigned base = slots(j);
    for (unsigned x = 0; x < (1U << j); ++x) {
      if (!t_.allowed[j + 1][mask | (x << base)]) continue;
      Bitset part = above;
      for (unsigned i = 0; i < j; ++i) {
        if (x & (1U << i)) {
          part &= g_.row(chosen_[i]);
        } else {
          part.and_not(g_.row(chosen_[i]));
        }
      }
      cand |= part;
    }
    for (std::size_t v = cand.first(); v < n; v = cand.next(v + 1)) {
      unsigned x = 0;
      for (unsigned i = 0; i < j; ++i) {
        if (g_.adjacent(chosen_[i], static_cast<Vertex>(v))) x |= 1U << i;
      }
      chosen_.push_back(static_cast<Vertex>(v));
      if (descend(mask | (x << base))) return true;
      chosen_.pop_back();
    }
    return false;
  }

  const UndirectedGraph& g_;
  const PatternTable& t_;
  std::vector<Vertex> chosen_;
};

struct HoleHit {
  std::size_t length = 0;
  std::vector<Vertex> cycle;
};

// For each middle vertex v and pair of non-adjacent neighbours u < w, a
// shortest u-w path whose interior avoids N[v] closes a hole through v. The
// minimum over all triples is the shortest hole of the graph.
std::optional<HoleHit> shortest_hole(const UndirectedGraph& g) {
  const std::size_t n = g.size();
  std::optional<HoleHit> best;
  std::vector<Bitset> layers;
  for (Vertex v = 0; v < n; ++v) {
    Bitset closed_v = g.neighbors(v);
    closed_v.set(v);
    for (Vertex u : g.neighbor_list(v)) {
      Bitset targets = g.neighbors(v);
      targets.and_not(g.row(u));
      for (std::size_t x = 0; x <= u; ++x) targets.reset(x);
      if (targets.none()) continue;

      layers.clear();
      Bitset frontier(n);
      frontier.set(u);
      Bitset visited = closed_v;
      layers.push_back(frontier);
      std::size_t d = 0;
      while (!frontier.none()) {
        ++d;
        if (best && d + 2 >= best->length) break;
        Bitset next(n);
        frontier.for_each([&](std::size_t x) { next |= g.row(static_cast<Vertex>(x)); });
        Bitset hit = next;
        hit &= targets;
        if (!hit.none()) {
          HoleHit h;
          h.length = d + 2;
          std::vector<Vertex> path{static_cast<Vertex>(hit.first())};
          for (std::size_t back = d; back-- > 0;) {
            Bitset prev = layers[back];
            prev &= g.row(path.back());
            path.push_back(static_cast<Vertex>(prev.first()));
          }
          h.cycle.push_back(v);
          h.cycle.insert(h.cycle.end(), path.rbegin(), path.rend());
          best = std::move(h);
          break;
        }
        next.and_not(visited);
        visited |= next;
        layers.push_back(next);
        frontier = std::move(next);
      }
      if (best && best->length == 4) return best;
    }
  }
  return best;
}

// Iteratively drops simplicial vertices; they lie on no hole.
Bitset hole_candidates(const UndirectedGraph& g) {
  const std::size_t n = g.size();
  Bitset alive(n);
  alive.set_all();
  bool changed = true;
  while (changed) {
    changed = false;
    for (Vertex v = 0; v < n; ++v) {
      if (!alive.test(v)) continue;
      Bitset nb = g.neighbors(v);
      nb &= alive;
      bool simplicial = true;
      nb.for_each([&](std::size_t a) {
        if (!simplicial) return;
        Bitset rest = nb;
        rest.reset(a);
        Bitset closed_a = g.neighbors(static_cast<Vertex>(a));
        closed_a.set(a);
        if (!subset_of(rest.words(), closed_a.words())) simplicial = false;
      });
      if (simplicial) {
        alive.reset(v);
        changed = true;
      }
    }
  }
  return alive;
}

class HoleDfs {
 public:
  HoleDfs(const UndirectedGraph& g, Bitset alive) : g_(g), alive_(std::move(alive)) {}

  bool run(Vertex s, std::size_t target, bool at_cap) {
    target_ = target;
    at_cap_ = at_cap;
    s_ = s;
    allowed_ = alive_;
    for (std::size_t x = 0; x <= s; ++x) allowed_.reset(x);
    path_ = {s};
    Bitset first = g_.neighbors(s);
    first &= allowed_;
    for (std::size_t p = first.first(); p < g_.size(); p = first.next(p + 1)) {
      path_.push_back(static_cast<Vertex>(p));
      if (extend(Bitset(g_.size()))) return true;
      path_.pop_back();
    }
    return false;
  }

  bool truncated() const { return truncated_; }
  const std::vector<Vertex>& path() const { return path_; }

 private:
  // `blocked` holds the closed neighbourhoods of path_[1 .. size-3], i.e. the
  // interior minus the two newest vertices. The start s is handled apart.
  bool extend(const Bitset& blocked) {
    const Vertex last = path_.back();
    Bitset step = g_.neighbors(last);
    step &= allowed_;
    step.and_not(blocked);
    if (path_.size() + 1 == target_) {
      Bitset close = step;
      close &= g_.row(s_);
      if (path_.size() > 1) {
        Bitset no_back = g_.neighbors(path_[path_.size() - 2]);
        no_back.set(path_[path_.size() - 2]);
        close.and_not(no_back);
      }
      if (!close.none()) {
        path_.push_back(static_cast<Vertex>(close.first()));
        return true;
      }
      if (at_cap_) {
        Bitset more = step;
        more.and_not(g_.row(s_));
        if (path_.size() > 2) {
          more.and_not(g_.row(path_[path_.size() - 2]));
          more.reset(path_[path_.size() - 2]);
        }
        if (!more.none()) truncated_ = true;
      }
      return false;
    }
    Bitset next_blocked = blocked;
    if (path_.size() > 2) {
      Vertex prev = path_[path_.size() - 2];
      next_blocked |= g_.row(prev);
      next_blocked.set(prev);
    }
    step.and_not(g_.row(s_));
    step.and_not(next_blocked);
    for (std::size_t x = step.first(); x < g_.size(); x = step.next(x + 1)) {
      path_.push_back(static_cast<Vertex>(x));
      if (extend(next_blocked)) return true;
      path_.pop_back();
    }
    return false;
  }

  const UndirectedGraph& g_;
  Bitset alive_;
  Bitset allowed_;
  std::vector<Vertex> path_;
  std::size_t target_ = 0;
  bool at_cap_ = false;
  bool truncated_ = false;
  Vertex s_ = 0;
};

}  // namespace

std::string to_string(const Pattern& p) {
  switch (p.kind) {
    case PatternKind::P4: return "P4";
    case PatternKind::C4: return "C4";
    case PatternKind::C5: return "C5";
    case PatternKind::TwoK2: return "2K2";
    case PatternKind::Hole: return "Hole(" + std::to_string(p.length) + ")";
  }
  return "?";
}

Pattern parse_pattern(const std::string& text) {
  if (text == "P4") return Pattern::p4();
  if (text == "C4") return Pattern::c4();
  if (text == "C5") return Pattern::c5();
  if (text == "2K2") return Pattern::two_k2();
  std::string rest;
  if (text.rfind("hole:", 0) == 0) {
    rest = text.substr(5);
  } else if (text.rfind("Hole(", 0) == 0 && text.back() == ')') {
    rest = text.substr(5, text.size() - 6);
  } else {
    fail(ErrorCode::BadParameter, "unknown pattern '" + text + "'");
  }
  std::size_t used = 0;
  unsigned long k = 0;
  try {
    k = std::stoul(rest, &used);
  } catch (const std::exception&) {
    fail(ErrorCode::BadParameter, "bad hole length in '" + text + "'");
  }
  if (used != rest.size() || k < 4) fail(ErrorCode::BadParameter, "hole length must be an integer >= 4");
  return Pattern::hole(k);
}

std::optional<std::vector<Vertex>> find_induced(const UndirectedGraph& g, const Pattern& pattern,
                                                std::size_t cap) {
  if (pattern.kind != PatternKind::Hole) return FixedSearch(g, table_for(pattern.kind)).run();

  const std::size_t k = pattern.length;
  if (k < 4) fail(ErrorCode::BadParameter, "hole length must be at least 4");
  if (k > cap) fail(ErrorCode::LengthCapExceeded, "hole length " + std::to_string(k) + " exceeds cap " + std::to_string(cap));

  if (k == 4) {
    auto hit = shortest_hole(g);
    if (!hit) return std::nullopt;
    if (hit->length > cap) {
      fail(ErrorCode::LengthCapExceeded, "shortest hole has length " + std::to_string(hit->length));
    }
    std::sort(hit->cycle.begin(), hit->cycle.end());
    return hit->cycle;
  }

  HoleDfs dfs(g, hole_candidates(g));
  for (Vertex s = 0; s < g.size(); ++s) {
    for (std::size_t len = k; len <= cap; ++len) {
      if (dfs.run(s, len, len == cap)) {
        auto cycle = dfs.path();
        std::sort(cycle.begin(), cycle.end());
        return cycle;
      }
    }
  }
  if (dfs.truncated()) fail(ErrorCode::LengthCapExceeded, "hole search truncated at length " + std::to_string(cap));
  return std::nullopt;
}

std::optional<std::size_t> shortest_hole_length(const UndirectedGraph& g) {
  auto hit = shortest_hole(g);
  if (!hit) return std::nullopt;
  return hit->length;
}

bool induces_pattern(const UndirectedGraph& g, const std::vector<Vertex>& vertices,
                     const Pattern& pattern) {
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i] >= g.size()) return false;
    for (std::size_t j = 0; j < i; ++j) {
      if (vertices[i] == vertices[j]) return false;
    }
  }
  if (pattern.kind == PatternKind::Hole) {
    const std::size_t len = vertices.size();
    if (len < std::max<std::size_t>(pattern.length, 4)) return false;
    for (Vertex v : vertices) {
      std::size_t d = 0;
      for (Vertex w : vertices) d += (w != v && g.adjacent(v, w)) ? 1 : 0;
      if (d != 2) return false;
    }
    // 2-regular; connected means a single cycle.
    std::vector<bool> seen(len, false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
      std::size_t i = stack.back();
      stack.pop_back();
      for (std::size_t j = 0; j < len; ++j) {
        if (!seen[j] && g.adjacent(vertices[i], vertices[j])) {
          seen[j] = true;
          ++reached;
          stack.push_back(j);
        }
      }
    }
    return reached == len;
  }
  const PatternTable& t = table_for(pattern.kind);
  if (vertices.size() != t.k) return false;
  unsigned mask = 0;
  for (unsigned j = 1; j < t.k; ++j) {
    for (unsigned i = 0; i < j; ++i) {
      if (g.adjacent(vertices[i], vertices[j])) mask |= 1U << slot(i, j);
    }
  }
  return t.allowed[t.k][mask];
}

std::vector<Vertex> pattern_order(const UndirectedGraph& g, std::vector<Vertex> vertices,
                                  const Pattern& pattern) {
  std::sort(vertices.begin(), vertices.end());
  if (vertices.empty()) return vertices;
  auto inner_degree = [&](Vertex v) {
    std::size_t d = 0;
    for (Vertex w : vertices) d += (w != v && g.adjacent(v, w)) ? 1 : 0;
    return d;
  };
  if (pattern.kind == PatternKind::TwoK2) {
    std::vector<Vertex> out;
    for (Vertex v : vertices) {
      if (std::find(out.begin(), out.end(), v) != out.end()) continue;
      out.push_back(v);
      for (Vertex w : vertices) {
        if (w != v && g.adjacent(v, w)) {
          out.push_back(w);
          break;
        }
      }
    }
    return out;
  }
  Vertex start = vertices.front();
  if (pattern.kind == PatternKind::P4) {
    for (Vertex v : vertices) {
      if (inner_degree(v) == 1) {
        start = v;
        break;
      }
    }
  }
  std::vector<Vertex> out{start};
  while (out.size() < vertices.size()) {
    Vertex cur = out.back();
    bool moved = false;
    for (Vertex w : vertices) {
      if (g.adjacent(cur, w) && std::find(out.begin(), out.end(), w) == out.end()) {
        out.push_back(w);
        moved = true;
        break;
      }
    }
    if (!moved) break;
  }
  return out;
}

}  // namespace commgraph
