#include "commgraph/recognition.hpp"

#include <algorithm>
#include <numeric>

#include "commgraph/error.hpp"

namespace commgraph {

namespace {

ClassVerdict with_witness(GraphClass c, const UndirectedGraph& g,
                          std::initializer_list<Pattern> order) {
  for (const Pattern& p : order) {
    if (auto found = find_induced(g, p)) {
      ClassVerdict v{c, false, {}, Witness{p, pattern_order(g, *found, p)}};
      return v;
    }
  }
  fail(ErrorCode::Internal, to_string(c) + " rejected a graph without any forbidden subgraph");
}

ClassVerdict member_with(GraphClass c, Certificate cert) {
  ClassVerdict v;
  v.graph_class = c;
  v.member = true;
  v.certificate = std::move(cert);
  return v;
}

Bitset single(std::size_t n, std::size_t v) {
  Bitset b(n);
  b.set(v);
  return b;
}

// Splits S into the components of G[S] (or of its complement), ordered by
// least vertex.
std::vector<Bitset> components(const UndirectedGraph& g, const Bitset& s, bool in_complement) {
  const std::size_t n = g.size();
  std::vector<Bitset> out;
  Bitset left = s;
  while (!left.none()) {
    const std::size_t start = left.first();
    Bitset comp = single(n, start);
    Bitset frontier = comp;
    left.reset(start);
    while (!frontier.none()) {
      Bitset next(n);
      frontier.for_each([&](std::size_t x) {
        if (in_complement) {
          Bitset away = left;
          away.and_not(g.row(static_cast<Vertex>(x)));
          next |= away;
        } else {
          next |= g.row(static_cast<Vertex>(x));
        }
      });
      next &= left;
      left.and_not(next);
      comp |= next;
      frontier = std::move(next);
    }
    out.push_back(std::move(comp));
  }
  return out;
}

// G[S] is connected and co-connected, so some edge bc has a in N(b) - N[c]
// and d in N(c) - N[b] with a, d non-adjacent.
std::vector<Vertex> p4_inside(const UndirectedGraph& g, const Bitset& s) {
  const std::size_t n = g.size();
  std::vector<Vertex> found;
  for (std::size_t b = s.first(); b < n && found.empty(); b = s.next(b + 1)) {
    Bitset nb = g.neighbors(static_cast<Vertex>(b));
    nb &= s;
    for (std::size_t c = nb.first(); c < n; c = nb.next(c + 1)) {
      Bitset a_side = nb;
      a_side.and_not(g.row(static_cast<Vertex>(c)));
      a_side.reset(c);
      if (a_side.none()) continue;
      Bitset d_side = g.neighbors(static_cast<Vertex>(c));
      d_side &= s;
      d_side.and_not(g.row(static_cast<Vertex>(b)));
      d_side.reset(b);
      if (d_side.none()) continue;
      for (std::size_t a = a_side.first(); a < n; a = a_side.next(a + 1)) {
        Bitset far = d_side;
        far.and_not(g.row(static_cast<Vertex>(a)));
        if (!far.none()) {
          found = {static_cast<Vertex>(a), static_cast<Vertex>(b), static_cast<Vertex>(c),
                   static_cast<Vertex>(far.first())};
          break;
        }
      }
      if (!found.empty()) break;
    }
  }
  if (found.empty()) fail(ErrorCode::Internal, "prime part of the decomposition has no P4");
  return found;
}

std::vector<Vertex> lex_bfs(const UndirectedGraph& g) {
  const std::size_t n = g.size();
  std::vector<std::vector<Vertex>> classes;
  if (n > 0) {
    classes.emplace_back(n);
    std::iota(classes[0].begin(), classes[0].end(), Vertex{0});
  }
  std::vector<Vertex> visit;
  visit.reserve(n);
  std::vector<std::vector<Vertex>> next;
  while (!classes.empty()) {
    const Vertex v = classes.front().front();
    classes.front().erase(classes.front().begin());
    visit.push_back(v);
    next.clear();
    for (auto& cls : classes) {
      std::vector<Vertex> in;
      std::vector<Vertex> out;
      for (Vertex u : cls) (g.adjacent(v, u) ? in : out).push_back(u);
      if (!in.empty()) next.push_back(std::move(in));
      if (!out.empty()) next.push_back(std::move(out));
    }
    std::swap(classes, next);
  }
  return visit;
}

// Shortest u-w path in G avoiding blocked vertices (endpoints excepted).
std::vector<Vertex> shortest_path_avoiding(const UndirectedGraph& g, Vertex u, Vertex w,
                                           const Bitset& blocked) {
  const std::size_t n = g.size();
  std::vector<Vertex> parent(n, static_cast<Vertex>(n));
  Bitset seen = blocked;
  seen.reset(w);
  seen.set(u);
  std::vector<Vertex> queue{u};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex x = queue[head];
    Bitset step = g.neighbors(x);
    step.and_not(seen);
    for (std::size_t y = step.first(); y < n; y = step.next(y + 1)) {
      seen.set(y);
      parent[y] = x;
      if (y == w) {
        std::vector<Vertex> path{w};
        while (path.back() != u) path.push_back(parent[path.back()]);
        std::reverse(path.begin(), path.end());
        return path;
      }
      queue.push_back(static_cast<Vertex>(y));
    }
  }
  return {};
}

}  // namespace

std::string to_string(GraphClass c) {
  switch (c) {
    case GraphClass::Split: return "split";
    case GraphClass::Threshold: return "threshold";
    case GraphClass::TwoK2Free: return "2k2free";
    case GraphClass::Cograph: return "cograph";
    case GraphClass::Chordal: return "chordal";
  }
  return "?";
}

ClassVerdict is_split(const UndirectedGraph& g) {
  const std::size_t n = g.size();
  std::vector<std::size_t> deg(n);
  for (Vertex v = 0; v < n; ++v) deg[v] = g.degree(v);
  std::vector<Vertex> by_degree(n);
  std::iota(by_degree.begin(), by_degree.end(), Vertex{0});
  std::stable_sort(by_degree.begin(), by_degree.end(),
                   [&](Vertex a, Vertex b) { return deg[a] > deg[b]; });

  // Hammer-Simeone: with d_1 >= ... >= d_n and m = max{i : d_i >= i - 1},
  // the graph is split iff sum_{i<=m} d_i = m(m-1) + sum_{i>m} d_i, and then
  // the m largest-degree vertices form a clique.
  std::size_t m = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (deg[by_degree[i]] >= i) m = i + 1;
  }
  std::size_t head = 0;
  std::size_t tail = 0;
  for (std::size_t i = 0; i < n; ++i) (i < m ? head : tail) += deg[by_degree[i]];
  if (head == m * (m - (m > 0 ? 1 : 0)) + tail) {
    SplitPartition p;
    p.clique.assign(by_degree.begin(), by_degree.begin() + static_cast<std::ptrdiff_t>(m));
    p.independent.assign(by_degree.begin() + static_cast<std::ptrdiff_t>(m), by_degree.end());
    std::sort(p.clique.begin(), p.clique.end());
    std::sort(p.independent.begin(), p.independent.end());
    if (!verify_split_partition(g, p)) fail(ErrorCode::Internal, "degree test accepted a non-split graph");
    return member_with(GraphClass::Split, std::move(p));
  }
  return with_witness(GraphClass::Split, g, {Pattern::two_k2(), Pattern::c4(), Pattern::c5()});
}

ClassVerdict is_threshold(const UndirectedGraph& g) {
  const std::size_t n = g.size();
  std::vector<std::size_t> deg(n);
  for (Vertex v = 0; v < n; ++v) deg[v] = g.degree(v);
  std::vector<bool> gone(n, false);
  CreationSequence peel;
  peel.reserve(n);
  for (std::size_t remaining = n; remaining > 0; --remaining) {
    Vertex pick = static_cast<Vertex>(n);
    for (Vertex v = 0; v < n; ++v) {
      if (!gone[v] && (deg[v] == 0 || deg[v] + 1 == remaining)) {
        pick = v;
        break;
      }
    }
    if (pick == n) {
      return with_witness(GraphClass::Threshold, g,
                          {Pattern::two_k2(), Pattern::c4(), Pattern::p4()});
    }
    gone[pick] = true;
    peel.push_back({pick, deg[pick] != 0});
    for (Vertex u : g.neighbor_list(pick)) {
      if (!gone[u]) --deg[u];
    }
  }
  std::reverse(peel.begin(), peel.end());
  return member_with(GraphClass::Threshold, std::move(peel));
}

ClassVerdict is_2k2_free(const UndirectedGraph& g) {
  if (auto found = find_induced(g, Pattern::two_k2())) {
    return {GraphClass::TwoK2Free, false, {},
            Witness{Pattern::two_k2(), pattern_order(g, *found, Pattern::two_k2())}};
  }
  return member_with(GraphClass::TwoK2Free, ExhaustiveSearch{});
}

ClassVerdict is_cograph(const UndirectedGraph& g) {
  const std::size_t n = g.size();
  Cotree tree;
  if (n == 0) return member_with(GraphClass::Cograph, std::move(tree));

  struct Work {
    Bitset set;
    std::size_t node;
  };
  tree.nodes.emplace_back();
  tree.root = 0;
  Bitset all(n);
  all.set_all();
  std::vector<Work> stack;
  stack.push_back({std::move(all), 0});
  while (!stack.empty()) {
    Work item = std::move(stack.back());
    stack.pop_back();
    if (item.set.count() == 1) {
      tree.nodes[item.node].kind = Cotree::Kind::Leaf;
      tree.nodes[item.node].vertex = static_cast<Vertex>(item.set.first());
      continue;
    }
    Cotree::Kind kind = Cotree::Kind::Union;
    auto parts = components(g, item.set, false);
    if (parts.size() == 1) {
      kind = Cotree::Kind::Join;
      parts = components(g, item.set, true);
    }
    if (parts.size() == 1) {
      ClassVerdict v;
      v.graph_class = GraphClass::Cograph;
      v.witness = Witness{Pattern::p4(), p4_inside(g, item.set)};
      return v;
    }
    tree.nodes[item.node].kind = kind;
    // Children are pushed in reverse so they are expanded in order; node
    // numbering stays deterministic either way.
    std::vector<std::size_t> ids;
    for (auto& part : parts) {
      const std::size_t id = tree.nodes.size();
      tree.nodes.emplace_back();
      tree.nodes[item.node].children.push_back(id);
      ids.push_back(id);
    }
    for (std::size_t i = parts.size(); i-- > 0;) {
      if (parts[i].count() == 1) {
        tree.nodes[ids[i]].vertex = static_cast<Vertex>(parts[i].first());
      } else {
        stack.push_back({std::move(parts[i]), ids[i]});
      }
    }
  }
  return member_with(GraphClass::Cograph, std::move(tree));
}

ClassVerdict is_chordal(const UndirectedGraph& g) {
  const std::size_t n = g.size();
  EliminationOrdering order = lex_bfs(g);
  std::reverse(order.begin(), order.end());
  std::vector<std::size_t> pos(n);
  for (std::size_t i = 0; i < n; ++i) pos[order[i]] = i;

  Bitset later(n);
  later.set_all();
  for (Vertex v : order) {
    later.reset(v);
    Bitset ahead = g.neighbors(v);
    ahead &= later;
    if (ahead.none()) continue;
    Vertex parent = static_cast<Vertex>(ahead.first());
    ahead.for_each([&](std::size_t u) {
      if (pos[u] < pos[parent]) parent = static_cast<Vertex>(u);
    });
    ahead.reset(parent);
    Bitset missing = ahead;
    missing.and_not(g.row(parent));
    if (missing.none()) continue;

    // v has non-adjacent later neighbours; close them through a shortest
    // path that avoids the rest of N[v].
    const Vertex u = std::min(parent, static_cast<Vertex>(missing.first()));
    const Vertex w = std::max(parent, static_cast<Vertex>(missing.first()));
    Bitset blocked = g.neighbors(v);
    blocked.set(v);
    blocked.reset(u);
    auto path = shortest_path_avoiding(g, u, w, blocked);
    std::vector<Vertex> cycle;
    if (!path.empty()) {
      cycle.push_back(v);
      cycle.insert(cycle.end(), path.begin(), path.end());
    } else {
      auto hole = find_induced(g, Pattern::hole(4), std::max<std::size_t>(n, 4));
      if (!hole) fail(ErrorCode::Internal, "elimination ordering failed on a chordal graph");
      cycle = pattern_order(g, *hole, Pattern::hole(4));
    }
    ClassVerdict verdict;
    verdict.graph_class = GraphClass::Chordal;
    verdict.witness = Witness{Pattern::hole(cycle.size()), std::move(cycle)};
    return verdict;
  }
  return member_with(GraphClass::Chordal, std::move(order));
}

ClassVerdict recognize(const UndirectedGraph& g, GraphClass c) {
  switch (c) {
    case GraphClass::Split: return is_split(g);
    case GraphClass::Threshold: return is_threshold(g);
    case GraphClass::TwoK2Free: return is_2k2_free(g);
    case GraphClass::Cograph: return is_cograph(g);
    case GraphClass::Chordal: return is_chordal(g);
  }
  fail(ErrorCode::Internal, "unknown graph class");
}

bool verify_split_partition(const UndirectedGraph& g, const SplitPartition& p) {
  const std::size_t n = g.size();
  if (p.clique.size() + p.independent.size() != n) return false;
  std::vector<bool> seen(n, false);
  for (const auto* part : {&p.clique, &p.independent}) {
    for (Vertex v : *part) {
      if (v >= n || seen[v]) return false;
      seen[v] = true;
    }
  }
  for (std::size_t i = 0; i < p.clique.size(); ++i) {
    for (std::size_t j = i + 1; j < p.clique.size(); ++j) {
      if (!g.adjacent(p.clique[i], p.clique[j])) return false;
    }
  }
  Bitset indep(n);
  for (Vertex v : p.independent) indep.set(v);
  for (Vertex v : p.independent) {
    if (intersects(g.row(v), indep.words())) return false;
  }
  return true;
}

bool verify_creation_sequence(const UndirectedGraph& g, const CreationSequence& seq) {
  const std::size_t n = g.size();
  if (seq.size() != n) return false;
  UndirectedGraph rebuilt(n);
  std::vector<bool> seen(n, false);
  std::vector<Vertex> placed;
  for (const auto& step : seq) {
    if (step.vertex >= n || seen[step.vertex]) return false;
    seen[step.vertex] = true;
    if (step.dominating) {
      for (Vertex u : placed) rebuilt.add_edge(u, step.vertex);
    }
    placed.push_back(step.vertex);
  }
  return rebuilt == g;
}

bool verify_cotree(const UndirectedGraph& g, const Cotree& t) {
  const std::size_t n = g.size();
  if (t.nodes.empty()) return n == 0;
  if (t.root >= t.nodes.size()) return false;

  // Post-order evaluation: each node's leaf set, with every cross pair of
  // children checked against the node type.
  std::vector<Bitset> leaves(t.nodes.size());
  std::vector<int> state(t.nodes.size(), 0);
  std::vector<std::size_t> stack{t.root};
  std::size_t visited = 0;
  while (!stack.empty()) {
    const std::size_t id = stack.back();
    const auto& node = t.nodes[id];
    if (state[id] == 0) {
      state[id] = 1;
      ++visited;
      if (node.kind == Cotree::Kind::Leaf) {
        if (!node.children.empty() || node.vertex >= n) return false;
        continue;
      }
      if (node.children.size() < 2) return false;
      for (std::size_t c : node.children) {
        if (c >= t.nodes.size() || state[c] != 0) return false;
        stack.push_back(c);
      }
      continue;
    }
    stack.pop_back();
    if (state[id] == 2) continue;
    state[id] = 2;
    Bitset mine(n);
    if (node.kind == Cotree::Kind::Leaf) {
      mine.set(node.vertex);
    } else {
      for (std::size_t c : node.children) {
        if (state[c] != 2 || intersects(mine.words(), leaves[c].words())) return false;
        mine |= leaves[c];
      }
      for (std::size_t c : node.children) {
        Bitset others = mine;
        others.and_not(leaves[c]);
        bool ok = true;
        leaves[c].for_each([&](std::size_t v) {
          if (!ok) return;
          auto row = g.row(static_cast<Vertex>(v));
          ok = node.kind == Cotree::Kind::Union ? !intersects(row, others.words())
                                                : subset_of(others.words(), row);
        });
        if (!ok) return false;
      }
      for (std::size_t c : node.children) leaves[c] = Bitset();
    }
    leaves[id] = std::move(mine);
  }
  if (visited != t.nodes.size()) return false;
  return leaves[t.root].count() == n;
}

bool verify_elimination_ordering(const UndirectedGraph& g, const EliminationOrdering& order) {
  const std::size_t n = g.size();
  if (order.size() != n) return false;
  std::vector<bool> seen(n, false);
  for (Vertex v : order) {
    if (v >= n || seen[v]) return false;
    seen[v] = true;
  }
  Bitset later(n);
  later.set_all();
  for (Vertex v : order) {
    later.reset(v);
    Bitset ahead = g.neighbors(v);
    ahead &= later;
    bool clique = true;
    ahead.for_each([&](std::size_t u) {
      if (!clique) return;
      Bitset rest = ahead;
      rest.reset(u);
      clique = subset_of(rest.words(), g.row(static_cast<Vertex>(u)));
    });
    if (!clique) return false;
  }
  return true;
}

bool pattern_forbidden_for(GraphClass c, const Pattern& p) {
  switch (c) {
    case GraphClass::Split:
      return p.kind == PatternKind::C4 || p.kind == PatternKind::C5 || p.kind == PatternKind::TwoK2;
    case GraphClass::Threshold:
      return p.kind == PatternKind::P4 || p.kind == PatternKind::C4 || p.kind == PatternKind::TwoK2;
    case GraphClass::TwoK2Free: return p.kind == PatternKind::TwoK2;
    case GraphClass::Cograph: return p.kind == PatternKind::P4;
    case GraphClass::Chordal:
      return p.kind == PatternKind::C4 || p.kind == PatternKind::C5 ||
             (p.kind == PatternKind::Hole && p.length >= 4);
  }
  return false;
}

bool verify_verdict(const UndirectedGraph& g, const ClassVerdict& v) {
  const bool has_cert = !std::holds_alternative<std::monostate>(v.certificate);
  if (v.member != has_cert || v.member == v.witness.has_value()) return false;
  if (!v.member) {
    const Witness& w = *v.witness;
    if (!pattern_forbidden_for(v.graph_class, w.pattern)) return false;
    if (w.pattern.kind == PatternKind::Hole && w.vertices.size() != w.pattern.length) return false;
    return induces_pattern(g, w.vertices, w.pattern);
  }
  switch (v.graph_class) {
    case GraphClass::Split: {
      const auto* p = std::get_if<SplitPartition>(&v.certificate);
      return p && verify_split_partition(g, *p);
    }
    case GraphClass::Threshold: {
      const auto* s = std::get_if<CreationSequence>(&v.certificate);
      return s && verify_creation_sequence(g, *s);
    }
    case GraphClass::TwoK2Free:
      return std::holds_alternative<ExhaustiveSearch>(v.certificate) &&
             !find_induced(g, Pattern::two_k2());
    case GraphClass::Cograph: {
      const auto* t = std::get_if<Cotree>(&v.certificate);
      return t && verify_cotree(g, *t);
    }
    case GraphClass::Chordal: {
      const auto* o = std::get_if<EliminationOrdering>(&v.certificate);
      return o && verify_elimination_ordering(g, *o);
    }
  }
  return false;
}

nlohmann::json verdict_to_json(const ClassVerdict& v, const VertexLabeler& label,
                               bool include_certificate) {
  using nlohmann::json;
  json out;
  out["class"] = to_string(v.graph_class);
  out["member"] = v.member;
  auto labels_of = [&](const std::vector<Vertex>& vs) {
    json arr = json::array();
    for (Vertex x : vs) arr.push_back(label(x));
    return arr;
  };
  if (v.witness) {
    json w;
    w["pattern"] = to_string(v.witness->pattern);
    w["vertices"] = v.witness->vertices;
    if (label) w["labels"] = labels_of(v.witness->vertices);
    out["witness"] = std::move(w);
    return out;
  }
  json cert;
  std::visit(
      [&](const auto& c) {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, SplitPartition>) {
          cert["kind"] = "split_partition";
          if (include_certificate) {
            cert["clique"] = c.clique;
            cert["independent"] = c.independent;
          }
        } else if constexpr (std::is_same_v<T, CreationSequence>) {
          cert["kind"] = "creation_sequence";
          if (include_certificate) {
            json steps = json::array();
            for (const auto& s : c) steps.push_back({s.vertex, s.dominating ? "dominating" : "isolated"});
            cert["steps"] = std::move(steps);
          }
        } else if constexpr (std::is_same_v<T, Cotree>) {
          cert["kind"] = "cotree";
          if (include_certificate) {
            json nodes = json::array();
            for (const auto& node : c.nodes) {
              json j;
              if (node.kind == Cotree::Kind::Leaf) {
                j["leaf"] = node.vertex;
              } else {
                j[node.kind == Cotree::Kind::Union ? "union" : "join"] = node.children;
              }
              nodes.push_back(std::move(j));
            }
            cert["root"] = c.root;
            cert["nodes"] = std::move(nodes);
          }
        } else if constexpr (std::is_same_v<T, EliminationOrdering>) {
          cert["kind"] = "elimination_ordering";
          if (include_certificate) cert["order"] = c;
        } else if constexpr (std::is_same_v<T, ExhaustiveSearch>) {
          cert["kind"] = "exhaustive_search";
        }
      },
      v.certificate);
  if (!cert.is_null()) out["certificate"] = std::move(cert);
  return out;
}

}  // namespace commgraph
