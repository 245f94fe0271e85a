#include "commgraph/classifiers.hpp"

#include <algorithm>
#include <array>
#include <chrono>

#include "commgraph/error.hpp"
#include "commgraph/group_ops.hpp"

namespace commgraph {

namespace {

class Stopwatch {
 public:
  double lap() {
    auto now = std::chrono::steady_clock::now();
    double ms = std::chrono::duration<double, std::milli>(now - mark_).count();
    mark_ = now;
    return ms;
  }

 private:
  std::chrono::steady_clock::time_point mark_ = std::chrono::steady_clock::now();
};

bool pairwise_commute(const Group& g, const std::vector<Element>& xs) {
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t j = i + 1; j < xs.size(); ++j) {
      if (!g.commute_unchecked(xs[i], xs[j])) return false;
    }
  }
  return true;
}

}  // namespace

OmegaResult omega_subgroup(const Group& g) {
  std::vector<Element> seed;
  for (Element x = 1; x < g.order(); ++x) {
    if (element_order(g, x) > 2) seed.push_back(x);
  }
  bool abelian = pairwise_commute(g, seed);
  return {subgroup_closure(g, seed), abelian};
}

DihedralDecomposition is_generalized_dihedral_odd(const Group& g) {
  DihedralDecomposition out;
  if (is_abelian(g)) {
    out.reason = "group is abelian";
    return out;
  }
  OmegaResult omega = omega_subgroup(g);
  const ElementSet& a = omega.elements;
  if (!omega.abelian) {
    out.reason = "Omega(G) is not abelian";
    return out;
  }
  if (a.size() % 2 == 0) {
    out.reason = "Omega(G) has even order " + std::to_string(a.size());
    return out;
  }
  if (2 * a.size() != g.order()) {
    out.reason = "Omega(G) has index " + std::to_string(g.order() / a.size());
    return out;
  }
  for (Element x = 0; x < g.order(); ++x) {
    if (a.contains(x)) continue;
    if (g.mul(x, x) != Group::identity()) {
      out.reason = g.label(x) + " lies outside Omega(G) but is not an involution";
      return out;
    }
    for (Element y : a) {
      if (g.mul(g.mul(x, y), x) != g.inverse(y)) {
        out.reason = g.label(x) + " does not invert " + g.label(y);
        return out;
      }
    }
  }
  out.holds = true;
  out.abelian_part = a;
  return out;
}

CentralizerTest is_ac_group(const Group& g, const UndirectedGraph* noncentral_graph) {
  UndirectedGraph built;
  if (!noncentral_graph) {
    built = commuting_graph(g, VertexScope::NonCentral);
    noncentral_graph = &built;
  }
  const UndirectedGraph& gamma = *noncentral_graph;
  // C(y) is abelian iff the non-central neighbours of y are pairwise adjacent.
  for (Vertex y = 0; y < gamma.size(); ++y) {
    Bitset nb = gamma.neighbors(y);
    bool clique = true;
    nb.for_each([&](std::size_t x) {
      if (!clique) return;
      Bitset rest = nb;
      rest.reset(x);
      clique = subset_of(rest.words(), gamma.row(static_cast<Vertex>(x)));
    });
    if (!clique) return {false, gamma.label(y)};
  }
  return {};
}

CentralizerTest is_ca_group(const Group& g, const UndirectedGraph* noncentral_graph) {
  if (is_abelian(g)) return {};
  ElementSet z = center(g);
  if (z.size() > 1) return {false, z.elements()[1]};
  return is_ac_group(g, noncentral_graph);
}

FrobeniusRecord verify_frobenius(const Group& g, const ElementSet& h) {
  if (!h.belongs_to(g) || !is_subgroup(g, h)) fail(ErrorCode::NotASubgroup, "H is not a subgroup of G");
  const std::size_t n = g.order();
  if (h.size() == 1 || h.size() == n) fail(ErrorCode::NotFrobenius, "H must be a proper non-trivial subgroup");

  // Left cosets xH; the conjugate xHx^-1 depends only on the coset.
  std::vector<bool> covered(n, false);
  std::vector<bool> in_conjugate(n, false);
  for (Element x = 0; x < n; ++x) {
    if (covered[x]) continue;
    for (Element y : h) covered[g.mul(x, y)] = true;
    const Element xi = g.inverse(x);
    const bool outside = !h.contains(x);
    for (Element y : h) {
      const Element c = g.mul(g.mul(x, y), xi);
      if (outside && c != Group::identity() && h.contains(c)) {
        fail(ErrorCode::NotFrobenius, "H meets its conjugate by " + g.label(x) + " in " + g.label(c));
      }
      in_conjugate[c] = true;
    }
  }
  std::vector<Element> kernel{Group::identity()};
  for (Element x = 1; x < n; ++x) {
    if (!in_conjugate[x]) kernel.push_back(x);
  }
  ElementSet k(g, kernel);
  if (k.size() * h.size() != n) fail(ErrorCode::NotFrobenius, "|K||H| differs from |G|");
  if (!is_subgroup(g, k)) fail(ErrorCode::NotFrobenius, "kernel is not a subgroup");
  if (!is_normal_subgroup(g, k)) fail(ErrorCode::NotFrobenius, "kernel is not normal");
  for (const ElementSet* part : std::array<const ElementSet*, 2>{&h, &k}) {
    for (Element x : *part) {
      if (x == Group::identity()) continue;
      for (Element c : centralizer(g, x)) {
        if (!part->contains(c)) {
          fail(ErrorCode::NotFrobenius, "centralizer of " + g.label(x) + " leaves its subgroup");
        }
      }
    }
  }
  return {h, k};
}

const ClassVerdict* ClassReport::verdict(GraphClass c) const {
  for (const auto& v : verdicts) {
    if (v.graph_class == c) return &v;
  }
  return nullptr;
}

std::vector<std::string> report_violations(const ClassReport& r) {
  std::vector<std::string> out;
  const auto* split = r.verdict(GraphClass::Split);
  const auto* thr = r.verdict(GraphClass::Threshold);
  const auto* k2 = r.verdict(GraphClass::TwoK2Free);
  const auto* cog = r.verdict(GraphClass::Cograph);
  const auto* cho = r.verdict(GraphClass::Chordal);
  std::vector<const ClassVerdict*> trio;
  for (const auto* v : {split, thr, k2}) {
    if (v) trio.push_back(v);
  }
  for (const auto* v : trio) {
    if (v->member != trio.front()->member) {
      out.push_back(to_string(v->graph_class) + " disagrees with " + to_string(trio.front()->graph_class));
    }
  }
  if (!trio.empty() && r.generalized_dihedral_odd) {
    const bool expected = r.abelian || r.generalized_dihedral_odd->holds;
    if (trio.front()->member != expected) {
      out.push_back(to_string(trio.front()->graph_class) +
                    " verdict differs from 'abelian or generalized dihedral of odd order'");
    }
  }
  if (thr && thr->member) {
    if (cog && !cog->member) out.push_back("threshold graph reported as not a cograph");
    if (cho && !cho->member) out.push_back("threshold graph reported as not chordal");
  }
  if (r.abelian) {
    for (const auto& v : r.verdicts) {
      if (!v.member) out.push_back("abelian group with " + to_string(v.graph_class) + " = false");
    }
  }
  if (r.ac && r.ac->holds) {
    if (cog && !cog->member) out.push_back("AC-group whose commuting graph is not a cograph");
    if (cho && !cho->member) out.push_back("AC-group whose commuting graph is not chordal");
  }
  return out;
}

ClassReport classify_group(const Group& g, const std::string& identity,
                           const ClassifyOptions& options) {
  Stopwatch clock;
  ClassReport r;
  r.identity = identity;
  r.order = g.order();
  r.scope = options.scope;
  r.center_size = center(g).size();
  r.abelian = is_abelian(g);
  r.timings.push_back({"center", clock.lap()});

  UndirectedGraph gamma = commuting_graph(g, options.scope, options.threads);
  r.graph_vertices = gamma.size();
  r.graph_edges = gamma.edge_count();
  r.vertex_elements.reserve(gamma.size());
  for (Vertex v = 0; v < gamma.size(); ++v) r.vertex_elements.push_back(gamma.label(v));
  r.timings.push_back({"graph", clock.lap()});

  for (GraphClass c : options.classes) {
    ClassVerdict v = recognize(gamma, c);
    r.timings.push_back({to_string(c), clock.lap()});
    if (options.verify_certificates && !verify_verdict(gamma, v)) {
      fail(ErrorCode::Internal, to_string(c) + " verdict failed verification for " + identity);
    }
    std::vector<std::string> labels;
    if (v.witness) {
      for (Vertex x : v.witness->vertices) labels.push_back(g.label(gamma.label(x)));
    }
    r.verdicts.push_back(std::move(v));
    r.witness_labels.push_back(std::move(labels));
  }
  if (options.verify_certificates) r.timings.push_back({"verify", clock.lap()});

  if (options.group_predicates) {
    r.generalized_dihedral_odd = is_generalized_dihedral_odd(g);
    r.timings.push_back({"generalized_dihedral_odd", clock.lap()});
    const UndirectedGraph* nc = options.scope == VertexScope::NonCentral ? &gamma : nullptr;
    r.ac = is_ac_group(g, nc);
    r.ca = is_ca_group(g, nc);
    r.timings.push_back({"ac_ca", clock.lap()});
  }
  if (options.frobenius_complement) {
    try {
      r.frobenius = verify_frobenius(g, ElementSet(g, *options.frobenius_complement));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NotFrobenius) throw;
      r.frobenius_failure = e.what();
    }
    r.timings.push_back({"frobenius", clock.lap()});
  }

  auto problems = options.enforce_consistency ? report_violations(r) : std::vector<std::string>{};
  if (!problems.empty()) fail(ErrorCode::Internal, identity + ": " + problems.front());
  return r;
}

}  // namespace commgraph
