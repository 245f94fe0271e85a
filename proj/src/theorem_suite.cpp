#include "commgraph/theorem_suite.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <set>
#include <sstream>

#include "commgraph/error.hpp"
#include "commgraph/families.hpp"
#include "commgraph/group_ops.hpp"
#include "commgraph/matrix_witness.hpp"

namespace commgraph {

namespace {

constexpr std::size_t kMaxListedFailures = 8;

template <typename F>
TheoremResult timed(const std::string& name, F&& body) {
  TheoremResult r;
  r.name = name;
  auto start = std::chrono::steady_clock::now();
  try {
    body(r);
  } catch (const std::exception& e) {
    r.record(false, std::string("exception: ") + e.what());
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

Element element(const Group& g, const std::string& cycles) {
  auto idx = g.index_of(Permutation::parse_cycles(cycles, g.degree()));
  if (!idx) fail(ErrorCode::BadParameter, cycles + " is not an element of the group");
  return *idx;
}

// Commuting pattern of an explicit list of permutations (no group needed).
UndirectedGraph commuting_pattern(const std::vector<Permutation>& xs) {
  UndirectedGraph out(xs.size());
  for (Vertex i = 0; i < xs.size(); ++i) {
    for (Vertex j = i + 1; j < xs.size(); ++j) {
      if (xs[i] * xs[j] == xs[j] * xs[i]) out.add_edge(i, j);
    }
  }
  return out;
}

UndirectedGraph commuting_pattern(const Group& g, const std::vector<Element>& xs) {
  UndirectedGraph out(xs.size());
  for (Vertex i = 0; i < xs.size(); ++i) {
    for (Vertex j = i + 1; j < xs.size(); ++j) {
      if (xs[i] != xs[j] && g.commutes(xs[i], xs[j])) out.add_edge(i, j);
    }
  }
  return out;
}

std::vector<Vertex> all_vertices(std::size_t n) {
  std::vector<Vertex> v(n);
  for (Vertex i = 0; i < n; ++i) v[i] = i;
  return v;
}

// H as a group in its own right; element i of the result is h.elements()[i].
Group as_group(const Group& g, const ElementSet& h) {
  const auto& xs = h.elements();
  std::map<Element, Element> pos;
  for (Element i = 0; i < xs.size(); ++i) pos[xs[i]] = i;
  std::vector<Element> table(xs.size() * xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t j = 0; j < xs.size(); ++j) table[i * xs.size() + j] = pos.at(g.multiply(xs[i], xs[j]));
  }
  return Group::from_cayley_table(xs.size(), std::move(table));
}

bool cograph_of(const Group& g) { return is_cograph(commuting_graph(g, VertexScope::NonCentral)).member; }
bool chordal_of(const Group& g) { return is_chordal(commuting_graph(g, VertexScope::NonCentral)).member; }

std::string verdict_word(bool b) { return b ? "true" : "false"; }

std::size_t prime_factor_count(std::size_t n) {
  std::size_t c = 0;
  for (std::size_t p = 2; p * p <= n; ++p) {
    while (n % p == 0) {
      n /= p;
      ++c;
    }
  }
  return c + (n > 1 ? 1 : 0);
}

}  // namespace

void TheoremResult::record(bool ok, const std::string& what) {
  ++cases;
  if (ok) return;
  passed = false;
  if (failures.size() < kMaxListedFailures) failures.push_back(what);
}

bool SuiteReport::passed() const {
  return std::all_of(results.begin(), results.end(), [](const TheoremResult& r) { return r.passed; });
}

std::vector<CorpusGroup> default_corpus(const Catalog& catalog) {
  std::vector<CorpusGroup> out;
  for (const auto& e : catalog.entries) {
    if (e.order <= 36) out.push_back({to_string(e.id()), entry_group(e)});
  }
  for (int n = 1; n <= 15; ++n) {
    std::string spec = "dihedral:" + std::to_string(n);
    out.push_back({spec, build_family(parse_family(spec))});
  }
  for (const char* a : {"3", "4", "5", "6", "2,2", "7", "9", "3,3", "2,4", "15"}) {
    std::string spec = std::string("gendihedral:") + a;
    out.push_back({spec, build_family(parse_family(spec))});
  }
  for (int m = 2; m <= 8; ++m) {
    std::string spec = "quaternion:" + std::to_string(m);
    out.push_back({spec, build_family(parse_family(spec))});
  }
  return out;
}

std::vector<CorpusReport> classify_corpus(const std::vector<CorpusGroup>& corpus) {
  ClassifyOptions options;
  options.enforce_consistency = false;
  options.threads = 1;
  std::vector<CorpusReport> out;
  out.reserve(corpus.size());
  for (const auto& c : corpus) out.push_back({c, classify_group(c.group, c.name, options)});
  return out;
}

TheoremResult check_split_threshold_2k2(const std::vector<CorpusReport>& reports) {
  return timed("split = threshold = 2K2-free = (abelian or D(A) with |A| odd)", [&](TheoremResult& r) {
    for (const auto& c : reports) {
      const auto& rep = c.report;
      const bool s = rep.verdict(GraphClass::Split)->member;
      const bool t = rep.verdict(GraphClass::Threshold)->member;
      const bool k = rep.verdict(GraphClass::TwoK2Free)->member;
      const bool expected = rep.abelian || rep.generalized_dihedral_odd->holds;
      r.record(s == t && t == k && k == expected,
               c.group.name + ": split " + verdict_word(s) + ", threshold " + verdict_word(t) +
                   ", 2K2-free " + verdict_word(k) + ", abelian-or-D(A) " + verdict_word(expected));
      r.record(!t || (rep.verdict(GraphClass::Cograph)->member && rep.verdict(GraphClass::Chordal)->member),
               c.group.name + ": threshold but not cograph and chordal");
    }
  });
}

TheoremResult check_centralizer_classes(const std::vector<CorpusReport>& reports) {
  return timed("AC implies cograph and chordal; trivial centre gives AC = CA", [&](TheoremResult& r) {
    for (const auto& c : reports) {
      const auto& rep = c.report;
      if (rep.ac->holds) {
        r.record(rep.verdict(GraphClass::Cograph)->member && rep.verdict(GraphClass::Chordal)->member,
                 c.group.name + " is AC but its graph is not cograph and chordal");
      }
      r.record(!rep.ca->holds || rep.ac->holds, c.group.name + " is CA but not AC");
      if (rep.center_size == 1) {
        r.record(rep.ac->holds == rep.ca->holds, c.group.name + ": trivial centre, AC differs from CA");
      }
      if (rep.abelian) {
        bool all = std::all_of(rep.verdicts.begin(), rep.verdicts.end(),
                               [](const ClassVerdict& v) { return v.member; });
        r.record(all, c.group.name + " is abelian with a failed class verdict");
      }
    }
  });
}

TheoremResult check_graph_construction(const std::vector<CorpusGroup>& corpus) {
  return timed("commuting graph: scopes, centralizer handshake, subgroups", [&](TheoremResult& r) {
    for (const auto& c : corpus) {
      const Group& g = c.group;
      UndirectedGraph all = commuting_graph(g, VertexScope::All);
      UndirectedGraph nc = commuting_graph(g, VertexScope::NonCentral);
      ElementSet z = center(g);

      std::vector<Vertex> outside;
      for (Element x = 0; x < g.order(); ++x) {
        if (!z.contains(x)) outside.push_back(x);
      }
      r.record(induced_subgraph(all, outside) == nc, c.name + ": non-central restriction differs");

      std::size_t sum = 0;
      for (Element x = 0; x < g.order(); ++x) sum += centralizer(g, x).size();
      r.record(2 * all.edge_count() == sum - g.order(), c.name + ": edge count differs from centralizer sum");

      for (Element x : z) {
        r.record(all.degree(x) + 1 == g.order(), c.name + ": central " + g.label(x) + " not dominant");
      }

      std::vector<ElementSet> subgroups{z, omega_subgroup(g).elements};
      for (Element x = 1; x < std::min<std::size_t>(g.order(), 4); ++x) subgroups.push_back(centralizer(g, x));
      for (const auto& h : subgroups) {
        std::vector<Vertex> vs(h.begin(), h.end());
        r.record(induced_subgraph(all, vs) == commuting_graph(as_group(g, h)),
                 c.name + ": subgroup of order " + std::to_string(h.size()) + " induces the wrong graph");
      }
    }
  });
}

TheoremResult check_small_central_quotient(const Catalog& catalog) {
  return timed("|G/Z(G)| with at most three prime factors implies AC", [&](TheoremResult& r) {
    for (const auto& e : catalog.entries) {
      if (e.order > 36) continue;
      Group g = entry_group(e);
      const std::size_t q = g.order() / center(g).size();
      if (prime_factor_count(q) > 3) continue;
      r.record(is_ac_group(g).holds, to_string(e.id()) + " has |G/Z| = " + std::to_string(q) + " but is not AC");
    }
  });
}

TheoremResult check_family_shapes() {
  return timed("family graph shapes and group predicates", [&](TheoremResult& r) {
    for (std::size_t m = 2; m <= 8; ++m) {
      Group q = build_family({Family::GeneralizedQuaternion, {static_cast<std::int64_t>(m)}});
      UndirectedGraph nc = commuting_graph(q, VertexScope::NonCentral);
      // One clique on the 2m - 2 non-central powers of x, and m edges.
      std::multiset<std::size_t> degrees;
      for (Vertex v = 0; v < nc.size(); ++v) degrees.insert(nc.degree(v));
      bool shape = nc.size() == 4 * m - 2 && nc.edge_count() == (2 * m - 2) * (2 * m - 3) / 2 + m;
      if (m > 2) shape = shape && degrees.count(1) == 2 * m && degrees.count(2 * m - 3) == 2 * m - 2;
      shape = shape && is_ac_group(q).holds;
      r.record(shape, "Q_" + std::to_string(4 * m) + " has the wrong non-central graph or is not AC");
    }
    for (std::int64_t n : {3, 5, 7, 9, 15}) {
      Group d = build_family({Family::GeneralizedDihedral, {n}});
      UndirectedGraph all = commuting_graph(d, VertexScope::All);
      // Elements of A are (a, 0) at indices < n: a clique, plus n pendants at e.
      bool shape = all.edge_count() == static_cast<std::size_t>(n * (n - 1) / 2 + n);
      for (Vertex v = static_cast<Vertex>(n); v < all.size(); ++v) {
        shape = shape && all.degree(v) == 1 && all.adjacent(v, 0);
      }
      auto dec = is_generalized_dihedral_odd(d);
      r.record(shape && dec.holds && dec.abelian_part->size() == static_cast<std::size_t>(n),
               "D(Z" + std::to_string(n) + ") shape or decomposition wrong");
      r.record(is_ac_group(d).holds, "D(Z" + std::to_string(n) + ") is not AC");
    }

    Group d18 = build_family(parse_family("dihedral:9"));
    auto om = omega_subgroup(d18);
    r.record(om.elements.size() == 9 && om.abelian, "Omega(D18) should be abelian of order 9");
    Group s4 = build_family(parse_family("sym:4"));
    auto om4 = omega_subgroup(s4);
    r.record(om4.elements.size() == 24 && !om4.abelian, "Omega(S4) should be S4, non-abelian");
    r.record(omega_subgroup(build_family(parse_family("abelian:2,2,2"))).elements.size() == 1,
             "Omega of an elementary abelian 2-group should be trivial");

    r.record(!is_generalized_dihedral_odd(build_family(parse_family("dihedral:6"))).holds, "D12 is not D(A) with |A| odd");
    r.record(!is_generalized_dihedral_odd(s4).holds, "S4 is not D(A) with |A| odd");

    auto ac4 = is_ac_group(s4);
    r.record(!ac4.holds && ac4.counterexample &&
                 centralizer(s4, *ac4.counterexample).size() == 8,
             "S4 should fail AC at a double transposition");
    Group q8 = build_family(parse_family("quaternion:2"));
    r.record(is_ac_group(q8).holds && !is_ca_group(q8).holds, "Q8 is AC but not CA");
    r.record(is_ca_group(build_family(parse_family("psl2:4"))).holds, "PSL(2,4) is CA");
    r.record(is_ca_group(build_family(parse_family("abelian:3,3"))).holds, "abelian groups are CA");

    // Witness sets for 2K2 in D12: {a, a^4, x, x a^3}, with a^i b^j at i + 6j.
    Group d12 = build_family(parse_family("dihedral:6"));
    const Element a = 1;
    const Element x = 6;
    std::vector<Element> set{a, d12.multiply(d12.multiply(a, a), d12.multiply(a, a)), x,
                             d12.multiply(x, d12.multiply(a, d12.multiply(a, a)))};
    r.record(induces_pattern(commuting_pattern(d12, set), all_vertices(4), Pattern::two_k2()),
             "{a, a^4, x, xa^3} should induce 2K2 in D12");
  });
}

TheoremResult check_strong_products() {
  return timed("commuting graph of H x K is the strong product", [&](TheoremResult& r) {
    const std::vector<std::pair<std::string, std::string>> pairs = {
        {"sym:3", "sym:3"},        {"dihedral:4", "cyclic:3"}, {"quaternion:2", "sym:3"},
        {"alt:4", "cyclic:2"},     {"sym:4", "cyclic:2"},      {"dihedral:5", "quaternion:2"},
        {"gendihedral:3,3", "sym:3"}, {"quaternion:3", "dihedral:3"}, {"abelian:2,2", "alt:4"},
        {"sym:4", "sym:3"}};
    for (const auto& [hs, ks] : pairs) {
      Group h = build_family(parse_family(hs));
      Group k = build_family(parse_family(ks));
      UndirectedGraph gh = commuting_graph(h);
      UndirectedGraph gk = commuting_graph(k);
      UndirectedGraph prod = commuting_graph(direct_product(h, k));
      UndirectedGraph strong = strong_product(gh, gk);
      r.record(prod == strong, hs + " x " + ks + ": graph differs from the strong product");

      UndirectedGraph swapped = strong_product(gk, gh);
      bool commutes = true;
      for (Vertex u = 0; u < strong.size() && commutes; ++u) {
        for (Vertex v = 0; v < strong.size(); ++v) {
          const Vertex su = (u % gk.size()) * gh.size() + u / gk.size();
          const Vertex sv = (v % gk.size()) * gh.size() + v / gk.size();
          if (strong.adjacent(u, v) != swapped.adjacent(su, sv)) {
            commutes = false;
            break;
          }
        }
      }
      r.record(commutes, hs + " x " + ks + ": strong product not symmetric under the swap");
    }
  });
}

TheoremResult check_direct_products() {
  return timed("cograph/chordal for H x K needs an abelian factor", [&](TheoremResult& r) {
    const std::vector<std::pair<std::string, std::string>> pairs = {
        {"sym:3", "cyclic:2"},      {"sym:3", "sym:3"},        {"dihedral:4", "cyclic:3"},
        {"quaternion:2", "sym:3"},  {"alt:4", "cyclic:2"},     {"sym:4", "cyclic:2"},
        {"dihedral:5", "dihedral:3"}, {"sym:4", "abelian:2,2"}, {"quaternion:2", "quaternion:2"},
        {"alt:4", "sym:3"},         {"gendihedral:3,3", "cyclic:2"}};
    for (const auto& [hs, ks] : pairs) {
      Group h = build_family(parse_family(hs));
      Group k = build_family(parse_family(ks));
      Group hk = direct_product(h, k);
      const bool ah = is_abelian(h);
      const bool ak = is_abelian(k);
      const bool cog = (ah && cograph_of(k)) || (ak && cograph_of(h));
      const bool cho = (ah && chordal_of(k)) || (ak && chordal_of(h));
      r.record(cograph_of(hk) == cog, hs + " x " + ks + ": cograph verdict should be " + verdict_word(cog));
      r.record(chordal_of(hk) == cho, hs + " x " + ks + ": chordal verdict should be " + verdict_word(cho));
    }
  });
}

TheoremResult check_extraspecial() {
  return timed("extraspecial groups of order 32 contain an induced C4", [&](TheoremResult& r) {
    Group d8 = build_family(parse_family("dihedral:4"));
    Group q8 = build_family(parse_family("quaternion:2"));
    // D8: a^i b^j at i + 4j, centre a^2 at 2. Q8: x^i y^j at i + 4j, centre x^2 at 2.
    struct Case {
      const char* name;
      Group second;
      Element z;
      Element w;
    };
    for (const Case& c : {Case{"D8 o D8", d8, 4, 5}, Case{"D8 o Q8", q8, 1, 4}}) {
      Quotient m = central_product_map(d8, c.second, 2, 2);
      const std::size_t k = c.second.order();
      std::vector<Element> xyzw{m.coset_of[4 * k], m.coset_of[5 * k], m.coset_of[c.z], m.coset_of[c.w]};
      // Cycle order x ~ z ~ y ~ w ~ x.
      std::vector<Element> cycle{xyzw[0], xyzw[2], xyzw[1], xyzw[3]};
      r.record(induces_pattern(commuting_pattern(m.group, cycle), all_vertices(4), Pattern::c4()),
               std::string(c.name) + ": {x, y, z, w} does not induce C4");
      r.record(m.group.order() == 32 && center(m.group).size() == 2, std::string(c.name) + " is not extraspecial of order 32");
      r.record(!chordal_of(m.group), std::string(c.name) + " should not be chordal");
    }
    r.record(!chordal_of(build_family(parse_family("extraspecial:+"))), "extraspecial:+ should not be chordal");
    r.record(!chordal_of(build_family(parse_family("extraspecial:-"))), "extraspecial:- should not be chordal");
  });
}

TheoremResult check_frobenius() {
  return timed("Frobenius groups: kernel and complement decide the classes", [&](TheoremResult& r) {
    struct Case {
      std::string family;
      std::string complement_generator;  // cycle notation, or a table index
      std::size_t kernel;
    };
    const std::vector<Case> cases = {
        {"frobenius20", "(2 3 5 4)", 5}, {"suzuki:2", "(2 3 5 4)", 5}, {"alt:4", "(1 2 3)", 4},
        {"sym:3", "(1 2)", 3},           {"dihedral:5", "#5", 5},      {"dihedral:7", "#7", 7},
        {"gendihedral:3,3", "#9", 9},    {"gendihedral:5", "#5", 5}};
    for (const auto& c : cases) {
      Group g = build_family(parse_family(c.family));
      const Element gen = c.complement_generator[0] == '#'
                              ? static_cast<Element>(std::stoul(c.complement_generator.substr(1)))
                              : element(g, c.complement_generator);
      ElementSet h = subgroup_closure(g, std::vector<Element>{gen});
      FrobeniusRecord rec = verify_frobenius(g, h);
      r.record(rec.kernel.size() == c.kernel, c.family + ": kernel of size " + std::to_string(rec.kernel.size()));
      Group kg = as_group(g, rec.kernel);
      Group hg = as_group(g, rec.complement);
      r.record(cograph_of(g) == (cograph_of(kg) && cograph_of(hg)), c.family + ": cograph rule fails");
      r.record(chordal_of(g) == (chordal_of(kg) && chordal_of(hg)), c.family + ": chordal rule fails");
    }
    Group s4 = build_family(parse_family("sym:4"));
    ElementSet stab = subgroup_closure(s4, std::vector<Element>{element(s4, "(1 2)"), element(s4, "(1 2 3)")});
    bool rejected = false;
    try {
      verify_frobenius(s4, stab);
    } catch (const Error& e) {
      rejected = e.code() == ErrorCode::NotFrobenius;
    }
    r.record(rejected, "S4 with a point stabilizer must not verify as Frobenius");
  });
}

TheoremResult check_symmetric_alternating() {
  return timed("symmetric and alternating groups", [&](TheoremResult& r) {
    for (int n = 1; n <= 6; ++n) {
      Group s = build_family({Family::Symmetric, {n}});
      UndirectedGraph nc = commuting_graph(s, VertexScope::NonCentral);
      const bool cog = is_cograph(nc).member;
      const bool cho = is_chordal(nc).member;
      r.record(cog == (n <= 3), "S" + std::to_string(n) + ": cograph " + verdict_word(cog));
      r.record(cho == (n <= 4), "S" + std::to_string(n) + ": chordal " + verdict_word(cho));
    }
    for (int n = 4; n <= 6; ++n) {
      Group a = build_family({Family::Alternating, {n}});
      UndirectedGraph nc = commuting_graph(a, VertexScope::NonCentral);
      const ClassVerdict cog = is_cograph(nc);
      const ClassVerdict cho = is_chordal(nc);
      r.record(cog.member == (n <= 5), "A" + std::to_string(n) + ": cograph " + verdict_word(cog.member));
      r.record(cho.member == (n <= 5), "A" + std::to_string(n) + ": chordal " + verdict_word(cho.member));
      if (n == 6 && !cho.member) {
        r.record(verify_verdict(nc, cho) && cho.witness->vertices.size() >= 4,
                 "A6: the chordality witness is not an induced hole");
        r.notes.push_back("A6 chordality witness: hole of length " + std::to_string(cho.witness->vertices.size()));
        auto shortest = shortest_hole_length(nc);
        r.notes.push_back("A6 shortest induced hole: " + (shortest ? std::to_string(*shortest) : std::string("none")));
      }
    }
  });
}

TheoremResult check_permutation_witnesses() {
  return timed("explicit permutation witnesses", [&](TheoremResult& r) {
    struct Case {
      const char* what;
      std::size_t degree;
      std::vector<std::string> cycles;  // along the path or cycle
      Pattern pattern;
      bool even;
    };
    const std::vector<Case> cases = {
        {"S4 P4", 4, {"(1 2)", "(1 2)(3 4)", "(1 3)(2 4)", "(1 3)"}, Pattern::p4(), false},
        {"S5 C5", 5, {"(1 2)", "(3 4)", "(1 5)", "(2 4)", "(3 5)"}, Pattern::c5(), false},
        {"A6 P4", 6, {"(1 2)(5 6)", "(1 2)(3 4)", "(1 3)(2 4)", "(1 3)(5 6)"}, Pattern::p4(), true},
        {"A7 C6", 7, {"(1 2 3)", "(4 5 6)", "(1 2 7)", "(3 4 5)", "(1 2 6)", "(4 5 7)"}, Pattern::hole(6), true},
        {"A8 C4", 8, {"(1 2)(3 4)", "(5 6 7)", "(3 4 8)", "(1 2)(5 6)"}, Pattern::c4(), true},
    };
    for (const auto& c : cases) {
      std::vector<Permutation> perms;
      bool parity_ok = true;
      for (const auto& s : c.cycles) {
        perms.push_back(Permutation::parse_cycles(s, c.degree));
        if (c.even) {
          std::size_t transpositions = 0;
          std::vector<bool> seen(c.degree, false);
          for (std::size_t i = 0; i < c.degree; ++i) {
            std::size_t len = 0;
            for (std::size_t j = i; !seen[j]; j = perms.back()(static_cast<Point>(j))) {
              seen[j] = true;
              ++len;
            }
            if (len > 0) transpositions += len - 1;
          }
          parity_ok = parity_ok && transpositions % 2 == 0;
        }
      }
      UndirectedGraph pat = commuting_pattern(perms);
      r.record(parity_ok && induces_pattern(pat, all_vertices(perms.size()), c.pattern),
               std::string(c.what) + " witness does not validate");
    }
  });
}

TheoremResult check_psl2() {
  return timed("PSL(2,q) cograph exactly for q in {2,3,4,5,8,16}", [&](TheoremResult& r) {
    const std::set<std::uint32_t> yes = {2, 3, 4, 5, 8, 16};
    for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 11u, 13u, 16u}) {
      Group g = build_family({Family::PSL2, {q}});
      UndirectedGraph nc = commuting_graph(g, VertexScope::NonCentral);
      ClassVerdict v = is_cograph(nc);
      r.record(v.member == (yes.count(q) > 0) && verify_verdict(nc, v),
               "PSL(2," + std::to_string(q) + "): cograph " + verdict_word(v.member));
    }
  });
}

TheoremResult check_matrix_witnesses() {
  return timed("SL(3,q) and SU(3,q) induced P4 matrices", [&](TheoremResult& r) {
    auto bad_q = [](auto f, std::uint32_t q) {
      try {
        f(q);
      } catch (const Error& e) {
        return e.code() == ErrorCode::BadQ;
      }
      return false;
    };
    for (std::uint32_t q : {3u, 5u, 7u, 8u, 9u}) {
      r.record(sl3_p4_witness(q).valid(), "SL(3," + std::to_string(q) + ") witness invalid");
    }
    for (std::uint32_t q : {2u, 4u}) r.record(bad_q(sl3_p4_witness, q), "SL(3," + std::to_string(q) + ") must raise BadQ");
    for (std::uint32_t q : {3u, 4u, 5u}) {
      r.record(su3_p4_witness(q).valid(), "SU(3," + std::to_string(q) + ") witness invalid");
    }
    r.record(bad_q(su3_p4_witness, 2), "SU(3,2) must raise BadQ");
  });
}

TheoremResult check_minimal_orders(const Catalog& catalog) {
  return timed("least orders: non-cograph 24, non-chordal 32", [&](TheoremResult& r) {
    auto cog = scan_noncograph(catalog, 36);
    auto cho = scan_nonchordal(catalog, 36);
    r.record(cog.skipped.empty(), "catalog does not cover every order up to 36");
    auto least = [](const ScanResult& s) -> std::uint32_t {
      for (const auto& row : s.rows) {
        if (row.count() > 0) return row.order;
      }
      return 0;
    };
    r.record(least(cog) == 24, "least non-cograph order is " + std::to_string(least(cog)));
    r.record(least(cho) == 32, "least non-chordal order is " + std::to_string(least(cho)));
    std::set<GroupId> at32;
    for (const auto& row : cho.rows) {
      for (const auto& h : row.hits) {
        if (h.id.order == 32) at32.insert(h.id);
      }
    }
    r.record(at32.count({32, 49}) && at32.count({32, 50}), "[32,49] and [32,50] must be non-chordal");
    std::ostringstream ids;
    for (const auto& id : at32) ids << to_string(id) << ' ';
    r.notes.push_back("non-chordal at order 32: " + ids.str());
    for (const auto& row : cho.rows) {
      for (const auto& h : row.hits) r.record(h.id != GroupId{24, 12}, "S4 listed as non-chordal");
    }
  });
}

TheoremResult check_table1(const Catalog& catalog) {
  return timed("non-cograph groups of order at most 36", [&](TheoremResult& r) {
    std::vector<GroupId> got;
    for (const auto& row : scan_noncograph(catalog, 36).rows) {
      for (const auto& h : row.hits) got.push_back(h.id);
    }
    std::ostringstream ids;
    for (const auto& id : got) ids << to_string(id) << ' ';
    r.record(got == table1_expected_ids(), "found " + ids.str());
  });
}

TheoremResult check_table2(const Catalog& catalog) {
  return timed("non-cograph counts for orders 24..72", [&](TheoremResult& r) {
    std::vector<std::uint32_t> orders;
    for (const auto& [order, count] : table2_expected_counts()) {
      if (order <= 72) orders.push_back(order);
    }
    for (const auto& row : scan_noncograph(catalog, 0, orders).rows) {
      const std::size_t want = table2_expected_counts().at(row.order);
      r.record(row.count() == want, "order " + std::to_string(row.order) + ": " + std::to_string(row.count()) +
                                        " instead of " + std::to_string(want));
    }
  });
}

TheoremResult check_graph_class_oracle(std::size_t max_vertices) {
  return timed("recognizers against forbidden-subgraph search", [&](TheoremResult& r) {
    for (std::size_t n = 0; n <= max_vertices; ++n) {
      const std::size_t pairs = n * (n - (n > 0 ? 1 : 0)) / 2;
      for (std::uint64_t code = 0; code < (std::uint64_t{1} << pairs); ++code) {
        UndirectedGraph g(n);
        std::size_t bit = 0;
        for (Vertex u = 0; u < n; ++u) {
          for (Vertex v = u + 1; v < n; ++v, ++bit) {
            if ((code >> bit) & 1U) g.add_edge(u, v);
          }
        }
        const bool p4 = find_induced(g, Pattern::p4()).has_value();
        const bool c4 = find_induced(g, Pattern::c4()).has_value();
        const bool c5 = find_induced(g, Pattern::c5()).has_value();
        const bool k2 = find_induced(g, Pattern::two_k2()).has_value();
        const bool hole = find_induced(g, Pattern::hole(4)).has_value();
        const std::string tag = "n=" + std::to_string(n) + " code=" + std::to_string(code);
        ClassVerdict vs[5] = {is_split(g), is_threshold(g), is_2k2_free(g), is_cograph(g), is_chordal(g)};
        const bool expect[5] = {!(c4 || c5 || k2), !(p4 || c4 || k2), !k2, !p4, !hole};
        for (int i = 0; i < 5; ++i) {
          r.record(vs[i].member == expect[i] && verify_verdict(g, vs[i]),
                   tag + ": " + to_string(vs[i].graph_class) + " disagrees or fails verification");
        }
        r.record(is_cograph(complement(g)).member == vs[3].member, tag + ": cograph not closed under complement");
        DominantRemoval red = remove_dominant(g);
        for (int i = 0; i < 5; ++i) {
          r.record(recognize(red.graph, vs[i].graph_class).member == vs[i].member,
                   tag + ": dominant removal changes " + to_string(vs[i].graph_class));
        }
      }
    }
  });
}

TheoremResult check_suzuki() {
  return timed("Suzuki groups Sz(2) and Sz(8)", [&](TheoremResult& r) {
    Group sz2 = build_family(parse_family("suzuki:2"));
    FrobeniusRecord rec = verify_frobenius(sz2, subgroup_closure(sz2, std::vector<Element>{element(sz2, "(2 3 5 4)")}));
    r.record(rec.kernel.size() == 5, "Sz(2) kernel has size " + std::to_string(rec.kernel.size()));
    r.record(cograph_of(sz2), "Sz(2) commuting graph is not a cograph");

    Group sz8 = build_family(parse_family("suzuki:8"));
    ClassifyOptions options;
    options.classes = {GraphClass::Cograph};
    options.group_predicates = false;
    ClassReport rep = classify_group(sz8, "suzuki:8", options);
    r.record(rep.order == 29120 && rep.verdict(GraphClass::Cograph)->member, "Sz(8) commuting graph is not a cograph");
    for (const auto& t : rep.timings) {
      std::ostringstream s;
      s.precision(1);
      s << std::fixed << "Sz(8) " << t.stage << ": " << t.milliseconds / 1000 << " s";
      r.notes.push_back(s.str());
    }
  });
}

SuiteReport run_theorem_suite(const SuiteOptions& options) {
  SuiteReport out;
  const std::string path = options.catalog_path.empty() ? default_catalog_path() : options.catalog_path;
  Catalog catalog = load_catalog(path);
  auto corpus = default_corpus(catalog);
  auto reports = classify_corpus(corpus);

  out.results.push_back(check_split_threshold_2k2(reports));
  out.results.push_back(check_centralizer_classes(reports));
  out.results.push_back(check_graph_construction(corpus));
  out.results.push_back(check_small_central_quotient(catalog));
  out.results.push_back(check_family_shapes());
  out.results.push_back(check_strong_products());
  out.results.push_back(check_direct_products());
  out.results.push_back(check_extraspecial());
  out.results.push_back(check_frobenius());
  out.results.push_back(check_symmetric_alternating());
  out.results.push_back(check_permutation_witnesses());
  out.results.push_back(check_psl2());
  out.results.push_back(check_matrix_witnesses());
  out.results.push_back(check_minimal_orders(catalog));
  out.results.push_back(check_table1(catalog));
  out.results.push_back(check_graph_class_oracle(options.oracle_max_vertices));
  if (options.slow) {
    out.results.push_back(check_table2(catalog));
    out.results.push_back(check_suzuki());
  }
  return out;
}

std::string suite_to_text(const SuiteReport& report) {
  std::ostringstream out;
  for (const auto& r : report.results) {
    out << (r.passed ? "PASS " : "FAIL ") << r.name << "  (" << r.cases << " cases, ";
    out.precision(2);
    out << std::fixed << r.seconds << " s)\n";
    for (const auto& n : r.notes) out << "     " << n << '\n';
    for (const auto& f : r.failures) out << "     - " << f << '\n';
  }
  out << (report.passed() ? "all checks passed" : "some checks FAILED") << '\n';
  return out.str();
}

}  // namespace commgraph
