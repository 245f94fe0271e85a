#include "commgraph/group_ops.hpp"

#include <algorithm>

#include "commgraph/error.hpp"

namespace commgraph {

std::size_t element_order(const Group& g, Element x) {
  g.check(x);
  std::size_t k = 1;
  for (Element p = x; p != Group::identity(); p = g.mul(p, x)) ++k;
  return k;
}

bool is_abelian(const Group& g) {
  const auto& gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      if (!g.commute_unchecked(gens[i], gens[j])) return false;
    }
  }
  return true;
}

ElementSet center(const Group& g) {
  std::vector<Element> out;
  const auto& gens = g.generators();
  for (Element x = 0; x < g.order(); ++x) {
    bool central = std::all_of(gens.begin(), gens.end(),
                               [&](Element s) { return g.commute_unchecked(x, s); });
    if (central) out.push_back(x);
  }
  return ElementSet(g, std::move(out));
}

ElementSet centralizer(const Group& g, Element x) {
  g.check(x);
  std::vector<Element> out;
  for (Element y = 0; y < g.order(); ++y) {
    if (g.commute_unchecked(x, y)) out.push_back(y);
  }
  return ElementSet(g, std::move(out));
}

ElementSet subgroup_closure(const Group& g, const std::vector<Element>& seed) {
  for (Element s : seed) g.check(s);
  std::vector<char> member(g.order(), 0);
  std::vector<Element> elems{Group::identity()};
  member[0] = 1;
  std::vector<Element> gens;
  for (Element t : seed) {
    if (member[t]) continue;
    // Old elements are already closed under the old generators; they only
    // need the new one. Newly found elements need all of them.
    const std::size_t old_size = elems.size();
    gens.push_back(t);
    for (std::size_t i = 0; i < elems.size(); ++i) {
      auto visit = [&](Element s) {
        Element y = g.mul(elems[i], s);
        if (!member[y]) {
          member[y] = 1;
          elems.push_back(y);
        }
      };
      if (i < old_size) {
        visit(t);
      } else {
        for (Element s : gens) visit(s);
      }
    }
  }
  if (g.order() % elems.size() != 0) {
    fail(ErrorCode::Internal, "closure size does not divide the group order");
  }
  return ElementSet(g, std::move(elems));
}

ElementSet subgroup_closure(const Group& g, const ElementSet& seed) {
  if (!seed.belongs_to(g)) fail(ErrorCode::BadParameter, "element set from another group");
  return subgroup_closure(g, seed.elements());
}

bool is_subgroup(const Group& g, const ElementSet& h) {
  if (!h.belongs_to(g) || !h.contains(Group::identity())) return false;
  for (Element a : h) {
    for (Element b : h) {
      if (!h.contains(g.mul(a, b))) return false;
    }
  }
  return true;
}

bool is_normal_subgroup(const Group& g, const ElementSet& n) {
  if (!is_subgroup(g, n)) return false;
  for (Element x = 0; x < g.order(); ++x) {
    Element xi = g.inverse(x);
    for (Element a : n) {
      if (!n.contains(g.mul(g.mul(x, a), xi))) return false;
    }
  }
  return true;
}

Quotient quotient_map(const Group& g, const ElementSet& n) {
  if (g.backend() != Backend::CayleyTable) {
    fail(ErrorCode::UnsupportedParameter, "quotient requires a table-backed group");
  }
  if (!is_subgroup(g, n)) fail(ErrorCode::NotASubgroup, "quotient by a non-subgroup");
  if (!is_normal_subgroup(g, n)) fail(ErrorCode::NotNormal, "quotient by a non-normal subgroup");

  constexpr Element unassigned = ~Element{0};
  std::vector<Element> coset_of(g.order(), unassigned);
  std::vector<Element> reps;
  for (Element x = 0; x < g.order(); ++x) {
    if (coset_of[x] != unassigned) continue;
    const auto id = static_cast<Element>(reps.size());
    reps.push_back(x);
    for (Element a : n) coset_of[g.mul(x, a)] = id;
  }
  const std::size_t m = reps.size();
  std::vector<Element> table(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) table[i * m + j] = coset_of[g.mul(reps[i], reps[j])];
  }
  return Quotient{Group::from_cayley_table(m, std::move(table)), std::move(coset_of),
                  std::move(reps)};
}

Element commutator(const Group& g, Element x, Element y) {
  g.check(x);
  g.check(y);
  return g.mul(g.mul(x, y), g.mul(g.inverse(x), g.inverse(y)));
}

std::optional<std::size_t> nilpotency_class(const Group& g) {
  std::vector<Element> current{Group::identity()};
  std::size_t steps = 0;
  while (current.size() < g.order()) {
    std::vector<Element> next;
    if (g.backend() == Backend::CayleyTable) {
      // Preimage of Z(G / Z_i).
      auto q = quotient_map(g, ElementSet(g, current));
      auto zq = center(q.group);
      for (Element x = 0; x < g.order(); ++x) {
        if (zq.contains(q.coset_of[x])) next.push_back(x);
      }
    } else {
      // x Z_i is central in G / Z_i iff [x, s] lies in Z_i for every generator s.
      ElementSet zi(g, current);
      for (Element x = 0; x < g.order(); ++x) {
        bool ok = std::all_of(g.generators().begin(), g.generators().end(),
                              [&](Element s) { return zi.contains(commutator(g, x, s)); });
        if (ok) next.push_back(x);
      }
    }
    if (next.size() == current.size()) return std::nullopt;
    current = std::move(next);
    ++steps;
  }
  return steps;
}

}  // namespace commgraph
