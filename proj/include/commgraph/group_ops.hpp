#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "commgraph/group.hpp"

namespace commgraph {

std::size_t element_order(const Group& g, Element x);

bool is_abelian(const Group& g);

// Elements commuting with every element of the group.
ElementSet center(const Group& g);

// C_G(x).
ElementSet centralizer(const Group& g, Element x);

// Smallest subgroup containing `seed`. The result size is checked against
// Lagrange's theorem.
ElementSet subgroup_closure(const Group& g, const ElementSet& seed);
ElementSet subgroup_closure(const Group& g, const std::vector<Element>& seed);

bool is_subgroup(const Group& g, const ElementSet& h);
bool is_normal_subgroup(const Group& g, const ElementSet& n);

struct Quotient {
  Group group;
  std::vector<Element> coset_of;         // element of G -> element of G/N
  std::vector<Element> representatives;  // least element of each coset
};

// G/N on cosets, each represented by its least element index. Only offered
// for table-backed groups; throws NotASubgroup / NotNormal.
Quotient quotient_map(const Group& g, const ElementSet& n);
inline Group quotient(const Group& g, const ElementSet& n) { return quotient_map(g, n).group; }

// Length of the upper central series, or nullopt if the group is not
// nilpotent. The trivial group has class 0.
std::optional<std::size_t> nilpotency_class(const Group& g);

// g * h * g^-1 * h^-1
Element commutator(const Group& g, Element x, Element y);

}  // namespace commgraph
