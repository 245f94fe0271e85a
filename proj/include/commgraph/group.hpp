#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "commgraph/permutation.hpp"

namespace commgraph {

using Element = std::uint32_t;

enum class Backend { CayleyTable, Permutation };

struct GroupOptions {
  // Groups of at most this order get a full multiplication table.
  std::size_t cayley_threshold = 2048;
  // Closure enumeration aborts beyond this many elements.
  std::size_t closure_cap = 2'000'000;
};

struct GeneratorSpec {
  std::size_t degree = 1;
  std::vector<Permutation> generators;
};

namespace detail {
struct GroupData;
}

// A finite group on the index space 0..order-1 with 0 the identity.
//
// Groups built from permutations index elements in breadth-first discovery
// order (right multiplication by the generators, in input order), so the
// same generators always give the same indices. Small groups are converted
// to a multiplication table; the permutation images are kept either way so
// elements can be printed in cycle notation.
//
// Group is a cheap handle: copies share the same immutable data.
class Group {
 public:
  static Group from_generators(const GeneratorSpec& spec,
                               std::optional<std::size_t> order_hint = std::nullopt,
                               const GroupOptions& options = {});
  // Row-major table[g * order + h] = g*h. Validates identity and inverses.
  static Group from_cayley_table(std::size_t order, std::vector<Element> table);
  // Explicit element list in the desired index order; elements[0] must be
  // the identity and the list must be closed under composition.
  static Group from_permutations(std::size_t degree, std::vector<Permutation> elements,
                                 const GroupOptions& options = {});

  std::size_t order() const noexcept;
  Backend backend() const noexcept;
  static constexpr Element identity() noexcept { return 0; }

  Element multiply(Element g, Element h) const;
  Element inverse(Element g) const;
  bool commutes(Element g, Element h) const;
  // Equivalent to multiply but skips range checks; used in inner loops.
  Element mul(Element g, Element h) const;
  bool commute_unchecked(Element g, Element h) const;

  const std::vector<Element>& generators() const noexcept;

  bool has_permutations() const noexcept;
  std::size_t degree() const noexcept;
  std::span<const Point> images(Element g) const;
  Permutation permutation(Element g) const;
  std::optional<Element> index_of(const Permutation& p) const;

  // Cycle notation when permutation images exist, otherwise "e"/"g<i>".
  std::string label(Element g) const;

  void check(Element g) const;  // throws IndexOutOfRange
  bool same_as(const Group& other) const noexcept { return data_ == other.data_; }

  // Null for the permutation backend.
  const Element* table_data() const noexcept;

 private:
  explicit Group(std::shared_ptr<const detail::GroupData> data) : data_(std::move(data)) {}
  std::shared_ptr<const detail::GroupData> data_;
  friend class ElementSet;
};

// A strictly increasing list of element indices of one group.
class ElementSet {
 public:
  ElementSet(const Group& group, std::vector<Element> elements);

  const std::vector<Element>& elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }
  bool empty() const noexcept { return elements_.empty(); }
  bool contains(Element g) const;
  bool belongs_to(const Group& group) const noexcept { return group.data_ == group_; }

  auto begin() const noexcept { return elements_.begin(); }
  auto end() const noexcept { return elements_.end(); }

  friend bool operator==(const ElementSet& a, const ElementSet& b) {
    return a.group_ == b.group_ && a.elements_ == b.elements_;
  }

 private:
  std::shared_ptr<const detail::GroupData> group_;
  std::vector<Element> elements_;
};

}  // namespace commgraph
