#include "commgraph/group.hpp"

#include <algorithm>
#include <deque>
#include <string>
#include <unordered_map>

#include "commgraph/error.hpp"

namespace commgraph {
namespace detail {

struct GroupData {
  std::size_t order = 0;
  Backend backend = Backend::CayleyTable;
  std::vector<Element> table;  // order*order, CayleyTable only
  std::vector<Element> inverse;
  std::vector<Element> generators;
  std::size_t degree = 0;
  std::vector<Point> images;  // order*degree, may be empty
  std::unordered_map<std::u16string, Element> index;  // Permutation only

  const Point* image_ptr(Element g) const { return images.data() + std::size_t{g} * degree; }

  std::u16string key(const Point* img) const {
    return std::u16string(reinterpret_cast<const char16_t*>(img), degree);
  }

  Element lookup(const std::u16string& k) const {
    auto it = index.find(k);
    if (it == index.end()) fail(ErrorCode::Internal, "product left the element set");
    return it->second;
  }

  Element perm_product(Element g, Element h) const {
    const Point* a = image_ptr(g);
    const Point* b = image_ptr(h);
    std::u16string k(degree, u'\0');
    for (std::size_t p = 0; p < degree; ++p) k[p] = static_cast<char16_t>(a[b[p]]);
    return lookup(k);
  }
};

}  // namespace detail

namespace {

using detail::GroupData;

// Breadth-first closure of a generator set on a membership predicate. Used to
// pick irredundant generating sets for table-defined groups.
std::vector<Element> closure_of(const GroupData& d, const std::vector<Element>& gens,
                                std::vector<char>& member) {
  std::fill(member.begin(), member.end(), 0);
  std::vector<Element> elems{0};
  member[0] = 1;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (Element s : gens) {
      Element y = d.backend == Backend::CayleyTable ? d.table[std::size_t{elems[i]} * d.order + s]
                                                    : d.perm_product(elems[i], s);
      if (!member[y]) {
        member[y] = 1;
        elems.push_back(y);
      }
    }
  }
  return elems;
}

void choose_generators(GroupData& d) {
  std::vector<char> member(d.order, 0);
  std::vector<Element> gens;
  std::size_t covered = 1;
  member[0] = 1;
  for (Element g = 1; g < d.order && covered < d.order; ++g) {
    if (member[g]) continue;
    gens.push_back(g);
    covered = closure_of(d, gens, member).size();
  }
  d.generators = std::move(gens);
}

void fill_table_inverses(GroupData& d) {
  d.inverse.assign(d.order, 0);
  for (Element g = 0; g < d.order; ++g) {
    const Element* row = d.table.data() + std::size_t{g} * d.order;
    auto it = std::find(row, row + d.order, Element{0});
    if (it == row + d.order) fail(ErrorCode::BadParameter, "element without inverse");
    d.inverse[g] = static_cast<Element>(it - row);
  }
}

void fill_perm_inverses(GroupData& d) {
  d.inverse.assign(d.order, 0);
  std::u16string k(d.degree, u'\0');
  for (Element g = 0; g < d.order; ++g) {
    const Point* a = d.image_ptr(g);
    for (std::size_t p = 0; p < d.degree; ++p) k[a[p]] = static_cast<char16_t>(p);
    d.inverse[g] = d.lookup(k);
  }
}

void fill_table_by_lookup(GroupData& d) {
  d.table.assign(d.order * d.order, 0);
  for (Element g = 0; g < d.order; ++g) {
    for (Element h = 0; h < d.order; ++h) {
      d.table[std::size_t{g} * d.order + h] = d.perm_product(g, h);
    }
  }
}

}  // namespace

Group Group::from_generators(const GeneratorSpec& spec, std::optional<std::size_t> order_hint,
                             const GroupOptions& options) {
  if (spec.degree == 0 || spec.degree > 65535) {
    fail(ErrorCode::BadParameter, "degree must be in 1..65535");
  }
  for (const auto& g : spec.generators) {
    if (g.degree() != spec.degree) {
      fail(ErrorCode::NonBijectiveGenerator, "generator degree differs from spec degree");
    }
    Permutation::from_images(std::vector<Point>(g.images().begin(), g.images().end()));
  }

  auto d = std::make_shared<GroupData>();
  d->degree = spec.degree;
  const std::size_t ng = spec.generators.size();

  // Breadth-first enumeration, recording x*s for every generator s and the
  // tree edge that discovered each element.
  std::vector<Element> right;
  std::vector<Element> parent{0};
  std::vector<std::uint32_t> via{0};
  Permutation id(spec.degree);
  d->images.assign(id.images().begin(), id.images().end());
  d->index.emplace(d->key(d->images.data()), 0);

  std::u16string k(spec.degree, u'\0');
  for (std::size_t x = 0; x < d->index.size(); ++x) {
    for (std::size_t s = 0; s < ng; ++s) {
      const Point* a = d->image_ptr(static_cast<Element>(x));
      const auto b = spec.generators[s].images();
      for (std::size_t p = 0; p < spec.degree; ++p) k[p] = static_cast<char16_t>(a[b[p]]);
      auto [it, inserted] = d->index.emplace(k, static_cast<Element>(d->index.size()));
      if (inserted) {
        if (d->index.size() > options.closure_cap) {
          fail(ErrorCode::ClosureLimitExceeded,
               "closure exceeds " + std::to_string(options.closure_cap) + " elements");
        }
        d->images.insert(d->images.end(), reinterpret_cast<const Point*>(k.data()),
                         reinterpret_cast<const Point*>(k.data()) + spec.degree);
        parent.push_back(static_cast<Element>(x));
        via.push_back(static_cast<std::uint32_t>(s));
      }
      right.push_back(it->second);
    }
  }
  d->order = d->index.size();
  if (order_hint && *order_hint != d->order) {
    fail(ErrorCode::OrderMismatch, "expected order " + std::to_string(*order_hint) +
                                       ", generated " + std::to_string(d->order));
  }

  for (std::size_t s = 0; s < ng; ++s) {
    Element g = right[s];
    if (g != 0 && std::find(d->generators.begin(), d->generators.end(), g) == d->generators.end()) {
      d->generators.push_back(g);
    }
  }

  if (d->order <= options.cayley_threshold) {
    // g * x = (g * parent(x)) * s, filled column by column in discovery order.
    const std::size_t n = d->order;
    d->table.assign(n * n, 0);
    for (Element g = 0; g < n; ++g) d->table[std::size_t{g} * n] = g;
    for (std::size_t x = 1; x < n; ++x) {
      for (std::size_t g = 0; g < n; ++g) {
        Element left = d->table[g * n + parent[x]];
        d->table[g * n + x] = right[std::size_t{left} * ng + via[x]];
      }
    }
    d->backend = Backend::CayleyTable;
    fill_table_inverses(*d);
    d->index.clear();
  } else {
    d->backend = Backend::Permutation;
    fill_perm_inverses(*d);
  }
  return Group(std::move(d));
}

Group Group::from_cayley_table(std::size_t order, std::vector<Element> table) {
  if (order == 0) fail(ErrorCode::BadParameter, "group order must be positive");
  if (table.size() != order * order) fail(ErrorCode::BadParameter, "table size is not order^2");
  for (std::size_t g = 0; g < order; ++g) {
    if (table[g] != g || table[g * order] != g) {
      fail(ErrorCode::BadParameter, "index 0 is not a two-sided identity");
    }
  }
  for (Element v : table) {
    if (v >= order) fail(ErrorCode::IndexOutOfRange, "table entry out of range");
  }
  auto d = std::make_shared<GroupData>();
  d->order = order;
  d->backend = Backend::CayleyTable;
  d->table = std::move(table);
  fill_table_inverses(*d);
  for (Element g = 0; g < order; ++g) {
    if (d->table[std::size_t{d->inverse[g]} * order + g] != 0) {
      fail(ErrorCode::BadParameter, "left and right inverses differ");
    }
  }
  choose_generators(*d);
  return Group(std::move(d));
}

Group Group::from_permutations(std::size_t degree, std::vector<Permutation> elements,
                               const GroupOptions& options) {
  if (elements.empty() || !elements[0].is_identity()) {
    fail(ErrorCode::BadParameter, "element list must start with the identity");
  }
  if (elements.size() > options.closure_cap) {
    fail(ErrorCode::ClosureLimitExceeded, "element list exceeds closure cap");
  }
  auto d = std::make_shared<GroupData>();
  d->degree = degree;
  d->order = elements.size();
  d->images.reserve(d->order * degree);
  for (const auto& p : elements) {
    if (p.degree() != degree) fail(ErrorCode::BadParameter, "mixed permutation degrees");
    d->images.insert(d->images.end(), p.images().begin(), p.images().end());
  }
  for (Element g = 0; g < d->order; ++g) {
    if (!d->index.emplace(d->key(d->image_ptr(g)), g).second) {
      fail(ErrorCode::BadParameter, "duplicate element in list");
    }
  }
  d->backend = Backend::Permutation;
  fill_perm_inverses(*d);
  choose_generators(*d);
  if (d->order <= options.cayley_threshold) {
    fill_table_by_lookup(*d);
    d->backend = Backend::CayleyTable;
    d->index.clear();
  }
  return Group(std::move(d));
}

std::size_t Group::order() const noexcept { return data_->order; }
Backend Group::backend() const noexcept { return data_->backend; }

void Group::check(Element g) const {
  if (g >= data_->order) {
    fail(ErrorCode::IndexOutOfRange,
         "element " + std::to_string(g) + " outside group of order " + std::to_string(data_->order));
  }
}

Element Group::mul(Element g, Element h) const {
  const auto& d = *data_;
  if (d.backend == Backend::CayleyTable) return d.table[std::size_t{g} * d.order + h];
  return d.perm_product(g, h);
}

bool Group::commute_unchecked(Element g, Element h) const {
  const auto& d = *data_;
  if (d.backend == Backend::CayleyTable) {
    return d.table[std::size_t{g} * d.order + h] == d.table[std::size_t{h} * d.order + g];
  }
  return images_commute(d.image_ptr(g), d.image_ptr(h), d.degree);
}

Element Group::multiply(Element g, Element h) const {
  check(g);
  check(h);
  return mul(g, h);
}

Element Group::inverse(Element g) const {
  check(g);
  return data_->inverse[g];
}

bool Group::commutes(Element g, Element h) const {
  check(g);
  check(h);
  return commute_unchecked(g, h);
}

const std::vector<Element>& Group::generators() const noexcept { return data_->generators; }

bool Group::has_permutations() const noexcept { return !data_->images.empty(); }
std::size_t Group::degree() const noexcept { return data_->degree; }

std::span<const Point> Group::images(Element g) const {
  check(g);
  if (!has_permutations()) fail(ErrorCode::BadParameter, "group has no permutation representation");
  return {data_->image_ptr(g), data_->degree};
}

Permutation Group::permutation(Element g) const {
  auto img = images(g);
  return Permutation(std::vector<Point>(img.begin(), img.end()));
}

std::optional<Element> Group::index_of(const Permutation& p) const {
  const auto& d = *data_;
  if (!has_permutations() || p.degree() != d.degree) return std::nullopt;
  if (d.backend == Backend::Permutation) {
    auto it = d.index.find(d.key(p.images().data()));
    if (it == d.index.end()) return std::nullopt;
    return it->second;
  }
  for (Element g = 0; g < d.order; ++g) {
    if (std::equal(p.images().begin(), p.images().end(), d.image_ptr(g))) return g;
  }
  return std::nullopt;
}

std::string Group::label(Element g) const {
  check(g);
  if (has_permutations()) return permutation(g).to_cycle_string();
  return g == 0 ? std::string("e") : "g" + std::to_string(g);
}

const Element* Group::table_data() const noexcept {
  return data_->backend == Backend::CayleyTable ? data_->table.data() : nullptr;
}

ElementSet::ElementSet(const Group& group, std::vector<Element> elements)
    : group_(group.data_), elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
  if (!elements_.empty() && elements_.back() >= group_->order) {
    fail(ErrorCode::IndexOutOfRange, "element set index outside group");
  }
}

bool ElementSet::contains(Element g) const {
  return std::binary_search(elements_.begin(), elements_.end(), g);
}

}  // namespace commgraph
