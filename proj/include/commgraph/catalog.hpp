#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "commgraph/group.hpp"
#include "commgraph/recognition.hpp"

namespace commgraph {

struct GroupId {
  std::uint32_t order = 0;
  std::uint32_t index = 0;
  friend auto operator<=>(const GroupId&, const GroupId&) = default;
};

std::string to_string(const GroupId& id);  // "[24,12]"
GroupId parse_group_id(const std::string& text);  // "24,12" or "[24,12]"

struct CatalogEntry {
  std::uint32_t order = 0;
  std::uint32_t index = 0;
  std::uint32_t degree = 0;
  std::vector<Permutation> generators;
  std::string name;

  GroupId id() const { return {order, index}; }
  friend bool operator==(const CatalogEntry&, const CatalogEntry&) = default;
};

// A catalog file:
//
//   #coverage 24 complete
//   24 12 4 | (2 4 3), (1 2)   # S4
//
// "#coverage <order> complete|partial" declares whether every group of that
// order is present. Other lines starting with '#' are comments. An entry is
// "order index degree | generators", generators being comma-separated cycle
// expressions over 1..degree; text after '#' on an entry line is its name.
struct Catalog {
  std::map<std::uint32_t, bool> coverage;  // order -> complete
  std::vector<CatalogEntry> entries;       // sorted by (order, index)

  bool complete(std::uint32_t order) const;
  const CatalogEntry* find(const GroupId& id) const;
  std::vector<const CatalogEntry*> of_order(std::uint32_t order) const;

  friend bool operator==(const Catalog&, const Catalog&) = default;
};

// With validate set, every entry's generators are closed and the order
// compared (OrderValidationFailed). ParseError messages carry the line.
Catalog parse_catalog(std::istream& in, const GroupOptions& options = {}, bool validate = true);
Catalog load_catalog(const std::string& path, const GroupOptions& options = {},
                     bool validate = true);
std::string serialize_catalog(const Catalog& catalog);

Group entry_group(const CatalogEntry& entry, const GroupOptions& options = {});

// The catalog that ships with the library.
std::string default_catalog_path();

struct ScanHit {
  GroupId id;
  std::string name;
  Witness witness;                  // on Γ(G) restricted to non-central elements
  std::vector<std::string> labels;  // witness vertices as permutations
};

struct TableRow {
  std::uint32_t order = 0;
  std::vector<ScanHit> hits;  // sorted by index
  std::size_t count() const { return hits.size(); }
};

struct ScanResult {
  std::vector<TableRow> rows;            // one per scanned order, ascending
  std::vector<std::uint32_t> skipped;    // orders <= max_order lacking full coverage
};

// Scans every fully covered order up to max_order, or exactly `orders` when
// given (IncompleteCoverage if one of those is not fully covered).
ScanResult scan_noncograph(const Catalog& catalog, std::uint32_t max_order,
                           const std::vector<std::uint32_t>& orders = {});
ScanResult scan_nonchordal(const Catalog& catalog, std::uint32_t max_order,
                           const std::vector<std::uint32_t>& orders = {});

// Published reference answers used by the table commands.
const std::vector<GroupId>& table1_expected_ids();
const std::map<std::uint32_t, std::size_t>& table2_expected_counts();

}  // namespace commgraph
