#include "commgraph/catalog.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "commgraph/error.hpp"
#include "commgraph/families.hpp"
#include "commgraph/group_ops.hpp"
#include "commgraph/parallel.hpp"

namespace commgraph {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

[[noreturn]] void parse_fail(std::size_t line, const std::string& what) {
  fail(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + what);
}

std::uint32_t parse_uint(std::string_view token, std::size_t line, const char* what) {
  std::uint32_t v = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
  if (ec != std::errc{} || ptr != token.data() + token.size() || v == 0) {
    parse_fail(line, std::string("expected a positive integer for ") + what + ", got '" +
                         std::string(token) + "'");
  }
  return v;
}

// Splits "(1 2), (1,2,3)" at commas outside parentheses.
std::vector<std::string> split_generators(std::string_view text, std::size_t line) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char c : text) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (depth < 0) parse_fail(line, "unbalanced ')'");
    if (c == ',' && depth == 0) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (depth != 0) parse_fail(line, "unbalanced '('");
  out.push_back(trim(cur));
  for (const auto& g : out) {
    if (g.empty()) parse_fail(line, "empty generator");
  }
  return out;
}

Group validated_group(const CatalogEntry& e, const GroupOptions& options) {
  GroupOptions capped = options;
  capped.closure_cap = std::min<std::size_t>(options.closure_cap, std::size_t{e.order});
  try {
    Group g = Group::from_generators({e.degree, e.generators}, std::nullopt, capped);
    if (g.order() != e.order) {
      fail(ErrorCode::OrderValidationFailed, to_string(e.id()) + " generates order " +
                                                 std::to_string(g.order()));
    }
    return g;
  } catch (const Error& err) {
    if (err.code() != ErrorCode::ClosureLimitExceeded) throw;
    fail(ErrorCode::OrderValidationFailed,
         to_string(e.id()) + " generates more than " + std::to_string(e.order) + " elements");
  }
}

using Test = ClassVerdict (*)(const UndirectedGraph&);

ScanResult scan(const Catalog& catalog, std::uint32_t max_order,
                const std::vector<std::uint32_t>& orders, Test test) {
  std::vector<std::uint32_t> wanted;
  ScanResult result;
  if (orders.empty()) {
    for (std::uint32_t n = 1; n <= max_order; ++n) {
      if (catalog.complete(n)) {
        wanted.push_back(n);
      } else {
        result.skipped.push_back(n);
      }
    }
  } else {
    wanted = orders;
    std::sort(wanted.begin(), wanted.end());
    wanted.erase(std::unique(wanted.begin(), wanted.end()), wanted.end());
    for (auto n : wanted) {
      if (!catalog.complete(n)) {
        fail(ErrorCode::IncompleteCoverage, "catalog does not cover every group of order " +
                                                std::to_string(n));
      }
    }
  }

  std::vector<const CatalogEntry*> work;
  for (auto n : wanted) {
    auto part = catalog.of_order(n);
    work.insert(work.end(), part.begin(), part.end());
  }
  std::vector<std::optional<ScanHit>> found(work.size());
  const std::size_t threads = std::min(thread_count(), std::max<std::size_t>(work.size(), 1));
  run_workers(threads, [&](std::size_t w, std::size_t t) {
    for (std::size_t i = w; i < work.size(); i += t) {
      const CatalogEntry& e = *work[i];
      Group g = entry_group(e);
      UndirectedGraph gamma = commuting_graph(g, VertexScope::NonCentral, 1);
      ClassVerdict v = test(gamma);
      if (v.member) continue;
      ScanHit hit{e.id(), e.name, *v.witness, {}};
      for (Vertex x : hit.witness.vertices) hit.labels.push_back(g.label(gamma.label(x)));
      found[i] = std::move(hit);
    }
  });

  for (auto n : wanted) result.rows.push_back({n, {}});
  for (std::size_t i = 0; i < work.size(); ++i) {
    if (!found[i]) continue;
    auto row = std::find_if(result.rows.begin(), result.rows.end(),
                            [&](const TableRow& r) { return r.order == work[i]->order; });
    row->hits.push_back(std::move(*found[i]));
  }
  return result;
}

}  // namespace

std::string to_string(const GroupId& id) {
  return "[" + std::to_string(id.order) + "," + std::to_string(id.index) + "]";
}

GroupId parse_group_id(const std::string& text) {
  std::string s = trim(text);
  if (s.size() >= 2 && s.front() == '[' && s.back() == ']') s = s.substr(1, s.size() - 2);
  const auto comma = s.find(',');
  if (comma == std::string::npos) fail(ErrorCode::BadParameter, "group id must look like n,m");
  auto number = [&](const std::string& part) {
    std::string t = trim(part);
    std::uint32_t v = 0;
    auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (ec != std::errc{} || ptr != t.data() + t.size() || v == 0) {
      fail(ErrorCode::BadParameter, "bad group id '" + text + "'");
    }
    return v;
  };
  return {number(s.substr(0, comma)), number(s.substr(comma + 1))};
}

bool Catalog::complete(std::uint32_t order) const {
  auto it = coverage.find(order);
  return it != coverage.end() && it->second;
}

const CatalogEntry* Catalog::find(const GroupId& id) const {
  auto it = std::lower_bound(entries.begin(), entries.end(), id,
                             [](const CatalogEntry& e, const GroupId& x) { return e.id() < x; });
  return it != entries.end() && it->id() == id ? &*it : nullptr;
}

std::vector<const CatalogEntry*> Catalog::of_order(std::uint32_t order) const {
  std::vector<const CatalogEntry*> out;
  for (const auto& e : entries) {
    if (e.order == order) out.push_back(&e);
  }
  return out;
}

Catalog parse_catalog(std::istream& in, const GroupOptions& options, bool validate) {
  Catalog cat;
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string text = trim(raw);
    if (text.empty()) continue;
    if (text[0] == '#') {
      if (text.rfind("#coverage", 0) != 0) continue;
      std::istringstream ls(text.substr(9));
      std::string order_tok;
      std::string kind;
      std::string extra;
      if (!(ls >> order_tok >> kind) || (ls >> extra)) parse_fail(line, "malformed #coverage line");
      if (kind != "complete" && kind != "partial") parse_fail(line, "coverage must be complete or partial");
      const auto order = parse_uint(order_tok, line, "coverage order");
      if (cat.coverage.count(order)) parse_fail(line, "coverage for order " + order_tok + " repeated");
      cat.coverage[order] = kind == "complete";
      continue;
    }

    CatalogEntry e;
    const auto hash = text.find('#');
    if (hash != std::string::npos) {
      e.name = trim(std::string_view(text).substr(hash + 1));
      text = trim(std::string_view(text).substr(0, hash));
    }
    const auto bar = text.find('|');
    if (bar == std::string::npos) parse_fail(line, "missing '|'");
    std::istringstream head(text.substr(0, bar));
    std::string a;
    std::string b;
    std::string c;
    std::string extra;
    if (!(head >> a >> b >> c) || (head >> extra)) parse_fail(line, "expected 'order index degree |'");
    e.order = parse_uint(a, line, "order");
    e.index = parse_uint(b, line, "index");
    e.degree = parse_uint(c, line, "degree");
    if (e.degree > 65535) parse_fail(line, "degree too large");
    for (const auto& gen : split_generators(std::string_view(text).substr(bar + 1), line)) {
      try {
        e.generators.push_back(Permutation::parse_cycles(gen, e.degree));
      } catch (const Error& err) {
        parse_fail(line, err.what());
      }
    }
    cat.entries.push_back(std::move(e));
  }

  std::sort(cat.entries.begin(), cat.entries.end(),
            [](const CatalogEntry& x, const CatalogEntry& y) { return x.id() < y.id(); });
  for (std::size_t i = 1; i < cat.entries.size(); ++i) {
    if (cat.entries[i].id() == cat.entries[i - 1].id()) {
      fail(ErrorCode::DuplicateID, "duplicate catalog id " + to_string(cat.entries[i].id()));
    }
  }
  if (validate) {
    std::vector<std::string> problems(cat.entries.size());
    run_workers(std::min(thread_count(), std::max<std::size_t>(cat.entries.size(), 1)),
                [&](std::size_t w, std::size_t t) {
                  for (std::size_t i = w; i < cat.entries.size(); i += t) {
                    try {
                      validated_group(cat.entries[i], options);
                    } catch (const Error& err) {
                      problems[i] = err.what();
                    }
                  }
                });
    for (const auto& p : problems) {
      if (!p.empty()) fail(ErrorCode::OrderValidationFailed, p);
    }
  }
  return cat;
}

Catalog load_catalog(const std::string& path, const GroupOptions& options, bool validate) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::ParseError, "cannot open catalog '" + path + "'");
  return parse_catalog(in, options, validate);
}

std::string serialize_catalog(const Catalog& catalog) {
  std::ostringstream out;
  for (const auto& [order, full] : catalog.coverage) {
    out << "#coverage " << order << (full ? " complete" : " partial") << '\n';
  }
  for (const auto& e : catalog.entries) {
    out << e.order << ' ' << e.index << ' ' << e.degree << " |";
    for (std::size_t i = 0; i < e.generators.size(); ++i) {
      out << (i ? ", " : " ") << e.generators[i].to_cycle_string();
    }
    if (!e.name.empty()) out << " # " << e.name;
    out << '\n';
  }
  return out.str();
}

Group entry_group(const CatalogEntry& entry, const GroupOptions& options) {
  return Group::from_generators({entry.degree, entry.generators}, entry.order, options);
}

std::string default_catalog_path() { return data_path("small_groups.cat"); }

ScanResult scan_noncograph(const Catalog& catalog, std::uint32_t max_order,
                           const std::vector<std::uint32_t>& orders) {
  return scan(catalog, max_order, orders, &is_cograph);
}

ScanResult scan_nonchordal(const Catalog& catalog, std::uint32_t max_order,
                           const std::vector<std::uint32_t>& orders) {
  return scan(catalog, max_order, orders, &is_chordal);
}

// Known answer: the groups of order at most 36 whose commuting graph is not
// a cograph.
const std::vector<GroupId>& table1_expected_ids() {
  static const std::vector<GroupId> ids = {{24, 12}, {32, 6},  {32, 7},  {32, 8}, {32, 43},
                                           {32, 44}, {32, 49}, {32, 50}, {36, 10}};
  return ids;
}

// Known answer: per order, how many groups have a commuting graph that is
// not a cograph. Orders above 72 are not in the shipped catalog.
const std::map<std::uint32_t, std::size_t>& table2_expected_counts() {
  static const std::map<std::uint32_t, std::size_t> counts = {
      {24, 1},  {32, 7},   {36, 1},  {48, 10},  {54, 2},  {60, 2},   {64, 115}, {72, 11}, {80, 12},
      {84, 1},  {96, 112}, {100, 2}, {108, 10}, {112, 8}, {120, 15}, {126, 2},  {128, 1539}};
  return counts;
}

}  // namespace commgraph
