// Command-line front end: classification reports, the catalog tables, the
// theorem suite and graph export.
//
// Exit status: 0 success, 1 a verification failed (table mismatch, suite
// failure, internal consistency error), 2 bad input.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <set>

#include "commgraph/catalog.hpp"
#include "commgraph/classifiers.hpp"
#include "commgraph/error.hpp"
#include "commgraph/families.hpp"
#include "commgraph/graph_io.hpp"
#include "commgraph/induced_search.hpp"
#include "commgraph/report.hpp"
#include "commgraph/theorem_suite.hpp"

using namespace commgraph;

namespace {

constexpr int kOk = 0;
constexpr int kVerificationFailed = 1;
constexpr int kInputError = 2;

struct GroupSource {
  std::string family;
  std::string catalog;
  std::string id;
};

struct NamedGroup {
  std::string name;
  Group group;
};

NamedGroup load_group(const GroupSource& src) {
  if (!src.family.empty()) {
    if (!src.catalog.empty() || !src.id.empty()) fail(ErrorCode::BadParameter, "give either --family or --catalog/--id");
    return {src.family, build_group_expression(src.family)};
  }
  if (src.id.empty()) fail(ErrorCode::BadParameter, "need --family, or --id with an optional --catalog");
  const GroupId id = parse_group_id(src.id);
  Catalog cat = load_catalog(src.catalog.empty() ? default_catalog_path() : src.catalog, {}, false);
  const CatalogEntry* e = cat.find(id);
  if (!e) fail(ErrorCode::BadParameter, "catalog has no group " + to_string(id));
  return {to_string(id), entry_group(*e)};
}

VertexScope parse_scope(const std::string& s) {
  if (s == "all") return VertexScope::All;
  if (s == "noncentral") return VertexScope::NonCentral;
  fail(ErrorCode::BadParameter, "scope must be all or noncentral");
}

void add_source_options(CLI::App* cmd, GroupSource& src, bool with_catalog) {
  cmd->add_option("--family", src.family, "family spec, e.g. sym:4 or 'dihedral:4 x cyclic:3'");
  if (with_catalog) {
    cmd->add_option("--catalog", src.catalog, "catalog file (default: the shipped catalog)");
    cmd->add_option("--id", src.id, "catalog id n,m");
  }
}

std::string join_labels(const std::vector<std::string>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? " " : "") + xs[i];
  return out;
}

int run_classify(const GroupSource& src, const std::string& scope, const std::string& format,
                 bool certificates, bool skip_predicates) {
  NamedGroup g = load_group(src);
  ClassifyOptions options;
  options.scope = parse_scope(scope);
  options.group_predicates = !skip_predicates;
  ClassReport r = classify_group(g.group, g.name, options);
  if (format == "json") {
    std::cout << report_to_json(r, g.group, certificates).dump(2) << '\n';
  } else if (format == "csv") {
    std::cout << report_csv_header() << '\n' << report_to_csv(r) << '\n';
  } else {
    std::cout << report_to_text(r);
  }
  return kOk;
}

nlohmann::json hits_json(const std::vector<ScanHit>& hits) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& h : hits) {
    arr.push_back({{"id", to_string(h.id)},
                   {"name", h.name},
                   {"witness", {{"pattern", to_string(h.witness.pattern)}, {"labels", h.labels}}}});
  }
  return arr;
}

int run_table1(const std::string& catalog_path, const std::string& format) {
  Catalog cat = load_catalog(catalog_path.empty() ? default_catalog_path() : catalog_path);
  ScanResult res = scan_noncograph(cat, 36);
  if (!res.skipped.empty()) {
    fail(ErrorCode::IncompleteCoverage, "catalog does not cover order " + std::to_string(res.skipped.front()));
  }
  std::vector<GroupId> ids;
  std::vector<ScanHit> hits;
  for (const auto& row : res.rows) {
    for (const auto& h : row.hits) {
      ids.push_back(h.id);
      hits.push_back(h);
    }
  }
  const bool match = ids == table1_expected_ids();
  if (format == "json") {
    std::cout << nlohmann::json{{"groups", hits_json(hits)}, {"matches_reference", match}}.dump(2) << '\n';
  } else if (format == "csv") {
    std::cout << "id,name,pattern,witness\n";
    for (const auto& h : hits) {
      std::cout << '"' << to_string(h.id) << "\",\"" << h.name << "\"," << to_string(h.witness.pattern) << ",\""
                << join_labels(h.labels) << "\"\n";
    }
  } else {
    for (const auto& h : hits) {
      std::cout << to_string(h.id) << "  " << h.name << "  " << to_string(h.witness.pattern) << ": "
                << join_labels(h.labels) << '\n';
    }
    std::cout << (match ? "matches the reference list" : "DIFFERS from the reference list") << '\n';
  }
  return match ? kOk : kVerificationFailed;
}

int run_table2(const std::string& catalog_path, std::uint32_t max_order, const std::string& format) {
  Catalog cat = load_catalog(catalog_path.empty() ? default_catalog_path() : catalog_path);
  ScanResult res = scan_noncograph(cat, max_order);
  const auto& expected = table2_expected_counts();
  bool match = true;
  nlohmann::json rows = nlohmann::json::array();
  if (format == "csv") std::cout << "order,count,expected\n";
  for (const auto& row : res.rows) {
    auto it = expected.find(row.order);
    if (row.count() == 0 && it == expected.end()) continue;
    const std::size_t want = it == expected.end() ? 0 : it->second;
    match = match && row.count() == want;
    if (format == "json") {
      rows.push_back({{"order", row.order}, {"count", row.count()}, {"expected", want}, {"groups", hits_json(row.hits)}});
    } else if (format == "csv") {
      std::cout << row.order << ',' << row.count() << ',' << want << '\n';
    } else {
      std::cout << "order " << row.order << ": " << row.count() << (row.count() == want ? "" : "  (expected " + std::to_string(want) + ")")
                << '\n';
    }
  }
  std::vector<std::uint32_t> missing;
  for (const auto& [order, count] : expected) {
    if (order <= max_order && !cat.complete(order)) missing.push_back(order);
  }
  if (format == "json") {
    std::cout << nlohmann::json{{"rows", rows}, {"uncovered_reference_orders", missing}, {"matches_reference", match}}.dump(2)
              << '\n';
  } else if (format != "csv") {
    if (!missing.empty()) {
      std::cout << "not covered by the catalog:";
      for (auto o : missing) std::cout << ' ' << o;
      std::cout << '\n';
    }
    std::cout << (match ? "counts match the reference" : "counts DIFFER from the reference") << '\n';
  }
  return match ? kOk : kVerificationFailed;
}

int run_witness(const GroupSource& src, const std::string& pattern_text, const std::string& scope,
                std::size_t cap, const std::string& format) {
  NamedGroup g = load_group(src);
  const Pattern pattern = parse_pattern(pattern_text);
  UndirectedGraph gamma = commuting_graph(g.group, parse_scope(scope));
  auto found = find_induced(gamma, pattern, cap);
  std::vector<std::string> labels;
  if (found) {
    for (Vertex v : pattern_order(gamma, *found, pattern)) labels.push_back(g.group.label(gamma.label(v)));
  }
  if (format == "json") {
    nlohmann::json j{{"group", g.name}, {"pattern", to_string(pattern)}, {"found", found.has_value()}};
    if (found) j["labels"] = labels;
    std::cout << j.dump(2) << '\n';
  } else if (found) {
    std::cout << to_string(pattern) << ": " << join_labels(labels) << '\n';
  } else {
    std::cout << "no induced " << to_string(pattern) << '\n';
  }
  return kOk;
}

int run_verify(bool slow, const std::string& catalog_path) {
  SuiteOptions options;
  options.slow = slow;
  options.catalog_path = catalog_path;
  SuiteReport report = run_theorem_suite(options);
  std::cout << suite_to_text(report);
  return report.passed() ? kOk : kVerificationFailed;
}

int run_export(const GroupSource& src, const std::string& out_path, const std::string& scope,
               const std::string& format) {
  NamedGroup g = load_group(src);
  UndirectedGraph gamma = commuting_graph(g.group, parse_scope(scope));
  std::ofstream out(out_path);
  if (!out) fail(ErrorCode::BadParameter, "cannot write '" + out_path + "'");
  if (format == "packed") {
    out << to_packed(gamma) << '\n';
  } else {
    write_edge_list(out, gamma);
  }
  return kOk;
}

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case ErrorCode::Internal: return kVerificationFailed;
    default: return kInputError;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Commuting graphs of finite groups"};
  app.require_subcommand(1);

  GroupSource src;
  std::string scope = "noncentral";
  std::string format = "text";
  std::string catalog_path;
  bool certificates = false;
  bool skip_predicates = false;
  bool slow = false;
  std::uint32_t max_order = 72;
  std::string pattern;
  std::size_t cap = kDefaultHoleCap;
  std::string out_path;
  std::string graph_format = "edges";

  const std::set<std::string> formats = {"text", "json", "csv"};

  auto* classify = app.add_subcommand("classify", "classify one group");
  add_source_options(classify, src, true);
  classify->add_option("--scope", scope, "all | noncentral")->check(CLI::IsMember({"all", "noncentral"}));
  classify->add_option("--format", format)->check(CLI::IsMember(formats));
  classify->add_flag("--certificates", certificates, "include certificates in JSON output");
  classify->add_flag("--skip-predicates", skip_predicates, "skip the centralizer-scanning predicates");

  auto* table1 = app.add_subcommand("table1", "non-cograph groups of order at most 36");
  table1->add_option("--catalog", catalog_path);
  table1->add_option("--format", format)->check(CLI::IsMember(formats));

  auto* table2 = app.add_subcommand("table2", "non-cograph counts per order");
  table2->add_option("--catalog", catalog_path);
  table2->add_option("--max-order", max_order);
  table2->add_option("--format", format)->check(CLI::IsMember(formats));

  auto* witness = app.add_subcommand("witness", "find an induced pattern in a commuting graph");
  add_source_options(witness, src, true);
  witness->add_option("--pattern", pattern, "P4 | C4 | C5 | 2K2 | hole:k")->required();
  witness->add_option("--scope", scope)->check(CLI::IsMember({"all", "noncentral"}));
  witness->add_option("--cap", cap, "longest hole searched");
  witness->add_option("--format", format)->check(CLI::IsMember(formats));

  auto* verify = app.add_subcommand("verify", "run the theorem suite");
  verify->add_flag("--slow", slow, "include Sz(8) and the order 48..72 scans");
  verify->add_option("--catalog", catalog_path);

  auto* exporter = app.add_subcommand("export-graph", "write a commuting graph");
  add_source_options(exporter, src, true);
  exporter->add_option("--out", out_path)->required();
  exporter->add_option("--scope", scope)->check(CLI::IsMember({"all", "noncentral"}));
  exporter->add_option("--graph-format", graph_format)->check(CLI::IsMember({"edges", "packed"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (*classify) return run_classify(src, scope, format, certificates, skip_predicates);
    if (*table1) return run_table1(catalog_path, format);
    if (*table2) return run_table2(catalog_path, max_order, format);
    if (*witness) return run_witness(src, pattern, scope, cap, format);
    if (*verify) return run_verify(slow, catalog_path);
    if (*exporter) return run_export(src, out_path, scope, graph_format);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kOk;
}
