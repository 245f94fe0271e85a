#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "commgraph/catalog.hpp"
#include "commgraph/classifiers.hpp"

namespace commgraph {

struct TheoremResult {
  std::string name;
  bool passed = true;
  std::size_t cases = 0;
  std::vector<std::string> failures;  // the first few, with witnesses
  std::vector<std::string> notes;     // computed facts worth printing
  double seconds = 0;

  void record(bool ok, const std::string& what);
};

struct SuiteReport {
  std::vector<TheoremResult> results;
  bool passed() const;
};

struct SuiteOptions {
  std::string catalog_path;     // empty: the shipped catalog
  bool slow = false;            // Sz(8) and the catalog scans of orders 48..72
  std::size_t oracle_max_vertices = 5;
};

struct CorpusGroup {
  std::string name;
  Group group;
};

// Catalog groups of order <= 36, D_2n for n <= 15, ten generalized dihedral
// groups and Q_4m for m <= 8.
std::vector<CorpusGroup> default_corpus(const Catalog& catalog);

struct CorpusReport {
  CorpusGroup group;
  ClassReport report;
};
// Classifies every corpus group without enforcing consistency, so the checks
// below can report violations as data.
std::vector<CorpusReport> classify_corpus(const std::vector<CorpusGroup>& corpus);

TheoremResult check_split_threshold_2k2(const std::vector<CorpusReport>& reports);
TheoremResult check_centralizer_classes(const std::vector<CorpusReport>& reports);
TheoremResult check_graph_construction(const std::vector<CorpusGroup>& corpus);
TheoremResult check_small_central_quotient(const Catalog& catalog);
TheoremResult check_family_shapes();
TheoremResult check_strong_products();
TheoremResult check_direct_products();
TheoremResult check_extraspecial();
TheoremResult check_frobenius();
TheoremResult check_symmetric_alternating();
TheoremResult check_permutation_witnesses();
TheoremResult check_psl2();
TheoremResult check_matrix_witnesses();
TheoremResult check_minimal_orders(const Catalog& catalog);
TheoremResult check_table1(const Catalog& catalog);
TheoremResult check_table2(const Catalog& catalog);
TheoremResult check_graph_class_oracle(std::size_t max_vertices);
TheoremResult check_suzuki();

SuiteReport run_theorem_suite(const SuiteOptions& options = {});

std::string suite_to_text(const SuiteReport& report);

}  // namespace commgraph
