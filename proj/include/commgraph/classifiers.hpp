#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "commgraph/graph.hpp"
#include "commgraph/group.hpp"
#include "commgraph/recognition.hpp"

namespace commgraph {

// Subgroup generated by the elements of order greater than 2.
struct OmegaResult {
  ElementSet elements;
  bool abelian = true;
};
OmegaResult omega_subgroup(const Group& g);

struct DihedralDecomposition {
  bool holds = false;
  std::optional<ElementSet> abelian_part;  // A, when holds
  std::string reason;                      // why not, otherwise
};
// D(A) with |A| odd: G non-abelian, A = Omega(G) abelian of odd order and
// index 2, and every x outside A an involution with x a x = a^-1 on all of A.
DihedralDecomposition is_generalized_dihedral_odd(const Group& g);

struct CentralizerTest {
  bool holds = true;
  std::optional<Element> counterexample;  // least element with a non-abelian centralizer
};

// Every non-central element has an abelian centralizer. Equivalently,
// commuting is transitive on G - Z(G), i.e. the non-central commuting graph
// is a disjoint union of cliques; that is how it is decided. Pass the graph
// when it has already been built.
CentralizerTest is_ac_group(const Group& g, const UndirectedGraph* noncentral_graph = nullptr);
// Every non-identity element has an abelian centralizer.
CentralizerTest is_ca_group(const Group& g, const UndirectedGraph* noncentral_graph = nullptr);

struct FrobeniusRecord {
  ElementSet complement;
  ElementSet kernel;
};
// Throws NotASubgroup if h is not a subgroup, NotFrobenius naming the failed
// check otherwise.
FrobeniusRecord verify_frobenius(const Group& g, const ElementSet& h);

inline constexpr std::array<GraphClass, 5> kAllClasses = {
    GraphClass::Split, GraphClass::Threshold, GraphClass::TwoK2Free, GraphClass::Cograph,
    GraphClass::Chordal};

struct ClassifyOptions {
  VertexScope scope = VertexScope::NonCentral;
  std::vector<GraphClass> classes{kAllClasses.begin(), kAllClasses.end()};
  bool group_predicates = true;   // abelian is always computed
  bool verify_certificates = true;
  bool enforce_consistency = true;  // throw on a consistency violation
  std::optional<std::vector<Element>> frobenius_complement;
  std::size_t threads = 0;        // 0: COMMGRAPH_THREADS or hardware
};

struct Timing {
  std::string stage;
  double milliseconds = 0;
};

struct ClassReport {
  std::string identity;
  std::size_t order = 0;
  std::size_t center_size = 0;
  VertexScope scope = VertexScope::NonCentral;
  std::size_t graph_vertices = 0;
  std::size_t graph_edges = 0;
  std::vector<Element> vertex_elements;  // graph vertex -> group element
  std::vector<ClassVerdict> verdicts;     // in ClassifyOptions::classes order
  // Witness vertices printed as group elements; empty for members.
  std::vector<std::vector<std::string>> witness_labels;

  bool abelian = false;
  std::optional<DihedralDecomposition> generalized_dihedral_odd;
  std::optional<CentralizerTest> ac;
  std::optional<CentralizerTest> ca;
  std::optional<FrobeniusRecord> frobenius;
  std::optional<std::string> frobenius_failure;

  std::vector<Timing> timings;

  const ClassVerdict* verdict(GraphClass c) const;
};

// Builds the commuting graph, runs the requested recognizers and predicates,
// and checks the report against the known equivalences: for commuting graphs
// split, threshold and 2K2-freeness coincide with "abelian or D(A) with |A|
// odd", and threshold implies cograph and chordal. A violation throws
// Internal, since it can only come from a bug.
ClassReport classify_group(const Group& g, const std::string& identity,
                           const ClassifyOptions& options = {});

// The same consistency rules, returned as messages instead of thrown.
std::vector<std::string> report_violations(const ClassReport& r);

}  // namespace commgraph
