#pragma once

#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "commgraph/graph.hpp"
#include "commgraph/induced_search.hpp"

namespace commgraph {

enum class GraphClass { Split, Threshold, TwoK2Free, Cograph, Chordal };

std::string to_string(GraphClass c);

struct SplitPartition {
  std::vector<Vertex> clique;
  std::vector<Vertex> independent;
};

// Insertion order; `dominating` is false for a vertex added isolated.
struct CreationStep {
  Vertex vertex = 0;
  bool dominating = false;
};
using CreationSequence = std::vector<CreationStep>;

struct Cotree {
  enum class Kind { Leaf, Union, Join };
  struct Node {
    Kind kind = Kind::Leaf;
    Vertex vertex = 0;  // leaves only
    std::vector<std::size_t> children;
  };
  std::vector<Node> nodes;
  std::size_t root = 0;  // meaningless when nodes is empty (the null graph)
};

// Each vertex's neighbours later in the order form a clique.
using EliminationOrdering = std::vector<Vertex>;

// Membership established by a complete forbidden-subgraph search; used for
// 2K2-freeness, which has no smaller certificate.
struct ExhaustiveSearch {};

using Certificate = std::variant<std::monostate, SplitPartition, CreationSequence, Cotree,
                                 EliminationOrdering, ExhaustiveSearch>;

struct Witness {
  Pattern pattern;
  std::vector<Vertex> vertices;  // along the path or cycle
};

struct ClassVerdict {
  GraphClass graph_class = GraphClass::Split;
  bool member = false;
  Certificate certificate;
  std::optional<Witness> witness;
};

ClassVerdict is_split(const UndirectedGraph& g);
ClassVerdict is_threshold(const UndirectedGraph& g);
ClassVerdict is_2k2_free(const UndirectedGraph& g);
ClassVerdict is_cograph(const UndirectedGraph& g);
ClassVerdict is_chordal(const UndirectedGraph& g);
ClassVerdict recognize(const UndirectedGraph& g, GraphClass c);

bool verify_split_partition(const UndirectedGraph& g, const SplitPartition& p);
bool verify_creation_sequence(const UndirectedGraph& g, const CreationSequence& seq);
bool verify_cotree(const UndirectedGraph& g, const Cotree& t);
bool verify_elimination_ordering(const UndirectedGraph& g, const EliminationOrdering& order);

// The pattern must be one the class forbids.
bool pattern_forbidden_for(GraphClass c, const Pattern& p);

// Checks the whole verdict: exactly one of certificate and witness, of the
// kind matching the class, and valid for g.
bool verify_verdict(const UndirectedGraph& g, const ClassVerdict& v);

using VertexLabeler = std::function<std::string(Vertex)>;

// Record layout:
//   {"class": "cograph", "member": true,
//    "certificate": {"kind": "cotree", ...}}            when a member
//   {"class": ..., "member": false,
//    "witness": {"pattern": "P4", "vertices": [...], "labels": [...]}}
// Certificates can be large; pass include_certificate = false to keep only
// the certificate kind.
nlohmann::json verdict_to_json(const ClassVerdict& v, const VertexLabeler& label = {},
                               bool include_certificate = true);

}  // namespace commgraph
