#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "commgraph/graph.hpp"

namespace commgraph {

enum class PatternKind { P4, C4, C5, TwoK2, Hole };

struct Pattern {
  PatternKind kind = PatternKind::P4;
  std::size_t length = 4;  // vertex count; for Hole the minimum length asked for

  static Pattern p4() { return {PatternKind::P4, 4}; }
  static Pattern c4() { return {PatternKind::C4, 4}; }
  static Pattern c5() { return {PatternKind::C5, 5}; }
  static Pattern two_k2() { return {PatternKind::TwoK2, 4}; }
  static Pattern hole(std::size_t k) { return {PatternKind::Hole, k}; }

  friend bool operator==(const Pattern&, const Pattern&) = default;
};

// "P4", "C4", "C5", "2K2", "hole:k" (and "Hole(k)" on output).
std::string to_string(const Pattern& p);
Pattern parse_pattern(const std::string& text);

inline constexpr std::size_t kDefaultHoleCap = 64;

// Brute-force search for an induced copy of the pattern. Vertices come back
// sorted.
//
// The fixed patterns return the lexicographically least vertex set. Holes are
// searched up to `cap` vertices: for k = 4 the result is a shortest hole
// (first by the scan over middle vertex, then its neighbours), for k > 4 the
// hole with the least minimum vertex, shortest for that vertex. Throws
// LengthCapExceeded when k > cap, or when holes may exist beyond the cap
// while none was found within it.
std::optional<std::vector<Vertex>> find_induced(const UndirectedGraph& g, const Pattern& pattern,
                                                std::size_t cap = kDefaultHoleCap);

// Length of the shortest hole, or nullopt for chordal graphs. Uncapped.
std::optional<std::size_t> shortest_hole_length(const UndirectedGraph& g);

// True iff the induced subgraph on `vertices` (any order, no repeats) is
// isomorphic to the pattern; for Hole(k) any chordless cycle of length >= k.
bool induces_pattern(const UndirectedGraph& g, const std::vector<Vertex>& vertices,
                     const Pattern& pattern);

// Reorders a verified witness along its path or cycle, starting from the
// least vertex; 2K2 comes back as the two edges.
std::vector<Vertex> pattern_order(const UndirectedGraph& g, std::vector<Vertex> vertices,
                                  const Pattern& pattern);

}  // namespace commgraph
