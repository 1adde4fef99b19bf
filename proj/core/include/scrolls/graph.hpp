#ifndef SCROLLS_GRAPH_HPP
#define SCROLLS_GRAPH_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "scrolls/scroll_type.hpp"

namespace scrolls {

struct SpecializationEdge {
  std::size_t from;
  std::size_t to;
  bool generic;
  friend bool operator==(const SpecializationEdge&, const SpecializationEdge&) = default;
};

/// All scrolls of one codimension (sum(a) = codim + 1) with an edge a -> b
/// whenever S(b) is an irreducible hyperplane section of S(a).
struct SpecializationGraph {
  int codim = 0;
  std::vector<ScrollType> nodes;
  std::vector<SpecializationEdge> edges;  ///< sorted by (from, to)
};

/// Partitions of n as scroll types, lexicographic.
std::vector<ScrollType> partitions(int n);

SpecializationGraph specialization_graph(int codim);

/// Exponent notation: (1,1,1,1,2) -> "(1^4,2)".
std::string node_label(const ScrollType& a);

/// DOT digraph. Generic edges are dashed and carry generic=true.
std::string emit_dot(const SpecializationGraph& graph);

}  // namespace scrolls

#endif  // SCROLLS_GRAPH_HPP
