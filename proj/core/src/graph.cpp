#include "scrolls/graph.hpp"

#include <sstream>

#include "scrolls/error.hpp"
#include "scrolls/sequences.hpp"
#include "scrolls/series.hpp"

namespace scrolls {

std::vector<ScrollType> partitions(int n) {
  std::vector<ScrollType> out;
  for (auto& p : integer_partitions(n)) out.emplace_back(std::move(p));
  return out;
}

SpecializationGraph specialization_graph(int codim) {
  if (codim < 1) throw Error(Errc::InvalidArgument, "codimension must be at least 1");
  SpecializationGraph g;
  g.codim = codim;
  g.nodes = partitions(codim + 1);
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    const ScrollType& a = g.nodes[i];
    if (a.dim() < 2) continue;
    const ScrollType generic = generic_section(a);
    for (std::size_t j = 0; j < g.nodes.size(); ++j) {
      const ScrollType& b = g.nodes[j];
      if (b.dim() + 1 != a.dim()) continue;
      if (check_section_conditions(a, b).valid) g.edges.push_back({i, j, b == generic});
    }
  }
  return g;
}

std::string node_label(const ScrollType& a) {
  std::ostringstream out;
  out << '(';
  bool first = true;
  for (std::size_t i = 0; i < a.size();) {
    std::size_t j = i;
    while (j < a.size() && a[j] == a[i]) ++j;
    if (!first) out << ',';
    first = false;
    out << a[i];
    if (j - i > 1) out << '^' << j - i;
    i = j;
  }
  out << ')';
  return out.str();
}

std::string emit_dot(const SpecializationGraph& graph) {
  std::ostringstream out;
  out << "digraph specialization_codim" << graph.codim << " {\n";
  out << "  rankdir=TB;\n";
  out << "  node [shape=plaintext];\n";
  for (std::size_t i = 0; i < graph.nodes.size(); ++i)
    out << "  n" << i << " [label=\"" << node_label(graph.nodes[i]) << "\", dim="
        << graph.nodes[i].dim() << "];\n";
  for (const auto& e : graph.edges) {
    out << "  n" << e.from << " -> n" << e.to;
    if (e.generic)
      out << " [style=dashed, color=red, generic=true];\n";
    else
      out << " [style=solid, color=blue, generic=false];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace scrolls
