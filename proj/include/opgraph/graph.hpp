#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "opgraph/extractor.hpp"

namespace opgraph::graph {

// Fixed category colors: Activity -> red, Duration -> blue,
// Resource -> yellow, Other -> grey.
std::string_view color_for(extractor::ElementLabel label);

enum class Severity { Warning, Info };

std::string_view to_string(Severity severity);

// Advisory finding attached to a node, edge or sentence. Diagnostics never
// alter graph content.
struct Diagnostic {
  Severity severity = Severity::Info;
  std::string code;
  std::string message;
  std::string subject;  // "node:<surface>" or "sentence:<index>"
};

struct GraphNode {
  std::string surface;
  extractor::ElementLabel label = extractor::ElementLabel::Other;
  std::size_t first_sentence_index = 0;
};

struct GraphEdge {
  std::size_t from = 0;  // indices into OperationGraph::nodes
  std::size_t to = 0;
  std::string phrase;
  std::vector<std::size_t> sentence_indices;
};

// Deduplicated nodes and labeled directed edges merged across sentences,
// both in first-occurrence order.
struct OperationGraph {
  std::vector<GraphNode> nodes;
  std::vector<GraphEdge> edges;

  std::optional<std::size_t> find_node(std::string_view surface) const;
};

struct BuildOptions {
  // Deduplicate nodes by case-folded surface instead of the exact string.
  bool normalize_case = false;
};

// Folds ordered per-sentence extractions into one graph. Nodes keep the
// surface and label of their first occurrence; repeated (from, to, phrase)
// triples merge into one edge that accumulates sentence indices. Label
// conflicts between occurrences are reported through `warnings` when given.
OperationGraph build_graph(const std::vector<extractor::SentenceExtraction>& extractions,
                           const BuildOptions& options = {},
                           std::vector<Diagnostic>* warnings = nullptr);

// Checks the finished graph: Warning for isolated nodes, Info for activity
// nodes without a "takes" edge to a duration and for activity nodes with
// no incoming resource edge.
std::vector<Diagnostic> validate(const OperationGraph& graph);

}  // namespace opgraph::graph
