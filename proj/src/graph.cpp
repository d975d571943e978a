#include "opgraph/graph.hpp"

#include <map>
#include <tuple>
#include <unordered_map>

#include "opgraph/strings.hpp"

namespace opgraph::graph {

std::string_view color_for(extractor::ElementLabel label) {
  switch (label) {
    case extractor::ElementLabel::Activity: return "red";
    case extractor::ElementLabel::Duration: return "blue";
    case extractor::ElementLabel::Resource: return "yellow";
    case extractor::ElementLabel::Other: return "grey";
  }
  return "grey";
}

std::string_view to_string(Severity severity) {
  return severity == Severity::Warning ? "warning" : "info";
}

std::optional<std::size_t> OperationGraph::find_node(std::string_view surface) const {
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (nodes[i].surface == surface) return i;
  }
  return std::nullopt;
}

OperationGraph build_graph(const std::vector<extractor::SentenceExtraction>& extractions,
                           const BuildOptions& options,
                           std::vector<Diagnostic>* warnings) {
  OperationGraph g;
  std::unordered_map<std::string, std::size_t> node_by_key;
  std::map<std::tuple<std::size_t, std::size_t, std::string>, std::size_t> edge_by_triple;

  const auto key_of = [&](std::string_view surface) {
    return options.normalize_case ? ascii_lower(surface) : std::string(surface);
  };

  const auto intern = [&](const extractor::Element& element, std::size_t sentence_index) {
    std::string key = key_of(element.surface);
    if (const auto it = node_by_key.find(key); it != node_by_key.end()) {
      if (g.nodes[it->second].label != element.label && warnings != nullptr) {
        warnings->push_back(Diagnostic{
            Severity::Warning, "label-conflict",
            "surface \"" + element.surface + "\" classified as " +
                std::string(extractor::to_string(element.label)) + " but first seen as " +
                std::string(extractor::to_string(g.nodes[it->second].label)),
            "node:" + g.nodes[it->second].surface});
      }
      return it->second;
    }
    g.nodes.push_back(GraphNode{element.surface, element.label, sentence_index});
    node_by_key.emplace(std::move(key), g.nodes.size() - 1);
    return g.nodes.size() - 1;
  };

  for (const extractor::SentenceExtraction& extraction : extractions) {
    for (const extractor::Element& element : extraction.elements) {
      intern(element, extraction.sentence_index);
    }
    for (const extractor::SentenceRelation& rel : extraction.relations) {
      const auto from_it = node_by_key.find(key_of(rel.from));
      const auto to_it = node_by_key.find(key_of(rel.to));
      if (from_it == node_by_key.end() || to_it == node_by_key.end()) {
        if (warnings != nullptr) {
          warnings->push_back(Diagnostic{Severity::Warning, "dangling-relation",
                                         "relation endpoint is not an extracted element",
                                         "sentence:" + std::to_string(rel.sentence_index)});
        }
        continue;
      }
      auto triple = std::make_tuple(from_it->second, to_it->second, rel.phrase);
      if (const auto it = edge_by_triple.find(triple); it != edge_by_triple.end()) {
        auto& indices = g.edges[it->second].sentence_indices;
        if (indices.empty() || indices.back() != rel.sentence_index) {
          indices.push_back(rel.sentence_index);
        }
      } else {
        g.edges.push_back(GraphEdge{from_it->second, to_it->second, rel.phrase,
                                    {rel.sentence_index}});
        edge_by_triple.emplace(std::move(triple), g.edges.size() - 1);
      }
    }
  }
  return g;
}

std::vector<Diagnostic> validate(const OperationGraph& graph) {
  std::vector<Diagnostic> out;

  std::vector<bool> touched(graph.nodes.size(), false);
  for (const GraphEdge& edge : graph.edges) {
    touched[edge.from] = true;
    touched[edge.to] = true;
  }
  for (std::size_t i = 0; i < graph.nodes.size(); ++i) {
    if (!touched[i]) {
      out.push_back(Diagnostic{Severity::Warning, "isolated-node",
                               "node participates in no relation",
                               "node:" + graph.nodes[i].surface});
    }
  }

  for (std::size_t i = 0; i < graph.nodes.size(); ++i) {
    if (graph.nodes[i].label != extractor::ElementLabel::Activity) continue;
    bool has_duration = false;
    bool has_resource = false;
    for (const GraphEdge& edge : graph.edges) {
      if (edge.from == i && edge.phrase == "takes" &&
          graph.nodes[edge.to].label == extractor::ElementLabel::Duration) {
        has_duration = true;
      }
      if (edge.to == i && graph.nodes[edge.from].label == extractor::ElementLabel::Resource) {
        has_resource = true;
      }
    }
    if (!has_duration) {
      out.push_back(Diagnostic{Severity::Info, "activity-without-duration",
                               "activity has no \"takes\" relation to a duration",
                               "node:" + graph.nodes[i].surface});
    }
    if (!has_resource) {
      out.push_back(Diagnostic{Severity::Info, "activity-without-resource",
                               "activity has no incoming relation from a resource",
                               "node:" + graph.nodes[i].surface});
    }
  }
  return out;
}

}  // namespace opgraph::graph
