#include "opgraph/exporters.hpp"

#include <sstream>
#include <unordered_set>

#include "json.hpp"

namespace opgraph::io {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string dot_escape(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (const char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

// Surface with every non-alphanumeric codepoint replaced by '_'; prefixed
// when the result would not be a bare DOT identifier.
std::string dot_identifier(std::string_view surface) {
  std::string id;
  id.reserve(surface.size());
  for (std::size_t i = 0; i < surface.size();) {
    const unsigned char b = static_cast<unsigned char>(surface[i]);
    if (b < 0x80) {
      const bool alnum = (b >= '0' && b <= '9') || (b >= 'a' && b <= 'z') || (b >= 'A' && b <= 'Z');
      id.push_back(alnum ? surface[i] : '_');
      ++i;
    } else {
      id.push_back('_');
      ++i;
      while (i < surface.size() && (static_cast<unsigned char>(surface[i]) & 0xC0) == 0x80) ++i;
    }
  }
  if (id.empty() || (id.front() >= '0' && id.front() <= '9')) id.insert(id.begin(), '_');
  return id;
}

std::vector<std::string> dot_identifiers(const graph::OperationGraph& g) {
  std::vector<std::string> ids;
  ids.reserve(g.nodes.size());
  std::unordered_set<std::string> used;
  for (const graph::GraphNode& node : g.nodes) {
    const std::string base = dot_identifier(node.surface);
    std::string id = base;
    for (int k = 2; !used.insert(id).second; ++k) {
      id = base + "_" + std::to_string(k);
    }
    ids.push_back(std::move(id));
  }
  return ids;
}

std::string xml_escape(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (const char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

std::string csv_field(std::string_view s) {
  const bool needs_quotes = s.find_first_of(",\"\r\n") != std::string_view::npos;
  if (!needs_quotes) return std::string(s);
  std::string out = "\"";
  for (const char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::string export_json(const ExtractionDocument& doc) {
  ordered_json j;
  j["version"] = doc.version;

  j["sentences"] = ordered_json::array();
  for (const SentenceRecord& s : doc.sentences) {
    j["sentences"].push_back({{"index", s.index}, {"text", s.text}, {"parse_ok", s.parse_ok}});
  }

  j["elements"] = ordered_json::array();
  for (const extractor::Element& e : doc.elements) {
    j["elements"].push_back({{"surface", e.surface}, {"label", extractor::to_string(e.label)}});
  }

  j["relations"] = ordered_json::array();
  for (const extractor::SentenceRelation& r : doc.relations) {
    j["relations"].push_back({{"from", r.from},
                              {"to", r.to},
                              {"phrase", r.phrase},
                              {"sentence_index", r.sentence_index}});
  }

  ordered_json nodes = ordered_json::array();
  for (const graph::GraphNode& n : doc.graph.nodes) {
    nodes.push_back({{"surface", n.surface},
                     {"label", extractor::to_string(n.label)},
                     {"color", graph::color_for(n.label)},
                     {"first_sentence_index", n.first_sentence_index}});
  }
  ordered_json edges = ordered_json::array();
  for (const graph::GraphEdge& e : doc.graph.edges) {
    edges.push_back({{"from", doc.graph.nodes[e.from].surface},
                     {"to", doc.graph.nodes[e.to].surface},
                     {"phrase", e.phrase},
                     {"sentence_indices", e.sentence_indices}});
  }
  j["graph"] = {{"nodes", std::move(nodes)}, {"edges", std::move(edges)}};

  j["diagnostics"] = ordered_json::array();
  for (const graph::Diagnostic& d : doc.diagnostics) {
    j["diagnostics"].push_back({{"severity", graph::to_string(d.severity)},
                                {"code", d.code},
                                {"message", d.message},
                                {"subject", d.subject}});
  }
  return j.dump(2) + "\n";
}

std::string export_dot(const graph::OperationGraph& graph) {
  const std::vector<std::string> ids = dot_identifiers(graph);
  std::ostringstream out;
  out << "digraph operation {\n";
  for (std::size_t i = 0; i < graph.nodes.size(); ++i) {
    const graph::GraphNode& node = graph.nodes[i];
    out << "  " << ids[i] << " [label=\"" << dot_escape(node.surface)
        << "\", style=filled, fillcolor=" << graph::color_for(node.label) << "];\n";
  }
  if (!graph.edges.empty()) out << "\n";
  for (const graph::GraphEdge& edge : graph.edges) {
    out << "  " << ids[edge.from] << " -> " << ids[edge.to] << " [label=\""
        << dot_escape(edge.phrase) << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

std::string export_graphml(const graph::OperationGraph& graph) {
  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\">\n";
  out << "  <key id=\"label\" for=\"node\" attr.name=\"label\" attr.type=\"string\"/>\n";
  out << "  <key id=\"category\" for=\"node\" attr.name=\"category\" attr.type=\"string\"/>\n";
  out << "  <key id=\"color\" for=\"node\" attr.name=\"color\" attr.type=\"string\"/>\n";
  out << "  <key id=\"phrase\" for=\"edge\" attr.name=\"phrase\" attr.type=\"string\"/>\n";
  out << "  <graph id=\"operation\" edgedefault=\"directed\">\n";
  for (std::size_t i = 0; i < graph.nodes.size(); ++i) {
    const graph::GraphNode& node = graph.nodes[i];
    out << "    <node id=\"n" << i << "\">\n";
    out << "      <data key=\"label\">" << xml_escape(node.surface) << "</data>\n";
    out << "      <data key=\"category\">" << extractor::to_string(node.label) << "</data>\n";
    out << "      <data key=\"color\">" << graph::color_for(node.label) << "</data>\n";
    out << "    </node>\n";
  }
  for (std::size_t i = 0; i < graph.edges.size(); ++i) {
    const graph::GraphEdge& edge = graph.edges[i];
    out << "    <edge id=\"e" << i << "\" source=\"n" << edge.from << "\" target=\"n"
        << edge.to << "\">\n";
    out << "      <data key=\"phrase\">" << xml_escape(edge.phrase) << "</data>\n";
    out << "    </edge>\n";
  }
  out << "  </graph>\n";
  out << "</graphml>\n";
  return out.str();
}

CsvTables export_csv(const ExtractionDocument& doc) {
  CsvTables tables;
  tables.elements = "Element,Label\n";
  for (const graph::GraphNode& node : doc.graph.nodes) {
    tables.elements += csv_field(node.surface);
    tables.elements += ',';
    tables.elements += extractor::to_string(node.label);
    tables.elements += '\n';
  }
  tables.relations = "Element (From),Element (To),Relation\n";
  for (const graph::GraphEdge& edge : doc.graph.edges) {
    tables.relations += csv_field(doc.graph.nodes[edge.from].surface);
    tables.relations += ',';
    tables.relations += csv_field(doc.graph.nodes[edge.to].surface);
    tables.relations += ',';
    tables.relations += csv_field(edge.phrase);
    tables.relations += '\n';
  }
  return tables;
}

}  // namespace opgraph::io
