#pragma once

#include <string>

#include "opgraph/document.hpp"
#include "opgraph/graph.hpp"

namespace opgraph::io {

// Canonical JSON: fixed key order, 2-space indentation, trailing newline;
// byte-identical across runs for identical input.
std::string export_json(const ExtractionDocument& doc);

// Graphviz digraph with one filled node statement per node (fillcolor from
// the category) and one labeled edge statement per edge. Identifiers are
// the surface with non-alphanumeric characters replaced by '_', prefixed
// with '_' when needed and disambiguated with a numeric suffix.
std::string export_dot(const graph::OperationGraph& graph);

// GraphML with declared node keys label/category/color and edge key phrase.
std::string export_graphml(const graph::OperationGraph& graph);

struct CsvTables {
  std::string elements;   // header: Element,Label
  std::string relations;  // header: Element (From),Element (To),Relation
};

// RFC 4180-quoted tables in graph order.
CsvTables export_csv(const ExtractionDocument& doc);

}  // namespace opgraph::io
