#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "opgraph/extractor.hpp"
#include "opgraph/graph.hpp"
#include "opgraph/lexicon.hpp"
#include "opgraph/text_pipeline.hpp"

namespace opgraph::io {

inline constexpr std::string_view kSchemaVersion = "1.0";

struct SentenceRecord {
  std::size_t index = 0;
  std::string text;
  bool parse_ok = false;
};

// Everything one run produces: the segmented sentences, the deduplicated
// elements (one per graph node, graph order), every relation occurrence in
// sentence order, the merged graph and all diagnostics.
struct ExtractionDocument {
  std::string version{kSchemaVersion};
  std::vector<SentenceRecord> sentences;
  std::vector<extractor::Element> elements;
  std::vector<extractor::SentenceRelation> relations;
  graph::OperationGraph graph;
  std::vector<graph::Diagnostic> diagnostics;
};

struct PipelineOptions {
  bool strict = false;
  bool normalize_case = false;
  Lexicon lexicon = Lexicon::defaults();
};

// Raised in strict mode when a sentence does not match the clause grammar.
class StrictParseError : public std::runtime_error {
 public:
  explicit StrictParseError(text::ParseError error);

  const text::ParseError& error() const { return error_; }

 private:
  text::ParseError error_;
};

// Segments, tokenizes, tags, parses and extracts the whole input, then
// builds and validates the graph. Lenient mode turns parse failures into
// "parse-error" diagnostics and skips the sentence; strict mode throws
// StrictParseError at the first failure.
ExtractionDocument run_pipeline(std::string_view input, const PipelineOptions& options = {});

}  // namespace opgraph::io
