#include "opgraph/document.hpp"

namespace opgraph::io {

namespace {

std::string describe(const text::ParseError& error) {
  return "parse error in sentence " + std::to_string(error.sentence_index) + ": " +
         error.reason;
}

}  // namespace

StrictParseError::StrictParseError(text::ParseError error)
    : std::runtime_error(describe(error)), error_(std::move(error)) {}

ExtractionDocument run_pipeline(std::string_view input, const PipelineOptions& options) {
  ExtractionDocument doc;
  std::vector<extractor::SentenceExtraction> extractions;

  const std::vector<std::string> sentences = text::segment_sentences(input);
  for (std::size_t i = 0; i < sentences.size(); ++i) {
    const std::string& sentence = sentences[i];
    const auto tokens = text::tokenize(sentence);
    const auto tagged = text::tag(tokens, options.lexicon);
    auto result = text::parse_clause(tagged, i);
    if (auto* error = std::get_if<text::ParseError>(&result)) {
      if (options.strict) throw StrictParseError(std::move(*error));
      doc.diagnostics.push_back(graph::Diagnostic{
          graph::Severity::Warning, "parse-error",
          error->reason + " (characters " + std::to_string(error->start) + ".." +
              std::to_string(error->end) + ")",
          "sentence:" + std::to_string(i)});
      doc.sentences.push_back(SentenceRecord{i, sentence, false});
      continue;
    }
    extractions.push_back(
        extractor::extract_sentence(std::get<text::ClauseParse>(result), options.lexicon));
    doc.sentences.push_back(SentenceRecord{i, sentence, true});
  }

  std::vector<graph::Diagnostic> build_warnings;
  doc.graph = graph::build_graph(extractions, {options.normalize_case}, &build_warnings);
  for (auto& warning : build_warnings) doc.diagnostics.push_back(std::move(warning));
  for (auto& finding : graph::validate(doc.graph)) doc.diagnostics.push_back(std::move(finding));

  doc.elements.reserve(doc.graph.nodes.size());
  for (const graph::GraphNode& node : doc.graph.nodes) {
    doc.elements.push_back(extractor::Element{node.surface, node.label});
  }
  for (const extractor::SentenceExtraction& extraction : extractions) {
    doc.relations.insert(doc.relations.end(), extraction.relations.begin(),
                         extraction.relations.end());
  }
  return doc;
}

}  // namespace opgraph::io
