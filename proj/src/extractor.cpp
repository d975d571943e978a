#include "opgraph/extractor.hpp"

#include <stdexcept>

#include "opgraph/strings.hpp"

namespace opgraph::extractor {

std::string_view to_string(ElementLabel label) {
  switch (label) {
    case ElementLabel::Activity: return "Activity";
    case ElementLabel::Duration: return "Duration";
    case ElementLabel::Resource: return "Resource";
    case ElementLabel::Other: return "Other";
  }
  return "Other";
}

std::optional<ElementLabel> label_from_string(std::string_view name) {
  if (name == "Activity") return ElementLabel::Activity;
  if (name == "Duration") return ElementLabel::Duration;
  if (name == "Resource") return ElementLabel::Resource;
  if (name == "Other") return ElementLabel::Other;
  return std::nullopt;
}

std::string element_surface(const text::NpChunk& chunk) {
  std::size_t first = 0;
  if (!chunk.tokens.empty() && chunk.tokens.front().pos == text::PosCategory::Determiner) {
    first = 1;
  }
  if (first >= chunk.tokens.size()) {
    throw std::invalid_argument("empty chunk: nothing remains after determiner removal");
  }
  std::string surface;
  for (std::size_t i = first; i < chunk.tokens.size(); ++i) {
    if (!surface.empty()) surface += ' ';
    surface += chunk.tokens[i].token.surface;
  }
  return surface;
}

ElementLabel classify(std::string_view surface, const Lexicon& lexicon) {
  const auto words = split_words(surface);
  if (words.empty()) throw std::invalid_argument("cannot classify an empty surface");

  bool duration = false;
  bool resource = false;
  for (const std::string_view word : words) {
    const std::string low = ascii_lower(word);
    if (low == "activity" || low == "activities") return ElementLabel::Activity;
    if (low == "min") duration = true;
    if (lexicon.is_cardinal_word(low) || is_pure_numeral(low)) resource = true;
  }
  if (duration) return ElementLabel::Duration;
  if (resource) return ElementLabel::Resource;
  return ElementLabel::Other;
}

std::string relation_phrase(const text::VerbGroup& vg) {
  std::string phrase = vg.main.surface;
  if (vg.prep) {
    phrase += ' ';
    phrase += vg.prep->surface;
  }
  return phrase;
}

SentenceExtraction extract_sentence(const text::ClauseParse& parse, const Lexicon& lexicon) {
  SentenceExtraction out;
  out.sentence_index = parse.sentence_index;
  for (const text::NpChunk& np : parse.nps) {
    std::string surface = element_surface(np);
    const ElementLabel label = classify(surface, lexicon);
    out.elements.push_back(Element{std::move(surface), label});
  }
  const std::size_t objects = out.elements.empty() ? 0 : out.elements.size() - 1;
  const std::size_t pairs = std::min(parse.vgs.size(), objects);
  for (std::size_t k = 0; k < pairs; ++k) {
    const Element& from = out.elements[k];
    const Element& to = out.elements[k + 1];
    if (from.surface == to.surface) continue;  // relations never self-loop
    out.relations.push_back(SentenceRelation{from.surface, to.surface,
                                             relation_phrase(parse.vgs[k]),
                                             parse.sentence_index});
  }
  return out;
}

}  // namespace opgraph::extractor
