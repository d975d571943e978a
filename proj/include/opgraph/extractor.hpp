#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "opgraph/lexicon.hpp"
#include "opgraph/text_pipeline.hpp"

namespace opgraph::extractor {

enum class ElementLabel { Activity, Duration, Resource, Other };

std::string_view to_string(ElementLabel label);
std::optional<ElementLabel> label_from_string(std::string_view name);

// A subject/object chunk's surface text with modifiers kept and the
// leading determiner removed.
struct Element {
  std::string surface;
  ElementLabel label = ElementLabel::Other;

  friend bool operator==(const Element&, const Element&) = default;
};

// Directed (from, to, phrase) triple extracted from one sentence.
struct SentenceRelation {
  std::string from;
  std::string to;
  std::string phrase;
  std::size_t sentence_index = 0;

  friend bool operator==(const SentenceRelation&, const SentenceRelation&) = default;
};

struct SentenceExtraction {
  std::size_t sentence_index = 0;
  std::vector<Element> elements;    // textual order
  std::vector<SentenceRelation> relations;
};

// Chunk text with the leading determiner dropped and token surfaces joined
// by single spaces, original case kept. Throws std::invalid_argument when
// nothing remains after determiner removal.
std::string element_surface(const text::NpChunk& chunk);

// Word-level label classification, precedence Activity > Duration >
// Resource > Other: "activity"/"activities" wins, then "min", then a
// cardinal word or pure-numeral token. Matching is case-insensitive and
// exact per word ("8900m³" contains neither the word "min" nor a numeral).
// Throws std::invalid_argument on an empty surface.
ElementLabel classify(std::string_view surface, const Lexicon& lexicon = Lexicon::defaults());

// Verb surface with the auxiliary dropped and the trailing preposition
// appended ("is followed by" -> "followed by").
std::string relation_phrase(const text::VerbGroup& vg);

// Applies the pattern rules to one clause parse: every chunk becomes a
// labeled element; each object is linked from its textual predecessor with
// the verb group between them. Single-chunk parses yield no relations.
SentenceExtraction extract_sentence(const text::ClauseParse& parse,
                                    const Lexicon& lexicon = Lexicon::defaults());

}  // namespace opgraph::extractor
