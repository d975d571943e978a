#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "opgraph/lexicon.hpp"

namespace opgraph::text {

enum class PosCategory {
  Determiner,
  Cardinal,
  Noun,
  Verb,
  Aux,
  Preposition,
  InfinitiveMarker,
  UnitNumber,
  Punct,
};

std::string_view to_string(PosCategory pos);

// One token of a sentence. Offsets are byte offsets into the sentence
// string, so sentence.substr(start, end - start) == surface.
struct Token {
  std::string surface;
  std::size_t start = 0;
  std::size_t end = 0;

  friend bool operator==(const Token&, const Token&) = default;
};

struct TaggedToken {
  Token token;
  PosCategory pos = PosCategory::Noun;

  friend bool operator==(const TaggedToken&, const TaggedToken&) = default;
};

// Optional "be"-form auxiliary, main verb, optional preposition glued to
// the verb ("is followed by", "precedes before", "takes").
struct VerbGroup {
  std::optional<Token> aux;
  Token main;
  std::optional<Token> prep;
};

// A contiguous noun-phrase chunk. object_index is 0 for the subject and
// the 1-based object position otherwise.
struct NpChunk {
  std::vector<TaggedToken> tokens;
  std::size_t object_index = 0;

  bool is_subject() const { return object_index == 0; }
};

struct ClauseParse {
  std::size_t sentence_index = 0;
  std::vector<NpChunk> nps;
  std::vector<VerbGroup> vgs;
};

struct ParseError {
  std::size_t sentence_index = 0;
  std::string reason;
  // Byte span of the offending token within the sentence; collapses to
  // the end of the last token when input ended early.
  std::size_t start = 0;
  std::size_t end = 0;
};

using ParseResult = std::variant<ClauseParse, ParseError>;

// Splits text into sentences at '.', '!' or '?' followed by whitespace and
// an uppercase letter, or at end of input. A period between two digits is
// a decimal point, never a boundary. Sentences come back trimmed.
std::vector<std::string> segment_sentences(std::string_view text);

// Whitespace split with leading/trailing punctuation peeled off into
// their own tokens. Hyphens break compounds apart ("front-end" -> "front",
// "end"); decimal numbers and digit+unit tokens ("8900m³") stay whole.
std::vector<Token> tokenize(std::string_view sentence);

// Total lexicon-driven tagging. Verb-lexicon inflections are disambiguated
// by position: after a determiner, cardinal or preposition (or at the start
// of the sentence) they read as nouns, otherwise as verbs.
std::vector<TaggedToken> tag(const std::vector<Token>& tokens, const Lexicon& lexicon);

// Deterministic left-to-right chunker for the controlled clause grammar
//   S  -> NP VG NP (TO VG NP?)? '.'
//   NP -> Determiner? (Cardinal | Noun | UnitNumber)* (Noun | UnitNumber)
//   VG -> Aux? Verb Preposition?
// A trailing "to VERB" without an object contributes no VerbGroup, so the
// returned vgs always pair one-to-one with the object chunks.
ParseResult parse_clause(const std::vector<TaggedToken>& tagged, std::size_t sentence_index);

}  // namespace opgraph::text
