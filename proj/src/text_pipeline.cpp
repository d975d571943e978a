#include "opgraph/text_pipeline.hpp"

#include <algorithm>
#include <cctype>

#include "opgraph/strings.hpp"

namespace opgraph::text {

namespace {

bool is_ascii_digit(char c) { return c >= '0' && c <= '9'; }
bool is_ascii_upper(char c) { return c >= 'A' && c <= 'Z'; }
bool is_space_byte(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

// Decodes the UTF-8 codepoint starting at pos and stores its byte length.
// Malformed bytes decode as single latin-1 characters so bad input can
// never stall the scanner.
char32_t decode_codepoint(std::string_view s, std::size_t pos, std::size_t& length) {
  const auto byte = [&](std::size_t i) { return static_cast<unsigned char>(s[i]); };
  const unsigned char b0 = byte(pos);
  length = 1;
  if (b0 < 0x80) return b0;

  int extra = 0;
  char32_t cp = 0;
  if ((b0 & 0xE0) == 0xC0) {
    extra = 1;
    cp = b0 & 0x1F;
  } else if ((b0 & 0xF0) == 0xE0) {
    extra = 2;
    cp = b0 & 0x0F;
  } else if ((b0 & 0xF8) == 0xF0) {
    extra = 3;
    cp = b0 & 0x07;
  } else {
    return b0;
  }
  if (pos + static_cast<std::size_t>(extra) >= s.size()) return b0;
  for (int i = 1; i <= extra; ++i) {
    const unsigned char bi = byte(pos + static_cast<std::size_t>(i));
    if ((bi & 0xC0) != 0x80) return b0;
    cp = (cp << 6) | (bi & 0x3F);
  }
  length = static_cast<std::size_t>(extra) + 1;
  return cp;
}

bool is_punct_codepoint(char32_t cp) {
  if (cp < 128) return std::ispunct(static_cast<int>(cp)) != 0;
  switch (cp) {
    case 0x2013:  // en dash
    case 0x2014:  // em dash
    case 0x2018:  // left single quote
    case 0x2019:  // right single quote
    case 0x201C:  // left double quote
    case 0x201D:  // right double quote
    case 0x2026:  // ellipsis
      return true;
    default:
      // superscripts and other non-ASCII letters count as word characters
      return false;
  }
}

bool all_punct(std::string_view surface) {
  std::size_t pos = 0;
  bool any = false;
  while (pos < surface.size()) {
    std::size_t len = 0;
    const char32_t cp = decode_codepoint(surface, pos, len);
    if (!is_punct_codepoint(cp)) return false;
    any = true;
    pos += len;
  }
  return any;
}

// Begins with a digit, ends with a non-digit ("8900m³"); pure numerals are
// handled before this check.
bool is_unit_number(std::string_view surface) {
  if (surface.empty()) return false;
  return is_ascii_digit(surface.front()) && !is_ascii_digit(surface.back());
}

}  // namespace

std::string_view to_string(PosCategory pos) {
  switch (pos) {
    case PosCategory::Determiner: return "Determiner";
    case PosCategory::Cardinal: return "Cardinal";
    case PosCategory::Noun: return "Noun";
    case PosCategory::Verb: return "Verb";
    case PosCategory::Aux: return "Aux";
    case PosCategory::Preposition: return "Preposition";
    case PosCategory::InfinitiveMarker: return "InfinitiveMarker";
    case PosCategory::UnitNumber: return "UnitNumber";
    case PosCategory::Punct: return "Punct";
  }
  return "Noun";
}

std::vector<std::string> segment_sentences(std::string_view text) {
  std::vector<std::string> sentences;
  std::size_t start = 0;

  const auto flush = [&](std::size_t end) {
    std::size_t b = start;
    std::size_t e = end;
    while (b < e && is_space_byte(text[b])) ++b;
    while (e > b && is_space_byte(text[e - 1])) --e;
    if (e > b) sentences.emplace_back(text.substr(b, e - b));
    start = end;
  };

  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c != '.' && c != '!' && c != '?') continue;
    if (c == '.' && i > 0 && i + 1 < text.size() && is_ascii_digit(text[i - 1]) &&
        is_ascii_digit(text[i + 1])) {
      continue;  // decimal point
    }
    std::size_t j = i + 1;
    while (j < text.size() && is_space_byte(text[j])) ++j;
    const bool boundary = j == text.size() || (j > i + 1 && is_ascii_upper(text[j]));
    if (boundary) flush(i + 1);
  }
  flush(text.size());
  return sentences;
}

std::vector<Token> tokenize(std::string_view sentence) {
  std::vector<Token> tokens;

  const auto push = [&](std::size_t b, std::size_t e) {
    if (e > b) tokens.push_back(Token{std::string(sentence.substr(b, e - b)), b, e});
  };

  std::size_t i = 0;
  while (i < sentence.size()) {
    while (i < sentence.size() && is_space_byte(sentence[i])) ++i;
    if (i >= sentence.size()) break;
    const std::size_t run_begin = i;
    while (i < sentence.size() && !is_space_byte(sentence[i])) ++i;
    const std::size_t run_end = i;

    struct Cp {
      char32_t cp;
      std::size_t begin;
      std::size_t end;
    };
    std::vector<Cp> cps;
    for (std::size_t p = run_begin; p < run_end;) {
      std::size_t len = 0;
      const char32_t cp = decode_codepoint(sentence, p, len);
      cps.push_back({cp, p, p + len});
      p += len;
    }

    std::size_t lo = 0;
    std::size_t hi = cps.size();
    while (lo < hi && is_punct_codepoint(cps[lo].cp)) ++lo;
    while (hi > lo && is_punct_codepoint(cps[hi - 1].cp)) --hi;

    for (std::size_t k = 0; k < lo; ++k) push(cps[k].begin, cps[k].end);

    // core: split compounds on hyphens, drop the hyphen itself
    std::size_t part = lo;
    for (std::size_t k = lo; k < hi; ++k) {
      if (cps[k].cp == U'-') {
        if (k > part) push(cps[part].begin, cps[k].begin);
        part = k + 1;
      }
    }
    if (hi > part) push(cps[part].begin, cps[hi - 1].end);

    for (std::size_t k = hi; k < cps.size(); ++k) push(cps[k].begin, cps[k].end);
  }
  return tokens;
}

std::vector<TaggedToken> tag(const std::vector<Token>& tokens, const Lexicon& lexicon) {
  std::vector<TaggedToken> tagged;
  tagged.reserve(tokens.size());
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const Token& tok = tokens[i];
    const std::string low = ascii_lower(tok.surface);
    PosCategory pos;
    if (all_punct(tok.surface)) {
      pos = PosCategory::Punct;
    } else if (lexicon.is_determiner(low)) {
      pos = PosCategory::Determiner;
    } else if (lexicon.is_aux(low)) {
      pos = PosCategory::Aux;
    } else if (low == "to") {
      const bool before_verb =
          i + 1 < tokens.size() && lexicon.is_verb_form(tokens[i + 1].surface);
      pos = before_verb ? PosCategory::InfinitiveMarker : PosCategory::Preposition;
    } else if (lexicon.is_preposition(low)) {
      pos = PosCategory::Preposition;
    } else if (lexicon.is_cardinal_word(low) || is_pure_numeral(low)) {
      pos = PosCategory::Cardinal;
    } else if (is_unit_number(tok.surface)) {
      pos = PosCategory::UnitNumber;
    } else if (lexicon.is_verb_form(low)) {
      // Positional disambiguation: an inflection inside a noun phrase
      // (after a determiner/cardinal, as a bare head after a preposition,
      // or at the start of the sentence) reads as a noun.
      const bool np_position = tagged.empty() ||
                               tagged.back().pos == PosCategory::Determiner ||
                               tagged.back().pos == PosCategory::Cardinal ||
                               tagged.back().pos == PosCategory::Preposition;
      pos = np_position ? PosCategory::Noun : PosCategory::Verb;
    } else {
      pos = PosCategory::Noun;
    }
    tagged.push_back(TaggedToken{tok, pos});
  }
  return tagged;
}

ParseResult parse_clause(const std::vector<TaggedToken>& tagged, std::size_t sentence_index) {
  ClauseParse parse;
  parse.sentence_index = sentence_index;
  const std::size_t n = tagged.size();
  std::size_t pos = 0;

  const auto error_at = [&](std::string reason, std::size_t at) {
    ParseError err;
    err.sentence_index = sentence_index;
    err.reason = std::move(reason);
    if (at < n) {
      err.start = tagged[at].token.start;
      err.end = tagged[at].token.end;
    } else if (n > 0) {
      err.start = err.end = tagged[n - 1].token.end;
    }
    return err;
  };

  const auto np_start = [&](std::size_t at) {
    if (at >= n) return false;
    const PosCategory p = tagged[at].pos;
    return p == PosCategory::Determiner || p == PosCategory::Cardinal ||
           p == PosCategory::Noun || p == PosCategory::UnitNumber;
  };

  // NpChunk on success, ParseError otherwise
  const auto parse_np = [&](std::size_t object_index,
                            const char* what) -> std::variant<NpChunk, ParseError> {
    NpChunk chunk;
    chunk.object_index = object_index;
    if (pos < n && tagged[pos].pos == PosCategory::Determiner) {
      chunk.tokens.push_back(tagged[pos++]);
    }
    while (pos < n && (tagged[pos].pos == PosCategory::Cardinal ||
                       tagged[pos].pos == PosCategory::Noun ||
                       tagged[pos].pos == PosCategory::UnitNumber)) {
      chunk.tokens.push_back(tagged[pos++]);
    }
    if (chunk.tokens.empty()) return error_at(std::string("expected ") + what, pos);
    const PosCategory head = chunk.tokens.back().pos;
    if (head != PosCategory::Noun && head != PosCategory::UnitNumber) {
      return error_at("noun phrase has no nominal head", pos - 1);
    }
    return chunk;
  };

  const auto parse_vg = [&]() -> std::variant<VerbGroup, ParseError> {
    VerbGroup vg;
    if (pos < n && tagged[pos].pos == PosCategory::Aux) {
      vg.aux = tagged[pos++].token;
    }
    if (pos >= n || tagged[pos].pos != PosCategory::Verb) {
      return error_at(vg.aux ? "expected a main verb after the auxiliary"
                             : "expected a verb group",
                      pos);
    }
    vg.main = tagged[pos++].token;
    if (pos < n && tagged[pos].pos == PosCategory::Preposition) {
      vg.prep = tagged[pos++].token;
    }
    return vg;
  };

  const bool only_punct =
      std::all_of(tagged.begin(), tagged.end(),
                  [](const TaggedToken& t) { return t.pos == PosCategory::Punct; });
  if (n == 0 || only_punct) return error_at("empty sentence", 0);

  // subject
  {
    auto np = parse_np(0, "a noun phrase");
    if (auto* err = std::get_if<ParseError>(&np)) return *err;
    parse.nps.push_back(std::move(std::get<NpChunk>(np)));
  }
  // verb group and first object
  {
    auto vg = parse_vg();
    if (auto* err = std::get_if<ParseError>(&vg)) return *err;
    auto np = parse_np(1, "an object noun phrase after the verb group");
    if (auto* err = std::get_if<ParseError>(&np)) return *err;
    parse.vgs.push_back(std::move(std::get<VerbGroup>(vg)));
    parse.nps.push_back(std::move(std::get<NpChunk>(np)));
  }
  // optional infinitival extension; an objectless "to VERB" is discarded
  if (pos < n && tagged[pos].pos == PosCategory::InfinitiveMarker) {
    ++pos;
    auto vg = parse_vg();
    if (auto* err = std::get_if<ParseError>(&vg)) return *err;
    if (np_start(pos)) {
      auto np = parse_np(2, "an object noun phrase after the verb group");
      if (auto* err = std::get_if<ParseError>(&np)) return *err;
      parse.vgs.push_back(std::move(std::get<VerbGroup>(vg)));
      parse.nps.push_back(std::move(std::get<NpChunk>(np)));
    }
  }
  while (pos < n && tagged[pos].pos == PosCategory::Punct) ++pos;
  if (pos < n) return error_at("unexpected token after clause", pos);
  return parse;
}

}  // namespace opgraph::text
