#include "opgraph/lexicon.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "opgraph/strings.hpp"

namespace opgraph {

namespace {

constexpr std::string_view kDefaultLexicon = R"(# built-in vocabulary for operation descriptions

[determiners]
the
a
an

[aux]
is
are
was
were
be
been
being

[prepositions]
in
by
before
after
with
to
of
on
at
from

[cardinals]
one
two
three
four
five
six
seven
eight
nine
ten
eleven
twelve
thirteen
fourteen
fifteen
sixteen
seventeen
eighteen
nineteen
twenty
hundred
thousand

[verbs]
use
take
follow
precede
start
return
excavate
load
haul
dump
spread
assist
travel
complete
have
)";

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

bool is_vowel(char c) {
  return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u';
}

}  // namespace

const Lexicon& Lexicon::defaults() {
  static const Lexicon instance = Lexicon::parse(kDefaultLexicon);
  return instance;
}

Lexicon Lexicon::parse(std::string_view text) {
  Lexicon lex;
  std::string section;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;

    if (const std::size_t hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;

    if (line.front() == '[') {
      if (line.back() != ']') {
        throw std::runtime_error("lexicon line " + std::to_string(line_no) + ": unterminated section header");
      }
      section = ascii_lower(line.substr(1, line.size() - 2));
      if (section != "verbs" && section != "prepositions" && section != "determiners" &&
          section != "aux" && section != "cardinals") {
        throw std::runtime_error("lexicon line " + std::to_string(line_no) + ": unknown section [" + section + "]");
      }
      continue;
    }
    if (section.empty()) {
      throw std::runtime_error("lexicon line " + std::to_string(line_no) + ": entry before any section header");
    }
    lex.add_entry(section, line);
  }
  return lex;
}

Lexicon Lexicon::load_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot read lexicon file: " + path.string());
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse(buffer.str());
}

void Lexicon::merge(const Lexicon& other) {
  determiners_.insert(other.determiners_.begin(), other.determiners_.end());
  aux_.insert(other.aux_.begin(), other.aux_.end());
  prepositions_.insert(other.prepositions_.begin(), other.prepositions_.end());
  cardinals_.insert(other.cardinals_.begin(), other.cardinals_.end());
  verb_forms_.insert(other.verb_forms_.begin(), other.verb_forms_.end());
}

bool Lexicon::is_determiner(std::string_view word) const {
  return determiners_.count(ascii_lower(word)) > 0;
}

bool Lexicon::is_aux(std::string_view word) const {
  return aux_.count(ascii_lower(word)) > 0;
}

bool Lexicon::is_preposition(std::string_view word) const {
  return prepositions_.count(ascii_lower(word)) > 0;
}

bool Lexicon::is_cardinal_word(std::string_view word) const {
  return cardinals_.count(ascii_lower(word)) > 0;
}

bool Lexicon::is_verb_form(std::string_view word) const {
  return verb_forms_.count(ascii_lower(word)) > 0;
}

void Lexicon::add_entry(std::string_view section, std::string_view entry) {
  const std::string word = ascii_lower(entry);
  if (section == "determiners") {
    determiners_.insert(word);
  } else if (section == "aux") {
    aux_.insert(word);
  } else if (section == "prepositions") {
    prepositions_.insert(word);
  } else if (section == "cardinals") {
    cardinals_.insert(word);
  } else {
    add_verb(word);
  }
}

void Lexicon::add_verb(const std::string& lemma) {
  verb_forms_.insert(lemma);
  if (lemma == "have") {
    verb_forms_.insert("has");
    verb_forms_.insert("had");
    verb_forms_.insert("having");
    return;
  }
  if (lemma.size() < 2) return;

  const char last = lemma.back();
  const char prev = lemma[lemma.size() - 2];

  // third person singular
  if (last == 's' || last == 'x' || last == 'z' || ends_with(lemma, "ch") || ends_with(lemma, "sh")) {
    verb_forms_.insert(lemma + "es");
  } else if (last == 'y' && !is_vowel(prev)) {
    verb_forms_.insert(lemma.substr(0, lemma.size() - 1) + "ies");
  } else {
    verb_forms_.insert(lemma + "s");
  }

  // past participle and gerund
  if (last == 'e' && prev != 'e') {
    verb_forms_.insert(lemma + "d");
    verb_forms_.insert(lemma.substr(0, lemma.size() - 1) + "ing");
  } else if (last == 'y' && !is_vowel(prev)) {
    verb_forms_.insert(lemma.substr(0, lemma.size() - 1) + "ied");
    verb_forms_.insert(lemma + "ing");
  } else {
    verb_forms_.insert(lemma + "ed");
    verb_forms_.insert(lemma + "ing");
  }
}

}  // namespace opgraph
