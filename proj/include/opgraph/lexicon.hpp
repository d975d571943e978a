#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <unordered_set>

namespace opgraph {

// Word lists that drive tagging and classification. The categories mirror
// the lexicon file format: [verbs], [prepositions], [determiners], [aux],
// [cardinals], one entry per line, '#' starts a comment. Verb entries are
// lemmas; their -s/-ed/-ing inflections are derived automatically.
class Lexicon {
 public:
  // Built-in vocabulary for earthmoving-style operation descriptions.
  static const Lexicon& defaults();

  // Parses lexicon text. Throws std::runtime_error on an unknown section
  // header or an entry outside any section.
  static Lexicon parse(std::string_view text);

  // Reads and parses a lexicon file. Throws std::runtime_error when the
  // file cannot be read.
  static Lexicon load_file(const std::filesystem::path& path);

  // Set union with another lexicon.
  void merge(const Lexicon& other);

  bool is_determiner(std::string_view word) const;
  bool is_aux(std::string_view word) const;
  bool is_preposition(std::string_view word) const;
  bool is_cardinal_word(std::string_view word) const;

  // True for a verb lemma or any of its derived inflections.
  bool is_verb_form(std::string_view word) const;

 private:
  void add_entry(std::string_view section, std::string_view entry);
  void add_verb(const std::string& lemma);

  std::unordered_set<std::string> determiners_;
  std::unordered_set<std::string> aux_;
  std::unordered_set<std::string> prepositions_;
  std::unordered_set<std::string> cardinals_;
  std::unordered_set<std::string> verb_forms_;
};

}  // namespace opgraph
