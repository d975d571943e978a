#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "opgraph/lexicon.hpp"

using opgraph::Lexicon;

TEST_CASE("default lexicon covers the operation vocabulary") {
  const Lexicon& lex = Lexicon::defaults();

  CHECK(lex.is_determiner("the"));
  CHECK(lex.is_determiner("The"));
  CHECK_FALSE(lex.is_determiner("one"));

  CHECK(lex.is_aux("is"));
  CHECK(lex.is_aux("were"));
  CHECK_FALSE(lex.is_aux("has"));  // "has" is always a main verb

  CHECK(lex.is_preposition("before"));
  CHECK(lex.is_preposition("with"));
  CHECK(lex.is_preposition("to"));
  CHECK_FALSE(lex.is_preposition("near"));

  CHECK(lex.is_cardinal_word("one"));
  CHECK(lex.is_cardinal_word("Twenty"));
  CHECK(lex.is_cardinal_word("thousand"));
  CHECK_FALSE(lex.is_cardinal_word("1.2"));  // numerals are recognized elsewhere
}

TEST_CASE("verb inflections are derived from lemmas") {
  const Lexicon& lex = Lexicon::defaults();

  // lemmas
  for (const char* lemma : {"use", "take", "follow", "precede", "start", "return", "excavate",
                            "load", "haul", "dump", "spread", "assist", "travel", "complete",
                            "have"}) {
    CAPTURE(lemma);
    CHECK(lex.is_verb_form(lemma));
  }
  // inflections seen in operation descriptions
  for (const char* form : {"takes", "used", "precedes", "starts", "returns", "followed",
                           "loading", "hauling", "dumping", "dumped", "spreading", "has",
                           "excavating", "uses", "assisting"}) {
    CAPTURE(form);
    CHECK(lex.is_verb_form(form));
  }
  CHECK_FALSE(lex.is_verb_form("sleep"));
  CHECK_FALSE(lex.is_verb_form("excavation"));
  CHECK_FALSE(lex.is_verb_form("haves"));
}

TEST_CASE("lexicon text parses sections, comments and blank lines") {
  const Lexicon lex = Lexicon::parse(
      "# comment only\n"
      "[verbs]\n"
      "weld   # trailing comment\n"
      "carry\n"
      "\n"
      "[prepositions]\n"
      "near\n");
  CHECK(lex.is_verb_form("weld"));
  CHECK(lex.is_verb_form("welds"));
  CHECK(lex.is_verb_form("welded"));
  CHECK(lex.is_verb_form("welding"));
  CHECK(lex.is_verb_form("carries"));
  CHECK(lex.is_verb_form("carried"));
  CHECK(lex.is_verb_form("carrying"));
  CHECK(lex.is_preposition("near"));
  CHECK_FALSE(lex.is_preposition("with"));  // parse() does not imply defaults
}

TEST_CASE("malformed lexicon text is rejected") {
  CHECK_THROWS_AS(Lexicon::parse("[nouns]\ntruck\n"), std::runtime_error);
  CHECK_THROWS_AS(Lexicon::parse("weld\n"), std::runtime_error);
  CHECK_THROWS_AS(Lexicon::parse("[verbs\nweld\n"), std::runtime_error);
}

TEST_CASE("merge is a set union") {
  Lexicon lex = Lexicon::defaults();
  CHECK_FALSE(lex.is_verb_form("weld"));
  lex.merge(Lexicon::parse("[verbs]\nweld\n"));
  CHECK(lex.is_verb_form("weld"));
  CHECK(lex.is_verb_form("takes"));  // defaults survive the union
}

TEST_CASE("missing lexicon file reports an error") {
  CHECK_THROWS_AS(Lexicon::load_file("/nonexistent/lexicon.txt"), std::runtime_error);
}
