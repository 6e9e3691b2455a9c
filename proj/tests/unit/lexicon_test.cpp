#include <gtest/gtest.h>

#include "proseviz/common.hpp"
#include "proseviz/lexicon.hpp"

using namespace proseviz;

TEST(Lexicon, StopwordsAndFrequencies) {
  EXPECT_TRUE(is_stopword("the"));
  EXPECT_TRUE(is_stopword("across"));
  EXPECT_FALSE(is_stopword("congo"));
  EXPECT_GT(background_frequency("the"), background_frequency("river"));
  EXPECT_DOUBLE_EQ(background_frequency("qwzxv"), kUnknownWordFrequency);
}

TEST(Lexicon, BundledSynonymsAreStrictlyShorter) {
  const auto& lex = SynonymLexicon::bundled();
  EXPECT_GE(lex.size(), 50u);
  for (const auto& [word, syns] : lex.entries()) {
    for (const auto& s : syns) EXPECT_LT(s.size(), word.size()) << word << " -> " << s;
  }
  EXPECT_EQ(lex.shortest("displacement"), "exodus");
  EXPECT_EQ(lex.shortest("DISPLACEMENT"), "exodus");
  EXPECT_FALSE(lex.shortest("zebra").has_value());
}

TEST(Lexicon, RejectsNonShorterSynonyms) {
  SynonymLexicon lex;
  EXPECT_THROW(lex.add("big", {"large"}), Error);
  EXPECT_THROW(lex.add("big", {"bag"}), Error);
  lex.add("enormous", {"huge", "vast", "big"});
  EXPECT_EQ(lex.shortest("enormous"), "big");
}

TEST(Lexicon, ShortestBreaksTiesLexicographically) {
  SynonymLexicon lex;
  lex.add("purchase", {"get", "buy"});
  EXPECT_EQ(lex.shortest("purchase"), "buy");
}

TEST(Lexicon, ParsesTsvWithComments) {
  const auto lex = SynonymLexicon::from_tsv("# comment\nassistance\thelp,aid\n\nnumerous\tmany\n");
  EXPECT_EQ(lex.size(), 2u);
  EXPECT_EQ(lex.shortest("assistance"), "aid");
}
