#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "ccgcomment/error.hpp"
#include "ccgcomment/surface.hpp"

using namespace ccgc;

namespace {

std::vector<std::string> split(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

}  // namespace

TEST(Finalize, Examples) {
  EXPECT_EQ(finalize({"checking[ger]", "for", "inequality", "between", "x", "and", "y"}).text,
            "Checking for inequality between x and y");
  EXPECT_EQ(finalize({"iterate", "over", "elements", "of", "the", "list", "a"}).text,
            "Iterate over elements of the list a");
  EXPECT_EQ(finalize({"set", "Total", "to", "0.5"}).text, "Set Total to 0.5");
  EXPECT_EQ(finalize({"x"}).text, "X");
  EXPECT_EQ(finalize({"print", "myVar"}).text, "Print myVar");
}

TEST(Finalize, EmptyInputIsAnError) {
  EXPECT_THROW(finalize({}), EmptyTokens);
  EXPECT_THROW(finalize({"", " "}), EmptyTokens);
}

TEST(StripMetadata, OnlyTrailingTags) {
  EXPECT_EQ(strip_metadata("checking[ger]"), "checking");
  EXPECT_EQ(strip_metadata("a[i]x"), "a[i]x");
  EXPECT_EQ(strip_metadata("[tag]"), "[tag]");
  EXPECT_EQ(strip_metadata("plain"), "plain");
}

TEST(Finalize, IdempotentAndLossless) {
  std::mt19937_64 rng(8);
  const std::vector<std::string> vocab{"set", "x", "to", "the", "list", "Total", "0.5",
                                       "checking[ger]", "over[p]", "a_b", "-1"};
  for (int i = 0; i < 3000; ++i) {
    std::vector<std::string> toks;
    for (int n = 1 + static_cast<int>(rng() % 8); n > 0; --n) toks.push_back(vocab[rng() % vocab.size()]);
    const CommentText once = finalize(toks);
    ASSERT_EQ(finalize(split(once.text)), once);
    EXPECT_EQ(once.text.find("  "), std::string::npos);
    EXPECT_NE(once.text.back(), ' ');
    // Apart from the first letter, the words are the stripped tokens.
    auto words = split(once.text);
    ASSERT_EQ(words.size(), toks.size());
    for (std::size_t k = 0; k < toks.size(); ++k) {
      std::string want = strip_metadata(toks[k]);
      if (k == 0) want[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(want[0])));
      EXPECT_EQ(words[k], want);
    }
  }
}
