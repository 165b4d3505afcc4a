#include <string>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "hiwsd/text.hpp"

using namespace hiwsd;

namespace {

std::vector<std::string> surfaces(const TokenSequence& toks) {
  std::vector<std::string> out;
  for (const Token& t : toks) out.push_back(t.surface());
  return out;
}

}  // namespace

TEST_CASE("normalize composes combining marks") {
  CHECK(normalize("À") == "À");
  CHECK(normalize("é") == "é");
}

TEST_CASE("normalize maps both qa spellings to one canonical form") {
  // U+0958 is a composition exclusion, so NFC decomposes the precomposed
  // letter and leaves the decomposed pair alone.  Either spelling of the
  // same word therefore yields an identical token.
  const std::string precomposed = "क़";
  const std::string decomposed = "क़";
  CHECK(normalize(precomposed) == decomposed);
  CHECK(normalize(decomposed) == decomposed);
  CHECK(Token(precomposed) == Token(decomposed));
  CHECK(Token(precomposed).surface() == decomposed);
}

TEST_CASE("normalize trims surrounding Unicode whitespace") {
  CHECK(normalize("  नमस्ते \n") == "नमस्ते");
  CHECK(normalize(" हार ") == "हार");
  CHECK(normalize("\tहार बाजार\t ") == "हार बाजार");
  CHECK(normalize("") == "");
  CHECK(normalize("   \n\t") == "");
}

TEST_CASE("normalize is idempotent") {
  for (const char* s : {"हीरे का हार", "ÀB", "क़ और क़",
                        " spaced out ", "क्या?"}) {
    const std::string once = normalize(s);
    CHECK(normalize(once) == once);
  }
}

TEST_CASE("normalize rejects ill-formed UTF-8") {
  CHECK_THROWS_AS(normalize("\x80"), DecodeError);
  CHECK_THROWS_AS(normalize("\xE0\xA4"), DecodeError);
  CHECK_THROWS_AS(normalize("ok\xFFok"), DecodeError);
}

TEST_CASE("tokenize splits on whitespace and discards the danda") {
  CHECK(surfaces(tokenize("नीलाम हुई है।")) ==
        std::vector<std::string>{"नीलाम", "हुई", "है"});
  CHECK(surfaces(tokenize("॥ श्री ॥")) == std::vector<std::string>{"श्री"});
}

TEST_CASE("tokenize strips clause punctuation") {
  CHECK(surfaces(tokenize("क्या? हाँ! ठीक (है).")) ==
        std::vector<std::string>{"क्या", "हाँ", "ठीक", "है"});
  CHECK(surfaces(tokenize("'हार', \"माला\"; हार:")) ==
        std::vector<std::string>{"हार", "माला", "हार"});
}

TEST_CASE("tokenize keeps digits and splits hyphenated compounds") {
  CHECK(surfaces(tokenize("वर्ष 2023 में")) ==
        std::vector<std::string>{"वर्ष", "2023", "में"});
  CHECK(surfaces(tokenize("भारत-पाक सीमा")) ==
        std::vector<std::string>{"भारत", "पाक", "सीमा"});
}

TEST_CASE("tokenize emits nothing for delimiter runs") {
  CHECK(tokenize("").empty());
  CHECK(tokenize("।।, . ?!").empty());
  CHECK(surfaces(tokenize("एक,,दो  तीन")) ==
        std::vector<std::string>{"एक", "दो", "तीन"});
}

TEST_CASE("tokenize reports the byte offset of bad UTF-8") {
  try {
    tokenize("ab \xC0 cd");
    FAIL("expected DecodeError");
  } catch (const DecodeError& e) {
    CHECK(std::string(e.what()).find("byte 3") != std::string::npos);
  }
}

TEST_CASE("find_target returns every occurrence in order") {
  TokenSequence toks = tokenize("हार की हार ही हार है");
  CHECK(find_target(toks, Token("हार")) ==
        std::vector<std::size_t>{0, 2, 4});
  CHECK(find_target(toks, Token("जीत")).empty());
}

TEST_CASE("join then retokenize is a fixed point") {
  TokenSequence toks = tokenize(normalize("हीरे का हार पहनी एक बार्बी गुडिया"));
  const std::string joined = join_surfaces(toks, 0, toks.size());
  CHECK(tokenize(joined) == toks);
  CHECK(join_surfaces(toks, 1, 3) == "का हार");
  CHECK(join_surfaces(toks, 3, 3) == "");
}

TEST_CASE("Token rejects empty, whitespace and bad bytes") {
  CHECK_THROWS_AS(Token(""), ValidationError);
  CHECK_THROWS_AS(Token("दो शब्द"), ValidationError);
  CHECK_THROWS_AS(Token("\t"), ValidationError);
  CHECK_THROWS_AS(Token("a b"), ValidationError);
  CHECK_THROWS_AS(Token("\xFF"), DecodeError);
}

TEST_CASE("Token re-normalizes non-NFC input") {
  CHECK(Token("À").surface() == "À");
  CHECK(Token("हार").surface() == "हार");
}

TEST_CASE("Token ordering follows surface bytes") {
  CHECK(Token("अ") < Token("आ"));
  CHECK(Token("हार") == Token("हार"));
}
