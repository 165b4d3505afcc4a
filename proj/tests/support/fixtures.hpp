#pragma once

// Shared test fixtures: the worked necklace-sense example sentence that the
// golden feature extractions are checked against, plus a small two-sense
// training corpus for the word हार.

#include <algorithm>
#include <string>
#include <vector>

#include "hiwsd/corpus.hpp"
#include "hiwsd/text.hpp"

namespace testsupport {

// "... हीरे का हार पहनी एक ..." with context on both sides so window
// truncation cannot mask an off-by-one.
inline hiwsd::TokenSequence necklace_tokens() {
  return hiwsd::tokenize(
      hiwsd::normalize("न्यूयॉर्क हीरे का हार पहनी एक बार्बी गुडिया"));
}

inline hiwsd::Instance necklace_instance() {
  hiwsd::Token target("हार");
  return hiwsd::Instance{target, 3, necklace_tokens(),
                         hiwsd::SenseId{target, "माला"}};
}

// Hand-built two-sense corpus for हार: defeat (पराजय) vs necklace (माला).
inline hiwsd::Corpus mini_haar_corpus() {
  using hiwsd::Instance;
  using hiwsd::SenseId;
  using hiwsd::Token;
  const Token target("हार");
  const SenseId defeat{target, "पराजय"};
  const SenseId necklace{target, "माला"};
  auto inst = [&](const char* text, const SenseId& sense) {
    hiwsd::TokenSequence toks = hiwsd::tokenize(hiwsd::normalize(text));
    auto hits = hiwsd::find_target(toks, target);
    return Instance{target, hits.front(), std::move(toks), sense};
  };
  std::vector<Instance> instances = {
      inst("टीम की हार से प्रशंसक दुखी हुए", defeat),
      inst("मैच में करारी हार मिली", defeat),
      inst("खिलाड़ी अपनी हार स्वीकार नहीं करते", defeat),
      inst("युद्ध की हार का समाचार फैल गया", defeat),
      inst("चुनाव की हार के बाद नेता चुप रहे", defeat),
      inst("उसने सोने का हार पहना", necklace),
      inst("गले में मोतियों का हार सजा था", necklace),
      inst("हीरे का हार बहुत महँगा है", necklace),
      inst("दुल्हन ने फूलों का हार खरीदा", necklace),
      inst("दुकान में चाँदी का हार चमक रहा था", necklace),
  };
  return hiwsd::corpus_from_instances(std::move(instances));
}

inline std::vector<std::string> sorted(std::vector<std::string> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace testsupport
