#pragma once

#include <filesystem>
#include <fstream>
#include <set>
#include <string>

#include "hiwsd/errors.hpp"
#include "hiwsd/text.hpp"

namespace hiwsd {

/// The case-marking particles used as positional features.
inline const std::set<std::string>& default_vibhakti() {
  static const std::set<std::string> list = {
      "ने", "को", "से", "के", "लिए", "का", "की", "में", "पर", "हे", "अरे",
  };
  return list;
}

/// Bundled Hindi function-word list; a superset of the vibhakti list.
/// Override with a user file where a corpus needs a different inventory.
inline const std::set<std::string>& default_stopwords() {
  static const std::set<std::string> list = {
      // vibhakti
      "ने", "को", "से", "के", "लिए", "का", "की", "में", "पर", "हे", "अरे",
      // copulas and light verbs
      "है", "हैं", "था", "थी", "थे", "हो", "हों", "हुआ", "हुई", "हुए", "हूँ",
      "होता", "होती", "होते", "होना", "रहा", "रही", "रहे", "रहना",
      "गया", "गयी", "गई", "गए", "गये", "जाता", "जाती", "जाते",
      "कर", "करता", "करती", "करते", "करना", "किया", "किये", "किए", "करें",
      "सकता", "सकती", "सकते", "चाहिए", "वाला", "वाली", "वाले",
      // pronouns and determiners
      "यह", "वह", "ये", "वो", "इस", "उस", "इन", "उन", "इसे", "उसे",
      "इन्हें", "उन्हें", "इसका", "उसका", "इसकी", "उसकी", "इसके", "उसके",
      "इसमें", "उसमें", "मैं", "हम", "तुम", "आप", "मेरा", "मेरी", "मेरे",
      "हमारा", "हमारी", "हमारे", "तेरा", "तुम्हारा", "आपका",
      "अपना", "अपनी", "अपने", "जो", "जिस", "जिन", "जिसे", "जिन्हें",
      "जिसका", "जिसकी", "जिसके", "क्या", "कौन", "किस", "किसे", "किसी",
      "कुछ", "कोई", "सब", "सभी", "हर",
      // numerals and quantifiers
      "एक", "दो", "कई", "बहुत", "अधिक", "कम", "पूरा", "पूरी",
      // conjunctions and particles
      "और", "या", "कि", "भी", "तो", "ही", "न", "नहीं", "मत", "बिना",
      "फिर", "लेकिन", "मगर", "परंतु", "किंतु", "क्योंकि", "इसलिए",
      "अगर", "यदि", "तथा", "एवं", "अथवा",
      // temporal and spatial function words
      "अब", "जब", "तब", "कब", "यहाँ", "वहाँ", "कहाँ", "अभी", "कभी",
      "तक", "साथ", "बाद", "पहले", "ऊपर", "नीचे", "बीच", "ओर", "तरफ",
      "द्वारा", "हेतु", "प्रति", "बारे",
  };
  return list;
}

/// Loads a token-per-line list: `#`-prefixed lines are comments, blank
/// lines are skipped, entries are NFC-normalized.
inline std::set<std::string> load_token_list(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open token list: " + path.string());
  std::set<std::string> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty() && line.front() == '#') continue;
    std::string entry = normalize(line);
    if (entry.empty()) continue;
    // entries are single tokens; reject anything with inner whitespace
    try {
      Token tok(entry);
      out.insert(tok.surface());
    } catch (const ValidationError&) {
      throw ValidationError(path.string() + ":" + std::to_string(lineno) +
                            ": list entry is not a single token: '" + line +
                            "'");
    }
  }
  return out;
}

/// Immutable lookup sets consumed by the feature extractors.
struct Resources {
  std::set<std::string> stopwords;
  std::set<std::string> vibhakti;
};

inline Resources default_resources() {
  return Resources{default_stopwords(), default_vibhakti()};
}

}  // namespace hiwsd
