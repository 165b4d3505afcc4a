#pragma once

// Generator for linearly separable corpora: every (target, sense) pair has
// its own disjoint context vocabulary, so any content-word method should
// classify almost perfectly while pure positional vibhakti features carry
// no signal at all.

#include <random>
#include <string>
#include <vector>

#include "hiwsd/corpus.hpp"
#include "hiwsd/text.hpp"

namespace testsupport {

inline hiwsd::Corpus make_separable_corpus(int n_targets, int n_senses,
                                           int per_sense,
                                           std::uint64_t seed = 7,
                                           int context_per_side = 5) {
  using hiwsd::Instance;
  using hiwsd::SenseId;
  using hiwsd::Token;
  std::mt19937_64 rng(seed);
  std::vector<Instance> instances;
  for (int t = 0; t < n_targets; ++t) {
    const Token target("लक्ष्य" + std::to_string(t));
    for (int s = 0; s < n_senses; ++s) {
      const SenseId sense{target, "अर्थ" + std::to_string(s)};
      std::vector<std::string> vocab;
      for (int k = 0; k < 10; ++k)
        vocab.push_back("शब्द" + std::to_string(t) + "_" + std::to_string(s) +
                        "_" + std::to_string(k));
      std::uniform_int_distribution<std::size_t> pick(0, vocab.size() - 1);
      for (int i = 0; i < per_sense; ++i) {
        hiwsd::TokenSequence tokens;
        for (int c = 0; c < context_per_side; ++c)
          tokens.emplace_back(vocab[pick(rng)]);
        tokens.push_back(target);
        for (int c = 0; c < context_per_side; ++c)
          tokens.emplace_back(vocab[pick(rng)]);
        instances.push_back(Instance{
            target, static_cast<std::size_t>(context_per_side), tokens, sense});
      }
    }
  }
  return hiwsd::corpus_from_instances(std::move(instances));
}

}  // namespace testsupport
