#pragma once

#include <cmath>
#include <compare>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <istream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "hiwsd/errors.hpp"
#include "hiwsd/io.hpp"
#include "hiwsd/text.hpp"

namespace hiwsd {

/// One sense of one target word; `label` is unique within the target.
struct SenseId {
  Token target;
  std::string label;

  auto operator<=>(const SenseId&) const = default;
};

/// A single tagged occurrence of a target word in context.
struct Instance {
  Token target;
  std::size_t target_index;
  TokenSequence tokens;
  SenseId sense;

  bool operator==(const Instance&) const = default;
};

struct Corpus {
  std::vector<Instance> instances;
  std::map<Token, std::set<SenseId>> inventory;

  bool operator==(const Corpus&) const = default;
};

struct CorpusStats {
  std::uint64_t word_count = 0;
  std::uint64_t instance_count = 0;
  std::uint64_t polysemous_word_count = 0;

  bool operator==(const CorpusStats&) const = default;
};

/// Rebuilds the sense inventory from a list of instances.
inline Corpus corpus_from_instances(std::vector<Instance> instances) {
  Corpus c;
  c.instances = std::move(instances);
  for (const Instance& inst : c.instances)
    c.inventory[inst.target].insert(inst.sense);
  return c;
}

namespace detail {

inline Instance parse_record(const nlohmann::json& j, const std::string& at) {
  if (!j.is_object()) throw ParseError(at + ": record is not a JSON object");

  auto require_string = [&](const char* key) -> std::string {
    auto it = j.find(key);
    if (it == j.end() || !it->is_string())
      throw ParseError(at + ": missing or non-string field \"" +
                       std::string(key) + "\"");
    return it->get<std::string>();
  };

  const std::string target_raw = require_string("target");
  const std::string sense_raw = require_string("sense");

  const bool has_text = j.contains("text");
  const bool has_tokens = j.contains("tokens");
  if (has_text == has_tokens)
    throw ParseError(at + ": exactly one of \"text\" or \"tokens\" required");

  Token target = [&] {
    try {
      return Token(normalize(target_raw));
    } catch (const DataError& e) {
      throw ValidationError(at + ": bad target: " + e.what());
    }
  }();

  const std::string label = normalize(sense_raw);
  if (label.empty()) throw ValidationError(at + ": empty sense label");

  TokenSequence tokens;
  if (has_text) {
    if (!j["text"].is_string())
      throw ParseError(at + ": field \"text\" must be a string");
    tokens = tokenize(normalize(j["text"].get<std::string>()));
  } else {
    if (!j["tokens"].is_array())
      throw ParseError(at + ": field \"tokens\" must be an array of strings");
    for (const auto& el : j["tokens"]) {
      if (!el.is_string())
        throw ParseError(at + ": field \"tokens\" must be an array of strings");
      try {
        tokens.emplace_back(el.get<std::string>());
      } catch (const DataError& e) {
        throw ValidationError(at + ": bad token: " + e.what());
      }
    }
  }

  std::size_t target_index;
  if (auto it = j.find("target_index"); it != j.end()) {
    if (!it->is_number_integer() || it->get<std::int64_t>() < 0)
      throw ParseError(at + ": \"target_index\" must be a nonnegative integer");
    target_index = it->get<std::uint64_t>();
    if (target_index >= tokens.size())
      throw ValidationError(at + ": target_index " +
                            std::to_string(target_index) +
                            " out of range (have " +
                            std::to_string(tokens.size()) + " tokens)");
    if (!(tokens[target_index] == target))
      throw ValidationError(at + ": token at target_index is '" +
                            tokens[target_index].surface() +
                            "', expected target '" + target.surface() + "'");
  } else {
    auto hits = find_target(tokens, target);
    if (hits.empty())
      throw ValidationError(at + ": target '" + target.surface() +
                            "' does not occur in the tokens");
    target_index = hits.front();
  }

  return Instance{target, target_index, std::move(tokens),
                  SenseId{target, label}};
}

}  // namespace detail

/// Reads a JSON-Lines corpus: one record per line with fields
/// target, sense, text|tokens and optional target_index.
inline Corpus load_corpus(std::istream& in,
                          const std::string& origin = "<stream>") {
  std::vector<Instance> instances;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    const std::string at = origin + ":" + std::to_string(lineno);
    nlohmann::json rec;
    try {
      rec = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(at + ": " + e.what());
    }
    instances.push_back(detail::parse_record(rec, at));
  }
  return corpus_from_instances(std::move(instances));
}

inline Corpus load_corpus(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("corpus not found: " + path.string());
  return load_corpus(in, path.string());
}

/// Serializes instances back to the JSON-Lines format, always in the
/// explicit tokens + target_index form.
inline std::string corpus_to_jsonl(const Corpus& c) {
  std::string out;
  for (const Instance& inst : c.instances) {
    nlohmann::json rec;
    rec["target"] = inst.target.surface();
    rec["sense"] = inst.sense.label;
    rec["target_index"] = inst.target_index;
    auto& toks = rec["tokens"] = nlohmann::json::array();
    for (const Token& t : inst.tokens) toks.push_back(t.surface());
    out += rec.dump();
    out.push_back('\n');
  }
  return out;
}

inline void save_corpus(const Corpus& c, const std::filesystem::path& path) {
  write_file_atomic(path, corpus_to_jsonl(c));
}

inline CorpusStats corpus_stats(const Corpus& c) {
  CorpusStats s;
  s.instance_count = c.instances.size();
  s.polysemous_word_count = c.inventory.size();
  for (const Instance& inst : c.instances) s.word_count += inst.tokens.size();
  return s;
}

/// Checks every instance against the type invariants; returns one message
/// per violation (empty means the corpus is well-formed).
inline std::vector<std::string> validate(const Corpus& c) {
  std::vector<std::string> violations;
  auto flag = [&](std::size_t ordinal, const std::string& what) {
    violations.push_back("instance #" + std::to_string(ordinal) + ": " + what);
  };
  for (std::size_t i = 0; i < c.instances.size(); ++i) {
    const Instance& inst = c.instances[i];
    if (inst.target_index >= inst.tokens.size()) {
      flag(i, "target_index " + std::to_string(inst.target_index) +
                  " out of range (have " + std::to_string(inst.tokens.size()) +
                  " tokens)");
      continue;
    }
    if (!(inst.tokens[inst.target_index] == inst.target))
      flag(i, "token at target_index is '" +
                  inst.tokens[inst.target_index].surface() +
                  "', expected target '" + inst.target.surface() + "'");
    if (!(inst.sense.target == inst.target))
      flag(i, "sense belongs to target '" + inst.sense.target.surface() +
                  "', not '" + inst.target.surface() + "'");
    auto it = c.inventory.find(inst.target);
    if (it == c.inventory.end() || it->second.count(inst.sense) == 0)
      flag(i, "sense '" + inst.sense.label + "' missing from the inventory");
  }
  for (const auto& [target, senses] : c.inventory) {
    bool seen = false;
    for (const Instance& inst : c.instances)
      if (inst.target == target) {
        seen = true;
        break;
      }
    if (!seen)
      violations.push_back("inventory target '" + target.surface() +
                           "' has no instances");
  }
  return violations;
}

struct SplitResult {
  Corpus train;
  Corpus test;
  std::vector<std::string> warnings;
};

namespace detail {

inline std::uint64_t fnv1a64(std::string_view s, std::uint64_t h) {
  for (unsigned char b : s) {
    h ^= b;
    h *= 0x100000001b3ULL;
  }
  return h;
}

// Stable per-group seed so the split does not depend on group iteration
// order.
inline std::uint64_t group_seed(std::uint64_t seed, const SenseId& sense) {
  std::uint64_t h = fnv1a64(sense.target.surface(), 0xcbf29ce484222325ULL);
  h = fnv1a64("\x1f", h);
  h = fnv1a64(sense.label, h);
  return h ^ (seed + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

}  // namespace detail

/// Stratified train/test split: within each (target, sense) group the
/// instances are shuffled by a seeded permutation and the first
/// round-half-up(fraction * size) go to train.  Groups whose test side
/// comes out empty are reported in `warnings`.
inline SplitResult split(const Corpus& c, double train_fraction,
                         std::uint64_t seed) {
  if (c.instances.empty()) throw ValidationError("cannot split an empty corpus");
  if (!(train_fraction > 0.0 && train_fraction < 1.0))
    throw ConfigError("train fraction must lie strictly between 0 and 1");

  std::map<SenseId, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < c.instances.size(); ++i)
    groups[c.instances[i].sense].push_back(i);

  std::vector<char> in_train(c.instances.size(), 0);
  SplitResult result;
  for (const auto& [sense, members] : groups) {
    std::vector<std::size_t> order = members;
    std::mt19937_64 rng(detail::group_seed(seed, sense));
    for (std::size_t i = order.size() - 1; i > 0; --i) {
      std::size_t j = static_cast<std::size_t>(rng() % (i + 1));
      std::swap(order[i], order[j]);
    }
    const auto k = static_cast<std::size_t>(
        std::floor(train_fraction * static_cast<double>(order.size()) + 0.5));
    for (std::size_t i = 0; i < k && i < order.size(); ++i)
      in_train[order[i]] = 1;
    if (k >= order.size())
      result.warnings.push_back(
          "target '" + sense.target.surface() + "' sense '" + sense.label +
          "': all " + std::to_string(order.size()) +
          " instance(s) went to train; test has none");
    else if (k == 0)
      result.warnings.push_back("target '" + sense.target.surface() +
                                "' sense '" + sense.label +
                                "': no instances went to train");
  }

  std::vector<Instance> train, test;
  for (std::size_t i = 0; i < c.instances.size(); ++i)
    (in_train[i] ? train : test).push_back(c.instances[i]);
  result.train = corpus_from_instances(std::move(train));
  result.test = corpus_from_instances(std::move(test));
  return result;
}

}  // namespace hiwsd
