#pragma once

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "hiwsd/corpus.hpp"
#include "hiwsd/errors.hpp"
#include "hiwsd/features.hpp"
#include "hiwsd/io.hpp"
#include "hiwsd/resources.hpp"

namespace hiwsd {

/// Multinomial Naive Bayes over feature atoms for a single target word.
/// Priors are maximum likelihood; likelihoods use add-alpha smoothing over
/// the training vocabulary; unseen atoms are skipped at scoring time.
struct NaiveBayesModel {
  Token target;
  MethodSpec spec;
  double alpha = 1.0;
  std::vector<SenseId> senses;
  std::map<SenseId, double> prior;
  std::map<SenseId, std::map<FeatureAtom, int>> feature_count;
  std::map<SenseId, std::int64_t> sense_total;
  std::set<FeatureAtom> vocabulary;
};

struct Prediction {
  SenseId sense;
  std::map<SenseId, double> log_scores;
};

/// Accumulates counts from already-extracted feature sets.
inline NaiveBayesModel train_on_features(
    const Token& target, const MethodSpec& spec,
    const std::vector<std::pair<SenseId, FeatureSet>>& data, double alpha) {
  if (alpha <= 0.0) throw ConfigError("smoothing alpha must be > 0");
  if (data.empty()) throw TrainingError("no training instances");

  NaiveBayesModel m{target, spec, alpha, {}, {}, {}, {}, {}};
  std::map<SenseId, std::int64_t> sense_instances;
  for (const auto& [sense, fs] : data) {
    if (!(sense.target == target))
      throw TrainingError("sense '" + sense.label + "' belongs to target '" +
                          sense.target.surface() + "', not '" +
                          target.surface() + "'");
    ++sense_instances[sense];
    auto& counts = m.feature_count[sense];
    auto& total = m.sense_total[sense];
    for (const auto& [atom, n] : fs.counts()) {
      counts[atom] += n;
      total += n;
      m.vocabulary.insert(atom);
    }
  }
  const auto n = static_cast<double>(data.size());
  for (const auto& [sense, count] : sense_instances) {
    m.senses.push_back(sense);
    m.prior[sense] = static_cast<double>(count) / n;
    m.feature_count[sense];  // ensure present even with no atoms
    m.sense_total[sense];
  }
  return m;
}

/// Extracts features per `spec` from instances of one target word, then
/// trains.  All instances must share the target.
inline NaiveBayesModel train(const std::vector<Instance>& instances,
                             const MethodSpec& spec, const Resources& res,
                             double alpha = 1.0) {
  if (instances.empty()) throw TrainingError("no training instances");
  const Token& target = instances.front().target;
  std::vector<std::pair<SenseId, FeatureSet>> data;
  data.reserve(instances.size());
  for (const Instance& inst : instances) {
    if (!(inst.target == target))
      throw TrainingError("mixed targets in training set: '" +
                          target.surface() + "' vs '" +
                          inst.target.surface() + "'");
    data.emplace_back(inst.sense, extract(inst, spec, res));
  }
  return train_on_features(target, spec, data, alpha);
}

/// Log posterior per sense, up to a shared additive constant:
/// ln prior + sum over in-vocabulary atoms of count * ln smoothed likelihood.
inline std::map<SenseId, double> log_posterior(const NaiveBayesModel& m,
                                               const FeatureSet& fs) {
  const double vocab_size = static_cast<double>(m.vocabulary.size());
  std::map<SenseId, double> scores;
  for (const SenseId& sense : m.senses) {
    double score = std::log(m.prior.at(sense));
    const auto& counts = m.feature_count.at(sense);
    const double denom =
        static_cast<double>(m.sense_total.at(sense)) + m.alpha * vocab_size;
    for (const auto& [atom, n] : fs.counts()) {
      if (m.vocabulary.count(atom) == 0) continue;
      auto it = counts.find(atom);
      const double seen = it == counts.end() ? 0.0 : it->second;
      score += n * std::log((seen + m.alpha) / denom);
    }
    scores.emplace(sense, score);
  }
  return scores;
}

/// Argmax of log_posterior; ties go to the higher prior, then to the
/// lexicographically smaller label.
inline Prediction predict(const NaiveBayesModel& m, const TokenSequence& tokens,
                          std::size_t target_index, const Resources& res) {
  auto scores = log_posterior(m, extract(tokens, target_index, m.spec, res));
  auto best = scores.begin();
  for (auto it = std::next(scores.begin()); it != scores.end(); ++it) {
    if (it->second > best->second ||
        (it->second == best->second &&
         m.prior.at(it->first) > m.prior.at(best->first)))
      best = it;
  }
  return Prediction{best->first, std::move(scores)};
}

inline Prediction predict(const NaiveBayesModel& m, const Instance& inst,
                          const Resources& res) {
  if (!(inst.target == m.target))
    throw ConfigError("instance target '" + inst.target.surface() +
                      "' does not match model target '" + m.target.surface() +
                      "'");
  return predict(m, inst.tokens, inst.target_index, res);
}

inline nlohmann::json model_to_json(const NaiveBayesModel& m) {
  nlohmann::json j;
  j["target"] = m.target.surface();
  j["method"] = std::string(method_name(m.spec.method));
  j["window"] = m.spec.window.j;
  j["alpha"] = m.alpha;
  auto& senses = j["senses"] = nlohmann::json::array();
  for (const SenseId& s : m.senses) senses.push_back(s.label);
  auto& priors = j["priors"] = nlohmann::json::object();
  for (const auto& [sense, p] : m.prior) priors[sense.label] = p;
  auto& counts = j["counts"] = nlohmann::json::object();
  for (const auto& [sense, atom_counts] : m.feature_count) {
    auto& per_sense = counts[sense.label] = nlohmann::json::object();
    for (const auto& [atom, n] : atom_counts) per_sense[atom.key()] = n;
  }
  return j;
}

inline NaiveBayesModel model_from_json(const nlohmann::json& j) {
  try {
    NaiveBayesModel m{Token(j.at("target").get<std::string>()),
                      MethodSpec{method_from_name(
                                     j.at("method").get<std::string>()),
                                 WindowSize(j.at("window").get<int>())},
                      j.at("alpha").get<double>(),
                      {},
                      {},
                      {},
                      {},
                      {}};
    if (m.alpha <= 0.0) throw ValidationError("model alpha must be > 0");
    for (const auto& label : j.at("senses"))
      m.senses.push_back(SenseId{m.target, label.get<std::string>()});
    double prior_sum = 0.0;
    for (const SenseId& sense : m.senses) {
      const double p = j.at("priors").at(sense.label).get<double>();
      m.prior[sense] = p;
      prior_sum += p;
      auto& counts = m.feature_count[sense];
      auto& total = m.sense_total[sense];
      const auto& per_sense = j.at("counts").at(sense.label);
      for (auto it = per_sense.begin(); it != per_sense.end(); ++it) {
        const int n = it.value().get<int>();
        if (n < 0) throw ValidationError("negative feature count in model");
        FeatureAtom atom = FeatureAtom::from_key(it.key());
        counts[atom] = n;
        total += n;
        if (n > 0) m.vocabulary.insert(atom);
      }
    }
    if (std::abs(prior_sum - 1.0) > 1e-12)
      throw ValidationError("model priors do not sum to 1");
    return m;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed model document: ") + e.what());
  } catch (const ConfigError& e) {
    // method_from_name and WindowSize guard caller input; inside a stored
    // document their complaints are data problems
    throw ValidationError(std::string("bad model document: ") + e.what());
  }
}

inline void save_model(const NaiveBayesModel& m,
                       const std::filesystem::path& path) {
  write_file_atomic(path, model_to_json(m).dump(2) + "\n");
}

inline NaiveBayesModel load_model(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("model not found: " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
  return model_from_json(j);
}

}  // namespace hiwsd
