// Command-line front end: stats, split, train, predict and the
// method x window evaluation sweep.

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "hiwsd/hiwsd.hpp"

namespace fs = std::filesystem;
using namespace hiwsd;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitData = 1;
constexpr int kExitConfig = 2;
constexpr int kExitDomain = 3;
constexpr int kMaxWindow = 25;

struct RunConfig {
  std::string corpus;
  std::string train_path;
  std::string test_path;
  std::string model_dir;
  std::string stopword_path;
  std::string vibhakti_path;
  std::string methods = "c+bs,l+c+v,l+c,bs";
  std::string windows = "2..5";
  double ratio = 0.75;
  std::uint64_t seed = 42;
  double alpha = 1.0;
  std::string out;
  std::string format = "text";
  std::string target;
  std::string text;
};

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (start <= s.size()) {
    std::size_t comma = s.find(',', start);
    if (comma == std::string::npos) comma = s.size();
    parts.push_back(s.substr(start, comma - start));
    start = comma + 1;
  }
  return parts;
}

std::vector<Method> parse_methods(const std::string& s) {
  std::vector<Method> out;
  for (const std::string& name : split_commas(s)) {
    if (name.empty()) throw ConfigError("empty method name in --methods");
    out.push_back(method_from_name(name));
  }
  if (out.empty()) throw ConfigError("--methods must name at least one method");
  return out;
}

int parse_window_value(const std::string& s) {
  int v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || p != s.data() + s.size())
    throw ConfigError("bad window value '" + s + "'");
  if (v < 1 || v > kMaxWindow)
    throw ConfigError("window must be in 1.." + std::to_string(kMaxWindow) +
                      ", got " + s);
  return v;
}

// Accepts "2,3,5" or a "2..5" range.
std::vector<int> parse_windows(const std::string& s) {
  std::vector<int> out;
  if (auto dots = s.find(".."); dots != std::string::npos) {
    const int lo = parse_window_value(s.substr(0, dots));
    const int hi = parse_window_value(s.substr(dots + 2));
    if (lo > hi) throw ConfigError("empty window range '" + s + "'");
    for (int w = lo; w <= hi; ++w) out.push_back(w);
    return out;
  }
  for (const std::string& part : split_commas(s)) {
    if (part.empty()) throw ConfigError("empty window value in --windows");
    out.push_back(parse_window_value(part));
  }
  if (out.empty()) throw ConfigError("--windows must name at least one window");
  return out;
}

Resources make_resources(const RunConfig& cfg) {
  Resources res = default_resources();
  if (!cfg.stopword_path.empty())
    res.stopwords = load_token_list(cfg.stopword_path);
  if (!cfg.vibhakti_path.empty())
    res.vibhakti = load_token_list(cfg.vibhakti_path);
  return res;
}

void check_ratio(double ratio) {
  if (!(ratio > 0.0 && ratio < 1.0))
    throw ConfigError("--ratio must lie strictly between 0 and 1");
}

void check_alpha(double alpha) {
  if (alpha <= 0.0) throw ConfigError("--alpha must be > 0");
}

// Model file name for a target word; '/' and '%' are the only bytes that
// could break a path.
std::string model_file_name(const Token& target) {
  std::string out;
  for (char c : target.surface()) {
    if (c == '/') out += "%2F";
    else if (c == '%') out += "%25";
    else out.push_back(c);
  }
  return out + ".json";
}

void emit_warnings(const std::vector<std::string>& warnings) {
  for (const std::string& w : warnings) std::cerr << "warning: " << w << "\n";
}

std::string shortest_double(double x) {
  char buf[32];
  auto [p, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, p);
}

int cmd_stats(const RunConfig& cfg) {
  Corpus corpus = load_corpus(fs::path(cfg.corpus));
  CorpusStats stats = corpus_stats(corpus);
  std::cout << "words " << stats.word_count << "\n"
            << "instances " << stats.instance_count << "\n"
            << "polysemous_words " << stats.polysemous_word_count << "\n";
  return kExitOk;
}

int cmd_split(const RunConfig& cfg) {
  check_ratio(cfg.ratio);
  Corpus corpus = load_corpus(fs::path(cfg.corpus));
  SplitResult result = split(corpus, cfg.ratio, cfg.seed);
  emit_warnings(result.warnings);
  save_corpus(result.train, cfg.train_path);
  save_corpus(result.test, cfg.test_path);
  return kExitOk;
}

int cmd_train(const RunConfig& cfg) {
  check_alpha(cfg.alpha);
  std::vector<Method> methods = parse_methods(cfg.methods);
  std::vector<int> windows = parse_windows(cfg.windows);
  if (methods.size() != 1 || windows.size() != 1)
    throw ConfigError("train expects exactly one method and one window");
  const MethodSpec spec{methods.front(), WindowSize(windows.front())};
  Resources res = make_resources(cfg);

  Corpus corpus = load_corpus(fs::path(cfg.train_path));
  if (corpus.instances.empty()) throw TrainingError("training corpus is empty");

  std::map<Token, std::vector<Instance>> by_target;
  for (const Instance& inst : corpus.instances)
    by_target[inst.target].push_back(inst);

  fs::create_directories(cfg.model_dir);
  for (const auto& [target, instances] : by_target) {
    NaiveBayesModel model = train(instances, spec, res, cfg.alpha);
    save_model(model, fs::path(cfg.model_dir) / model_file_name(target));
    if (model.senses.size() == 1)
      std::cerr << "warning: target '" << target.surface()
                << "' has a single sense\n";
    std::cout << target.surface() << " senses=" << model.senses.size()
              << " vocab=" << model.vocabulary.size() << "\n";
  }
  return kExitOk;
}

int cmd_predict(const RunConfig& cfg) {
  Resources res = make_resources(cfg);
  Token target(normalize(cfg.target));
  NaiveBayesModel model =
      load_model(fs::path(cfg.model_dir) / model_file_name(target));

  TokenSequence tokens = tokenize(normalize(cfg.text));
  auto hits = find_target(tokens, target);
  if (hits.empty())
    throw DomainError("target '" + target.surface() +
                      "' does not occur in the text");

  Prediction pred = predict(model, tokens, hits.front(), res);

  double max_score = pred.log_scores.begin()->second;
  for (const auto& [sense, score] : pred.log_scores)
    max_score = std::max(max_score, score);
  std::vector<std::pair<SenseId, double>> ranked(pred.log_scores.begin(),
                                                 pred.log_scores.end());
  std::stable_sort(ranked.begin(), ranked.end(),
                   [](const auto& a, const auto& b) {
                     return a.second > b.second;
                   });
  std::cout << "sense " << pred.sense.label << "\n";
  for (const auto& [sense, score] : ranked)
    std::cout << "score " << shortest_double(score - max_score) << " "
              << sense.label << "\n";
  return kExitOk;
}

int cmd_sweep(const RunConfig& cfg) {
  check_ratio(cfg.ratio);
  check_alpha(cfg.alpha);
  std::vector<Method> methods = parse_methods(cfg.methods);
  std::vector<int> windows = parse_windows(cfg.windows);
  if (cfg.format != "text" && cfg.format != "csv")
    throw ConfigError("--format must be 'text' or 'csv'");
  Resources res = make_resources(cfg);
  Corpus corpus = load_corpus(fs::path(cfg.corpus));

  SweepParams params{cfg.ratio, cfg.seed, cfg.alpha};
  EvaluationReport report = sweep(corpus, methods, windows, params, res);
  emit_warnings(report.warnings);

  const std::string rendered = render_report(
      report,
      cfg.format == "csv" ? ReportFormat::Csv : ReportFormat::Text);
  if (cfg.out.empty())
    std::cout << rendered;
  else
    write_file_atomic(cfg.out, rendered);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Supervised word sense disambiguation for Hindi lexical samples"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_resource_opts = [&](CLI::App* cmd) {
    cmd->add_option("--stopwords", cfg.stopword_path,
                    "Stopword list file (one token per line)");
    cmd->add_option("--vibhakti", cfg.vibhakti_path,
                    "Vibhakti list file (one token per line)");
  };

  CLI::App* stats = app.add_subcommand("stats", "Print corpus statistics");
  stats->add_option("--corpus", cfg.corpus, "Corpus file (JSON Lines)")
      ->required();

  CLI::App* split_cmd =
      app.add_subcommand("split", "Write a stratified train/test split");
  split_cmd->add_option("--corpus", cfg.corpus, "Corpus file (JSON Lines)")
      ->required();
  split_cmd->add_option("--train", cfg.train_path, "Output train file")
      ->required();
  split_cmd->add_option("--test", cfg.test_path, "Output test file")
      ->required();
  split_cmd->add_option("--ratio", cfg.ratio, "Train fraction (default 0.75)");
  split_cmd->add_option("--seed", cfg.seed, "Split seed (default 42)");

  CLI::App* train_cmd =
      app.add_subcommand("train", "Train one model per target word");
  train_cmd->add_option("--train", cfg.train_path, "Training corpus file")
      ->required();
  train_cmd->add_option("--model-dir", cfg.model_dir, "Model output directory")
      ->required();
  train_cmd->add_option("--methods", cfg.methods, "Feature method (single)");
  train_cmd->add_option("--windows", cfg.windows, "Window size (single)");
  train_cmd->add_option("--alpha", cfg.alpha, "Smoothing alpha (default 1.0)");
  add_resource_opts(train_cmd);

  CLI::App* predict_cmd =
      app.add_subcommand("predict", "Disambiguate a target word in a text");
  predict_cmd->add_option("--model-dir", cfg.model_dir, "Model directory")
      ->required();
  predict_cmd->add_option("--target", cfg.target, "Target word")->required();
  predict_cmd->add_option("--text", cfg.text, "Text containing the target")
      ->required();
  add_resource_opts(predict_cmd);

  CLI::App* sweep_cmd = app.add_subcommand(
      "sweep", "Evaluate methods across window sizes on one split");
  sweep_cmd->alias("eval");
  sweep_cmd->add_option("--corpus", cfg.corpus, "Corpus file (JSON Lines)")
      ->required();
  sweep_cmd->add_option("--methods", cfg.methods,
                        "Comma list of methods (default c+bs,l+c+v,l+c,bs)");
  sweep_cmd->add_option("--windows", cfg.windows,
                        "Comma list or a..b range (default 2..5)");
  sweep_cmd->add_option("--ratio", cfg.ratio, "Train fraction (default 0.75)");
  sweep_cmd->add_option("--seed", cfg.seed, "Split seed (default 42)");
  sweep_cmd->add_option("--alpha", cfg.alpha, "Smoothing alpha (default 1.0)");
  sweep_cmd->add_option("--out", cfg.out, "Report file (default stdout)");
  sweep_cmd->add_option("--format", cfg.format, "Report format: text or csv");
  add_resource_opts(sweep_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  }

  try {
    if (stats->parsed()) return cmd_stats(cfg);
    if (split_cmd->parsed()) return cmd_split(cfg);
    if (train_cmd->parsed()) return cmd_train(cfg);
    if (predict_cmd->parsed()) return cmd_predict(cfg);
    if (sweep_cmd->parsed()) return cmd_sweep(cfg);
    std::cerr << "error: no command selected\n";
    return kExitConfig;
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const DataError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  }
}
