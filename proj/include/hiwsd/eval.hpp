#pragma once

#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <map>
#include <mutex>
#include <set>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "hiwsd/classifier.hpp"
#include "hiwsd/corpus.hpp"
#include "hiwsd/errors.hpp"
#include "hiwsd/features.hpp"
#include "hiwsd/resources.hpp"

namespace hiwsd {

/// (gold, predicted) -> count for the test instances of one target word.
struct ConfusionCounts {
  Token target;
  std::map<std::pair<SenseId, SenseId>, std::int64_t> counts;

  std::int64_t total() const {
    std::int64_t t = 0;
    for (const auto& [key, n] : counts) t += n;
    return t;
  }
};

/// Macro-averaged precision/recall over senses, F1 from the means, plus
/// raw accuracy (correct / total).
struct Scores {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  double accuracy = 0.0;
  std::int64_t n_test = 0;

  bool operator==(const Scores&) const = default;
};

struct MethodResult {
  MethodSpec spec;
  Scores overall;
  std::map<Token, Scores> per_word;
};

struct EvaluationReport {
  std::vector<MethodResult> rows;
  std::vector<std::string> warnings;
};

/// Predicts every test instance with the model and tallies the confusion
/// counts.  All test instances must carry the model's target.
inline ConfusionCounts score_word(const NaiveBayesModel& model,
                                  const std::vector<Instance>& test,
                                  const Resources& res) {
  ConfusionCounts cc{model.target, {}};
  for (const Instance& inst : test) {
    Prediction pred = predict(model, inst, res);
    ++cc.counts[{inst.sense, pred.sense}];
  }
  return cc;
}

inline double f1_of(double precision, double recall) {
  const double sum = precision + recall;
  return sum > 0.0 ? 2.0 * precision * recall / sum : 0.0;
}

/// Per-word metrics: per-sense precision diag/column and recall diag/row,
/// unweighted means over senses with defined values (0/0 is excluded).
inline Scores word_metrics(const ConfusionCounts& cc) {
  if (cc.counts.empty())
    throw EvalError("no test predictions for target '" +
                    cc.target.surface() + "'");
  std::set<SenseId> senses;
  std::map<SenseId, std::int64_t> row, col, diag;
  std::int64_t total = 0, correct = 0;
  for (const auto& [key, n] : cc.counts) {
    const auto& [gold, predicted] = key;
    senses.insert(gold);
    senses.insert(predicted);
    row[gold] += n;
    col[predicted] += n;
    if (gold == predicted) diag[gold] += n;
    total += n;
  }
  if (total == 0)
    throw EvalError("no test predictions for target '" +
                    cc.target.surface() + "'");
  for (const auto& [key, n] : cc.counts)
    if (key.first == key.second) correct += n;

  double p_sum = 0.0, r_sum = 0.0;
  int p_defined = 0, r_defined = 0;
  for (const SenseId& s : senses) {
    const double d = static_cast<double>(diag[s]);
    if (col[s] > 0) {
      p_sum += d / static_cast<double>(col[s]);
      ++p_defined;
    }
    if (row[s] > 0) {
      r_sum += d / static_cast<double>(row[s]);
      ++r_defined;
    }
  }
  Scores out;
  out.precision = p_defined > 0 ? p_sum / p_defined : 0.0;
  out.recall = r_defined > 0 ? r_sum / r_defined : 0.0;
  out.f1 = f1_of(out.precision, out.recall);
  out.accuracy = static_cast<double>(correct) / static_cast<double>(total);
  out.n_test = total;
  return out;
}

/// Unweighted mean of per-word precision, recall and accuracy; F1 is
/// recomputed from the mean precision and recall.
inline Scores aggregate(const std::map<Token, Scores>& per_word) {
  if (per_word.empty()) throw EvalError("no per-word results to aggregate");
  Scores out;
  for (const auto& [target, s] : per_word) {
    out.precision += s.precision;
    out.recall += s.recall;
    out.accuracy += s.accuracy;
    out.n_test += s.n_test;
  }
  const auto n = static_cast<double>(per_word.size());
  out.precision /= n;
  out.recall /= n;
  out.accuracy /= n;
  out.f1 = f1_of(out.precision, out.recall);
  return out;
}

struct SweepParams {
  double train_fraction = 0.75;
  std::uint64_t seed = 42;
  double alpha = 1.0;
};

namespace detail {

inline std::vector<int> dedup_keep_order(const std::vector<int>& xs) {
  std::vector<int> out;
  for (int x : xs)
    if (std::find(out.begin(), out.end(), x) == out.end()) out.push_back(x);
  return out;
}

inline std::vector<Method> dedup_keep_order(const std::vector<Method>& xs) {
  std::vector<Method> out;
  for (Method x : xs)
    if (std::find(out.begin(), out.end(), x) == out.end()) out.push_back(x);
  return out;
}

}  // namespace detail

/// Splits once, then trains and scores one model per (target, method,
/// window) cell.  Rows come out grouped by window descending, methods in
/// the requested order.  Targets lacking a train or test partition are
/// skipped and listed in the warnings.
inline EvaluationReport sweep(const Corpus& corpus,
                              const std::vector<Method>& methods,
                              const std::vector<int>& windows,
                              const SweepParams& params,
                              const Resources& res) {
  if (corpus.instances.empty()) throw EvalError("cannot evaluate an empty corpus");
  if (params.alpha <= 0.0) throw ConfigError("smoothing alpha must be > 0");

  EvaluationReport report;
  SplitResult sr = split(corpus, params.train_fraction, params.seed);
  report.warnings = sr.warnings;

  std::map<Token, std::vector<Instance>> train_by, test_by;
  for (const Instance& inst : sr.train.instances)
    train_by[inst.target].push_back(inst);
  for (const Instance& inst : sr.test.instances)
    test_by[inst.target].push_back(inst);

  std::vector<Token> eligible;
  for (const auto& [target, insts] : train_by) {
    if (test_by.count(target) == 0) {
      report.warnings.push_back("target '" + target.surface() +
                                "': empty test partition, skipped");
      continue;
    }
    eligible.push_back(target);
  }
  for (const auto& [target, insts] : test_by)
    if (train_by.count(target) == 0)
      report.warnings.push_back("target '" + target.surface() +
                                "': empty train partition, skipped");
  if (eligible.empty())
    throw EvalError("no target has both train and test instances");

  // Build the (window desc, method order) grid.
  std::vector<int> win = detail::dedup_keep_order(windows);
  std::sort(win.begin(), win.end(), std::greater<>());
  std::vector<Method> meth = detail::dedup_keep_order(methods);
  std::vector<MethodSpec> cells;
  for (int w : win)
    for (Method m : meth) cells.push_back(MethodSpec{m, WindowSize(w)});

  auto eval_cell = [&](const MethodSpec& spec) {
    MethodResult row{spec, {}, {}};
    for (const Token& target : eligible) {
      NaiveBayesModel model =
          train(train_by.at(target), spec, res, params.alpha);
      ConfusionCounts cc = score_word(model, test_by.at(target), res);
      row.per_word.emplace(target, word_metrics(cc));
    }
    row.overall = aggregate(row.per_word);
    return row;
  };

  // Cells are independent; run them on a small pool and merge by index so
  // the output does not depend on scheduling.
  std::vector<MethodResult> results(cells.size(),
                                    MethodResult{MethodSpec{Method::Local,
                                                            WindowSize(1)},
                                                 {},
                                                 {}});
  std::atomic<std::size_t> next{0};
  std::exception_ptr first_error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= cells.size()) return;
      try {
        results[i] = eval_cell(cells[i]);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
        return;
      }
    }
  };
  const std::size_t n_threads =
      std::min<std::size_t>(cells.size(),
                            std::max(1u, std::thread::hardware_concurrency()));
  if (n_threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(n_threads);
    for (std::size_t t = 0; t < n_threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (first_error) std::rethrow_exception(first_error);

  report.rows = std::move(results);
  return report;
}

enum class ReportFormat { Text, Csv };

namespace detail {

// Two decimals, halves away from zero.
inline std::string fixed2(double x) {
  const double rounded = std::round(x * 100.0) / 100.0;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", rounded);
  return buf;
}

// Shortest round-trip decimal form; keeps CSV output byte-stable.
inline std::string shortest(double x) {
  char buf[32];
  auto [p, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, p);
}

inline std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    else out.push_back(c);
  }
  out.push_back('"');
  return out;
}

inline std::string pad_left(std::string s, std::size_t width) {
  if (s.size() < width) s.insert(0, width - s.size(), ' ');
  return s;
}

inline std::string pad_right(std::string s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

}  // namespace detail

/// Fixed-width table: Method, Window, P, R, F at two decimals; the window
/// value is printed once per group.
inline std::string render_report_text(const EvaluationReport& r) {
  using detail::fixed2;
  using detail::pad_left;
  using detail::pad_right;
  std::size_t method_w = 6;
  for (const MethodResult& row : r.rows)
    method_w = std::max(method_w, std::string(method_name(row.spec.method)).size());
  std::string out;
  out += pad_right("Method", method_w) + pad_left("Window", 8) +
         pad_left("P", 7) + pad_left("R", 7) + pad_left("F", 7) + "\n";
  int prev_window = -1;
  for (const MethodResult& row : r.rows) {
    const int w = row.spec.window.j;
    out += pad_right(std::string(method_name(row.spec.method)), method_w);
    out += pad_left(w == prev_window ? "" : std::to_string(w), 8);
    out += pad_left(fixed2(row.overall.precision), 7);
    out += pad_left(fixed2(row.overall.recall), 7);
    out += pad_left(fixed2(row.overall.f1), 7);
    out += "\n";
    prev_window = w;
  }
  return out;
}

/// Full-precision CSV; overall rows followed by their per-word rows,
/// flagged by the scope column.
inline std::string render_report_csv(const EvaluationReport& r) {
  using detail::csv_field;
  using detail::shortest;
  std::string out =
      "method,window,precision,recall,f1,accuracy,n_test,scope,target\n";
  auto emit = [&](const MethodSpec& spec, const Scores& s,
                  std::string_view scope, std::string_view target) {
    out += csv_field(method_name(spec.method));
    out += ',';
    out += std::to_string(spec.window.j);
    out += ',';
    out += shortest(s.precision);
    out += ',';
    out += shortest(s.recall);
    out += ',';
    out += shortest(s.f1);
    out += ',';
    out += shortest(s.accuracy);
    out += ',';
    out += std::to_string(s.n_test);
    out += ',';
    out += scope;
    out += ',';
    out += csv_field(target);
    out += '\n';
  };
  for (const MethodResult& row : r.rows) {
    emit(row.spec, row.overall, "overall", "");
    for (const auto& [target, s] : row.per_word)
      emit(row.spec, s, "word", target.surface());
  }
  return out;
}

inline std::string render_report(const EvaluationReport& r, ReportFormat f) {
  return f == ReportFormat::Text ? render_report_text(r)
                                 : render_report_csv(r);
}

}  // namespace hiwsd
