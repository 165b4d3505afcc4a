#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "hiwsd/corpus.hpp"
#include "hiwsd/errors.hpp"
#include "hiwsd/resources.hpp"
#include "hiwsd/text.hpp"

namespace hiwsd {

/// Count of context tokens taken on each side of the target.
struct WindowSize {
  int j;

  explicit WindowSize(int size) : j(size) {
    if (j < 1) throw ConfigError("window size must be >= 1");
  }

  auto operator<=>(const WindowSize&) const = default;
};

// One letter per extractor; the letter prefixes the serialized atom so
// equal surface strings from different extractors stay distinct features.
enum class FeatureNamespace : char {
  Bag = 'b',
  Colloc = 'c',
  Local = 'l',
  BagNoStop = 's',
  Vibhakti = 'v',
};

/// An atomic feature.  `position` is meaningful only for the vibhakti
/// namespace, where the slot offset is part of the feature identity.
struct FeatureAtom {
  FeatureNamespace ns;
  int position = 0;
  std::string payload;

  auto operator<=>(const FeatureAtom&) const = default;

  /// "v:<position>:<payload>" for vibhakti atoms, "<ns>:<payload>" otherwise.
  std::string key() const {
    std::string out(1, static_cast<char>(ns));
    out.push_back(':');
    if (ns == FeatureNamespace::Vibhakti) {
      out += std::to_string(position);
      out.push_back(':');
    }
    out += payload;
    return out;
  }

  static FeatureAtom from_key(std::string_view key) {
    if (key.size() < 2 || key[1] != ':')
      throw ParseError("malformed feature key: '" + std::string(key) + "'");
    const char c = key[0];
    FeatureAtom atom;
    switch (c) {
      case 'b': atom.ns = FeatureNamespace::Bag; break;
      case 'c': atom.ns = FeatureNamespace::Colloc; break;
      case 'l': atom.ns = FeatureNamespace::Local; break;
      case 's': atom.ns = FeatureNamespace::BagNoStop; break;
      case 'v': atom.ns = FeatureNamespace::Vibhakti; break;
      default:
        throw ParseError("unknown feature namespace in key: '" +
                         std::string(key) + "'");
    }
    std::string_view rest = key.substr(2);
    if (atom.ns == FeatureNamespace::Vibhakti) {
      auto colon = rest.find(':');
      if (colon == std::string_view::npos)
        throw ParseError("malformed vibhakti feature key: '" +
                         std::string(key) + "'");
      try {
        atom.position = std::stoi(std::string(rest.substr(0, colon)));
      } catch (const std::exception&) {
        throw ParseError("bad position in feature key: '" + std::string(key) +
                         "'");
      }
      rest = rest.substr(colon + 1);
    }
    atom.payload.assign(rest);
    return atom;
  }
};

/// A multiset of feature atoms; duplicates are counted.
class FeatureSet {
 public:
  void add(FeatureAtom atom, int n = 1) { counts_[std::move(atom)] += n; }

  void merge(const FeatureSet& other) {
    for (const auto& [atom, n] : other.counts_) counts_[atom] += n;
  }

  /// Total number of atoms, multiplicity included.
  std::int64_t size() const {
    std::int64_t total = 0;
    for (const auto& [atom, n] : counts_) total += n;
    return total;
  }

  bool empty() const { return counts_.empty(); }

  const std::map<FeatureAtom, int>& counts() const { return counts_; }

  bool operator==(const FeatureSet&) const = default;

 private:
  std::map<FeatureAtom, int> counts_;
};

enum class Method {
  Local,
  Colloc,
  Bag,
  BagNoStop,
  Vibhakti,
  LocalColloc,
  CollocBagNoStop,
  LocalCollocVibhakti,
};

inline constexpr std::array<std::pair<Method, std::string_view>, 8>
    kMethodNames{{
        {Method::Local, "l"},
        {Method::Colloc, "c"},
        {Method::Bag, "b"},
        {Method::BagNoStop, "bs"},
        {Method::Vibhakti, "v"},
        {Method::LocalColloc, "l+c"},
        {Method::CollocBagNoStop, "c+bs"},
        {Method::LocalCollocVibhakti, "l+c+v"},
    }};

inline std::string_view method_name(Method m) {
  for (const auto& [method, name] : kMethodNames)
    if (method == m) return name;
  throw ConfigError("unknown method");
}

inline Method method_from_name(std::string_view name) {
  for (const auto& [method, known] : kMethodNames)
    if (known == name) return method;
  std::string valid;
  for (const auto& [method, known] : kMethodNames) {
    if (!valid.empty()) valid += ", ";
    valid += known;
  }
  throw ConfigError("unknown method '" + std::string(name) +
                    "' (valid: " + valid + ")");
}

/// Which extractor(s) to run and at what window size.
struct MethodSpec {
  Method method;
  WindowSize window;

  auto operator<=>(const MethodSpec&) const = default;
};

namespace detail {

// Inclusive token-index bounds of the +/-j window around the target.
inline std::pair<std::size_t, std::size_t> window_bounds(
    const TokenSequence& tokens, std::size_t target_index, WindowSize w) {
  if (target_index >= tokens.size())
    throw ValidationError("target index out of range");
  const auto j = static_cast<std::size_t>(w.j);
  const std::size_t lo = target_index >= j ? target_index - j : 0;
  const std::size_t hi = std::min(tokens.size() - 1, target_index + j);
  return {lo, hi};
}

}  // namespace detail

/// The window tokens themselves, target included, truncated at the
/// sequence boundaries.
inline FeatureSet local_context(const TokenSequence& tokens,
                                std::size_t target_index, WindowSize w) {
  auto [lo, hi] = detail::window_bounds(tokens, target_index, w);
  FeatureSet fs;
  for (std::size_t i = lo; i <= hi; ++i)
    fs.add({FeatureNamespace::Local, 0, tokens[i].surface()});
  return fs;
}

/// Every contiguous n-gram of 2..j+1 tokens that lies inside the window
/// and covers the target position, space-joined in source order.
inline FeatureSet collocation(const TokenSequence& tokens,
                              std::size_t target_index, WindowSize w) {
  auto [lo, hi] = detail::window_bounds(tokens, target_index, w);
  FeatureSet fs;
  const auto max_len = static_cast<std::size_t>(w.j) + 1;
  for (std::size_t len = 2; len <= max_len; ++len) {
    for (std::size_t start = lo; start + len - 1 <= hi; ++start) {
      const std::size_t end = start + len - 1;
      if (start <= target_index && target_index <= end)
        fs.add({FeatureNamespace::Colloc, 0,
                join_surfaces(tokens, start, end + 1)});
    }
  }
  return fs;
}

/// Window tokens as an order-free bag, target included.
inline FeatureSet bag_of_words(const TokenSequence& tokens,
                               std::size_t target_index, WindowSize w) {
  auto [lo, hi] = detail::window_bounds(tokens, target_index, w);
  FeatureSet fs;
  for (std::size_t i = lo; i <= hi; ++i)
    fs.add({FeatureNamespace::Bag, 0, tokens[i].surface()});
  return fs;
}

/// Bag of window tokens with stopwords dropped; no placeholders emitted.
inline FeatureSet bag_no_stop(const TokenSequence& tokens,
                              std::size_t target_index, WindowSize w,
                              const std::set<std::string>& stopwords) {
  auto [lo, hi] = detail::window_bounds(tokens, target_index, w);
  FeatureSet fs;
  for (std::size_t i = lo; i <= hi; ++i)
    if (stopwords.count(tokens[i].surface()) == 0)
      fs.add({FeatureNamespace::BagNoStop, 0, tokens[i].surface()});
  return fs;
}

/// One positional atom per in-bounds context slot (target slot excluded):
/// the token itself when it is a vibhakti, the empty string otherwise.
inline FeatureSet vibhakti_features(const TokenSequence& tokens,
                                    std::size_t target_index, WindowSize w,
                                    const std::set<std::string>& vibhakti) {
  if (target_index >= tokens.size())
    throw ValidationError("target index out of range");
  FeatureSet fs;
  for (int off = -w.j; off <= w.j; ++off) {
    if (off == 0) continue;
    const auto signed_idx = static_cast<std::int64_t>(target_index) + off;
    if (signed_idx < 0 ||
        signed_idx >= static_cast<std::int64_t>(tokens.size()))
      continue;
    const std::string& surface =
        tokens[static_cast<std::size_t>(signed_idx)].surface();
    fs.add({FeatureNamespace::Vibhakti, off,
            vibhakti.count(surface) ? surface : std::string()});
  }
  return fs;
}

// Instance-level conveniences.
inline FeatureSet local_context(const Instance& inst, WindowSize w) {
  return local_context(inst.tokens, inst.target_index, w);
}
inline FeatureSet collocation(const Instance& inst, WindowSize w) {
  return collocation(inst.tokens, inst.target_index, w);
}
inline FeatureSet bag_of_words(const Instance& inst, WindowSize w) {
  return bag_of_words(inst.tokens, inst.target_index, w);
}
inline FeatureSet bag_no_stop(const Instance& inst, WindowSize w,
                              const std::set<std::string>& stopwords) {
  return bag_no_stop(inst.tokens, inst.target_index, w, stopwords);
}
inline FeatureSet vibhakti_features(const Instance& inst, WindowSize w,
                                    const std::set<std::string>& vibhakti) {
  return vibhakti_features(inst.tokens, inst.target_index, w, vibhakti);
}

/// Multiset union; atoms from different extractors never collapse because
/// the namespace is part of the identity.
inline FeatureSet combine(std::initializer_list<FeatureSet> parts) {
  FeatureSet out;
  for (const FeatureSet& p : parts) out.merge(p);
  return out;
}

inline FeatureSet combine(const std::vector<FeatureSet>& parts) {
  FeatureSet out;
  for (const FeatureSet& p : parts) out.merge(p);
  return out;
}

/// Runs the extractor(s) selected by `spec` over one occurrence.
inline FeatureSet extract(const TokenSequence& tokens,
                          std::size_t target_index, const MethodSpec& spec,
                          const Resources& res) {
  const WindowSize w = spec.window;
  switch (spec.method) {
    case Method::Local:
      return local_context(tokens, target_index, w);
    case Method::Colloc:
      return collocation(tokens, target_index, w);
    case Method::Bag:
      return bag_of_words(tokens, target_index, w);
    case Method::BagNoStop:
      return bag_no_stop(tokens, target_index, w, res.stopwords);
    case Method::Vibhakti:
      return vibhakti_features(tokens, target_index, w, res.vibhakti);
    case Method::LocalColloc:
      return combine({local_context(tokens, target_index, w),
                      collocation(tokens, target_index, w)});
    case Method::CollocBagNoStop:
      return combine({collocation(tokens, target_index, w),
                      bag_no_stop(tokens, target_index, w, res.stopwords)});
    case Method::LocalCollocVibhakti:
      return combine({local_context(tokens, target_index, w),
                      collocation(tokens, target_index, w),
                      vibhakti_features(tokens, target_index, w, res.vibhakti)});
  }
  throw ConfigError("unknown method");
}

inline FeatureSet extract(const Instance& inst, const MethodSpec& spec,
                          const Resources& res) {
  return extract(inst.tokens, inst.target_index, spec, res);
}

/// Namespace-stripped payloads for fixture comparison and debugging.
/// Atoms come out in canonical order, so a pure vibhakti set renders by
/// ascending slot position.
inline std::vector<std::string> render(const FeatureSet& fs) {
  std::vector<std::string> out;
  for (const auto& [atom, n] : fs.counts())
    for (int i = 0; i < n; ++i) out.push_back(atom.payload);
  return out;
}

}  // namespace hiwsd
