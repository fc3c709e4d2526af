#pragma once

#include <cstdint>
#include <fstream>
#include <set>
#include <sstream>
#include <string>

#include "covsum/error.hpp"

namespace covsum {

using StopwordSet = std::set<std::string>;

// Fixed English function-word list, versioned with the library so that
// concept extraction is reproducible without any external files.
inline const StopwordSet& default_stopwords() {
  static const StopwordSet words = {
      "a",       "about",  "above",   "after",   "again",   "against", "all",
      "am",      "an",     "and",     "any",     "are",     "aren't",  "as",
      "at",      "be",     "because", "been",    "before",  "being",   "below",
      "between", "both",   "but",     "by",      "can",     "cannot",  "could",
      "couldn't", "did",   "didn't",  "do",      "does",    "doesn't", "doing",
      "don't",   "down",   "during",  "each",    "few",     "for",     "from",
      "further", "had",    "hadn't",  "has",     "hasn't",  "have",    "haven't",
      "having",  "he",     "he'd",    "he'll",   "he's",    "her",     "here",
      "here's",  "hers",   "herself", "him",     "himself", "his",     "how",
      "how's",   "i",      "i'd",     "i'll",    "i'm",     "i've",    "if",
      "in",      "into",   "is",      "isn't",   "it",      "it's",    "its",
      "itself",  "let's",  "me",      "more",    "most",    "mustn't", "my",
      "myself",  "no",     "nor",     "not",     "of",      "off",     "on",
      "once",    "only",   "or",      "other",   "ought",   "our",     "ours",
      "ourselves", "out",  "over",    "own",     "same",    "shan't",  "she",
      "she'd",   "she'll", "she's",   "should",  "shouldn't", "so",    "some",
      "such",    "than",   "that",    "that's",  "the",     "their",   "theirs",
      "them",    "themselves", "then", "there",  "there's", "these",   "they",
      "they'd",  "they'll", "they're", "they've", "this",   "those",   "through",
      "to",      "too",    "under",   "until",   "up",      "very",    "was",
      "wasn't",  "we",     "we'd",    "we'll",   "we're",   "we've",   "were",
      "weren't", "what",   "what's",  "when",    "when's",  "where",   "where's",
      "which",   "while",  "who",     "who's",   "whom",    "why",     "why's",
      "with",    "won't",  "would",   "wouldn't", "you",    "you'd",   "you'll",
      "you're",  "you've", "your",    "yours",   "yourself", "yourselves",
  };
  return words;
}

/// Loads a stopword list: one lowercase word per line, blank lines ignored.
inline StopwordSet load_stopwords(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open stopword list: " + path);
  StopwordSet words;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty()) words.insert(line);
  }
  return words;
}

inline std::uint64_t fnv1a64(std::string_view data) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

/// Hash of the canonical one-word-per-line serialization, recorded in run
/// manifests so outputs can be traced back to the exact list used.
inline std::string stopwords_hash(const StopwordSet& words) {
  std::ostringstream oss;
  for (const auto& w : words) oss << w << '\n';
  std::ostringstream hex;
  hex << "fnv1a64:" << std::hex << fnv1a64(oss.str());
  return hex.str();
}

}  // namespace covsum
