#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

namespace covsum {

/// Lowercases, splits on whitespace, strips leading/trailing punctuation
/// from each token and drops tokens that end up empty.
inline std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> tokens;
  std::size_t i = 0;
  const std::size_t n = text.size();
  while (i < n) {
    while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    std::size_t begin = i;
    while (i < n && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (begin == i) continue;
    std::size_t end = i;
    while (begin < end && std::ispunct(static_cast<unsigned char>(text[begin]))) ++begin;
    while (end > begin && std::ispunct(static_cast<unsigned char>(text[end - 1]))) --end;
    if (begin == end) continue;
    std::string tok;
    tok.reserve(end - begin);
    for (std::size_t k = begin; k < end; ++k)
      tok.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(text[k]))));
    tokens.push_back(std::move(tok));
  }
  return tokens;
}

/// Number of whitespace-separated tokens; the word count used for
/// sentence lengths and summary budgets.
inline int word_count(std::string_view text) {
  int count = 0;
  bool in_word = false;
  for (char c : text) {
    bool space = std::isspace(static_cast<unsigned char>(c)) != 0;
    if (!space && !in_word) ++count;
    in_word = !space;
  }
  return count;
}

}  // namespace covsum
