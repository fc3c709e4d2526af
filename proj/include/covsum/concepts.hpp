#pragma once

#include <algorithm>
#include <map>
#include <ostream>
#include <set>
#include <string>
#include <vector>

#include "covsum/corpus.hpp"
#include "covsum/error.hpp"
#include "covsum/stopwords.hpp"
#include "covsum/text.hpp"

namespace covsum {

// A concept: adjacent word pair where at least one word is not a stopword.
struct Bigram {
  std::string first;
  std::string second;

  auto operator<=>(const Bigram&) const = default;
};

inline std::string to_string(const Bigram& b) { return b.first + " " + b.second; }

/// All adjacent token pairs, minus the pairs made of two stopwords.
/// Pairs with one stopword are kept.
inline std::vector<Bigram> extract_bigrams(const std::vector<std::string>& tokens,
                                           const StopwordSet& stopwords) {
  std::vector<Bigram> bigrams;
  if (tokens.size() < 2) return bigrams;
  bigrams.reserve(tokens.size() - 1);
  for (std::size_t i = 0; i + 1 < tokens.size(); ++i) {
    if (stopwords.count(tokens[i]) && stopwords.count(tokens[i + 1])) continue;
    bigrams.push_back(Bigram{tokens[i], tokens[i + 1]});
  }
  return bigrams;
}

// Concept vocabulary with weights. Concepts are kept sorted so that row
// indices are deterministic across runs.
struct ConceptTable {
  std::vector<Bigram> concepts;          // sorted lexicographically
  std::map<Bigram, double> weight;       // w_i, term frequency
  std::map<Bigram, int> corpus_freq;     // occurrence count within scope
  int min_freq = 1;

  bool empty() const { return concepts.empty(); }

  int index_of(const Bigram& b) const {
    auto it = std::lower_bound(concepts.begin(), concepts.end(), b);
    if (it == concepts.end() || !(*it == b)) return -1;
    return static_cast<int>(it - concepts.begin());
  }
};

// Binary concept-sentence co-occurrence matrix in sparse form.
// Row i = concept, column j = sentence; omega is the support of A.
struct CoocMatrix {
  int n_concepts = 0;   // N
  int n_sentences = 0;  // M
  std::vector<std::pair<int, int>> omega;       // sorted (row, col) of the 1-entries
  std::vector<std::vector<int>> rows;           // row -> columns with A_ij = 1
  std::vector<std::vector<int>> cols;           // col -> rows with A_ij = 1
  std::vector<int> sentence_ids;                // column -> sentence_id

  double at(int i, int j) const {
    const auto& r = rows[i];
    return std::binary_search(r.begin(), r.end(), j) ? 1.0 : 0.0;
  }

  int column_of(int sentence_id) const {
    for (int j = 0; j < n_sentences; ++j)
      if (sentence_ids[j] == sentence_id) return j;
    return -1;
  }
};

/// Counts bigram occurrences over the sentences of the given tasks and
/// keeps the ones with at least min_freq occurrences. A bigram occurring
/// twice in one sentence counts twice. min_freq=1 disables the cutoff.
inline ConceptTable build_concept_table(const Corpus& corpus, const std::set<std::string>& scope,
                                        int min_freq, const StopwordSet& stopwords) {
  if (scope.empty()) throw ValidationError("build_concept_table: empty task scope");
  std::map<Bigram, int> freq;
  for (const auto& task : corpus.tasks) {
    if (!scope.count(task.task_id)) continue;
    for (const auto& sentence : task.sentences)
      for (const auto& b : extract_bigrams(sentence.tokens, stopwords)) ++freq[b];
  }
  ConceptTable table;
  table.min_freq = min_freq;
  for (const auto& [bigram, count] : freq) {
    if (count < min_freq) continue;
    table.concepts.push_back(bigram);
    table.weight[bigram] = static_cast<double>(count);
    table.corpus_freq[bigram] = count;
  }
  return table;
}

inline std::set<std::string> all_task_ids(const Corpus& corpus) {
  std::set<std::string> ids;
  for (const auto& t : corpus.tasks) ids.insert(t.task_id);
  return ids;
}

/// Binary membership matrix over the given sentences: A_ij = 1 iff concept
/// i appears in sentence j.
inline CoocMatrix build_matrix(const ConceptTable& table,
                               const std::vector<const SentenceRecord*>& sentences,
                               const StopwordSet& stopwords) {
  if (table.empty()) throw ValidationError("build_matrix: empty concept table");
  CoocMatrix m;
  m.n_concepts = static_cast<int>(table.concepts.size());
  m.n_sentences = static_cast<int>(sentences.size());
  m.rows.resize(m.n_concepts);
  m.cols.resize(m.n_sentences);
  m.sentence_ids.resize(m.n_sentences);
  for (int j = 0; j < m.n_sentences; ++j) {
    m.sentence_ids[j] = sentences[j]->sentence_id;
    std::set<int> concept_rows;
    for (const auto& b : extract_bigrams(sentences[j]->tokens, stopwords)) {
      const int i = table.index_of(b);
      if (i >= 0) concept_rows.insert(i);
    }
    for (int i : concept_rows) {
      m.rows[i].push_back(j);
      m.cols[j].push_back(i);
    }
  }
  for (int i = 0; i < m.n_concepts; ++i)
    for (int j : m.rows[i]) m.omega.emplace_back(i, j);
  std::sort(m.omega.begin(), m.omega.end());
  return m;
}

inline CoocMatrix build_matrix(const ConceptTable& table, const Corpus& corpus,
                               const std::set<std::string>& scope,
                               const StopwordSet& stopwords) {
  std::vector<const SentenceRecord*> sentences;
  for (const auto& task : corpus.tasks) {
    if (!scope.count(task.task_id)) continue;
    for (const auto& s : task.sentences) sentences.push_back(&s);
  }
  return build_matrix(table, sentences, stopwords);
}

/// Coordinate triplet dump: header "N M NNZ", then one "i j value" line
/// per nonzero.
inline void write_coo(const CoocMatrix& m, std::ostream& out) {
  out << m.n_concepts << ' ' << m.n_sentences << ' ' << m.omega.size() << '\n';
  for (const auto& [i, j] : m.omega) out << i << ' ' << j << " 1\n";
}

}  // namespace covsum
