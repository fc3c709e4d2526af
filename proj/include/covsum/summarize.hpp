#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <string>
#include <unordered_map>
#include <vector>

#include "covsum/completion.hpp"
#include "covsum/concepts.hpp"
#include "covsum/corpus.hpp"
#include "covsum/solver.hpp"
#include "covsum/stopwords.hpp"

namespace covsum {

enum class SystemKind { ilp, ilp_mc, sumbasic, lexrank };

inline const char* system_name(SystemKind s) {
  switch (s) {
    case SystemKind::ilp: return "ilp";
    case SystemKind::ilp_mc: return "ilp_mc";
    case SystemKind::sumbasic: return "sumbasic";
    case SystemKind::lexrank: return "lexrank";
  }
  return "?";
}

struct Summary {
  std::string task_id;
  std::vector<int> sentence_ids;  // original document order
  std::string text;
  int word_count = 0;
  SystemKind system = SystemKind::ilp;
  std::map<std::string, std::string> meta;
};

namespace detail {

inline Summary make_summary(const Task& task, const std::vector<int>& chosen_positions,
                            SystemKind system) {
  Summary s;
  s.task_id = task.task_id;
  s.system = system;
  std::vector<int> positions = chosen_positions;
  std::sort(positions.begin(), positions.end());
  for (int pos : positions) {
    const auto& sentence = task.sentences[pos];
    s.sentence_ids.push_back(sentence.sentence_id);
    if (!s.text.empty()) s.text.push_back(' ');
    s.text += sentence.raw_text;
    s.word_count += sentence.word_count;
  }
  return s;
}

// Column sub-block of the scope matrix for one task, in task sentence
// order. getter(i, col) reads the scope matrix entry.
template <typename Getter>
inline CoverageInstance task_instance(const Task& task, const ConceptTable& table,
                                      const CoocMatrix& scope_matrix, int budget,
                                      Getter&& getter) {
  std::unordered_map<int, int> column_of;
  for (int j = 0; j < scope_matrix.n_sentences; ++j)
    column_of.emplace(scope_matrix.sentence_ids[j], j);

  CoverageInstance inst;
  const int n = scope_matrix.n_concepts;
  const int m = static_cast<int>(task.sentences.size());
  inst.matrix = Matrix(n, m);
  inst.budget = budget;
  inst.weights.reserve(n);
  for (const auto& bigram : table.concepts) inst.weights.push_back(table.weight.at(bigram));
  for (int t = 0; t < m; ++t) {
    auto it = column_of.find(task.sentences[t].sentence_id);
    if (it == column_of.end())
      throw ValidationError("summarize: sentence " +
                            std::to_string(task.sentences[t].sentence_id) +
                            " is not a column of the co-occurrence matrix");
    for (int i = 0; i < n; ++i) inst.matrix(i, t) = getter(i, it->second);
    inst.lengths.push_back(task.sentences[t].word_count);
  }
  return inst;
}

}  // namespace detail

/// Concept-coverage summarizer on the binary co-occurrence matrix.
inline Summary summarize_ilp(const Task& task, const ConceptTable& table,
                             const CoocMatrix& matrix, int budget,
                             SolveMode mode = SolveMode::exact,
                             std::uint64_t node_limit = 5'000'000) {
  if (table.empty()) {
    Summary s;
    s.task_id = task.task_id;
    s.system = SystemKind::ilp;
    s.meta["warning"] = "empty concept table";
    return s;
  }
  CoverageInstance inst = detail::task_instance(
      task, table, matrix, budget, [&](int i, int col) { return matrix.at(i, col); });
  const Selection sel = solve(inst, mode, node_limit);
  Summary s = detail::make_summary(task, sel.chosen, SystemKind::ilp);
  s.meta["solver_mode"] = mode == SolveMode::exact ? "exact" : "greedy";
  s.meta["optimal"] = sel.optimal ? "true" : "false";
  if (mode == SolveMode::exact && !sel.optimal) s.meta["warning"] = "node limit exceeded";
  return s;
}

/// Concept-coverage summarizer on the completed matrix.
inline Summary summarize_ilp_mc(const Task& task, const ConceptTable& table,
                                const CompletedMatrix& completed, const CoocMatrix& matrix,
                                int budget, double lambda, SolveMode mode = SolveMode::exact,
                                std::uint64_t node_limit = 5'000'000) {
  if (table.empty()) {
    Summary s;
    s.task_id = task.task_id;
    s.system = SystemKind::ilp_mc;
    s.meta["warning"] = "empty concept table";
    return s;
  }
  CoverageInstance inst = detail::task_instance(
      task, table, matrix, budget, [&](int i, int col) { return completed.a_hat(i, col); });
  const Selection sel = solve(inst, mode, node_limit);
  Summary s = detail::make_summary(task, sel.chosen, SystemKind::ilp_mc);
  s.meta["lambda"] = std::to_string(lambda);
  s.meta["completion_iterations"] = std::to_string(completed.iterations_run);
  s.meta["solver_mode"] = mode == SolveMode::exact ? "exact" : "greedy";
  s.meta["optimal"] = sel.optimal ? "true" : "false";
  if (mode == SolveMode::exact && !sel.optimal) s.meta["warning"] = "node limit exceeded";
  return s;
}

/// SumBasic: sentences are picked for the currently most probable word,
/// then the used word probabilities are squared.
inline Summary summarize_sumbasic(const Task& task, int budget, const StopwordSet& stopwords) {
  const int m = static_cast<int>(task.sentences.size());
  std::vector<std::vector<std::string>> content(m);  // non-stopword tokens
  std::map<std::string, double> prob;
  long total = 0;
  for (int j = 0; j < m; ++j) {
    for (const auto& tok : task.sentences[j].tokens) {
      if (stopwords.count(tok)) continue;
      content[j].push_back(tok);
      prob[tok] += 1.0;
      ++total;
    }
  }
  for (auto& [word, p] : prob) p /= std::max<long>(total, 1);

  std::vector<bool> taken(m, false);
  std::vector<int> chosen;
  int used = 0;
  while (true) {
    auto sentence_score = [&](int j) {
      if (content[j].empty()) return 0.0;
      double sum = 0.0;
      for (const auto& tok : content[j]) sum += prob.at(tok);
      return sum / static_cast<double>(content[j].size());
    };
    // Words by descending probability; map order makes ties lexicographic.
    std::vector<const std::string*> words;
    for (const auto& [word, p] : prob)
      if (p > 0.0) words.push_back(&word);
    std::stable_sort(words.begin(), words.end(),
                     [&](const std::string* a, const std::string* b) {
                       return prob.at(*a) > prob.at(*b);
                     });
    int pick = -1;
    for (const std::string* word : words) {
      double best_score = -1.0;
      for (int j = 0; j < m; ++j) {
        if (taken[j] || used + task.sentences[j].word_count > budget) continue;
        if (std::find(content[j].begin(), content[j].end(), *word) == content[j].end()) continue;
        const double score = sentence_score(j);
        if (score > best_score) {
          best_score = score;
          pick = j;
        }
      }
      if (pick >= 0) break;
    }
    if (pick < 0) break;
    taken[pick] = true;
    chosen.push_back(pick);
    used += task.sentences[pick].word_count;
    std::set<std::string> seen(content[pick].begin(), content[pick].end());
    for (const auto& word : seen) prob[word] *= prob[word];
  }
  return detail::make_summary(task, chosen, SystemKind::sumbasic);
}

/// LexRank: eigenvector centrality on the thresholded tf-idf cosine graph,
/// then sentences are taken by descending centrality while they fit.
inline Summary summarize_lexrank(const Task& task, int budget, double threshold = 0.1,
                                 double damping = 0.85) {
  const int m = static_cast<int>(task.sentences.size());
  if (m == 0) return detail::make_summary(task, {}, SystemKind::lexrank);

  std::map<std::string, int> df;
  std::vector<std::map<std::string, int>> tf(m);
  for (int j = 0; j < m; ++j) {
    for (const auto& tok : task.sentences[j].tokens) ++tf[j][tok];
    for (const auto& [word, count] : tf[j]) ++df[word];
  }
  std::map<std::string, double> idf;
  for (const auto& [word, count] : df)
    idf[word] = std::log(static_cast<double>(m) / static_cast<double>(count));

  std::vector<std::map<std::string, double>> vec(m);
  std::vector<double> norm(m, 0.0);
  for (int j = 0; j < m; ++j) {
    for (const auto& [word, count] : tf[j]) {
      const double v = count * idf[word];
      vec[j][word] = v;
      norm[j] += v * v;
    }
    norm[j] = std::sqrt(norm[j]);
  }
  auto cosine = [&](int a, int b) {
    if (norm[a] == 0.0 || norm[b] == 0.0) return 0.0;
    const auto& small = vec[a].size() <= vec[b].size() ? vec[a] : vec[b];
    const auto& large = vec[a].size() <= vec[b].size() ? vec[b] : vec[a];
    double dot = 0.0;
    for (const auto& [word, v] : small) {
      auto it = large.find(word);
      if (it != large.end()) dot += v * it->second;
    }
    return dot / (norm[a] * norm[b]);
  };

  std::vector<std::vector<int>> adj(m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      if (cosine(a, b) >= threshold) adj[a].push_back(b);

  std::vector<double> p(m, 1.0 / m), next(m, 0.0);
  for (int iter = 0; iter < 10000; ++iter) {
    std::fill(next.begin(), next.end(), (1.0 - damping) / m);
    double dangling = 0.0;
    for (int a = 0; a < m; ++a) {
      if (adj[a].empty()) {
        dangling += p[a];
        continue;
      }
      const double share = damping * p[a] / static_cast<double>(adj[a].size());
      for (int b : adj[a]) next[b] += share;
    }
    if (dangling > 0.0)
      for (int b = 0; b < m; ++b) next[b] += damping * dangling / m;
    double delta = 0.0;
    for (int b = 0; b < m; ++b) delta += std::abs(next[b] - p[b]);
    std::swap(p, next);
    if (delta < 1e-8) break;
  }

  std::vector<int> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return p[a] > p[b]; });

  std::vector<int> chosen;
  int used = 0;
  for (int j : order) {
    if (used + task.sentences[j].word_count > budget) continue;
    chosen.push_back(j);
    used += task.sentences[j].word_count;
  }
  return detail::make_summary(task, chosen, SystemKind::lexrank);
}

}  // namespace covsum
