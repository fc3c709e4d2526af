#pragma once

#include <algorithm>
#include <map>
#include <ostream>
#include <string>
#include <unordered_map>
#include <vector>

#include "covsum/error.hpp"
#include "covsum/text.hpp"

namespace covsum {

struct RougeScores {
  double recall = 0.0;
  double precision = 0.0;
  double f1 = 0.0;
};

namespace detail {

inline RougeScores make_scores(double matched, double ref_total, double cand_total) {
  RougeScores s;
  s.recall = ref_total > 0.0 ? matched / ref_total : 0.0;
  s.precision = cand_total > 0.0 ? matched / cand_total : 0.0;
  s.f1 = (s.recall + s.precision) > 0.0
             ? 2.0 * s.recall * s.precision / (s.recall + s.precision)
             : 0.0;
  return s;
}

using UnitCounts = std::unordered_map<std::string, int>;

inline RougeScores clipped_overlap(const UnitCounts& cand, int cand_total,
                                   const UnitCounts& ref, int ref_total) {
  double matched = 0.0;
  for (const auto& [unit, count] : ref) {
    auto it = cand.find(unit);
    if (it != cand.end()) matched += std::min(count, it->second);
  }
  return make_scores(matched, ref_total, cand_total);
}

inline UnitCounts ngram_counts(const std::vector<std::string>& tokens, int n, int& total) {
  UnitCounts counts;
  total = 0;
  if (static_cast<int>(tokens.size()) < n) return counts;
  for (std::size_t i = 0; i + n <= tokens.size(); ++i) {
    std::string key = tokens[i];
    for (int k = 1; k < n; ++k) {
      key.push_back('\x1f');
      key += tokens[i + k];
    }
    ++counts[key];
    ++total;
  }
  return counts;
}

// Skip-bigrams with at most max_gap intervening tokens, plus unigrams.
inline UnitCounts su_counts(const std::vector<std::string>& tokens, int max_gap, int& total) {
  UnitCounts counts;
  total = 0;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    ++counts["U\x1f" + tokens[i]];
    ++total;
    for (std::size_t j = i + 1; j < tokens.size() && j - i - 1 <= static_cast<std::size_t>(max_gap);
         ++j) {
      ++counts["S\x1f" + tokens[i] + '\x1f' + tokens[j]];
      ++total;
    }
  }
  return counts;
}

inline int lcs_length(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  const std::size_t nb = b.size();
  std::vector<int> prev(nb + 1, 0), cur(nb + 1, 0);
  for (std::size_t i = 1; i <= a.size(); ++i) {
    for (std::size_t j = 1; j <= nb; ++j) {
      if (a[i - 1] == b[j - 1])
        cur[j] = prev[j - 1] + 1;
      else
        cur[j] = std::max(prev[j], cur[j - 1]);
    }
    std::swap(prev, cur);
  }
  return prev[nb];
}

// Componentwise max over the per-reference scores.
template <typename Fn>
inline RougeScores max_over_references(const std::vector<std::vector<std::string>>& references,
                                       Fn&& per_reference) {
  if (references.empty()) throw ValidationError("rouge: empty reference list");
  RougeScores best;
  for (const auto& ref : references) {
    const RougeScores s = per_reference(ref);
    best.recall = std::max(best.recall, s.recall);
    best.precision = std::max(best.precision, s.precision);
    best.f1 = std::max(best.f1, s.f1);
  }
  return best;
}

}  // namespace detail

/// ROUGE-N with clipped n-gram counts, n in {1, 2}.
inline RougeScores rouge_n(const std::vector<std::string>& candidate,
                           const std::vector<std::vector<std::string>>& references, int n) {
  if (n != 1 && n != 2) throw ValidationError("rouge_n: n must be 1 or 2");
  int cand_total = 0;
  const auto cand = detail::ngram_counts(candidate, n, cand_total);
  return detail::max_over_references(references, [&](const std::vector<std::string>& ref_tokens) {
    int ref_total = 0;
    const auto ref = detail::ngram_counts(ref_tokens, n, ref_total);
    return detail::clipped_overlap(cand, cand_total, ref, ref_total);
  });
}

/// ROUGE-SU4: skip-bigrams with at most four intervening tokens, plus
/// unigrams.
inline RougeScores rouge_su4(const std::vector<std::string>& candidate,
                             const std::vector<std::vector<std::string>>& references) {
  int cand_total = 0;
  const auto cand = detail::su_counts(candidate, 4, cand_total);
  return detail::max_over_references(references, [&](const std::vector<std::string>& ref_tokens) {
    int ref_total = 0;
    const auto ref = detail::su_counts(ref_tokens, 4, ref_total);
    return detail::clipped_overlap(cand, cand_total, ref, ref_total);
  });
}

/// ROUGE-L over the whole token sequences.
inline RougeScores rouge_l(const std::vector<std::string>& candidate,
                           const std::vector<std::vector<std::string>>& references) {
  return detail::max_over_references(references, [&](const std::vector<std::string>& ref_tokens) {
    const int lcs = detail::lcs_length(candidate, ref_tokens);
    return detail::make_scores(lcs, static_cast<double>(ref_tokens.size()),
                               static_cast<double>(candidate.size()));
  });
}

struct TaskRouge {
  RougeScores r1, r2, rsu4, rl;
};

struct RougeReport {
  std::map<std::string, TaskRouge> per_task;
  TaskRouge corpus_mean;
};

inline TaskRouge score_pair(const std::vector<std::string>& candidate,
                            const std::vector<std::vector<std::string>>& references) {
  TaskRouge t;
  t.r1 = rouge_n(candidate, references, 1);
  t.r2 = rouge_n(candidate, references, 2);
  t.rsu4 = rouge_su4(candidate, references);
  t.rl = rouge_l(candidate, references);
  return t;
}

/// Scores one candidate text per task against that task's references and
/// averages over tasks.
inline RougeReport score_tasks(
    const std::map<std::string, std::string>& candidate_text_by_task,
    const std::map<std::string, std::vector<std::string>>& reference_texts_by_task) {
  RougeReport report;
  auto add = [](RougeScores& acc, const RougeScores& s) {
    acc.recall += s.recall;
    acc.precision += s.precision;
    acc.f1 += s.f1;
  };
  int count = 0;
  for (const auto& [task_id, cand_text] : candidate_text_by_task) {
    auto it = reference_texts_by_task.find(task_id);
    if (it == reference_texts_by_task.end() || it->second.empty())
      throw ValidationError("rouge: task " + task_id + " has no reference summaries");
    std::vector<std::vector<std::string>> refs;
    for (const auto& text : it->second) refs.push_back(tokenize(text));
    const TaskRouge t = score_pair(tokenize(cand_text), refs);
    report.per_task[task_id] = t;
    add(report.corpus_mean.r1, t.r1);
    add(report.corpus_mean.r2, t.r2);
    add(report.corpus_mean.rsu4, t.rsu4);
    add(report.corpus_mean.rl, t.rl);
    ++count;
  }
  if (count > 0) {
    auto scale = [&](RougeScores& s) {
      s.recall /= count;
      s.precision /= count;
      s.f1 /= count;
    };
    scale(report.corpus_mean.r1);
    scale(report.corpus_mean.r2);
    scale(report.corpus_mean.rsu4);
    scale(report.corpus_mean.rl);
  }
  return report;
}

/// CSV rows: corpus,system,task_id,metric,recall,precision,f1. The corpus
/// mean appears with task_id "corpus_mean".
inline void write_rouge_csv(const RougeReport& report, const std::string& corpus_id,
                            const std::string& system, std::ostream& out) {
  out << "corpus,system,task_id,metric,recall,precision,f1\n";
  auto row = [&](const std::string& task, const char* metric, const RougeScores& s) {
    out << corpus_id << ',' << system << ',' << task << ',' << metric << ',' << s.recall << ','
        << s.precision << ',' << s.f1 << '\n';
  };
  for (const auto& [task_id, t] : report.per_task) {
    row(task_id, "rouge_1", t.r1);
    row(task_id, "rouge_2", t.r2);
    row(task_id, "rouge_su4", t.rsu4);
    row(task_id, "rouge_l", t.rl);
  }
  row("corpus_mean", "rouge_1", report.corpus_mean.r1);
  row("corpus_mean", "rouge_2", report.corpus_mean.r2);
  row("corpus_mean", "rouge_su4", report.corpus_mean.rsu4);
  row("corpus_mean", "rouge_l", report.corpus_mean.rl);
}

}  // namespace covsum
