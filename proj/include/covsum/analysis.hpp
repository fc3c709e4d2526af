#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <ostream>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "covsum/completion.hpp"
#include "covsum/concepts.hpp"
#include "covsum/corpus.hpp"
#include "covsum/error.hpp"
#include "covsum/rouge.hpp"
#include "covsum/summarize.hpp"

namespace covsum {

// ---------------------------------------------------------------------------
// Paired t-test
// ---------------------------------------------------------------------------

struct TTestResult {
  double t_statistic = 0.0;
  double p_value = 1.0;
  int n = 0;
  bool significant_05 = false;
};

namespace detail {

inline double betacf(double a, double b, double x) {
  const int max_iter = 300;
  const double eps = 3e-12, fpmin = 1e-300;
  const double qab = a + b, qap = a + 1.0, qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::abs(d) < fpmin) d = fpmin;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= max_iter; ++m) {
    const int m2 = 2 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::abs(d) < fpmin) d = fpmin;
    c = 1.0 + aa / c;
    if (std::abs(c) < fpmin) c = fpmin;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::abs(d) < fpmin) d = fpmin;
    c = 1.0 + aa / c;
    if (std::abs(c) < fpmin) c = fpmin;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::abs(del - 1.0) < eps) break;
  }
  return h;
}

// Regularized incomplete beta I_x(a, b).
inline double incbeta(double a, double b, double x) {
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  const double bt = std::exp(std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                             a * std::log(x) + b * std::log(1.0 - x));
  if (x < (a + 1.0) / (a + b + 2.0)) return bt * betacf(a, b, x) / a;
  return 1.0 - bt * betacf(b, a, 1.0 - x) / b;
}

// Two-tailed Student-t tail probability.
inline double t_two_tailed_p(double t, int df) {
  if (!std::isfinite(t)) return 0.0;
  const double x = df / (df + t * t);
  return incbeta(df / 2.0, 0.5, x);
}

}  // namespace detail

/// Two-tailed paired t-test on matched samples. All-zero differences give
/// t = 0, p = 1; zero variance with a nonzero mean gives p = 0.
inline TTestResult paired_ttest(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) throw ValidationError("paired_ttest: length mismatch");
  const int n = static_cast<int>(a.size());
  if (n < 2) throw ValidationError("paired_ttest: need at least 2 pairs");
  double mean = 0.0;
  for (int i = 0; i < n; ++i) mean += a[i] - b[i];
  mean /= n;
  double ss = 0.0;
  for (int i = 0; i < n; ++i) {
    const double d = (a[i] - b[i]) - mean;
    ss += d * d;
  }
  const double sd = std::sqrt(ss / (n - 1));
  TTestResult r;
  r.n = n;
  if (sd == 0.0) {
    if (mean == 0.0) {
      r.t_statistic = 0.0;
      r.p_value = 1.0;
    } else {
      r.t_statistic = mean > 0.0 ? std::numeric_limits<double>::infinity()
                                 : -std::numeric_limits<double>::infinity();
      r.p_value = 0.0;
    }
  } else {
    r.t_statistic = mean / (sd / std::sqrt(static_cast<double>(n)));
    r.p_value = detail::t_two_tailed_p(r.t_statistic, n - 1);
  }
  r.significant_05 = r.p_value < 0.05;
  return r;
}

// ---------------------------------------------------------------------------
// Gold pairs from highlight annotations
// ---------------------------------------------------------------------------

struct H1aTriple {
  Bigram bigram;        // i
  int pos_sentence_id;  // j+ contains a bigram similar to i
  int neg_sentence_id;  // j- contains a bigram different from i

  auto operator<=>(const H1aTriple&) const = default;
};

struct H1bTriple {
  Bigram similar;    // i+
  Bigram different;  // i-
  int sentence_id;   // j contains the anchor bigram

  auto operator<=>(const H1bTriple&) const = default;
};

struct GoldPairs {
  std::set<Bigram> bigrams;                          // accepted candidate bigrams
  std::set<std::pair<Bigram, Bigram>> similar;       // unordered, stored first < second
  std::set<std::pair<Bigram, Bigram>> different;
  std::vector<H1aTriple> triples_h1a;
  std::vector<H1bTriple> triples_h1b;
};

/// Builds the gold standard from phrase highlights. A phrase contributes a
/// candidate bigram only when exactly one distinct bigram can be extracted
/// from it; same-color candidates of one task become similar pairs,
/// cross-color candidates different pairs. Triples apply the compound-case
/// filters: an H1.a negative sentence must not contain anything similar to
/// the anchor, and an H1.b sentence must not contain anything similar to
/// the different bigram.
inline GoldPairs build_gold_pairs(const std::vector<HighlightAnnotation>& annotations,
                                  const Corpus& corpus, const StopwordSet& stopwords) {
  GoldPairs gold;
  std::set<H1aTriple> h1a;
  std::set<H1bTriple> h1b;

  for (const auto& annotation : annotations) {
    const Task* task = corpus.find_task(annotation.task_id);
    if (!task) throw ValidationError("build_gold_pairs: unknown task " + annotation.task_id);

    // color -> candidate bigrams of this task
    std::map<std::string, std::set<Bigram>> color_class;
    for (const auto& phrase : annotation.phrases) {
      std::set<Bigram> distinct;
      for (const auto& b : extract_bigrams(tokenize(phrase.text), stopwords)) distinct.insert(b);
      if (distinct.size() != 1) continue;  // ambiguous or empty phrase
      const Bigram& candidate = *distinct.begin();
      color_class[phrase.color_label].insert(candidate);
      gold.bigrams.insert(candidate);
    }

    auto ordered_pair = [](const Bigram& a, const Bigram& b) {
      return a < b ? std::make_pair(a, b) : std::make_pair(b, a);
    };
    std::map<Bigram, std::set<Bigram>> similar_to;  // transitive within a color class
    for (const auto& [color, members] : color_class) {
      for (auto it = members.begin(); it != members.end(); ++it)
        for (auto jt = std::next(it); jt != members.end(); ++jt)
          gold.similar.insert(ordered_pair(*it, *jt));
      for (const auto& b : members)
        for (const auto& other : members)
          if (!(other == b)) similar_to[b].insert(other);
    }
    for (auto it = color_class.begin(); it != color_class.end(); ++it)
      for (auto jt = std::next(it); jt != color_class.end(); ++jt)
        for (const auto& a : it->second)
          for (const auto& b : jt->second)
            if (!(a == b)) gold.different.insert(ordered_pair(a, b));

    // Bigram content per sentence of this task.
    std::vector<std::set<Bigram>> sentence_bigrams(task->sentences.size());
    for (std::size_t j = 0; j < task->sentences.size(); ++j)
      for (const auto& b : extract_bigrams(task->sentences[j].tokens, stopwords))
        sentence_bigrams[j].insert(b);

    auto sentences_with = [&](const Bigram& b) {
      std::vector<int> out;
      for (std::size_t j = 0; j < task->sentences.size(); ++j)
        if (sentence_bigrams[j].count(b)) out.push_back(static_cast<int>(j));
      return out;
    };
    auto contains_similar_to = [&](std::size_t j, const Bigram& anchor) {
      if (sentence_bigrams[j].count(anchor)) return true;
      auto it = similar_to.find(anchor);
      if (it == similar_to.end()) return false;
      for (const auto& b : it->second)
        if (sentence_bigrams[j].count(b)) return true;
      return false;
    };

    const std::set<Bigram> task_bigrams = [&] {
      std::set<Bigram> all;
      for (const auto& [color, members] : color_class) all.insert(members.begin(), members.end());
      return all;
    }();

    for (const auto& anchor : task_bigrams) {
      const auto sim_it = similar_to.find(anchor);
      if (sim_it == similar_to.end()) continue;
      std::set<Bigram> different_from;
      for (const auto& [pa, pb] : gold.different) {
        if (pa == anchor) different_from.insert(pb);
        if (pb == anchor) different_from.insert(pa);
      }
      if (different_from.empty()) continue;

      // H1.a: anchor scored in sentences around similar vs different bigrams.
      for (const auto& pos_bigram : sim_it->second) {
        for (int jp : sentences_with(pos_bigram)) {
          for (const auto& neg_bigram : different_from) {
            for (int jn : sentences_with(neg_bigram)) {
              if (contains_similar_to(jn, anchor)) continue;
              h1a.insert(H1aTriple{anchor, task->sentences[jp].sentence_id,
                                   task->sentences[jn].sentence_id});
            }
          }
        }
      }
      // H1.b: the anchor's sentence scores a similar vs a different bigram.
      for (int j : sentences_with(anchor)) {
        for (const auto& pos_bigram : sim_it->second) {
          for (const auto& neg_bigram : different_from) {
            if (contains_similar_to(j, neg_bigram)) continue;
            h1b.insert(H1bTriple{pos_bigram, neg_bigram, task->sentences[j].sentence_id});
          }
        }
      }
    }
  }
  gold.triples_h1a.assign(h1a.begin(), h1a.end());
  gold.triples_h1b.assign(h1b.begin(), h1b.end());
  return gold;
}

// ---------------------------------------------------------------------------
// Hypothesis tests on the completed matrix
// ---------------------------------------------------------------------------

struct H1Side {
  double mean_pos = 0.0;
  double mean_neg = 0.0;
  TTestResult ttest;
  int n = 0;
};

struct H1Result {
  H1Side h1a;
  H1Side h1b;
};

/// Compares completed-matrix scores over the gold triples. Requires every
/// referenced bigram and sentence to be covered by the matrix.
inline H1Result test_h1(const CompletedMatrix& completed, const CoocMatrix& matrix,
                        const ConceptTable& table, const GoldPairs& pairs) {
  if (pairs.triples_h1a.empty() && pairs.triples_h1b.empty())
    throw ValidationError("test_h1: empty triple list");

  std::map<int, int> col_of;
  for (int j = 0; j < matrix.n_sentences; ++j) col_of.emplace(matrix.sentence_ids[j], j);
  auto row = [&](const Bigram& b) {
    const int i = table.index_of(b);
    if (i < 0) throw ValidationError("test_h1: matrix does not cover bigram \"" + to_string(b) + "\"");
    return i;
  };
  auto col = [&](int sentence_id) {
    auto it = col_of.find(sentence_id);
    if (it == col_of.end())
      throw ValidationError("test_h1: matrix does not cover sentence " +
                            std::to_string(sentence_id));
    return it->second;
  };

  auto summarize_side = [&](const std::vector<double>& pos, const std::vector<double>& neg) {
    H1Side side;
    side.n = static_cast<int>(pos.size());
    if (side.n == 0) return side;
    for (double v : pos) side.mean_pos += v;
    for (double v : neg) side.mean_neg += v;
    side.mean_pos /= side.n;
    side.mean_neg /= side.n;
    if (side.n >= 2) side.ttest = paired_ttest(pos, neg);
    else side.ttest.n = side.n;  // a single pair carries no significance
    return side;
  };

  H1Result result;
  {
    std::vector<double> pos, neg;
    for (const auto& t : pairs.triples_h1a) {
      const int i = row(t.bigram);
      pos.push_back(completed.a_hat(i, col(t.pos_sentence_id)));
      neg.push_back(completed.a_hat(i, col(t.neg_sentence_id)));
    }
    result.h1a = summarize_side(pos, neg);
  }
  {
    std::vector<double> pos, neg;
    for (const auto& t : pairs.triples_h1b) {
      const int j = col(t.sentence_id);
      pos.push_back(completed.a_hat(row(t.similar), j));
      neg.push_back(completed.a_hat(row(t.different), j));
    }
    result.h1b = summarize_side(pos, neg);
  }
  return result;
}

/// Drops triples that the concept table / matrix does not cover, so
/// annotation-derived gold sets can be tested against a cutoff vocabulary.
inline GoldPairs filter_covered(const GoldPairs& pairs, const ConceptTable& table,
                                const CoocMatrix& matrix) {
  std::set<int> known_sentences(matrix.sentence_ids.begin(), matrix.sentence_ids.end());
  auto known = [&](const Bigram& b) { return table.index_of(b) >= 0; };
  GoldPairs out = pairs;
  out.triples_h1a.clear();
  out.triples_h1b.clear();
  for (const auto& t : pairs.triples_h1a)
    if (known(t.bigram) && known_sentences.count(t.pos_sentence_id) &&
        known_sentences.count(t.neg_sentence_id))
      out.triples_h1a.push_back(t);
  for (const auto& t : pairs.triples_h1b)
    if (known(t.similar) && known(t.different) && known_sentences.count(t.sentence_id))
      out.triples_h1b.push_back(t);
  return out;
}

// ---------------------------------------------------------------------------
// Corpus attributes
// ---------------------------------------------------------------------------

struct TaskAttributes {
  int sentences = 0;
  int words = 0;
  int authors = 0;
  int distinct_bigrams = 0;
  double sparsity = 0.0;
  double b_eq_1 = 0.0;
  double b_gt_1 = 0.0;
  double shannon = 0.0;
  double summary_words = 0.0;
  int summaries = 0;
  double compression = 0.0;
  // alpha/beta are set to -1 when undefined for the task
  double alpha_gt0 = -1.0, alpha_eq0 = -1.0, alpha_eq1 = -1.0, alpha_gt1 = -1.0;
  double beta_eq1 = -1.0, beta_eq2 = -1.0, beta_eq3 = -1.0, beta_eq4 = -1.0, beta_gt1 = -1.0;
};

struct AttributeReport {
  std::string genre;
  int tasks = 0;                  // T
  double authors_per_task = 0.0;  // au
  long total_sentences = 0;       // M
  long total_bigrams = 0;         // N
  double matrix_cells = 0.0;      // M*N
  double sentences_per_task = 0.0;
  double bigrams_per_task = 0.0;
  double bigrams_per_sentence = 0.0;
  double words_per_task = 0.0;
  double words_per_sentence = 0.0;
  double sparsity = 0.0;        // s
  double b_eq_1 = 0.0;          // bigram ratio with frequency 1
  double b_gt_1 = 0.0;
  double shannon = 0.0;         // H
  double summary_length = 0.0;  // L
  double summaries_per_task = 0.0;
  double compression = 0.0;     // r
  double alpha_gt0 = 0.0, alpha_eq0 = 0.0, alpha_eq1 = 0.0, alpha_gt1 = 0.0;
  double beta_eq1 = 0.0, beta_eq2 = 0.0, beta_eq3 = 0.0, beta_eq4 = 0.0, beta_gt1 = 0.0;
  std::map<std::string, TaskAttributes> per_task;
};

namespace detail {

inline std::set<Bigram> summary_bigrams(const Task& task, const StopwordSet& stopwords) {
  std::set<Bigram> out;
  for (const auto& summary : task.human_summaries)
    for (const auto& line : summary)
      for (const auto& b : extract_bigrams(tokenize(line), stopwords)) out.insert(b);
  return out;
}

inline std::map<Bigram, int> task_bigram_freq(const Task& task, const StopwordSet& stopwords) {
  std::map<Bigram, int> freq;
  for (const auto& sentence : task.sentences)
    for (const auto& b : extract_bigrams(sentence.tokens, stopwords)) ++freq[b];
  return freq;
}

}  // namespace detail

/// All per-task corpus/summary attributes, averaged over tasks. Frequency
/// attributes use the uncut (min_freq = 1) per-task vocabulary.
inline AttributeReport compute_attributes(const Corpus& corpus, const StopwordSet& stopwords) {
  AttributeReport report;
  switch (corpus.genre) {
    case Genre::response: report.genre = "response"; break;
    case Genre::review: report.genre = "review"; break;
    case Genre::news: report.genre = "news"; break;
  }
  report.tasks = static_cast<int>(corpus.tasks.size());

  long total_words = 0;
  std::set<Bigram> corpus_bigrams;
  double au_sum = 0;
  struct Mean {
    double sum = 0.0;
    int n = 0;
    void add(double v) { sum += v; ++n; }
    double value() const { return n ? sum / n : 0.0; }
  };
  Mean s_mean, b1_mean, h_mean, len_mean, hs_mean, r_mean;
  Mean a0_mean, a1_mean, ag0_mean, ag1_mean;
  Mean be1, be2, be3, be4, bg1;

  for (const auto& task : corpus.tasks) {
    TaskAttributes ta;
    ta.sentences = static_cast<int>(task.sentences.size());
    for (const auto& s : task.sentences) ta.words += s.word_count;

    std::set<std::string> authors, docs;
    for (const auto& s : task.sentences) {
      if (s.author_id) authors.insert(*s.author_id);
      docs.insert(s.doc_id);
    }
    ta.authors = static_cast<int>(authors.empty() ? docs.size() : authors.size());
    au_sum += ta.authors;

    const auto freq = detail::task_bigram_freq(task, stopwords);
    ta.distinct_bigrams = static_cast<int>(freq.size());
    long freq_total = 0;
    int once = 0;
    for (const auto& [b, c] : freq) {
      freq_total += c;
      if (c == 1) ++once;
      if (corpus.matrix_scope == MatrixScope::corpus) corpus_bigrams.insert(b);
    }
    if (corpus.matrix_scope == MatrixScope::per_task) report.total_bigrams += ta.distinct_bigrams;
    if (!freq.empty()) {
      ta.b_eq_1 = static_cast<double>(once) / freq.size();
      ta.b_gt_1 = 1.0 - ta.b_eq_1;
      b1_mean.add(ta.b_eq_1);
      for (const auto& [b, c] : freq) {
        const double p = static_cast<double>(c) / freq_total;
        ta.shannon -= p * std::log(p);
      }
      h_mean.add(ta.shannon);
    }

    // Zero-cell ratio of the task block (task vocabulary x task sentences).
    if (!freq.empty() && !task.sentences.empty()) {
      long nnz = 0;
      for (const auto& sentence : task.sentences) {
        std::set<Bigram> distinct;
        for (const auto& b : extract_bigrams(sentence.tokens, stopwords)) distinct.insert(b);
        nnz += static_cast<long>(distinct.size());
      }
      const double cells = static_cast<double>(freq.size()) * task.sentences.size();
      ta.sparsity = 1.0 - static_cast<double>(nnz) / cells;
      s_mean.add(ta.sparsity);
    }

    ta.summaries = static_cast<int>(task.human_summaries.size());
    if (ta.summaries > 0) {
      long words = 0;
      for (const auto& summary : task.human_summaries)
        for (const auto& line : summary) words += word_count(line);
      ta.summary_words = static_cast<double>(words) / ta.summaries;
      len_mean.add(ta.summary_words);
      hs_mean.add(ta.summaries);
      if (ta.words > 0) {
        ta.compression = ta.summary_words / ta.words;
        r_mean.add(ta.compression);
      }
      const auto selected = detail::summary_bigrams(task, stopwords);
      if (!selected.empty()) {
        int eq0 = 0, eq1 = 0, gt1 = 0;
        for (const auto& b : selected) {
          auto it = freq.find(b);
          const int f = it == freq.end() ? 0 : it->second;
          if (f == 0) ++eq0;
          else if (f == 1) ++eq1;
          else ++gt1;
        }
        const double denom = static_cast<double>(selected.size());
        ta.alpha_eq0 = eq0 / denom;
        ta.alpha_eq1 = eq1 / denom;
        ta.alpha_gt1 = gt1 / denom;
        ta.alpha_gt0 = (eq1 + gt1) / denom;
        a0_mean.add(ta.alpha_eq0);
        a1_mean.add(ta.alpha_eq1);
        ag0_mean.add(ta.alpha_gt0);
        ag1_mean.add(ta.alpha_gt1);
      }
      // beta_k: of the input bigrams with frequency k, the share picked by
      // humans.
      int cnt[5] = {0, 0, 0, 0, 0}, hit[5] = {0, 0, 0, 0, 0};
      int cnt_gt1 = 0, hit_gt1 = 0;
      for (const auto& [b, c] : freq) {
        const bool in_summary = selected.count(b) > 0;
        if (c >= 1 && c <= 4) {
          ++cnt[c];
          if (in_summary) ++hit[c];
        }
        if (c > 1) {
          ++cnt_gt1;
          if (in_summary) ++hit_gt1;
        }
      }
      auto ratio = [](int h, int c) { return c ? static_cast<double>(h) / c : -1.0; };
      ta.beta_eq1 = ratio(hit[1], cnt[1]);
      ta.beta_eq2 = ratio(hit[2], cnt[2]);
      ta.beta_eq3 = ratio(hit[3], cnt[3]);
      ta.beta_eq4 = ratio(hit[4], cnt[4]);
      ta.beta_gt1 = ratio(hit_gt1, cnt_gt1);
      if (ta.beta_eq1 >= 0) be1.add(ta.beta_eq1);
      if (ta.beta_eq2 >= 0) be2.add(ta.beta_eq2);
      if (ta.beta_eq3 >= 0) be3.add(ta.beta_eq3);
      if (ta.beta_eq4 >= 0) be4.add(ta.beta_eq4);
      if (ta.beta_gt1 >= 0) bg1.add(ta.beta_gt1);
    }

    report.total_sentences += ta.sentences;
    total_words += ta.words;
    report.per_task[task.task_id] = ta;
  }

  if (corpus.matrix_scope == MatrixScope::corpus)
    report.total_bigrams = static_cast<long>(corpus_bigrams.size());
  const double t = std::max(report.tasks, 1);
  report.authors_per_task = au_sum / t;
  report.matrix_cells =
      static_cast<double>(report.total_sentences) * static_cast<double>(report.total_bigrams);
  report.sentences_per_task = report.total_sentences / t;
  report.bigrams_per_task = report.total_bigrams / t;
  report.bigrams_per_sentence =
      report.total_sentences ? static_cast<double>(report.total_bigrams) / report.total_sentences
                             : 0.0;
  report.words_per_task = total_words / t;
  report.words_per_sentence =
      report.total_sentences ? static_cast<double>(total_words) / report.total_sentences : 0.0;
  report.sparsity = s_mean.value();
  report.b_eq_1 = b1_mean.value();
  report.b_gt_1 = b1_mean.n ? 1.0 - report.b_eq_1 : 0.0;
  report.shannon = h_mean.value();
  report.summary_length = len_mean.value();
  report.summaries_per_task = hs_mean.value();
  report.compression = r_mean.value();
  report.alpha_gt0 = ag0_mean.value();
  report.alpha_eq0 = a0_mean.value();
  report.alpha_eq1 = a1_mean.value();
  report.alpha_gt1 = ag1_mean.value();
  report.beta_eq1 = be1.value();
  report.beta_eq2 = be2.value();
  report.beta_eq3 = be3.value();
  report.beta_eq4 = be4.value();
  report.beta_gt1 = bg1.value();
  return report;
}

/// CSV rows "id,name,value" following the attribute table layout.
inline void write_attribute_csv(const AttributeReport& r, std::ostream& out) {
  out << "id,name,value\n";
  out << "1,genre," << r.genre << '\n';
  out << "2,T," << r.tasks << '\n';
  out << "3,au," << r.authors_per_task << '\n';
  out << "4,M*N," << r.matrix_cells << '\n';
  out << "5,M," << r.total_sentences << '\n';
  out << "6,N," << r.total_bigrams << '\n';
  out << "7,M/T," << r.sentences_per_task << '\n';
  out << "8,N/T," << r.bigrams_per_task << '\n';
  out << "9,N/M," << r.bigrams_per_sentence << '\n';
  out << "10,W/T," << r.words_per_task << '\n';
  out << "11,W/M," << r.words_per_sentence << '\n';
  out << "12,s," << r.sparsity << '\n';
  out << "13,b=1," << r.b_eq_1 << '\n';
  out << "14,b>1," << r.b_gt_1 << '\n';
  out << "15,H," << r.shannon << '\n';
  out << "16,L," << r.summary_length << '\n';
  out << "17,hs," << r.summaries_per_task << '\n';
  out << "18,r," << r.compression << '\n';
  out << "19,alpha_b>0," << r.alpha_gt0 << '\n';
  out << "20,alpha_b=0," << r.alpha_eq0 << '\n';
  out << "21,alpha_b=1," << r.alpha_eq1 << '\n';
  out << "22,alpha_b>1," << r.alpha_gt1 << '\n';
  out << "23,beta_b=1," << r.beta_eq1 << '\n';
  out << "24,beta_b=2," << r.beta_eq2 << '\n';
  out << "25,beta_b=3," << r.beta_eq3 << '\n';
  out << "26,beta_b=4," << r.beta_eq4 << '\n';
  out << "27,beta_b>1," << r.beta_gt1 << '\n';
}

// ---------------------------------------------------------------------------
// Alpha synthesis
// ---------------------------------------------------------------------------

enum class SynthesisDirection { increase, decrease };

struct RemovalRecord {
  std::string task_id;
  int sentence_id = 0;
  std::string reason;
};

struct SynthesisResult {
  Corpus corpus;
  std::vector<RemovalRecord> removals;
};

/// Removes input sentences to push the share of summary bigrams that occur
/// exactly once in the input (alpha_{b=1}) up or down. Increase thins the
/// hosts of multi-occurrence summary bigrams down to a single survivor,
/// never touching a sentence that carries a currently-unique summary
/// bigram; decrease drops sentences whose summary bigrams are all unique.
/// Deterministic given the seed; the per-task generator is derived from
/// the seed and the task id.
inline SynthesisResult synthesize_alpha(const Corpus& corpus, SynthesisDirection direction,
                                        std::uint64_t rng_seed, const StopwordSet& stopwords) {
  SynthesisResult result;
  result.corpus = corpus;
  const char* reason = direction == SynthesisDirection::increase ? "increase" : "decrease";

  for (auto& task : result.corpus.tasks) {
    const auto selected = detail::summary_bigrams(task, stopwords);
    if (selected.empty()) continue;

    const int m = static_cast<int>(task.sentences.size());
    std::vector<std::set<Bigram>> content(m);  // summary bigrams per sentence
    std::map<Bigram, int> hosts;               // summary bigram -> #sentences carrying it
    for (int j = 0; j < m; ++j) {
      for (const auto& b : extract_bigrams(task.sentences[j].tokens, stopwords))
        if (selected.count(b)) content[j].insert(b);
      for (const auto& b : content[j]) ++hosts[b];
    }

    std::vector<bool> removed(m, false);
    std::mt19937_64 rng(fnv1a64(std::to_string(rng_seed) + "|" + task.task_id));

    if (direction == SynthesisDirection::increase) {
      auto protected_sentence = [&](int j) {
        for (const auto& b : content[j])
          if (hosts.at(b) == 1) return true;
        return false;
      };
      for (const auto& [bigram, initial_hosts] : hosts) {
        (void)initial_hosts;
        while (hosts.at(bigram) >= 2) {
          std::vector<int> candidates;
          for (int j = 0; j < m; ++j)
            if (!removed[j] && content[j].count(bigram) && !protected_sentence(j))
              candidates.push_back(j);
          if (candidates.empty()) break;
          std::uniform_int_distribution<std::size_t> pick(0, candidates.size() - 1);
          const int victim = candidates[pick(rng)];
          removed[victim] = true;
          for (const auto& b : content[victim]) --hosts.at(b);
          result.removals.push_back(
              RemovalRecord{task.task_id, task.sentences[victim].sentence_id, reason});
        }
      }
    } else {
      for (int j = 0; j < m; ++j) {
        if (content[j].empty()) continue;
        bool all_unique = true;
        for (const auto& b : content[j])
          if (hosts.at(b) != 1) all_unique = false;
        if (!all_unique) continue;
        removed[j] = true;
        result.removals.push_back(
            RemovalRecord{task.task_id, task.sentences[j].sentence_id, reason});
      }
    }

    std::vector<SentenceRecord> kept;
    for (int j = 0; j < m; ++j)
      if (!removed[j]) kept.push_back(task.sentences[j]);
    task.sentences = std::move(kept);
  }
  return result;
}

inline void write_removal_log(const std::vector<RemovalRecord>& removals, std::ostream& out) {
  out << "task_id,sentence_id,reason\n";
  for (const auto& r : removals)
    out << r.task_id << ',' << r.sentence_id << ',' << r.reason << '\n';
}

// ---------------------------------------------------------------------------
// Lambda tuning
// ---------------------------------------------------------------------------

inline std::vector<double> default_lambda_grid() {
  std::vector<double> grid;
  for (int i = 0; i <= 10; ++i) grid.push_back(0.5 * i);
  return grid;
}

struct TuneResult {
  std::vector<double> grid;
  std::map<std::string, double> best_lambda;                 // held-out task -> lambda
  std::map<double, std::map<std::string, double>> r1_recall; // lambda -> task -> R-1 recall
};

/// Leave-one-task-out grid search: for each held-out task, the lambda that
/// maximizes mean ROUGE-1 recall over the remaining tasks (ties go to the
/// smaller lambda).
inline TuneResult tune_lambda(const Corpus& corpus, const std::vector<double>& grid,
                              int min_freq, const StopwordSet& stopwords,
                              SolveMode mode = SolveMode::exact,
                              const CompletionConfig& base_cfg = {}) {
  if (corpus.tasks.size() < 2) throw ValidationError("tune_lambda: need at least 2 tasks");
  if (grid.empty()) throw ValidationError("tune_lambda: empty grid");
  for (const auto& task : corpus.tasks)
    if (task.human_summaries.empty())
      throw ValidationError("tune_lambda: task " + task.task_id + " has no reference summaries");

  TuneResult result;
  result.grid = grid;

  auto reference_tokens = [](const Task& task) {
    std::vector<std::vector<std::string>> refs;
    for (const auto& s : task.human_summaries) {
      std::string text;
      for (const auto& line : s) {
        if (!text.empty()) text.push_back(' ');
        text += line;
      }
      refs.push_back(tokenize(text));
    }
    return refs;
  };

  if (corpus.matrix_scope == MatrixScope::corpus) {
    const auto table = build_concept_table(corpus, all_task_ids(corpus), min_freq, stopwords);
    CoocMatrix matrix;
    if (!table.empty()) matrix = build_matrix(table, corpus, all_task_ids(corpus), stopwords);
    for (double lambda : grid) {
      auto& recalls = result.r1_recall[lambda];
      if (table.empty()) {
        for (const auto& task : corpus.tasks) recalls[task.task_id] = 0.0;
        continue;
      }
      CompletionConfig cfg = base_cfg;
      cfg.lambda = lambda;
      const auto completed = complete(matrix, cfg);
      for (const auto& task : corpus.tasks) {
        const Summary summary = summarize_ilp_mc(task, table, completed, matrix,
                                                 task.length_budget, lambda, mode);
        recalls[task.task_id] =
            rouge_n(tokenize(summary.text), reference_tokens(task), 1).recall;
      }
    }
  } else {
    for (const auto& task : corpus.tasks) {
      std::set<std::string> scope{task.task_id};
      const auto table = build_concept_table(corpus, scope, min_freq, stopwords);
      CoocMatrix matrix;
      if (!table.empty()) matrix = build_matrix(table, corpus, scope, stopwords);
      for (double lambda : grid) {
        double recall = 0.0;
        if (!table.empty()) {
          CompletionConfig cfg = base_cfg;
          cfg.lambda = lambda;
          const auto completed = complete(matrix, cfg);
          const Summary summary = summarize_ilp_mc(task, table, completed, matrix,
                                                   task.length_budget, lambda, mode);
          recall = rouge_n(tokenize(summary.text), reference_tokens(task), 1).recall;
        }
        result.r1_recall[lambda][task.task_id] = recall;
      }
    }
  }

  for (const auto& held_out : corpus.tasks) {
    double best = grid.front();
    double best_mean = -1.0;
    for (double lambda : grid) {
      double sum = 0.0;
      int n = 0;
      for (const auto& task : corpus.tasks) {
        if (task.task_id == held_out.task_id) continue;
        sum += result.r1_recall.at(lambda).at(task.task_id);
        ++n;
      }
      const double mean = n ? sum / n : 0.0;
      if (mean > best_mean) {
        best_mean = mean;
        best = lambda;
      }
    }
    result.best_lambda[held_out.task_id] = best;
  }
  return result;
}

}  // namespace covsum
