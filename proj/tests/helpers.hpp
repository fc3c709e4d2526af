#pragma once

// Shared builders for the test suites.

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "covsum/corpus.hpp"

namespace test_helpers {

// Self-deleting scratch directory.
struct TempDir {
  std::filesystem::path path;

  explicit TempDir(const std::string& tag) {
    static std::atomic<int> counter{0};
    path = std::filesystem::temp_directory_path() /
           ("covsum_" + tag + "_" + std::to_string(::getpid()) + "_" +
            std::to_string(counter++));
    std::filesystem::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path, ec);
  }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

inline std::string write_file(const TempDir& dir, const std::string& name,
                              const std::string& content) {
  const std::string path = dir.file(name);
  std::ofstream out(path);
  out << content;
  return path;
}

inline covsum::SentenceRecord make_sentence(int id, const std::string& task_id,
                                            const std::string& text,
                                            const std::string& doc_id = "doc",
                                            const std::string& author = "") {
  covsum::SentenceRecord s;
  s.sentence_id = id;
  s.task_id = task_id;
  s.doc_id = doc_id;
  if (!author.empty()) s.author_id = author;
  s.raw_text = text;
  s.tokens = covsum::tokenize(text);
  s.word_count = covsum::word_count(text);
  return s;
}

inline covsum::Task make_task(const std::string& task_id, int first_sentence_id,
                              const std::vector<std::string>& sentences,
                              const std::vector<std::string>& summaries, int budget) {
  covsum::Task t;
  t.task_id = task_id;
  int id = first_sentence_id;
  for (const auto& text : sentences) t.sentences.push_back(make_sentence(id++, task_id, text));
  for (const auto& text : summaries) {
    std::vector<std::string> lines;
    std::istringstream iss(text);
    std::string line;
    while (std::getline(iss, line))
      if (!line.empty()) lines.push_back(line);
    t.human_summaries.push_back(lines);
  }
  t.length_budget = budget;
  return t;
}

inline covsum::Corpus make_corpus(std::vector<covsum::Task> tasks,
                                  const std::string& corpus_id = "test") {
  covsum::Corpus c;
  c.corpus_id = corpus_id;
  c.tasks = std::move(tasks);
  return c;
}

// Small-vocabulary random corpus; repeated words create bigrams with a mix
// of frequencies, which is what the attribute and synthesis properties need.
inline covsum::Corpus random_corpus(unsigned seed, int n_tasks = 3) {
  std::mt19937 rng(seed);
  const std::vector<std::string> vocab = {"alpha", "beta",  "gamma", "delta", "omega",
                                          "sigma", "theta", "kappa", "nu",    "mu"};
  std::uniform_int_distribution<int> word(0, static_cast<int>(vocab.size()) - 1);
  std::uniform_int_distribution<int> sentence_len(3, 6);
  std::uniform_int_distribution<int> n_sentences(3, 7);

  std::vector<covsum::Task> tasks;
  int sentence_id = 1;
  for (int t = 0; t < n_tasks; ++t) {
    const std::string task_id = "task" + std::to_string(t);
    std::vector<std::string> sentences;
    const int m = n_sentences(rng);
    for (int j = 0; j < m; ++j) {
      std::string text;
      const int len = sentence_len(rng);
      for (int k = 0; k < len; ++k) {
        if (k) text.push_back(' ');
        text += vocab[word(rng)];
      }
      sentences.push_back(text);
    }
    // summary: a few words sampled the same way, sometimes echoing input
    std::string summary;
    const int len = sentence_len(rng);
    for (int k = 0; k < len; ++k) {
      if (k) summary.push_back(' ');
      if (!sentences.empty() && rng() % 2 == 0) {
        const auto tokens = covsum::tokenize(sentences[rng() % sentences.size()]);
        summary += tokens[rng() % tokens.size()];
      } else {
        summary += vocab[word(rng)];
      }
    }
    covsum::Task task = make_task(task_id, sentence_id, sentences, {summary}, 12);
    sentence_id += static_cast<int>(task.sentences.size());
    tasks.push_back(std::move(task));
  }
  return make_corpus(std::move(tasks), "random" + std::to_string(seed));
}

}  // namespace test_helpers
