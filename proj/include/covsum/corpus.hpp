#pragma once

#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "covsum/error.hpp"
#include "covsum/text.hpp"

namespace covsum {

enum class Genre { response, review, news };
enum class MatrixScope { corpus, per_task };

struct SentenceRecord {
  int sentence_id = 0;
  std::string task_id;
  std::string doc_id;
  std::optional<std::string> author_id;
  std::string raw_text;
  std::vector<std::string> tokens;  // lowercase, punctuation-stripped
  int word_count = 0;               // whitespace tokens of raw_text (l_j)

  bool operator==(const SentenceRecord&) const = default;
};

// One summarization task: a cluster of sentences plus reference summaries.
// A human summary is stored as its list of lines (sentences or phrases).
struct Task {
  std::string task_id;
  std::optional<std::string> prompt;
  std::vector<SentenceRecord> sentences;
  std::vector<std::vector<std::string>> human_summaries;
  int length_budget = 0;  // word budget L

  bool operator==(const Task&) const = default;
};

struct Corpus {
  std::string corpus_id;
  Genre genre = Genre::response;
  std::vector<Task> tasks;
  MatrixScope matrix_scope = MatrixScope::corpus;

  const Task* find_task(const std::string& task_id) const {
    for (const auto& t : tasks)
      if (t.task_id == task_id) return &t;
    return nullptr;
  }

  bool operator==(const Corpus&) const = default;
};

enum class HighlightLocation { response, summary };

struct HighlightPhrase {
  std::string text;
  std::string color_label;  // opaque, compared by equality
  HighlightLocation location = HighlightLocation::response;
  std::optional<int> sentence_id;

  bool operator==(const HighlightPhrase&) const = default;
};

struct HighlightAnnotation {
  std::string task_id;
  std::vector<HighlightPhrase> phrases;

  bool operator==(const HighlightAnnotation&) const = default;
};

struct CorpusLoadOptions {
  std::optional<std::string> corpus_id;  // default: file stem
  Genre genre = Genre::response;
  MatrixScope matrix_scope = MatrixScope::corpus;
};

namespace detail {

inline const nlohmann::json& require_field(const nlohmann::json& obj, const char* key,
                                           int line_no) {
  auto it = obj.find(key);
  if (it == obj.end() || it->is_null())
    throw ParseError("line " + std::to_string(line_no) + ": missing field \"" + key + "\"");
  return *it;
}

inline std::string require_string(const nlohmann::json& obj, const char* key, int line_no) {
  const auto& v = require_field(obj, key, line_no);
  if (!v.is_string())
    throw ParseError("line " + std::to_string(line_no) + ": field \"" + key +
                     "\" must be a string");
  return v.get<std::string>();
}

inline int require_int(const nlohmann::json& obj, const char* key, int line_no) {
  const auto& v = require_field(obj, key, line_no);
  if (!v.is_number_integer())
    throw ParseError("line " + std::to_string(line_no) + ": field \"" + key +
                     "\" must be an integer");
  return v.get<int>();
}

inline std::optional<std::string> optional_string(const nlohmann::json& obj, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end() || it->is_null()) return std::nullopt;
  return it->get<std::string>();
}

inline std::optional<int> optional_int(const nlohmann::json& obj, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end() || it->is_null()) return std::nullopt;
  return it->get<int>();
}

inline std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::string cur;
  for (char c : text) {
    if (c == '\n') {
      if (!cur.empty()) lines.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) lines.push_back(cur);
  return lines;
}

inline int summary_word_count(const std::vector<std::string>& summary) {
  int total = 0;
  for (const auto& line : summary) total += word_count(line);
  return total;
}

inline std::string lowercase(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  return out;
}

}  // namespace detail

/// Parses a JSONL corpus file. Record kinds: "sentence", "summary",
/// "task_meta". Tasks appear in first-mention order; sentences keep file
/// order. A task without an explicit length_budget gets
/// floor(mean human-summary word count).
inline Corpus load_corpus(const std::string& path, const CorpusLoadOptions& options = {}) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open corpus file: " + path);

  struct TaskDraft {
    std::optional<std::string> prompt;
    std::optional<int> length_budget;
    std::vector<SentenceRecord> sentences;
    std::map<int, std::vector<std::string>> summaries;  // summary_index -> lines
  };
  std::vector<std::string> task_order;
  std::map<std::string, TaskDraft> drafts;
  std::map<int, int> seen_sentence_ids;  // id -> line

  auto draft_for = [&](const std::string& task_id) -> TaskDraft& {
    auto it = drafts.find(task_id);
    if (it == drafts.end()) {
      task_order.push_back(task_id);
      it = drafts.emplace(task_id, TaskDraft{}).first;
    }
    return it->second;
  };

  std::string line;
  int line_no = 0;
  int records = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    nlohmann::json obj;
    try {
      obj = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception& e) {
      throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
    }
    if (!obj.is_object())
      throw ParseError("line " + std::to_string(line_no) + ": record must be a JSON object");
    ++records;
    const std::string kind = detail::require_string(obj, "kind", line_no);
    if (kind == "sentence") {
      SentenceRecord rec;
      rec.sentence_id = detail::require_int(obj, "sentence_id", line_no);
      rec.task_id = detail::require_string(obj, "task_id", line_no);
      rec.doc_id = detail::require_string(obj, "doc_id", line_no);
      rec.author_id = detail::optional_string(obj, "author_id");
      rec.raw_text = detail::require_string(obj, "text", line_no);
      rec.tokens = tokenize(rec.raw_text);
      rec.word_count = word_count(rec.raw_text);
      if (rec.word_count < 1)
        throw ValidationError("line " + std::to_string(line_no) + ": sentence " +
                              std::to_string(rec.sentence_id) + " has no words");
      if (rec.tokens.empty())
        throw ValidationError("line " + std::to_string(line_no) + ": sentence " +
                              std::to_string(rec.sentence_id) + " has no usable tokens");
      auto [it, inserted] = seen_sentence_ids.emplace(rec.sentence_id, line_no);
      if (!inserted)
        throw ValidationError("line " + std::to_string(line_no) + ": duplicate sentence_id " +
                              std::to_string(rec.sentence_id) + " (first seen at line " +
                              std::to_string(it->second) + ")");
      draft_for(rec.task_id).sentences.push_back(std::move(rec));
    } else if (kind == "summary") {
      const std::string task_id = detail::require_string(obj, "task_id", line_no);
      const int index = detail::require_int(obj, "summary_index", line_no);
      const std::string text = detail::require_string(obj, "text", line_no);
      auto lines = detail::split_lines(text);
      if (detail::summary_word_count(lines) < 1)
        throw ValidationError("line " + std::to_string(line_no) + ": empty summary text");
      auto& draft = draft_for(task_id);
      if (!draft.summaries.emplace(index, std::move(lines)).second)
        throw ValidationError("line " + std::to_string(line_no) + ": duplicate summary_index " +
                              std::to_string(index) + " for task " + task_id);
    } else if (kind == "task_meta") {
      const std::string task_id = detail::require_string(obj, "task_id", line_no);
      auto& draft = draft_for(task_id);
      draft.prompt = detail::optional_string(obj, "prompt");
      draft.length_budget = detail::optional_int(obj, "length_budget");
      if (draft.length_budget && *draft.length_budget < 1)
        throw ValidationError("line " + std::to_string(line_no) + ": length_budget must be >= 1");
    } else {
      throw ParseError("line " + std::to_string(line_no) + ": unknown record kind \"" + kind +
                       "\"");
    }
  }
  if (records == 0) throw ParseError("empty corpus: " + path);

  Corpus corpus;
  corpus.corpus_id =
      options.corpus_id ? *options.corpus_id : std::filesystem::path(path).stem().string();
  corpus.genre = options.genre;
  corpus.matrix_scope = options.matrix_scope;
  for (const auto& task_id : task_order) {
    auto& draft = drafts.at(task_id);
    Task task;
    task.task_id = task_id;
    task.prompt = draft.prompt;
    task.sentences = std::move(draft.sentences);
    for (auto& [index, lines] : draft.summaries) task.human_summaries.push_back(std::move(lines));
    if (draft.length_budget) {
      task.length_budget = *draft.length_budget;
    } else if (!task.human_summaries.empty()) {
      long total = 0;
      for (const auto& s : task.human_summaries) total += detail::summary_word_count(s);
      task.length_budget = static_cast<int>(total / static_cast<long>(task.human_summaries.size()));
    } else {
      throw ValidationError("task " + task_id +
                            " has neither a length_budget nor human summaries");
    }
    if (task.length_budget < 1)
      throw ValidationError("task " + task_id + " resolves to a length_budget < 1");
    corpus.tasks.push_back(std::move(task));
  }
  return corpus;
}

inline void write_corpus(const Corpus& corpus, std::ostream& out) {
  for (const auto& task : corpus.tasks) {
    nlohmann::ordered_json meta;
    meta["kind"] = "task_meta";
    meta["task_id"] = task.task_id;
    meta["prompt"] = task.prompt ? nlohmann::json(*task.prompt) : nlohmann::json(nullptr);
    meta["length_budget"] = task.length_budget;
    out << meta.dump() << '\n';
    for (const auto& s : task.sentences) {
      nlohmann::ordered_json rec;
      rec["kind"] = "sentence";
      rec["sentence_id"] = s.sentence_id;
      rec["task_id"] = s.task_id;
      rec["doc_id"] = s.doc_id;
      rec["author_id"] = s.author_id ? nlohmann::json(*s.author_id) : nlohmann::json(nullptr);
      rec["text"] = s.raw_text;
      out << rec.dump() << '\n';
    }
    for (std::size_t i = 0; i < task.human_summaries.size(); ++i) {
      std::string text;
      for (std::size_t k = 0; k < task.human_summaries[i].size(); ++k) {
        if (k) text.push_back('\n');
        text += task.human_summaries[i][k];
      }
      nlohmann::ordered_json rec;
      rec["kind"] = "summary";
      rec["task_id"] = task.task_id;
      rec["summary_index"] = static_cast<int>(i);
      rec["text"] = text;
      out << rec.dump() << '\n';
    }
  }
}

inline void write_corpus(const Corpus& corpus, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write corpus file: " + path);
  write_corpus(corpus, out);
}

/// Loads phrase-highlight annotations and cross-validates them against the
/// corpus. Response-located phrases must resolve to an existing sentence;
/// when no sentence_id is given the first sentence whose lowercased text
/// contains the phrase is used.
inline std::vector<HighlightAnnotation> load_annotations(const std::string& path,
                                                         const Corpus& corpus) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open annotation file: " + path);

  std::vector<HighlightAnnotation> annotations;
  std::map<std::string, std::size_t> index_of;

  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    nlohmann::json obj;
    try {
      obj = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception& e) {
      throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
    }
    const std::string task_id = detail::require_string(obj, "task_id", line_no);
    const Task* task = corpus.find_task(task_id);
    if (!task)
      throw ValidationError("line " + std::to_string(line_no) + ": unknown task_id \"" + task_id +
                            "\"");

    HighlightPhrase phrase;
    phrase.text = detail::require_string(obj, "text", line_no);
    phrase.color_label = detail::require_string(obj, "color", line_no);
    const std::string loc = detail::require_string(obj, "location", line_no);
    if (loc == "response")
      phrase.location = HighlightLocation::response;
    else if (loc == "summary")
      phrase.location = HighlightLocation::summary;
    else
      throw ParseError("line " + std::to_string(line_no) + ": location must be \"response\" or "
                       "\"summary\"");
    phrase.sentence_id = detail::optional_int(obj, "sentence_id");

    if (phrase.sentence_id) {
      bool found = false;
      for (const auto& s : task->sentences)
        if (s.sentence_id == *phrase.sentence_id) found = true;
      if (!found)
        throw ValidationError("line " + std::to_string(line_no) + ": sentence_id " +
                              std::to_string(*phrase.sentence_id) + " not in task " + task_id);
    } else if (phrase.location == HighlightLocation::response) {
      const std::string needle = detail::lowercase(phrase.text);
      for (const auto& s : task->sentences) {
        if (detail::lowercase(s.raw_text).find(needle) != std::string::npos) {
          phrase.sentence_id = s.sentence_id;
          break;
        }
      }
      if (!phrase.sentence_id)
        throw ValidationError("line " + std::to_string(line_no) + ": response phrase \"" +
                              phrase.text + "\" matches no sentence in task " + task_id);
    }

    auto it = index_of.find(task_id);
    if (it == index_of.end()) {
      index_of.emplace(task_id, annotations.size());
      annotations.push_back(HighlightAnnotation{task_id, {std::move(phrase)}});
    } else {
      annotations[it->second].phrases.push_back(std::move(phrase));
    }
  }
  return annotations;
}

}  // namespace covsum
