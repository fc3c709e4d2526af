// covsum: budgeted concept-coverage summarization with co-occurrence
// matrix completion, plus the evaluation commands around it.

#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "covsum/analysis.hpp"
#include "covsum/completion.hpp"
#include "covsum/concepts.hpp"
#include "covsum/corpus.hpp"
#include "covsum/error.hpp"
#include "covsum/rouge.hpp"
#include "covsum/solver.hpp"
#include "covsum/stopwords.hpp"
#include "covsum/summarize.hpp"
#include "covsum/version.hpp"

namespace {

using namespace covsum;
using nlohmann::ordered_json;

struct CommonOptions {
  std::string corpus_path;
  std::string corpus_id;
  std::string genre = "response";
  std::string matrix_scope = "corpus";
  std::string stopwords_path;
  std::string output_dir = ".";
  int jobs = 0;
};

void add_common(CLI::App* cmd, CommonOptions& opt, bool needs_corpus = true) {
  auto* corpus = cmd->add_option("--corpus", opt.corpus_path, "corpus JSONL file");
  if (needs_corpus) corpus->required();
  cmd->add_option("--corpus-id", opt.corpus_id, "corpus id (default: file stem)");
  cmd->add_option("--genre", opt.genre, "corpus genre")
      ->check(CLI::IsMember({"response", "review", "news"}));
  cmd->add_option("--matrix-scope", opt.matrix_scope,
                  "build one matrix for the corpus or one per task")
      ->check(CLI::IsMember({"corpus", "per_task"}));
  cmd->add_option("--stopwords", opt.stopwords_path,
                  "stopword list file (overrides COVSUM_STOPWORDS)");
  cmd->add_option("--output-dir", opt.output_dir, "directory for output files");
  cmd->add_option("--jobs", opt.jobs, "worker threads (default: available parallelism)");
}

StopwordSet resolve_stopwords(const CommonOptions& opt, std::string& source) {
  if (!opt.stopwords_path.empty()) {
    source = opt.stopwords_path;
    return load_stopwords(opt.stopwords_path);
  }
  if (const char* env = std::getenv("COVSUM_STOPWORDS"); env && *env) {
    source = env;
    return load_stopwords(env);
  }
  source = "builtin";
  return default_stopwords();
}

Corpus load(const CommonOptions& opt) {
  CorpusLoadOptions load_opts;
  if (!opt.corpus_id.empty()) load_opts.corpus_id = opt.corpus_id;
  if (opt.genre == "review") load_opts.genre = Genre::review;
  else if (opt.genre == "news") load_opts.genre = Genre::news;
  load_opts.matrix_scope =
      opt.matrix_scope == "per_task" ? MatrixScope::per_task : MatrixScope::corpus;
  return load_corpus(opt.corpus_path, load_opts);
}

int effective_jobs(const CommonOptions& opt) {
  if (opt.jobs > 0) return opt.jobs;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

template <typename Fn>
void parallel_for(int n, int jobs, Fn&& fn) {
  jobs = std::max(1, std::min(jobs, n));
  if (jobs <= 1) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  for (int t = 0; t < jobs; ++t) {
    pool.emplace_back([&] {
      for (int i = next++; i < n; i = next++) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!error) error = std::current_exception();
          return;
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

std::ofstream open_output(const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write file: " + path.string());
  return out;
}

void write_manifest(const std::filesystem::path& dir, const ordered_json& manifest) {
  auto out = open_output(dir / "manifest.json");
  out << manifest.dump(2) << '\n';
}

std::vector<double> parse_grid(const std::string& spec) {
  if (spec.empty()) return default_lambda_grid();
  std::vector<double> grid;
  std::size_t start = 0;
  while (start <= spec.size()) {
    const std::size_t comma = spec.find(',', start);
    const std::string item = spec.substr(start, comma - start);
    try {
      grid.push_back(std::stod(item));
    } catch (const std::exception&) {
      throw ValidationError("bad --grid entry: \"" + item + "\"");
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return grid;
}

struct SummarizeOptions {
  CommonOptions common;
  std::string system;
  std::string lambda = "1.0";
  int min_freq = 2;
  int length_budget = 0;  // 0 = per-task budgets
  std::uint64_t seed = 0;
  std::string solver_mode = "exact";
  std::uint64_t node_limit = 5'000'000;
  std::string grid;
  std::string export_matrix;
  std::string completion_trace;
  double lexrank_threshold = 0.1;
  double lexrank_damping = 0.85;
};

ordered_json meta_json(const std::map<std::string, std::string>& meta) {
  ordered_json j = ordered_json::object();
  for (const auto& [k, v] : meta) j[k] = v;
  return j;
}

void write_summaries(const std::filesystem::path& path, const std::vector<Summary>& summaries) {
  auto out = open_output(path);
  for (const auto& s : summaries) {
    ordered_json j;
    j["task_id"] = s.task_id;
    j["system"] = system_name(s.system);
    j["sentence_ids"] = s.sentence_ids;
    j["text"] = s.text;
    j["meta"] = meta_json(s.meta);
    out << j.dump() << '\n';
  }
}

int cmd_summarize(const SummarizeOptions& opt) {
  const Corpus corpus = load(opt.common);
  std::string stopword_source;
  const StopwordSet stopwords = resolve_stopwords(opt.common, stopword_source);
  const SolveMode mode = opt.solver_mode == "greedy" ? SolveMode::greedy : SolveMode::exact;
  std::filesystem::create_directories(opt.common.output_dir);
  const std::filesystem::path out_dir(opt.common.output_dir);

  auto budget_of = [&](const Task& t) {
    return opt.length_budget > 0 ? opt.length_budget : t.length_budget;
  };

  const int n_tasks = static_cast<int>(corpus.tasks.size());
  std::vector<Summary> summaries(n_tasks);
  ordered_json lambda_manifest;

  if (opt.system == "sumbasic") {
    parallel_for(n_tasks, effective_jobs(opt.common), [&](int i) {
      summaries[i] = summarize_sumbasic(corpus.tasks[i], budget_of(corpus.tasks[i]), stopwords);
    });
  } else if (opt.system == "lexrank") {
    parallel_for(n_tasks, effective_jobs(opt.common), [&](int i) {
      summaries[i] = summarize_lexrank(corpus.tasks[i], budget_of(corpus.tasks[i]),
                                       opt.lexrank_threshold, opt.lexrank_damping);
    });
  } else {
    // concept-coverage systems
    const bool tune = opt.lambda == "tune";
    double fixed_lambda = 0.0;
    if (opt.system == "ilp_mc" && !tune) {
      try {
        fixed_lambda = std::stod(opt.lambda);
      } catch (const std::exception&) {
        throw ValidationError("--lambda must be a number or \"tune\"");
      }
      if (fixed_lambda < 0) throw ValidationError("--lambda must be >= 0");
    }
    std::map<std::string, double> fold_lambda;
    if (opt.system == "ilp_mc" && tune) {
      const TuneResult tuned =
          tune_lambda(corpus, parse_grid(opt.grid), opt.min_freq, stopwords, mode);
      fold_lambda = tuned.best_lambda;
      for (const auto& [task_id, lam] : fold_lambda) lambda_manifest[task_id] = lam;
    }

    auto run_scope = [&](const std::set<std::string>& scope,
                         const std::vector<int>& task_indices) {
      const ConceptTable table = build_concept_table(corpus, scope, opt.min_freq, stopwords);
      CoocMatrix matrix;
      if (!table.empty()) matrix = build_matrix(table, corpus, scope, stopwords);
      if (!table.empty() && !opt.export_matrix.empty()) {
        auto out = open_output(opt.export_matrix);
        write_coo(matrix, out);
      }
      if (opt.system == "ilp") {
        parallel_for(static_cast<int>(task_indices.size()), effective_jobs(opt.common),
                     [&](int k) {
                       const Task& task = corpus.tasks[task_indices[k]];
                       summaries[task_indices[k]] =
                           summarize_ilp(task, table, matrix, budget_of(task), mode,
                                         opt.node_limit);
                     });
        return;
      }
      // ilp_mc: one completion per distinct lambda in this scope
      std::set<double> lambdas;
      if (tune)
        for (int idx : task_indices) lambdas.insert(fold_lambda.at(corpus.tasks[idx].task_id));
      else
        lambdas.insert(fixed_lambda);
      std::map<double, CompletedMatrix> completed;
      for (double lam : lambdas) {
        if (table.empty()) continue;
        CompletionConfig cfg;
        cfg.lambda = lam;
        completed.emplace(lam, complete(matrix, cfg));
      }
      if (!opt.completion_trace.empty() && !completed.empty()) {
        auto out = open_output(opt.completion_trace);
        write_completion_trace(completed.begin()->second, out);
      }
      parallel_for(static_cast<int>(task_indices.size()), effective_jobs(opt.common), [&](int k) {
        const Task& task = corpus.tasks[task_indices[k]];
        const double lam = tune ? fold_lambda.at(task.task_id) : fixed_lambda;
        if (table.empty()) {
          Summary s;
          s.task_id = task.task_id;
          s.system = SystemKind::ilp_mc;
          s.meta["warning"] = "empty concept table";
          summaries[task_indices[k]] = std::move(s);
          return;
        }
        summaries[task_indices[k]] = summarize_ilp_mc(task, table, completed.at(lam), matrix,
                                                      budget_of(task), lam, mode, opt.node_limit);
      });
    };

    if (corpus.matrix_scope == MatrixScope::corpus) {
      std::vector<int> all(n_tasks);
      for (int i = 0; i < n_tasks; ++i) all[i] = i;
      run_scope(all_task_ids(corpus), all);
    } else {
      for (int i = 0; i < n_tasks; ++i)
        run_scope({corpus.tasks[i].task_id}, std::vector<int>{i});
    }
  }

  write_summaries(out_dir / "summaries.jsonl", summaries);

  ordered_json manifest;
  manifest["version"] = kVersion;
  manifest["command"] = "summarize";
  manifest["corpus"] = opt.common.corpus_path;
  manifest["corpus_id"] = corpus.corpus_id;
  manifest["system"] = opt.system;
  manifest["matrix_scope"] = opt.common.matrix_scope;
  manifest["min_freq"] = opt.min_freq;
  if (opt.system == "ilp_mc")
    manifest["lambda"] = opt.lambda == "tune" ? lambda_manifest : ordered_json(opt.lambda);
  manifest["length_budget_override"] = opt.length_budget;
  manifest["solver_mode"] = opt.solver_mode;
  manifest["node_limit"] = opt.node_limit;
  manifest["seed"] = opt.seed;
  manifest["stopwords"] = stopword_source;
  manifest["stopwords_hash"] = stopwords_hash(stopwords);
  write_manifest(out_dir, manifest);
  return 0;
}

struct EvaluateOptions {
  CommonOptions common;
  std::string summaries_path;
};

int cmd_evaluate(const EvaluateOptions& opt) {
  const Corpus corpus = load(opt.common);
  std::ifstream in(opt.summaries_path);
  if (!in) throw ParseError("cannot open summaries file: " + opt.summaries_path);

  std::map<std::string, std::string> candidate;
  std::set<std::string> systems;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception& e) {
      throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
    }
    const std::string task_id = j.at("task_id").get<std::string>();
    if (!candidate.emplace(task_id, j.at("text").get<std::string>()).second)
      throw ValidationError("duplicate summary for task " + task_id);
    if (j.contains("system")) systems.insert(j.at("system").get<std::string>());
  }
  if (candidate.empty()) throw ParseError("empty summaries file: " + opt.summaries_path);

  std::map<std::string, std::vector<std::string>> references;
  for (const auto& task : corpus.tasks) {
    std::vector<std::string> refs;
    for (const auto& summary : task.human_summaries) {
      std::string text;
      for (const auto& l : summary) {
        if (!text.empty()) text.push_back(' ');
        text += l;
      }
      refs.push_back(text);
    }
    references[task.task_id] = std::move(refs);
  }

  const RougeReport report = score_tasks(candidate, references);
  const std::string system = systems.size() == 1 ? *systems.begin() : "mixed";
  std::filesystem::create_directories(opt.common.output_dir);
  const std::filesystem::path out_dir(opt.common.output_dir);
  {
    auto out = open_output(out_dir / "rouge.csv");
    write_rouge_csv(report, corpus.corpus_id, system, out);
  }
  ordered_json manifest;
  manifest["version"] = kVersion;
  manifest["command"] = "evaluate";
  manifest["corpus"] = opt.common.corpus_path;
  manifest["summaries"] = opt.summaries_path;
  manifest["system"] = system;
  write_manifest(out_dir, manifest);
  return 0;
}

struct TuneOptions {
  CommonOptions common;
  int min_freq = 2;
  std::string grid;
  std::string solver_mode = "exact";
};

int cmd_tune(const TuneOptions& opt) {
  const Corpus corpus = load(opt.common);
  std::string stopword_source;
  const StopwordSet stopwords = resolve_stopwords(opt.common, stopword_source);
  const SolveMode mode = opt.solver_mode == "greedy" ? SolveMode::greedy : SolveMode::exact;
  const TuneResult result =
      tune_lambda(corpus, parse_grid(opt.grid), opt.min_freq, stopwords, mode);

  std::filesystem::create_directories(opt.common.output_dir);
  const std::filesystem::path out_dir(opt.common.output_dir);
  {
    auto out = open_output(out_dir / "lambda.csv");
    out << "task_id,best_lambda\n";
    for (const auto& [task_id, lam] : result.best_lambda) out << task_id << ',' << lam << '\n';
  }
  {
    auto out = open_output(out_dir / "tune_grid.csv");
    out << "lambda,task_id,r1_recall\n";
    for (const auto& [lam, recalls] : result.r1_recall)
      for (const auto& [task_id, recall] : recalls)
        out << lam << ',' << task_id << ',' << recall << '\n';
  }
  ordered_json manifest;
  manifest["version"] = kVersion;
  manifest["command"] = "tune";
  manifest["corpus"] = opt.common.corpus_path;
  manifest["min_freq"] = opt.min_freq;
  manifest["grid"] = result.grid;
  manifest["solver_mode"] = opt.solver_mode;
  manifest["stopwords_hash"] = stopwords_hash(stopwords);
  write_manifest(out_dir, manifest);
  return 0;
}

struct IntrinsicOptions {
  CommonOptions common;
  std::string annotations_path;
  double lambda = 1.0;
  int min_freq = 2;
  std::string completion_trace;
};

int cmd_intrinsic(const IntrinsicOptions& opt) {
  const Corpus corpus = load(opt.common);
  if (corpus.matrix_scope != MatrixScope::corpus)
    throw ValidationError("intrinsic evaluation needs --matrix-scope corpus");
  std::string stopword_source;
  const StopwordSet stopwords = resolve_stopwords(opt.common, stopword_source);
  const auto annotations = load_annotations(opt.annotations_path, corpus);

  const ConceptTable table =
      build_concept_table(corpus, all_task_ids(corpus), opt.min_freq, stopwords);
  if (table.empty()) throw ValidationError("concept table is empty; nothing to test");
  const CoocMatrix matrix = build_matrix(table, corpus, all_task_ids(corpus), stopwords);
  CompletionConfig cfg;
  cfg.lambda = opt.lambda;
  const CompletedMatrix completed = complete(matrix, cfg);

  const GoldPairs gold = build_gold_pairs(annotations, corpus, stopwords);
  const GoldPairs covered = filter_covered(gold, table, matrix);
  const H1Result h1 = test_h1(completed, matrix, table, covered);

  std::filesystem::create_directories(opt.common.output_dir);
  const std::filesystem::path out_dir(opt.common.output_dir);
  if (!opt.completion_trace.empty()) {
    auto out = open_output(opt.completion_trace);
    write_completion_trace(completed, out);
  }
  {
    auto out = open_output(out_dir / "gold_counts.csv");
    out << "bigrams,similar_pairs,different_pairs,triples_h1a,triples_h1b,covered_h1a,"
           "covered_h1b\n";
    out << gold.bigrams.size() << ',' << gold.similar.size() << ',' << gold.different.size()
        << ',' << gold.triples_h1a.size() << ',' << gold.triples_h1b.size() << ','
        << covered.triples_h1a.size() << ',' << covered.triples_h1b.size() << '\n';
  }
  {
    auto out = open_output(out_dir / "intrinsic.csv");
    out << "hypothesis,n,mean_pos,mean_neg,t,p,significant_05\n";
    auto row = [&](const char* name, const H1Side& side) {
      out << name << ',' << side.n << ',' << side.mean_pos << ',' << side.mean_neg << ','
          << side.ttest.t_statistic << ',' << side.ttest.p_value << ','
          << (side.ttest.significant_05 ? "true" : "false") << '\n';
    };
    row("h1a", h1.h1a);
    row("h1b", h1.h1b);
  }
  ordered_json manifest;
  manifest["version"] = kVersion;
  manifest["command"] = "intrinsic";
  manifest["corpus"] = opt.common.corpus_path;
  manifest["annotations"] = opt.annotations_path;
  manifest["lambda"] = opt.lambda;
  manifest["min_freq"] = opt.min_freq;
  manifest["completion_iterations"] = completed.iterations_run;
  manifest["completion_converged"] = completed.converged;
  manifest["stopwords_hash"] = stopwords_hash(stopwords);
  write_manifest(out_dir, manifest);
  return 0;
}

struct SynthesizeOptions {
  CommonOptions common;
  std::string direction;
  std::uint64_t seed = 0;
};

int cmd_synthesize(const SynthesizeOptions& opt) {
  const Corpus corpus = load(opt.common);
  std::string stopword_source;
  const StopwordSet stopwords = resolve_stopwords(opt.common, stopword_source);
  const SynthesisDirection dir = opt.direction == "increase" ? SynthesisDirection::increase
                                                             : SynthesisDirection::decrease;
  const SynthesisResult result = synthesize_alpha(corpus, dir, opt.seed, stopwords);

  std::filesystem::create_directories(opt.common.output_dir);
  const std::filesystem::path out_dir(opt.common.output_dir);
  write_corpus(result.corpus, (out_dir / "synthesized.jsonl").string());
  {
    auto out = open_output(out_dir / "removals.csv");
    write_removal_log(result.removals, out);
  }
  ordered_json manifest;
  manifest["version"] = kVersion;
  manifest["command"] = "synthesize";
  manifest["corpus"] = opt.common.corpus_path;
  manifest["direction"] = opt.direction;
  manifest["seed"] = opt.seed;
  manifest["removed_sentences"] = result.removals.size();
  manifest["stopwords_hash"] = stopwords_hash(stopwords);
  write_manifest(out_dir, manifest);
  return 0;
}

int cmd_stats(const CommonOptions& common) {
  const Corpus corpus = load(common);
  std::string stopword_source;
  const StopwordSet stopwords = resolve_stopwords(common, stopword_source);
  const AttributeReport report = compute_attributes(corpus, stopwords);

  std::filesystem::create_directories(common.output_dir);
  const std::filesystem::path out_dir(common.output_dir);
  {
    auto out = open_output(out_dir / "attributes.csv");
    write_attribute_csv(report, out);
  }
  ordered_json manifest;
  manifest["version"] = kVersion;
  manifest["command"] = "stats";
  manifest["corpus"] = common.corpus_path;
  manifest["stopwords_hash"] = stopwords_hash(stopwords);
  write_manifest(out_dir, manifest);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"budgeted concept-coverage summarization with matrix completion"};
  app.require_subcommand(1);

  SummarizeOptions sum_opt;
  auto* sum = app.add_subcommand("summarize", "write one summary per task");
  add_common(sum, sum_opt.common);
  sum->add_option("--system", sum_opt.system, "summarizer")
      ->required()
      ->check(CLI::IsMember({"ilp", "ilp_mc", "sumbasic", "lexrank"}));
  sum->add_option("--lambda", sum_opt.lambda, "completion weight, or \"tune\"");
  sum->add_option("--min-freq", sum_opt.min_freq, "bigram frequency cutoff")
      ->check(CLI::IsMember({1, 2}));
  sum->add_option("--length-budget", sum_opt.length_budget, "override per-task word budgets");
  sum->add_option("--seed", sum_opt.seed, "run seed recorded in the manifest");
  sum->add_option("--solver-mode", sum_opt.solver_mode, "exact or greedy selection")
      ->check(CLI::IsMember({"exact", "greedy"}));
  sum->add_option("--node-limit", sum_opt.node_limit, "branch-and-bound node limit");
  sum->add_option("--grid", sum_opt.grid, "comma-separated lambda grid for --lambda tune");
  sum->add_option("--export-matrix", sum_opt.export_matrix, "dump the binary matrix (COO text)");
  sum->add_option("--completion-trace", sum_opt.completion_trace,
                  "dump per-iteration completion objectives (CSV)");
  sum->add_option("--lexrank-threshold", sum_opt.lexrank_threshold, "cosine edge threshold");
  sum->add_option("--lexrank-damping", sum_opt.lexrank_damping, "power iteration damping");

  EvaluateOptions eval_opt;
  auto* eval = app.add_subcommand("evaluate", "score summaries against references");
  add_common(eval, eval_opt.common);
  eval->add_option("--summaries", eval_opt.summaries_path, "summaries JSONL")->required();

  TuneOptions tune_opt;
  auto* tune = app.add_subcommand("tune", "leave-one-task-out lambda grid search");
  add_common(tune, tune_opt.common);
  tune->add_option("--min-freq", tune_opt.min_freq, "bigram frequency cutoff")
      ->check(CLI::IsMember({1, 2}));
  tune->add_option("--grid", tune_opt.grid, "comma-separated lambda grid");
  tune->add_option("--solver-mode", tune_opt.solver_mode, "exact or greedy selection")
      ->check(CLI::IsMember({"exact", "greedy"}));

  IntrinsicOptions intr_opt;
  auto* intr = app.add_subcommand("intrinsic", "hypothesis tests on the completed matrix");
  add_common(intr, intr_opt.common);
  intr->add_option("--annotations", intr_opt.annotations_path, "highlight annotations JSONL")
      ->required();
  intr->add_option("--lambda", intr_opt.lambda, "completion weight");
  intr->add_option("--min-freq", intr_opt.min_freq, "bigram frequency cutoff")
      ->check(CLI::IsMember({1, 2}));
  intr->add_option("--completion-trace", intr_opt.completion_trace,
                   "dump per-iteration completion objectives (CSV)");

  SynthesizeOptions syn_opt;
  auto* syn = app.add_subcommand("synthesize", "rewrite the corpus to shift alpha_b=1");
  add_common(syn, syn_opt.common);
  syn->add_option("--direction", syn_opt.direction, "increase or decrease")
      ->required()
      ->check(CLI::IsMember({"increase", "decrease"}));
  syn->add_option("--seed", syn_opt.seed, "synthesis seed");

  CommonOptions stats_opt;
  auto* stats = app.add_subcommand("stats", "corpus/summary attribute report");
  add_common(stats, stats_opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << '\n';
    return 2;
  }

  try {
    if (sum->parsed()) return cmd_summarize(sum_opt);
    if (eval->parsed()) return cmd_evaluate(eval_opt);
    if (tune->parsed()) return cmd_tune(tune_opt);
    if (intr->parsed()) return cmd_intrinsic(intr_opt);
    if (syn->parsed()) return cmd_synthesize(syn_opt);
    if (stats->parsed()) return cmd_stats(stats_opt);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
