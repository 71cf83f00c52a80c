// Copyright 2026 The lrsumm Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "lrsumm/cli.h"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "lrsumm/error.h"
#include "lrsumm/pipeline.h"
#include "lrsumm/synthkit.h"

namespace lrsumm {
namespace {

struct CommonFlags {
  std::string config;
  std::optional<int> workers;
  std::optional<uint64_t> seed;
  std::string out;
};

struct ExtractFlags {
  std::optional<size_t> k;
  std::optional<std::string> method;
  std::string k_from;
};

void add_common(CLI::App *sub, CommonFlags &f) {
  sub->add_option("--config", f.config, "Pipeline config JSON");
  sub->add_option("--workers", f.workers, "Worker count")->check(CLI::PositiveNumber);
  sub->add_option("--seed", f.seed, "Random seed");
  sub->add_option("--out", f.out, "Output path (default: standard output)");
}

void add_extract_flags(CLI::App *sub, ExtractFlags &f) {
  sub->add_option("--k", f.k, "Sentences per summary")->check(CLI::PositiveNumber);
  sub->add_option("--method", f.method, "lead or lexrank");
  sub->add_option("--k-from", f.k_from,
                  "Summary corpus whose mean length sets k");
}

PipelineConfig resolve(const CommonFlags &f) {
  PipelineConfig c = f.config.empty() ? PipelineConfig{} : load_config(f.config);
  if (f.workers) c.workers = *f.workers;
  if (f.seed) c.seed = *f.seed;
  return c;
}

void apply_extract_flags(PipelineConfig &c, const ExtractFlags &f) {
  if (!f.k_from.empty()) c.extract.k = estimate_k(read_corpus(f.k_from));
  if (f.k) c.extract.k = *f.k;
  if (f.method) c.extract.method = parse_extract_method(*f.method);
}

// Writes to --out when given, else to `fallback`.
void with_output(const std::string &path, std::ostream &fallback,
                 const std::function<void(std::ostream &)> &body) {
  if (path.empty()) {
    body(fallback);
    return;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw InputError("cannot write " + path);
  body(file);
  file.flush();
  if (!file) throw InputError("write to " + path + " failed");
}

std::vector<Document> read_logged(const std::string &path, std::ostream &err) {
  std::vector<RecordError> errors;
  std::vector<Document> docs = read_corpus(path, &errors);
  for (const auto &e : errors)
    err << "warning: " << path << ":" << e.line << ": " << e.message << "\n";
  return docs;
}

}  // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out,
            std::ostream &err) {
  CLI::App app{"Extract-then-paraphrase summarization toolkit", "lrsumm"};
  app.require_subcommand(1);

  CommonFlags common;
  ExtractFlags ex;
  std::string in1, in2;
  bool detect = false;
  std::optional<double> theta_d, theta_s;
  std::string word_vectors;
  std::optional<int> j_hyp;
  std::string generator, abstractor;

  auto *ingest = app.add_subcommand("ingest", "Normalize a corpus to tokenized JSONL");
  ingest->add_option("corpus", in1)->required();
  ingest->add_flag("--detect-dois", detect, "Add a \"dois\" field");

  auto *stats = app.add_subcommand("stats", "Corpus statistics as JSON");
  stats->add_option("corpus", in1)->required();

  auto *mine_cmd = app.add_subcommand("mine", "Mine pseudo-parallel sentence pairs");
  mine_cmd->add_option("summaries", in1)->required();
  mine_cmd->add_option("articles", in2)->required();
  mine_cmd->add_option("--word-vectors", word_vectors, "Word vector text file");
  mine_cmd->add_option("--theta-d", theta_d, "Document similarity threshold");
  mine_cmd->add_option("--theta-s", theta_s, "Sentence similarity threshold");

  auto *synth = app.add_subcommand("synth", "Add backtranslated pairs to a pair TSV");
  synth->add_option("pairs", in1)->required();
  synth->add_option("summaries", in2)->required();
  synth->add_option("--j", j_hyp, "Hypotheses per summary sentence")
      ->check(CLI::PositiveNumber);
  synth->add_option("--generator", generator, "builtin, echo or a shell command");

  auto *extract_cmd = app.add_subcommand("extract", "Extractive summaries as JSONL");
  extract_cmd->add_option("articles", in1)->required();
  add_extract_flags(extract_cmd, ex);

  auto *summarize_cmd =
      app.add_subcommand("summarize", "Extract, then paraphrase each sentence");
  summarize_cmd->add_option("articles", in1)->required();
  add_extract_flags(summarize_cmd, ex);
  summarize_cmd->add_option("--abstractor", abstractor,
                            "identity or a shell command");

  auto *oracle = app.add_subcommand("oracle", "Oracle extracts and their scores");
  oracle->add_option("articles", in1)->required();
  oracle->add_option("references", in2)->required();

  auto *eval = app.add_subcommand("eval", "Score system output against references");
  eval->add_option("system", in1)->required();
  eval->add_option("references", in2)->required();

  for (auto *sub : app.get_subcommands({})) add_common(sub, common);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    PipelineConfig config = resolve(common);
    auto dump_line = [](std::ostream &s, const nlohmann::json &j) {
      s << j.dump() << '\n';
    };

    if (ingest->parsed()) {
      JsonlCorpusReader reader(in1, &err);
      with_output(common.out, out, [&](std::ostream &s) {
        while (auto doc = reader.next()) {
          nlohmann::json j = to_json(*doc);
          if (detect) {
            std::string text;
            for (const auto &sent : doc->sentences) text += sent.raw + " ";
            j["dois"] = detect_dois(text);
          }
          dump_line(s, j);
        }
      });
      if (!reader.errors().empty())
        err << "warning: skipped " << reader.errors().size() << " malformed records\n";
    } else if (stats->parsed()) {
      JsonlCorpusReader reader(in1, &err);
      CorpusStats st = corpus_stats(reader);
      with_output(common.out, out, [&](std::ostream &s) { dump_line(s, to_json(st)); });
    } else if (mine_cmd->parsed()) {
      if (!word_vectors.empty()) config.word_vectors_path = word_vectors;
      if (theta_d) config.align.theta_d = *theta_d;
      if (theta_s) config.align.theta_s = *theta_s;
      config.validate();
      if (common.out.empty()) throw InputError("mine needs --out for the pair TSV");
      if (config.word_vectors_path.empty())
        throw InputError("mine needs word vectors (--word-vectors or config)");
      std::vector<Document> summaries = read_logged(in1, err);
      std::vector<Document> articles = read_logged(in2, err);
      WordVectorTable table = load_word_vectors(config.word_vectors_path);
      MinedDataset ds = mine(summaries, articles, table, config.align, config.workers);
      export_training_pairs(ds, common.out);
      dump_line(out, to_json(ds.stats));
    } else if (synth->parsed()) {
      if (j_hyp) config.j_hypotheses = *j_hyp;
      if (!generator.empty()) config.generator_command = generator;
      config.validate();
      if (common.out.empty()) throw InputError("synth needs --out for the pair TSV");
      MinedDataset pp = read_training_pairs(in1);
      std::vector<Document> summaries = read_logged(in2, err);
      std::vector<SentencePair> bt = synthesize(summaries, config, &err);
      MinedDataset merged = merge_datasets(pp, bt);
      export_training_pairs(merged, common.out);
      dump_line(out, to_json(merged.stats));
    } else if (extract_cmd->parsed()) {
      apply_extract_flags(config, ex);
      config.validate();
      std::vector<Document> articles = read_logged(in1, err);
      std::vector<ExtractedSummary> picks(articles.size());
#pragma omp parallel for schedule(dynamic, 16) num_threads(config.workers)
      for (long i = 0; i < static_cast<long>(articles.size()); ++i)
        picks[i] = extract(articles[i], config.extract);
      with_output(common.out, out, [&](std::ostream &s) {
        for (const auto &p : picks) dump_line(s, to_json(p));
      });
    } else if (summarize_cmd->parsed()) {
      apply_extract_flags(config, ex);
      if (!abstractor.empty()) config.abstractor_command = abstractor;
      config.validate();
      std::vector<Document> articles = read_logged(in1, err);
      std::vector<SummaryResult> results = summarize(articles, config);
      with_output(common.out, out, [&](std::ostream &s) {
        for (const auto &r : results) dump_line(s, to_json(r));
      });
    } else if (oracle->parsed()) {
      config.validate();
      std::vector<Document> articles = read_logged(in1, err);
      std::vector<Document> references = read_logged(in2, err);
      std::unordered_map<std::string_view, size_t> by_id;
      for (size_t i = 0; i < articles.size(); ++i) by_id.emplace(articles[i].id, i);
      std::vector<ExtractedSummary> picks(references.size());
      for (size_t r = 0; r < references.size(); ++r) {
        auto it = by_id.find(references[r].id);
        if (it == by_id.end())
          throw InputError("no article for reference id '" + references[r].id + "'");
        picks[r] = oracle_extract(articles[it->second], references[r]);
      }
      std::vector<TextRecord> sys, refs;
      for (size_t r = 0; r < references.size(); ++r) {
        sys.push_back({picks[r].doc_id, picks[r].tokens()});
        refs.push_back(text_record(references[r]));
      }
      EvalReport report = evaluate_records(sys, refs, config.workers);
      if (!common.out.empty())
        with_output(common.out, out, [&](std::ostream &s) {
          for (const auto &p : picks) dump_line(s, to_json(p));
        });
      dump_line(out, to_json(report));
    } else if (eval->parsed()) {
      std::vector<TextRecord> sys = read_text_records(in1);
      std::vector<TextRecord> refs = read_text_records(in2);
      if (sys.size() != refs.size())
        err << "warning: " << sys.size() << " system records, " << refs.size()
            << " references\n";
      EvalReport report = evaluate_records(sys, refs, config.workers);
      with_output(common.out, out, [&](std::ostream &s) { dump_line(s, to_json(report)); });
    }
    return 0;
  } catch (const InputError &e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception &e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace lrsumm
