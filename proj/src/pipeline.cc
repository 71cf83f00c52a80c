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

#include "lrsumm/pipeline.h"

#include <exception>
#include <cctype>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>
#include <thread>
#include <unordered_map>

#include "lrsumm/error.h"
#include "lrsumm/subprocess.h"
#include "lrsumm/synthkit.h"

namespace lrsumm {

void PipelineConfig::validate() const {
  extract.validate();
  align.validate();
  if (j_hypotheses < 1) throw InputError("j_hypotheses must be at least 1");
  if (workers < 1) throw InputError("workers must be at least 1");
  if (abstractor_command.empty())
    throw InputError("abstractor_command must not be empty");
  if (generator_command.empty())
    throw InputError("generator_command must not be empty");
}

namespace {

template <typename T>
T get_field(const nlohmann::json &j, const std::string &name) {
  try {
    return j.at(name).get<T>();
  } catch (const nlohmann::json::exception &) {
    throw InputError("config field '" + name + "' has the wrong type");
  }
}

size_t get_count(const nlohmann::json &j, const std::string &name) {
  const auto &v = j.at(name);
  if (!v.is_number_integer() || v.get<int64_t>() < 0)
    throw InputError("config field '" + name + "' must be a non-negative integer");
  return v.get<size_t>();
}

void check_keys(const nlohmann::json &j, std::initializer_list<const char *> keys,
                const std::string &where) {
  if (!j.is_object()) throw InputError(where + " must be a JSON object");
  for (const auto &[key, value] : j.items()) {
    bool known = false;
    for (const char *k : keys) known = known || key == k;
    if (!known) throw InputError("unknown config key '" + where + key + "'");
  }
}

// Runs fn(begin, end) over `workers` contiguous slices of [0, n) on separate
// threads. The first failing slice's exception is rethrown.
void run_sliced(size_t n, int workers,
                const std::function<void(size_t, size_t)> &fn) {
  const size_t slices = std::min<size_t>(std::max(workers, 1), std::max<size_t>(n, 1));
  if (slices <= 1) {
    fn(0, n);
    return;
  }
  std::vector<std::exception_ptr> failures(slices);
  std::vector<std::thread> threads;
  for (size_t s = 0; s < slices; ++s) {
    const size_t begin = n * s / slices, end = n * (s + 1) / slices;
    threads.emplace_back([&, s, begin, end] {
      try {
        fn(begin, end);
      } catch (...) {
        failures[s] = std::current_exception();
      }
    });
  }
  for (auto &t : threads) t.join();
  for (auto &f : failures)
    if (f) std::rethrow_exception(f);
}

std::string join(const std::vector<std::string> &parts) {
  std::string out;
  for (const auto &p : parts) {
    if (!out.empty()) out.push_back(' ');
    out += p;
  }
  return out;
}

}  // namespace

void apply_config_json(PipelineConfig &config, const nlohmann::json &j) {
  check_keys(j,
             {"extract", "align", "j_hypotheses", "abstractor_command",
              "generator_command", "word_vectors_path", "workers", "seed"},
             "");
  if (j.contains("extract")) {
    const auto &e = j["extract"];
    check_keys(e, {"k", "method", "lexrank_threshold", "damping", "epsilon",
                   "max_iterations"},
               "extract.");
    if (e.contains("k")) config.extract.k = get_count(e, "k");
    if (e.contains("method"))
      config.extract.method =
          parse_extract_method(get_field<std::string>(e, "method"));
    if (e.contains("lexrank_threshold"))
      config.extract.lexrank_threshold = get_field<double>(e, "lexrank_threshold");
    if (e.contains("damping")) config.extract.damping = get_field<double>(e, "damping");
    if (e.contains("epsilon")) config.extract.epsilon = get_field<double>(e, "epsilon");
    if (e.contains("max_iterations"))
      config.extract.max_iterations = get_count(e, "max_iterations");
  }
  if (j.contains("align")) {
    const auto &a = j["align"];
    check_keys(a, {"theta_d", "theta_s", "doc_neighbors", "batch_size"}, "align.");
    if (a.contains("theta_d")) config.align.theta_d = get_field<double>(a, "theta_d");
    if (a.contains("theta_s")) config.align.theta_s = get_field<double>(a, "theta_s");
    if (a.contains("doc_neighbors"))
      config.align.doc_neighbors = get_count(a, "doc_neighbors");
    if (a.contains("batch_size")) config.align.batch_size = get_count(a, "batch_size");
  }
  if (j.contains("j_hypotheses"))
    config.j_hypotheses = static_cast<int>(get_count(j, "j_hypotheses"));
  if (j.contains("abstractor_command"))
    config.abstractor_command = get_field<std::string>(j, "abstractor_command");
  if (j.contains("generator_command"))
    config.generator_command = get_field<std::string>(j, "generator_command");
  if (j.contains("word_vectors_path"))
    config.word_vectors_path = get_field<std::string>(j, "word_vectors_path");
  if (j.contains("workers")) config.workers = static_cast<int>(get_count(j, "workers"));
  if (j.contains("seed")) config.seed = get_count(j, "seed");
}

PipelineConfig load_config(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open config " + path.string());
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error &e) {
    throw InputError("config " + path.string() + ": " + e.what());
  }
  PipelineConfig config;
  apply_config_json(config, j);
  return config;
}

nlohmann::json to_json(const PipelineConfig &c) {
  return {{"extract",
           {{"k", c.extract.k},
            {"method", to_string(c.extract.method)},
            {"lexrank_threshold", c.extract.lexrank_threshold},
            {"damping", c.extract.damping},
            {"epsilon", c.extract.epsilon},
            {"max_iterations", c.extract.max_iterations}}},
          {"align",
           {{"theta_d", c.align.theta_d},
            {"theta_s", c.align.theta_s},
            {"doc_neighbors", c.align.doc_neighbors},
            {"batch_size", c.align.batch_size}}},
          {"j_hypotheses", c.j_hypotheses},
          {"abstractor_command", c.abstractor_command},
          {"generator_command", c.generator_command},
          {"word_vectors_path", c.word_vectors_path.string()},
          {"workers", c.workers},
          {"seed", c.seed}};
}

nlohmann::json to_json(const SummaryResult &r) {
  nlohmann::json extracted = nlohmann::json::array();
  for (const auto &p : r.extracted.picks) extracted.push_back(p.sentence.raw);
  return {{"id", r.extracted.doc_id},
          {"doc_id", r.extracted.doc_id},
          {"indices", r.extracted.indices()},
          {"extracted", extracted},
          {"sentences", r.abstracted},
          {"text", join(r.abstracted)}};
}

std::vector<SummaryResult> summarize(std::span<const Document> articles,
                                     const PipelineConfig &config) {
  config.validate();
  std::vector<SummaryResult> out(articles.size());
  const bool identity = config.abstractor_command == "identity";
  run_sliced(articles.size(), config.workers, [&](size_t begin, size_t end) {
    std::vector<GeneratorRequest> requests;
    for (size_t i = begin; i < end; ++i) {
      out[i].extracted = extract(articles[i], config.extract);
      const auto &picks = out[i].extracted.picks;
      for (const auto &p : picks) {
        if (identity)
          out[i].abstracted.push_back(p.sentence.raw);
        else
          requests.push_back(
              {articles[i].id + "#" + std::to_string(p.index), p.sentence.raw, 1});
      }
    }
    if (identity || requests.empty()) return;
    GeneratorProcess abstractor(config.abstractor_command);
    std::vector<GeneratorResponse> responses = abstractor.exchange(requests);
    size_t r = 0;
    for (size_t i = begin; i < end; ++i)
      for (size_t k = 0; k < out[i].extracted.picks.size(); ++k, ++r) {
        const auto &h = responses[r].hypotheses;
        if (h.empty() || h.size() > 1 || h.front().empty())
          throw ProtocolError("abstractor must return one non-empty hypothesis; "
                              "request '" + requests[r].id + "' got " +
                              std::to_string(h.size()));
        out[i].abstracted.push_back(h.front());
      }
  });
  return out;
}

std::vector<SentencePair> synthesize(std::span<const Document> summaries,
                                     const PipelineConfig &config,
                                     std::ostream *log) {
  config.validate();
  const std::vector<SummarySentence> sentences = summary_sentences(summaries);
  const int workers =
      config.generator_command == "builtin" || config.generator_command == "echo"
          ? 1
          : config.workers;
  const size_t slices =
      std::min<size_t>(workers, std::max<size_t>(sentences.size(), 1));
  std::vector<std::vector<SentencePair>> parts(slices);
  std::vector<std::string> logs(slices);
  run_sliced(slices, static_cast<int>(slices), [&](size_t begin, size_t end) {
    for (size_t s = begin; s < end; ++s) {
      const size_t lo = sentences.size() * s / slices;
      const size_t hi = sentences.size() * (s + 1) / slices;
      auto generator = make_generator(config.generator_command, config.seed);
      std::ostringstream slice_log;
      parts[s] = expand_with_backtranslation(
          std::span(sentences).subspan(lo, hi - lo), *generator,
          config.j_hypotheses, &slice_log);
      logs[s] = slice_log.str();
    }
  });
  std::vector<SentencePair> out;
  for (size_t s = 0; s < slices; ++s) {
    if (log) *log << logs[s];
    for (auto &p : parts[s]) out.push_back(std::move(p));
  }
  return out;
}

namespace {

Tokens tokens_of(std::string_view text) {
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) return tokenize(text).tokens;
  return {};
}

}  // namespace

TextRecord text_record(const Document &doc) {
  TextRecord r{doc.id, {}};
  for (const auto &s : doc.sentences)
    r.tokens.insert(r.tokens.end(), s.tokens.begin(), s.tokens.end());
  return r;
}

std::vector<TextRecord> read_text_records(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path.string());
  std::vector<TextRecord> out;
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (tokens_of(line).empty()) continue;
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error &) {
      throw FormatError(path.string() + ": malformed JSON", line_no);
    }
    if (!j.is_object() || !j.contains("id") || !j["id"].is_string())
      throw FormatError(path.string() + ": record lacks a string 'id'", line_no);
    TextRecord r{j["id"].get<std::string>(), {}};
    if (j.contains("text") && j["text"].is_string()) {
      r.tokens = tokens_of(j["text"].get<std::string>());
    } else if (j.contains("sentences") && j["sentences"].is_array()) {
      for (const auto &s : j["sentences"]) {
        if (!s.is_string())
          throw FormatError(path.string() + ": non-string sentence", line_no);
        Tokens t = tokens_of(s.get<std::string>());
        r.tokens.insert(r.tokens.end(), t.begin(), t.end());
      }
    } else {
      throw FormatError(path.string() + ": record lacks 'text'", line_no);
    }
    out.push_back(std::move(r));
  }
  return out;
}

EvalReport evaluate_records(std::span<const TextRecord> system,
                            std::span<const TextRecord> references, int workers) {
  std::unordered_map<std::string_view, size_t> by_id;
  for (size_t i = 0; i < system.size(); ++i)
    if (!by_id.emplace(system[i].id, i).second)
      throw InputError("duplicate system id '" + system[i].id + "'");
  std::vector<Tokens> sys, refs;
  std::vector<uint8_t> used(system.size(), 0);
  for (const auto &r : references) {
    auto it = by_id.find(r.id);
    if (it == by_id.end())
      throw InputError("no system output for reference id '" + r.id + "'");
    if (used[it->second]++)
      throw InputError("duplicate reference id '" + r.id + "'");
    sys.push_back(system[it->second].tokens);
    refs.push_back(r.tokens);
  }
  for (size_t i = 0; i < system.size(); ++i)
    if (!used[i])
      throw InputError("no reference for system id '" + system[i].id + "'");
  if (refs.empty()) throw InputError("nothing to evaluate");
  return evaluate(sys, refs, workers);
}

}  // namespace lrsumm
