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

#include "lrsumm/corpus.h"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <istream>
#include <ostream>
#include <regex>

#include "lrsumm/error.h"

namespace lrsumm {

namespace {

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

bool is_ascii_punct(char c) {
  auto u = static_cast<unsigned char>(c);
  return u < 0x80 && std::ispunct(u);
}

char ascii_lower(char c) {
  return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c;
}

std::string_view trim(std::string_view s) {
  size_t b = 0, e = s.size();
  while (b < e && is_space(s[b])) ++b;
  while (e > b && is_space(s[e - 1])) --e;
  return s.substr(b, e - b);
}

bool is_terminal(char c) { return c == '.' || c == '!' || c == '?'; }

bool is_closer(char c) {
  return c == '"' || c == '\'' || c == ')' || c == ']' || c == '}';
}

constexpr std::array<std::string_view, 24> kAbbreviations = {
    "dr",  "mr",   "mrs",  "ms",     "prof", "sr",  "jr",  "st",
    "fig", "figs", "eq",   "eqs",    "no",   "nos", "vs",  "cf",
    "e.g", "i.e",  "ref",  "approx", "vol",  "ca",  "inc", "ltd"};

// The word ending right before `pos`, lowercased, with leading non-alphanumeric
// characters removed.
std::string word_before(std::string_view text, size_t pos, size_t *start) {
  size_t b = pos;
  while (b > 0 && !is_space(text[b - 1])) --b;
  *start = b;
  std::string word;
  for (size_t i = b; i < pos; ++i) word.push_back(ascii_lower(text[i]));
  size_t lead = 0;
  while (lead < word.size() &&
         !std::isalnum(static_cast<unsigned char>(word[lead])))
    ++lead;
  return word.substr(lead);
}

bool ends_with_abbreviation(std::string_view text, size_t dot) {
  size_t start = 0;
  std::string word = word_before(text, dot, &start);
  if (word.empty()) return false;
  if (word == "al") {
    size_t e = start;
    while (e > 0 && is_space(text[e - 1])) --e;
    size_t prev_start = 0;
    return e > 0 && word_before(text, e, &prev_start) == "et";
  }
  return std::find(kAbbreviations.begin(), kAbbreviations.end(), word) !=
         kAbbreviations.end();
}

}  // namespace

std::vector<std::string> split_sentences(std::string_view text) {
  std::vector<std::string> out;
  auto emit = [&](size_t b, size_t e) {
    std::string_view s = trim(text.substr(b, e - b));
    if (!s.empty()) out.emplace_back(s);
  };
  size_t start = 0;
  const size_t n = text.size();
  for (size_t i = 0; i < n; ++i) {
    if (!is_terminal(text[i])) continue;
    size_t end = i;
    while (end + 1 < n && is_terminal(text[end + 1])) ++end;
    while (end + 1 < n && is_closer(text[end + 1])) ++end;
    bool at_break = end + 1 == n || is_space(text[end + 1]);
    bool single_dot = text[i] == '.' && (end == i || !is_terminal(text[i + 1]));
    if (at_break && !(single_dot && ends_with_abbreviation(text, i))) {
      emit(start, end + 1);
      start = end + 1;
    }
    i = end;
  }
  if (start < n) emit(start, n);
  return out;
}

TokenizedSentence tokenize(std::string_view sentence) {
  std::string_view s = trim(sentence);
  if (s.empty()) throw DegenerateSentenceError();
  TokenizedSentence out;
  out.raw = std::string(sentence);
  std::string current;
  auto flush = [&] {
    if (!current.empty()) out.tokens.push_back(std::move(current));
    current.clear();
  };
  for (char c : s) {
    if (is_space(c)) {
      flush();
    } else if (is_ascii_punct(c)) {
      flush();
      out.tokens.emplace_back(1, c);
    } else {
      current.push_back(ascii_lower(c));
    }
  }
  flush();
  return out;
}

std::vector<std::string> detect_dois(std::string_view text) {
  static const std::regex kDoi(R"(10\.[0-9]{4,9}/\S+)");
  std::vector<std::string> out;
  std::string input(text);
  for (auto it = std::sregex_iterator(input.begin(), input.end(), kDoi);
       it != std::sregex_iterator(); ++it) {
    std::string doi = it->str();
    for (;;) {
      if (doi.empty()) break;
      char last = doi.back();
      if (last == '.' || last == ',' || last == ';' || last == ':' ||
          last == '!' || last == '?' || last == '"' || last == '\'') {
        doi.pop_back();
        continue;
      }
      // A closing bracket belongs to the DOI only when it is balanced inside.
      auto unbalanced = [&](char open, char close) {
        return last == close && std::count(doi.begin(), doi.end(), open) <
                                    std::count(doi.begin(), doi.end(), close);
      };
      if (unbalanced('(', ')') || unbalanced('[', ']') ||
          unbalanced('{', '}')) {
        doi.pop_back();
        continue;
      }
      break;
    }
    if (doi.find('/') + 1 < doi.size()) out.push_back(std::move(doi));
  }
  return out;
}

Document parse_document(const nlohmann::json &record) {
  if (!record.is_object()) throw InputError("record is not a JSON object");
  auto id_it = record.find("id");
  if (id_it == record.end() || !id_it->is_string())
    throw InputError("missing string field \"id\"");
  Document doc;
  doc.id = id_it->get<std::string>();
  if (doc.id.empty()) throw InputError("empty \"id\"");
  if (auto src = record.find("source"); src != record.end()) {
    if (!src->is_string()) throw InputError("\"source\" is not a string");
    doc.source = src->get<std::string>();
  }

  std::vector<std::string> raw;
  if (auto sents = record.find("sentences"); sents != record.end()) {
    if (!sents->is_array()) throw InputError("\"sentences\" is not an array");
    for (const auto &s : *sents) {
      if (!s.is_string()) throw InputError("non-string entry in \"sentences\"");
      raw.push_back(s.get<std::string>());
    }
  } else if (auto text = record.find("text"); text != record.end()) {
    if (!text->is_string()) throw InputError("\"text\" is not a string");
    raw = split_sentences(text->get_ref<const std::string &>());
  } else {
    throw InputError("record has neither \"text\" nor \"sentences\"");
  }

  for (const auto &s : raw) {
    if (trim(s).empty()) continue;
    doc.sentences.push_back(tokenize(s));
  }
  doc.degenerate = doc.sentences.empty();
  return doc;
}

JsonlCorpusReader::JsonlCorpusReader(const std::filesystem::path &path,
                                     std::ostream *log)
    : log_(log) {
  auto file = std::make_unique<std::ifstream>(path);
  if (!*file) throw InputError("cannot open corpus " + path.string());
  in_ = std::move(file);
}

JsonlCorpusReader::JsonlCorpusReader(std::unique_ptr<std::istream> in,
                                     std::ostream *log)
    : in_(std::move(in)), log_(log) {}

std::optional<Document> JsonlCorpusReader::next() {
  std::string line;
  while (std::getline(*in_, line)) {
    ++line_;
    if (trim(line).empty()) continue;
    Document doc;
    try {
      doc = parse_document(nlohmann::json::parse(line));
    } catch (const std::exception &e) {
      errors_.push_back({line_, e.what()});
      if (log_)
        *log_ << "warning: skipping record at line " << line_ << ": "
              << e.what() << "\n";
      continue;
    }
    if (!seen_ids_.insert(doc.id).second)
      throw InputError("duplicate document id '" + doc.id + "' at line " +
                       std::to_string(line_));
    return doc;
  }
  return std::nullopt;
}

std::vector<Document> read_corpus(const std::filesystem::path &path,
                                  std::vector<RecordError> *errors,
                                  std::ostream *log) {
  JsonlCorpusReader reader(path, log);
  std::vector<Document> docs;
  while (auto doc = reader.next()) docs.push_back(std::move(*doc));
  if (errors)
    errors->insert(errors->end(), reader.errors().begin(),
                   reader.errors().end());
  return docs;
}

void CorpusStatsAccumulator::add(const Document &doc) {
  ++docs_;
  const uint64_t n = doc.sentences.size();
  sentences_ += n;
  sentences_sq_ += static_cast<unsigned __int128>(n) * n;
  for (const auto &s : doc.sentences) {
    const uint64_t t = s.tokens.size();
    tokens_ += t;
    tokens_sq_ += static_cast<unsigned __int128>(t) * t;
  }
}

namespace {

// Population mean/std from integer moments: var = (n*sum_sq - sum^2) / n^2.
MeanStd moments(uint64_t n, uint64_t sum, unsigned __int128 sum_sq) {
  MeanStd out;
  if (n == 0) return out;
  out.mean = static_cast<double>(sum) / static_cast<double>(n);
  unsigned __int128 num =
      static_cast<unsigned __int128>(n) * sum_sq -
      static_cast<unsigned __int128>(sum) * sum;
  long double den = static_cast<long double>(n) * static_cast<long double>(n);
  out.std = static_cast<double>(
      std::sqrt(static_cast<long double>(num) / den));
  return out;
}

}  // namespace

CorpusStats CorpusStatsAccumulator::stats() const {
  CorpusStats s;
  s.doc_count = docs_;
  s.sentences_per_doc = moments(docs_, sentences_, sentences_sq_);
  s.tokens_per_sentence = moments(sentences_, tokens_, tokens_sq_);
  return s;
}

CorpusStats corpus_stats(std::span<const Document> corpus) {
  CorpusStatsAccumulator acc;
  for (const auto &doc : corpus) acc.add(doc);
  return acc.stats();
}

CorpusStats corpus_stats(JsonlCorpusReader &reader) {
  CorpusStatsAccumulator acc;
  while (auto doc = reader.next()) acc.add(*doc);
  return acc.stats();
}

nlohmann::json to_json(const CorpusStats &stats) {
  return {
      {"doc_count", stats.doc_count},
      {"tokens_per_sentence",
       {{"mean", stats.tokens_per_sentence.mean},
        {"std", stats.tokens_per_sentence.std}}},
      {"sentences_per_doc",
       {{"mean", stats.sentences_per_doc.mean},
        {"std", stats.sentences_per_doc.std}}},
  };
}

nlohmann::json to_json(const Document &doc) {
  nlohmann::json sentences = nlohmann::json::array();
  nlohmann::json tokens = nlohmann::json::array();
  for (const auto &s : doc.sentences) {
    sentences.push_back(s.raw);
    tokens.push_back(s.tokens);
  }
  nlohmann::json out = {{"id", doc.id}, {"sentences", sentences},
                        {"tokens", tokens}};
  if (!doc.source.empty()) out["source"] = doc.source;
  return out;
}

}  // namespace lrsumm
