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

// Canonical document model, tokenization and JSONL corpus ingestion.

#ifndef LRSUMM_CORPUS_H_
#define LRSUMM_CORPUS_H_

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iosfwd>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "json.hpp"

namespace lrsumm {

// A sentence as lowercase tokens plus the original string it came from.
// Tokens are never empty and never contain whitespace.
struct TokenizedSentence {
  std::vector<std::string> tokens;
  std::string raw;

  bool operator==(const TokenizedSentence &) const = default;
};

// An article or a summary. For summaries each sentence is one bullet point.
struct Document {
  std::string id;
  std::vector<TokenizedSentence> sentences;
  std::string source;
  // Set when the record carried no usable sentence.
  bool degenerate = false;
};

struct MeanStd {
  double mean = 0.0;
  double std = 0.0;
};

struct CorpusStats {
  uint64_t doc_count = 0;
  MeanStd tokens_per_sentence;
  MeanStd sentences_per_doc;
};

// Rule-based splitter. A boundary follows a run of '.', '!' or '?' (plus any
// closing quotes or brackets) when whitespace or the end of text comes next,
// unless the word before a '.' is a known abbreviation.
std::vector<std::string> split_sentences(std::string_view text);

// Lowercases ASCII letters, splits on whitespace and makes every ASCII
// punctuation character its own token. Throws DegenerateSentenceError when
// the input is empty after trimming.
TokenizedSentence tokenize(std::string_view sentence);

// DOI mentions of the form 10.<4-9 digits>/<non-whitespace>, with trailing
// sentence punctuation stripped, in order of appearance.
std::vector<std::string> detect_dois(std::string_view text);

// Builds a Document from one parsed JSONL record. Throws InputError when the
// record is not a valid corpus object.
Document parse_document(const nlohmann::json &record);

struct RecordError {
  size_t line;
  std::string message;
};

// Streams Documents out of a corpus JSONL file.
//
// Malformed records are skipped and remembered in errors(); reading goes on
// with the next line. A repeated document id is a corpus-level error and
// makes next() throw InputError.
class JsonlCorpusReader {
 public:
  // Throws InputError when the file cannot be opened.
  explicit JsonlCorpusReader(const std::filesystem::path &path,
                             std::ostream *log = nullptr);
  explicit JsonlCorpusReader(std::unique_ptr<std::istream> in,
                             std::ostream *log = nullptr);

  std::optional<Document> next();

  const std::vector<RecordError> &errors() const { return errors_; }

 private:
  std::unique_ptr<std::istream> in_;
  std::ostream *log_;
  size_t line_ = 0;
  std::unordered_set<std::string> seen_ids_;
  std::vector<RecordError> errors_;
};

// Reads a whole corpus. Record errors are appended to `errors` when given.
std::vector<Document> read_corpus(const std::filesystem::path &path,
                                  std::vector<RecordError> *errors = nullptr,
                                  std::ostream *log = nullptr);

// Exact streaming statistics: sums are kept as integers so the result does
// not depend on the order documents arrive in.
class CorpusStatsAccumulator {
 public:
  void add(const Document &doc);
  CorpusStats stats() const;

 private:
  uint64_t docs_ = 0;
  uint64_t sentences_ = 0;
  unsigned __int128 sentences_sq_ = 0;
  uint64_t tokens_ = 0;
  unsigned __int128 tokens_sq_ = 0;
};

CorpusStats corpus_stats(std::span<const Document> corpus);
CorpusStats corpus_stats(JsonlCorpusReader &reader);

nlohmann::json to_json(const CorpusStats &stats);
nlohmann::json to_json(const Document &doc);

}  // namespace lrsumm

#endif  // LRSUMM_CORPUS_H_
