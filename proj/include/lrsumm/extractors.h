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

// Unsupervised sentence extractors: Lead, LexRank, and the ROUGE-1 oracle.

#ifndef LRSUMM_EXTRACTORS_H_
#define LRSUMM_EXTRACTORS_H_

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "lrsumm/corpus.h"
#include "lrsumm/embeddings.h"
#include "lrsumm/metrics.h"

namespace lrsumm {

enum class ExtractMethod { kLead, kLexRank };

std::string_view to_string(ExtractMethod method);
// Throws InputError for anything but "lead" or "lexrank".
ExtractMethod parse_extract_method(std::string_view name);

struct ExtractConfig {
  size_t k = 4;
  ExtractMethod method = ExtractMethod::kLead;
  double lexrank_threshold = 0.1;
  double damping = 0.85;
  double epsilon = 1e-8;
  size_t max_iterations = 200;

  // Throws InputError when a field is out of range.
  void validate() const;
};

struct Pick {
  size_t index;
  TokenizedSentence sentence;
};

// Picks are in original document order with strictly increasing indices.
struct ExtractedSummary {
  std::string doc_id;
  std::vector<Pick> picks;

  std::vector<size_t> indices() const;
  // All tokens of the picked sentences, in order.
  Tokens tokens() const;
};

ExtractedSummary lead(const Document &doc, size_t k);

// Dense N x N weights, row-major.
class WeightMatrix {
 public:
  explicit WeightMatrix(size_t n) : n_(n), w_(n * n, 0.0) {}

  size_t size() const { return n_; }
  double &at(size_t i, size_t j) { return w_[i * n_ + j]; }
  double at(size_t i, size_t j) const { return w_[i * n_ + j]; }

 private:
  size_t n_;
  std::vector<double> w_;
};

// Power iteration on p <- (1 - d) / N + d W^T p, with W row-normalized and
// all-zero rows spread uniformly. Stops when the L1 change drops below
// epsilon or after max_iterations. The result is nonnegative and sums to 1.
// Throws std::invalid_argument for an empty or negative matrix.
std::vector<double> pagerank(const WeightMatrix &weights, double damping,
                             double epsilon, size_t max_iterations);

// TF-IDF cosine graph over the document's sentences; edges above the
// threshold keep their similarity as weight. Selects the k most central
// sentences, ties to the lower index.
ExtractedSummary lexrank(const Document &doc, const TfIdfModel &model,
                         const ExtractConfig &config);
// Fits the TF-IDF model on the document's own sentences.
ExtractedSummary lexrank(const Document &doc, const ExtractConfig &config);

ExtractedSummary extract(const Document &doc, const ExtractConfig &config);

// For each reference sentence, the article sentence with the highest ROUGE-1
// F1 (ties to the lower index); repeated picks collapse.
ExtractedSummary oracle_extract(const Document &article,
                                const Document &reference);

// Rounded-half-up mean number of sentences per summary, at least 1.
// Throws InputError for an empty corpus.
size_t estimate_k(std::span<const Document> summaries);

// {"doc_id", "indices", "sentences"}
nlohmann::json to_json(const ExtractedSummary &summary);

}  // namespace lrsumm

#endif  // LRSUMM_EXTRACTORS_H_
