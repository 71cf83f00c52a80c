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

// Hierarchical pseudo-parallel mining: summaries are matched to comparable
// articles by document embedding, then every summary sentence is paired with
// its nearest sentence in each matched article.
//
// Search is exact. Article embeddings are processed in shards of
// AlignConfig::batch_size; summaries within a shard are spread over OpenMP
// workers and the results merged under a total order, so output does not
// depend on the worker count.

#ifndef LRSUMM_MINER_H_
#define LRSUMM_MINER_H_

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "lrsumm/corpus.h"
#include "lrsumm/dataset.h"
#include "lrsumm/embeddings.h"

namespace lrsumm {

struct AlignConfig {
  double theta_d = 0.5;
  double theta_s = 0.63;
  size_t doc_neighbors = 5;
  size_t batch_size = 10000;

  // Throws InputError when a field is out of range.
  void validate() const;
};

struct DocPair {
  std::string summary_id;
  std::string article_id;
  double similarity;

  bool operator==(const DocPair &) const = default;
};

struct EmbeddedDocument {
  std::string id;
  DenseEmbedding embedding;
};

std::vector<EmbeddedDocument> embed_documents(std::span<const Document> docs,
                                              const SentenceEmbedder &embedder,
                                              int workers = 1);

// For each summary, the best config.doc_neighbors articles with cosine >=
// theta_d, sorted by (summary_id, -similarity, article_id). Zero embeddings on
// either side never pair.
std::vector<DocPair> align_documents(std::span<const EmbeddedDocument> summaries,
                                     std::span<const EmbeddedDocument> articles,
                                     const AlignConfig &config, int workers = 1);

// Each summary sentence with its single nearest article sentence, kept when
// the cosine reaches theta_s. Ties go to the lower article index. Throws
// std::invalid_argument when the documents do not match the pair's ids.
std::vector<SentencePair> align_sentences(const DocPair &pair,
                                          const Document &summary,
                                          const Document &article,
                                          const SentenceEmbedder &embedder,
                                          double theta_s);
std::vector<SentencePair> align_sentences(const DocPair &pair,
                                          const Document &summary,
                                          const Document &article,
                                          const WordVectorTable &table,
                                          double theta_s);

// align_documents followed by align_sentences on every document pair.
// Duplicate (source raw, target raw) pairs keep the smallest origin; output
// is sorted by (origin, target raw, source raw).
MinedDataset mine(std::span<const Document> summaries,
                  std::span<const Document> articles,
                  const SentenceEmbedder &embedder, const AlignConfig &config,
                  int workers = 1);
MinedDataset mine(std::span<const Document> summaries,
                  std::span<const Document> articles,
                  const WordVectorTable &table, const AlignConfig &config,
                  int workers = 1);

}  // namespace lrsumm

#endif  // LRSUMM_MINER_H_
