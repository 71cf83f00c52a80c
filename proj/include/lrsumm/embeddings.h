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

// Dense sentence/document embeddings and sparse TF-IDF vectors.

#ifndef LRSUMM_EMBEDDINGS_H_
#define LRSUMM_EMBEDDINGS_H_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "lrsumm/corpus.h"

namespace lrsumm {

// Pretrained word vectors, all of one dimension.
class WordVectorTable {
 public:
  explicit WordVectorTable(size_t dimension);

  size_t dimension() const { return dim_; }
  size_t size() const { return index_.size(); }

  // Inserts or overwrites. Throws std::invalid_argument on a wrong length or a
  // non-finite component.
  void set(const std::string &word, std::span<const double> vector);

  // nullptr when the word has no vector.
  const double *find(const std::string &word) const;

 private:
  size_t dim_;
  std::unordered_map<std::string, size_t> index_;
  std::vector<double> data_;
};

// Text format: optional "<vocab> <dim>" header, then "word v1 ... vd" per
// line. Throws FormatError naming the line on inconsistent dimensions or
// non-numeric components.
WordVectorTable load_word_vectors(const std::filesystem::path &path);
WordVectorTable parse_word_vectors(std::istream &in);

// Either is_zero with all components 0, or unit Euclidean norm.
struct DenseEmbedding {
  std::vector<double> values;
  bool is_zero = true;

  size_t dimension() const { return values.size(); }
  static DenseEmbedding zero(size_t dim) { return {std::vector<double>(dim), true}; }
  // Normalizes `sum`; returns a zero embedding when its norm is 0.
  static DenseEmbedding normalized(std::vector<double> sum);
};

// Where sentence vectors come from. The miner only sees this interface.
class SentenceEmbedder {
 public:
  virtual ~SentenceEmbedder() = default;
  virtual size_t dimension() const = 0;
  virtual DenseEmbedding embed(const TokenizedSentence &sentence) const = 0;
};

// Unit-normalized mean of the in-vocabulary word vectors.
class MeanWordVectorEmbedder final : public SentenceEmbedder {
 public:
  explicit MeanWordVectorEmbedder(const WordVectorTable &table)
      : table_(table) {}

  size_t dimension() const override { return table_.dimension(); }
  DenseEmbedding embed(const TokenizedSentence &sentence) const override;

 private:
  const WordVectorTable &table_;
};

DenseEmbedding embed_sentence(const TokenizedSentence &sentence,
                              const WordVectorTable &table);

// Unit-normalized mean of the non-zero embeddings in `parts`.
DenseEmbedding mean_embedding(std::span<const DenseEmbedding> parts, size_t dim);

// Unit-normalized mean of the non-zero sentence embeddings.
DenseEmbedding embed_document(const Document &doc,
                              const SentenceEmbedder &embedder);
DenseEmbedding embed_document(const Document &doc,
                              const WordVectorTable &table);

// Dot product of unit vectors, clamped to [-1, 1]; 0 when either side is
// zero. Throws std::invalid_argument on a dimension mismatch.
double cosine(const DenseEmbedding &a, const DenseEmbedding &b);

// Document frequencies over a collection. LexRank fits one per article with
// each sentence counted as a document.
class TfIdfModel {
 public:
  TfIdfModel(uint64_t doc_count, std::unordered_map<std::string, uint64_t> df);

  static TfIdfModel fit(std::span<const TokenizedSentence> docs);

  uint64_t doc_count() const { return doc_count_; }
  uint64_t document_frequency(const std::string &token) const;
  // ln((1 + N) / (1 + df)) + 1
  double idf(const std::string &token) const;

 private:
  uint64_t doc_count_;
  std::unordered_map<std::string, uint64_t> df_;
};

// Sorted by token; weights are strictly positive.
struct SparseVector {
  std::vector<std::pair<std::string, double>> entries;

  bool empty() const { return entries.empty(); }
  double weight(const std::string &token) const;
};

// Raw term frequency times smoothed idf.
SparseVector tfidf_vector(const TokenizedSentence &sentence,
                          const TfIdfModel &model);

// Cosine over sparse weights, in [0, 1]; 0 when either vector is empty.
double tfidf_cosine(const SparseVector &a, const SparseVector &b);

}  // namespace lrsumm

#endif  // LRSUMM_EMBEDDINGS_H_
