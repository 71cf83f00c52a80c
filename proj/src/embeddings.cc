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

#include "lrsumm/embeddings.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <optional>
#include <stdexcept>

#include "lrsumm/error.h"
#include "lrsumm/kernels.h"

namespace lrsumm {

WordVectorTable::WordVectorTable(size_t dimension) : dim_(dimension) {
  if (dim_ == 0) throw std::invalid_argument("word vector dimension must be positive");
}

void WordVectorTable::set(const std::string &word,
                          std::span<const double> vector) {
  if (vector.size() != dim_)
    throw std::invalid_argument("word vector for '" + word + "' has length " +
                                std::to_string(vector.size()) + ", expected " +
                                std::to_string(dim_));
  for (double v : vector)
    if (!std::isfinite(v))
      throw std::invalid_argument("non-finite component in vector for '" +
                                  word + "'");
  auto [it, inserted] = index_.try_emplace(word, data_.size());
  if (inserted) {
    data_.insert(data_.end(), vector.begin(), vector.end());
  } else {
    std::copy(vector.begin(), vector.end(), data_.begin() + it->second);
  }
}

const double *WordVectorTable::find(const std::string &word) const {
  auto it = index_.find(word);
  return it == index_.end() ? nullptr : data_.data() + it->second;
}

namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' ||
                               line[i] == '\r'))
      ++i;
    size_t b = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' &&
           line[i] != '\r')
      ++i;
    if (i > b) fields.push_back(line.substr(b, i - b));
  }
  return fields;
}

bool parse_size(std::string_view s, size_t *out) {
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), *out);
  return ec == std::errc() && p == s.data() + s.size();
}

}  // namespace

WordVectorTable parse_word_vectors(std::istream &in) {
  std::string line;
  size_t line_no = 0;
  size_t dim = 0;
  std::optional<WordVectorTable> table;
  std::vector<double> values;

  while (std::getline(in, line)) {
    ++line_no;
    auto fields = split_fields(line);
    if (fields.empty()) continue;
    if (!table) {
      size_t vocab = 0, header_dim = 0;
      if (fields.size() == 2 && parse_size(fields[0], &vocab) &&
          parse_size(fields[1], &header_dim)) {
        if (header_dim == 0) throw FormatError("header dimension is 0", line_no);
        table.emplace(header_dim);
        dim = header_dim;
        continue;
      }
      if (fields.size() < 2)
        throw FormatError("word vector line has no components", line_no);
      dim = fields.size() - 1;
      table.emplace(dim);
    }
    if (fields.size() - 1 != dim)
      throw FormatError("expected " + std::to_string(dim) +
                            " components, found " +
                            std::to_string(fields.size() - 1),
                        line_no);
    values.resize(dim);
    for (size_t i = 0; i < dim; ++i) {
      std::string_view f = fields[i + 1];
      auto [p, ec] = std::from_chars(f.data(), f.data() + f.size(), values[i]);
      if (ec != std::errc() || p != f.data() + f.size() ||
          !std::isfinite(values[i]))
        throw FormatError("non-numeric component '" + std::string(f) + "'",
                          line_no);
    }
    table->set(std::string(fields[0]), values);
  }
  if (!table) throw FormatError("empty word vector file", line_no);
  return std::move(*table);
}

WordVectorTable load_word_vectors(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open word vectors " + path.string());
  return parse_word_vectors(in);
}

DenseEmbedding DenseEmbedding::normalized(std::vector<double> sum) {
  double norm = std::sqrt(kernels::dot(sum.data(), sum.data(), sum.size()));
  if (!(norm > 0.0)) return zero(sum.size());
  for (double &v : sum) v /= norm;
  return {std::move(sum), false};
}

DenseEmbedding MeanWordVectorEmbedder::embed(
    const TokenizedSentence &sentence) const {
  return embed_sentence(sentence, table_);
}

DenseEmbedding embed_sentence(const TokenizedSentence &sentence,
                              const WordVectorTable &table) {
  const size_t d = table.dimension();
  std::vector<double> sum(d, 0.0);
  size_t hits = 0;
  for (const auto &tok : sentence.tokens) {
    const double *v = table.find(tok);
    if (!v) continue;
    for (size_t i = 0; i < d; ++i) sum[i] += v[i];
    ++hits;
  }
  if (hits == 0) return DenseEmbedding::zero(d);
  for (double &x : sum) x /= static_cast<double>(hits);
  return DenseEmbedding::normalized(std::move(sum));
}

DenseEmbedding mean_embedding(std::span<const DenseEmbedding> parts,
                              size_t dim) {
  std::vector<double> sum(dim, 0.0);
  size_t hits = 0;
  for (const auto &e : parts) {
    if (e.is_zero) continue;
    for (size_t i = 0; i < dim; ++i) sum[i] += e.values[i];
    ++hits;
  }
  if (hits == 0) return DenseEmbedding::zero(dim);
  for (double &x : sum) x /= static_cast<double>(hits);
  return DenseEmbedding::normalized(std::move(sum));
}

DenseEmbedding embed_document(const Document &doc,
                              const SentenceEmbedder &embedder) {
  std::vector<DenseEmbedding> parts;
  parts.reserve(doc.sentences.size());
  for (const auto &s : doc.sentences) parts.push_back(embedder.embed(s));
  return mean_embedding(parts, embedder.dimension());
}

DenseEmbedding embed_document(const Document &doc,
                              const WordVectorTable &table) {
  return embed_document(doc, MeanWordVectorEmbedder(table));
}

double cosine(const DenseEmbedding &a, const DenseEmbedding &b) {
  if (a.dimension() != b.dimension())
    throw std::invalid_argument("cosine: dimension mismatch (" +
                                std::to_string(a.dimension()) + " vs " +
                                std::to_string(b.dimension()) + ")");
  if (a.is_zero || b.is_zero) return 0.0;
  double c = kernels::dot(a.values.data(), b.values.data(), a.dimension());
  return std::clamp(c, -1.0, 1.0);
}

TfIdfModel::TfIdfModel(uint64_t doc_count,
                       std::unordered_map<std::string, uint64_t> df)
    : doc_count_(doc_count), df_(std::move(df)) {
  for (const auto &[tok, n] : df_)
    if (n > doc_count_)
      throw std::invalid_argument("document frequency of '" + tok +
                                  "' exceeds document count");
}

TfIdfModel TfIdfModel::fit(std::span<const TokenizedSentence> docs) {
  std::unordered_map<std::string, uint64_t> df;
  for (const auto &s : docs) {
    std::vector<std::string> uniq(s.tokens);
    std::sort(uniq.begin(), uniq.end());
    uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
    for (auto &t : uniq) ++df[std::move(t)];
  }
  return TfIdfModel(docs.size(), std::move(df));
}

uint64_t TfIdfModel::document_frequency(const std::string &token) const {
  auto it = df_.find(token);
  return it == df_.end() ? 0 : it->second;
}

double TfIdfModel::idf(const std::string &token) const {
  const double n = static_cast<double>(doc_count_);
  const double df = static_cast<double>(document_frequency(token));
  return std::log((1.0 + n) / (1.0 + df)) + 1.0;
}

double SparseVector::weight(const std::string &token) const {
  auto it = std::lower_bound(
      entries.begin(), entries.end(), token,
      [](const auto &e, const std::string &t) { return e.first < t; });
  return (it != entries.end() && it->first == token) ? it->second : 0.0;
}

SparseVector tfidf_vector(const TokenizedSentence &sentence,
                          const TfIdfModel &model) {
  std::map<std::string, uint64_t> tf;
  for (const auto &t : sentence.tokens) ++tf[t];
  SparseVector out;
  out.entries.reserve(tf.size());
  for (const auto &[tok, count] : tf) {
    double w = static_cast<double>(count) * model.idf(tok);
    if (w > 0.0) out.entries.emplace_back(tok, w);
  }
  return out;
}

double tfidf_cosine(const SparseVector &a, const SparseVector &b) {
  if (a.empty() || b.empty()) return 0.0;
  double dot = 0.0;
  auto ia = a.entries.begin();
  auto ib = b.entries.begin();
  while (ia != a.entries.end() && ib != b.entries.end()) {
    int c = ia->first.compare(ib->first);
    if (c == 0) {
      dot += ia->second * ib->second;
      ++ia;
      ++ib;
    } else if (c < 0) {
      ++ia;
    } else {
      ++ib;
    }
  }
  double na = 0.0, nb = 0.0;
  for (const auto &[t, w] : a.entries) na += w * w;
  for (const auto &[t, w] : b.entries) nb += w * w;
  return std::clamp(dot / std::sqrt(na * nb), 0.0, 1.0);
}

}  // namespace lrsumm
