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

#include "lrsumm/miner.h"

#include <omp.h>

#include <algorithm>
#include <stdexcept>
#include <string_view>
#include <unordered_map>
#include <unordered_set>

#include "lrsumm/error.h"
#include "lrsumm/kernels.h"

namespace lrsumm {

void AlignConfig::validate() const {
  if (!(theta_d >= 0.0 && theta_d <= 1.0))
    throw InputError("align.theta_d must be in [0, 1]");
  if (!(theta_s >= 0.0 && theta_s <= 1.0))
    throw InputError("align.theta_s must be in [0, 1]");
  if (doc_neighbors == 0) throw InputError("align.doc_neighbors must be positive");
  if (batch_size == 0) throw InputError("align.batch_size must be positive");
}

namespace {

int thread_count(int workers) { return std::max(workers, 1); }

using SentenceEmbeddings = std::vector<std::vector<DenseEmbedding>>;

SentenceEmbeddings embed_all_sentences(std::span<const Document> docs,
                                       const SentenceEmbedder &embedder,
                                       int workers) {
  SentenceEmbeddings out(docs.size());
#pragma omp parallel for schedule(dynamic, 32) num_threads(thread_count(workers))
  for (long i = 0; i < static_cast<long>(docs.size()); ++i) {
    auto &row = out[i];
    row.reserve(docs[i].sentences.size());
    for (const auto &s : docs[i].sentences) row.push_back(embedder.embed(s));
  }
  return out;
}

std::vector<SentencePair> align_embedded(const Document &summary,
                                         const Document &article,
                                         std::span<const DenseEmbedding> sum_emb,
                                         std::span<const DenseEmbedding> art_emb,
                                         double theta_s) {
  std::vector<SentencePair> out;
  for (size_t si = 0; si < sum_emb.size(); ++si) {
    if (sum_emb[si].is_zero) continue;
    size_t best = art_emb.size();
    double best_sim = 0.0;
    for (size_t ai = 0; ai < art_emb.size(); ++ai) {
      if (art_emb[ai].is_zero) continue;
      double c = cosine(sum_emb[si], art_emb[ai]);
      if (best == art_emb.size() || c > best_sim) {
        best = ai;
        best_sim = c;
      }
    }
    if (best == art_emb.size() || best_sim < theta_s) continue;
    out.push_back({article.sentences[best], summary.sentences[si], best_sim,
                   Provenance::kPseudoParallel, {summary.id, article.id}});
  }
  return out;
}

void check_ids(const DocPair &pair, const Document &summary,
               const Document &article) {
  if (pair.summary_id != summary.id || pair.article_id != article.id)
    throw std::invalid_argument("align_sentences: documents do not match pair (" +
                                pair.summary_id + ", " + pair.article_id + ")");
}

bool pair_order(const SentencePair &a, const SentencePair &b) {
  if (a.origin != b.origin) return a.origin < b.origin;
  if (a.target.raw != b.target.raw) return a.target.raw < b.target.raw;
  return a.source.raw < b.source.raw;
}

struct RawKeyHash {
  size_t operator()(const std::pair<std::string_view, std::string_view> &k) const {
    size_t h = std::hash<std::string_view>()(k.first);
    return h ^ (std::hash<std::string_view>()(k.second) + 0x9e3779b97f4a7c15ULL +
                (h << 6) + (h >> 2));
  }
};

}  // namespace

std::vector<EmbeddedDocument> embed_documents(std::span<const Document> docs,
                                              const SentenceEmbedder &embedder,
                                              int workers) {
  std::vector<EmbeddedDocument> out(docs.size());
#pragma omp parallel for schedule(dynamic, 32) num_threads(thread_count(workers))
  for (long i = 0; i < static_cast<long>(docs.size()); ++i)
    out[i] = {docs[i].id, embed_document(docs[i], embedder)};
  return out;
}

std::vector<DocPair> align_documents(std::span<const EmbeddedDocument> summaries,
                                     std::span<const EmbeddedDocument> articles,
                                     const AlignConfig &config, int workers) {
  if (summaries.empty() || articles.empty()) return {};
  const size_t dim = summaries.front().embedding.dimension();
  kernels::EmbeddingMatrix queries(dim);
  queries.reserve(summaries.size());
  for (const auto &s : summaries) queries.append(s.embedding);

  kernels::NeighborLists best(summaries.size());
  for (size_t start = 0; start < articles.size(); start += config.batch_size) {
    const size_t end = std::min(start + config.batch_size, articles.size());
    kernels::EmbeddingMatrix shard(dim);
    shard.reserve(end - start);
    for (size_t i = start; i < end; ++i) shard.append(articles[i].embedding);
    auto found = kernels::top_k_parallel(queries, shard, config.doc_neighbors,
                                         config.theta_d, workers);
    kernels::merge_top_k(best, found, static_cast<uint32_t>(start),
                         config.doc_neighbors);
  }

  std::vector<DocPair> out;
  for (size_t q = 0; q < best.size(); ++q)
    for (const auto &n : best[q])
      out.push_back({summaries[q].id, articles[n.index].id,
                     std::clamp(n.score, -1.0, 1.0)});
  std::sort(out.begin(), out.end(), [](const DocPair &a, const DocPair &b) {
    if (a.summary_id != b.summary_id) return a.summary_id < b.summary_id;
    if (a.similarity != b.similarity) return a.similarity > b.similarity;
    return a.article_id < b.article_id;
  });
  return out;
}

std::vector<SentencePair> align_sentences(const DocPair &pair,
                                          const Document &summary,
                                          const Document &article,
                                          const SentenceEmbedder &embedder,
                                          double theta_s) {
  check_ids(pair, summary, article);
  std::vector<DenseEmbedding> sum_emb, art_emb;
  for (const auto &s : summary.sentences) sum_emb.push_back(embedder.embed(s));
  for (const auto &s : article.sentences) art_emb.push_back(embedder.embed(s));
  return align_embedded(summary, article, sum_emb, art_emb, theta_s);
}

std::vector<SentencePair> align_sentences(const DocPair &pair,
                                          const Document &summary,
                                          const Document &article,
                                          const WordVectorTable &table,
                                          double theta_s) {
  return align_sentences(pair, summary, article, MeanWordVectorEmbedder(table),
                         theta_s);
}

MinedDataset mine(std::span<const Document> summaries,
                  std::span<const Document> articles,
                  const SentenceEmbedder &embedder, const AlignConfig &config,
                  int workers) {
  config.validate();
  const size_t dim = embedder.dimension();
  SentenceEmbeddings sum_sent = embed_all_sentences(summaries, embedder, workers);
  SentenceEmbeddings art_sent = embed_all_sentences(articles, embedder, workers);

  auto doc_level = [&](std::span<const Document> docs,
                       const SentenceEmbeddings &sent) {
    std::vector<EmbeddedDocument> out(docs.size());
    for (size_t i = 0; i < docs.size(); ++i)
      out[i] = {docs[i].id, mean_embedding(sent[i], dim)};
    return out;
  };
  std::vector<DocPair> doc_pairs =
      align_documents(doc_level(summaries, sum_sent),
                      doc_level(articles, art_sent), config, workers);

  std::unordered_map<std::string_view, size_t> sum_index, art_index;
  for (size_t i = 0; i < summaries.size(); ++i) sum_index.emplace(summaries[i].id, i);
  for (size_t i = 0; i < articles.size(); ++i) art_index.emplace(articles[i].id, i);

  std::vector<std::vector<SentencePair>> per_pair(doc_pairs.size());
#pragma omp parallel for schedule(dynamic, 8) num_threads(thread_count(workers))
  for (long p = 0; p < static_cast<long>(doc_pairs.size()); ++p) {
    const size_t si = sum_index.at(doc_pairs[p].summary_id);
    const size_t ai = art_index.at(doc_pairs[p].article_id);
    per_pair[p] = align_embedded(summaries[si], articles[ai], sum_sent[si],
                                 art_sent[ai], config.theta_s);
  }

  std::vector<SentencePair> all;
  for (auto &v : per_pair)
    for (auto &p : v) all.push_back(std::move(p));
  std::sort(all.begin(), all.end(), pair_order);

  MinedDataset out;
  std::unordered_set<std::pair<std::string_view, std::string_view>, RawKeyHash> seen;
  out.pairs.reserve(all.size());
  for (auto &p : all) {
    // Keys point into `all`, which is not resized past this point.
    if (!seen.emplace(p.source.raw, p.target.raw).second) continue;
    out.pairs.push_back(p);
  }
  out.stats = MixtureStats::count(out.pairs);
  return out;
}

MinedDataset mine(std::span<const Document> summaries,
                  std::span<const Document> articles,
                  const WordVectorTable &table, const AlignConfig &config,
                  int workers) {
  return mine(summaries, articles, MeanWordVectorEmbedder(table), config,
              workers);
}

}  // namespace lrsumm
