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

#include "lrsumm/extractors.h"

#include <algorithm>
#include <cstdint>
#include <numeric>

#include "lrsumm/error.h"

namespace lrsumm {

std::string_view to_string(ExtractMethod method) {
  return method == ExtractMethod::kLead ? "lead" : "lexrank";
}

ExtractMethod parse_extract_method(std::string_view name) {
  if (name == "lead") return ExtractMethod::kLead;
  if (name == "lexrank") return ExtractMethod::kLexRank;
  throw InputError("unknown extraction method '" + std::string(name) +
                   "' (expected lead or lexrank)");
}

void ExtractConfig::validate() const {
  if (k == 0) throw InputError("extract.k must be positive");
  if (!(lexrank_threshold >= 0.0 && lexrank_threshold <= 1.0))
    throw InputError("extract.lexrank_threshold must be in [0, 1]");
  if (!(damping > 0.0 && damping < 1.0))
    throw InputError("extract.damping must be in (0, 1)");
  if (!(epsilon > 0.0)) throw InputError("extract.epsilon must be positive");
  if (max_iterations == 0)
    throw InputError("extract.max_iterations must be positive");
}

std::vector<size_t> ExtractedSummary::indices() const {
  std::vector<size_t> out;
  out.reserve(picks.size());
  for (const auto &p : picks) out.push_back(p.index);
  return out;
}

Tokens ExtractedSummary::tokens() const {
  Tokens out;
  for (const auto &p : picks)
    out.insert(out.end(), p.sentence.tokens.begin(), p.sentence.tokens.end());
  return out;
}

namespace {

ExtractedSummary from_indices(const Document &doc, std::vector<size_t> idx) {
  std::sort(idx.begin(), idx.end());
  idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
  ExtractedSummary out{doc.id, {}};
  out.picks.reserve(idx.size());
  for (size_t i : idx) out.picks.push_back({i, doc.sentences[i]});
  return out;
}

}  // namespace

ExtractedSummary lead(const Document &doc, size_t k) {
  std::vector<size_t> idx(std::min(k, doc.sentences.size()));
  std::iota(idx.begin(), idx.end(), size_t{0});
  return from_indices(doc, std::move(idx));
}

ExtractedSummary lexrank(const Document &doc, const TfIdfModel &model,
                         const ExtractConfig &config) {
  const size_t n = doc.sentences.size();
  if (n == 0) return {doc.id, {}};

  std::vector<SparseVector> vecs;
  vecs.reserve(n);
  for (const auto &s : doc.sentences) vecs.push_back(tfidf_vector(s, model));

  WeightMatrix w(n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j) {
      double sim = tfidf_cosine(vecs[i], vecs[j]);
      if (sim > config.lexrank_threshold) w.at(i, j) = w.at(j, i) = sim;
    }
  std::vector<double> score =
      pagerank(w, config.damping, config.epsilon, config.max_iterations);

  std::vector<size_t> order(n);
  std::iota(order.begin(), order.end(), size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](size_t a, size_t b) { return score[a] > score[b]; });
  order.resize(std::min(config.k, n));
  return from_indices(doc, std::move(order));
}

ExtractedSummary lexrank(const Document &doc, const ExtractConfig &config) {
  return lexrank(doc, TfIdfModel::fit(doc.sentences), config);
}

ExtractedSummary extract(const Document &doc, const ExtractConfig &config) {
  switch (config.method) {
    case ExtractMethod::kLead:
      return lead(doc, config.k);
    case ExtractMethod::kLexRank:
      return lexrank(doc, config);
  }
  return {doc.id, {}};
}

ExtractedSummary oracle_extract(const Document &article,
                                const Document &reference) {
  if (article.sentences.empty() || reference.sentences.empty())
    return {article.id, {}};
  std::vector<size_t> picks;
  for (const auto &ref : reference.sentences) {
    size_t best = 0;
    double best_f1 = -1.0;
    for (size_t i = 0; i < article.sentences.size(); ++i) {
      double f1 = rouge_n(article.sentences[i].tokens, ref.tokens, 1).f1;
      if (f1 > best_f1) {
        best_f1 = f1;
        best = i;
      }
    }
    picks.push_back(best);
  }
  return from_indices(article, std::move(picks));
}

size_t estimate_k(std::span<const Document> summaries) {
  if (summaries.empty())
    throw InputError("estimate_k: empty summary corpus");
  uint64_t total = 0;
  for (const auto &d : summaries) total += d.sentences.size();
  const uint64_t n = summaries.size();
  // floor(total / n + 1/2) without leaving integers.
  const uint64_t k = (2 * total + n) / (2 * n);
  return std::max<uint64_t>(k, 1);
}

nlohmann::json to_json(const ExtractedSummary &summary) {
  nlohmann::json sentences = nlohmann::json::array();
  for (const auto &p : summary.picks) sentences.push_back(p.sentence.raw);
  return {{"doc_id", summary.doc_id},
          {"indices", summary.indices()},
          {"sentences", sentences}};
}

}  // namespace lrsumm
