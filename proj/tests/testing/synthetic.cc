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

#include "synthetic.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <random>
#include <stdexcept>

#include "json.hpp"

namespace lrsumm::testing {

namespace {

constexpr size_t kTopicWords = 10;
constexpr size_t kSentenceWords = 10;

std::string word(size_t i) { return "w" + std::to_string(i); }

TokenizedSentence sentence_of(const std::vector<size_t> &words) {
  std::string raw;
  for (size_t w : words) raw += (raw.empty() ? "" : " ") + word(w);
  return tokenize(raw + " .");
}

// Unit embedding of a word list, summed in long double.
std::vector<long double> embed(const std::vector<size_t> &words,
                               const WordVectorTable &table) {
  std::vector<long double> v(table.dimension(), 0.0L);
  for (size_t w : words) {
    const double *x = table.find(word(w));
    for (size_t k = 0; k < v.size(); ++k) v[k] += x[k];
  }
  long double n = 0;
  for (auto x : v) n += x * x;
  n = std::sqrt(n);
  for (auto &x : v) x /= n;
  return v;
}

long double dot(const std::vector<long double> &a,
                const std::vector<long double> &b) {
  long double s = 0;
  for (size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
  return s;
}

}  // namespace

WordVectorTable random_word_vectors(size_t vocab, size_t dim, uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g(0.0, 1.0);
  WordVectorTable table(dim);
  std::vector<double> v(dim);
  for (size_t i = 0; i < vocab; ++i) {
    double n = 0;
    for (auto &x : v) {
      x = g(rng);
      n += x * x;
    }
    n = std::sqrt(n);
    for (auto &x : v) x /= n;
    table.set(word(i), v);
  }
  return table;
}

void write_word_vectors(const WordVectorTable &table, size_t vocab,
                        const std::filesystem::path &path) {
  std::ofstream out(path);
  out.precision(17);
  out << vocab << " " << table.dimension() << "\n";
  for (size_t i = 0; i < vocab; ++i) {
    const double *x = table.find(word(i));
    out << word(i);
    for (size_t k = 0; k < table.dimension(); ++k) out << " " << x[k];
    out << "\n";
  }
}

void write_corpus(const std::vector<Document> &docs,
                  const std::filesystem::path &path) {
  std::ofstream out(path);
  for (const auto &d : docs) {
    nlohmann::json sentences = nlohmann::json::array();
    for (const auto &s : d.sentences) sentences.push_back(s.raw);
    out << nlohmann::json{{"id", d.id}, {"sentences", sentences}}.dump() << "\n";
  }
}

PlantedCorpus make_planted_corpus(size_t n_articles, size_t n_planted,
                                  uint64_t seed) {
  if (n_planted > n_articles) throw std::invalid_argument("too many planted pairs");
  PlantedCorpus c;
  const size_t topic_vocab = n_planted * kTopicWords;
  c.vocab = topic_vocab + 20000;
  c.table = random_word_vectors(c.vocab, 100, seed);
  std::mt19937_64 rng(seed ^ 0x5eed);
  auto general = [&] {
    return topic_vocab + std::uniform_int_distribution<size_t>(0, c.vocab - topic_vocab - 1)(rng);
  };
  auto pick = [&](size_t n) { return std::uniform_int_distribution<size_t>(0, n - 1)(rng); };

  std::vector<std::vector<size_t>> topics(n_planted);
  std::vector<std::vector<long double>> summary_vec(n_planted);
  for (size_t i = 0; i < n_planted; ++i) {
    for (size_t k = 0; k < kTopicWords; ++k) topics[i].push_back(i * kTopicWords + k);
    summary_vec[i] = embed(topics[i], c.table);
  }

  // Draws a sentence from `make` until its cosine to every summary is below
  // 0.7, and to summary `own` (if any) inside [lo, hi).
  auto accept = [&](auto make, size_t own, long double lo, long double hi) {
    for (int attempt = 0; attempt < 10000; ++attempt) {
      std::vector<size_t> words = make();
      auto v = embed(words, c.table);
      bool ok = true;
      for (size_t i = 0; i < n_planted && ok; ++i) {
        long double d = dot(v, summary_vec[i]);
        ok = i == own ? (d >= lo && d < hi) : d < 0.7L;
      }
      if (ok) return sentence_of(words);
    }
    throw std::runtime_error("synthetic corpus: rejection sampling failed");
  };
  auto random_sentence = [&] {
    return accept(
        [&] {
          std::vector<size_t> w;
          for (size_t k = 0; k < kSentenceWords; ++k) w.push_back(general());
          return w;
        },
        SIZE_MAX, 0, 0);
  };
  // Three topic words of summary i plus general words.
  auto topical_sentence = [&](size_t i) {
    return accept(
        [&] {
          std::vector<size_t> t = topics[i], w;
          std::shuffle(t.begin(), t.end(), rng);
          w.assign(t.begin(), t.begin() + 3);
          while (w.size() < kSentenceWords) w.push_back(general());
          std::shuffle(w.begin(), w.end(), rng);
          return w;
        },
        i, -1.0L, 0.7L);
  };

  std::vector<Document> articles;
  for (size_t i = 0; i < n_planted; ++i) {
    Document s;
    s.id = "s" + std::to_string(i);
    s.sentences.push_back(sentence_of(topics[i]));
    c.summaries.push_back(s);

    Document a;
    const size_t len = 12 + pick(8);
    const size_t at = pick(len);
    for (size_t k = 0; k < len; ++k) {
      if (k == at) {
        std::vector<size_t> w = topics[i];
        std::shuffle(w.begin(), w.end(), rng);
        w.push_back(general());
        auto v = embed(w, c.table);
        for (size_t j = 0; j < n_planted; ++j)
          if (j != i && dot(v, summary_vec[j]) >= 0.7L)
            throw std::runtime_error("planted sentence too close to another summary");
        if (dot(v, summary_vec[i]) <= 0.9L)
          throw std::runtime_error("planted sentence not close enough");
        a.sentences.push_back(sentence_of(w));
      } else {
        a.sentences.push_back(topical_sentence(i));
      }
    }
    articles.push_back(a);
    c.planted.insert({s.id, "", a.sentences[at].raw, s.sentences[0].raw});

    if (i % 2 == 0 && articles.size() < n_articles) {
      Document sib;
      const size_t slen = 12 + pick(8);
      const size_t sat = pick(slen);
      for (size_t k = 0; k < slen; ++k) {
        if (k == sat)
          sib.sentences.push_back(accept(
              [&] {
                std::vector<size_t> t = topics[i], w;
                std::shuffle(t.begin(), t.end(), rng);
                w.assign(t.begin(), t.begin() + 6 + pick(2));
                while (w.size() < kSentenceWords) w.push_back(general());
                std::shuffle(w.begin(), w.end(), rng);
                return w;
              },
              i, 0.6L, 0.7L));
        else
          sib.sentences.push_back(topical_sentence(i));
      }
      articles.push_back(sib);
    }
  }
  while (articles.size() < n_articles) {
    Document a;
    const size_t len = 12 + pick(8);
    for (size_t k = 0; k < len; ++k) a.sentences.push_back(random_sentence());
    articles.push_back(a);
  }
  // Article ids carry no hint of which summary they belong to.
  std::shuffle(articles.begin(), articles.end(), rng);
  for (size_t k = 0; k < articles.size(); ++k) {
    char id[16];
    std::snprintf(id, sizeof(id), "a%05zu", k);
    articles[k].id = id;
  }
  std::set<MinedKey> planted;
  for (const auto &[sid, unused, src, tgt] : c.planted)
    for (const auto &a : articles)
      for (const auto &s : a.sentences)
        if (s.raw == src) planted.insert({sid, a.id, src, tgt});
  c.planted = std::move(planted);
  c.articles = std::move(articles);
  return c;
}

ArticleReferenceSet make_article_reference_set(size_t n, uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto pick = [&](size_t k) { return std::uniform_int_distribution<size_t>(0, k - 1)(rng); };
  ArticleReferenceSet out;
  for (size_t i = 0; i < n; ++i) {
    Document a, r;
    a.id = r.id = "d" + std::to_string(i);
    const size_t len = 1 + pick(12);
    for (size_t k = 0; k < len; ++k) {
      std::vector<size_t> w;
      const size_t words = 3 + pick(15);
      for (size_t t = 0; t < words; ++t) w.push_back(pick(300));
      a.sentences.push_back(sentence_of(w));
    }
    const size_t rlen = 1 + pick(4);
    for (size_t k = 0; k < rlen; ++k) {
      std::vector<size_t> w;
      for (const auto &tok : a.sentences[pick(len)].tokens)
        if (tok != "." && pick(5) != 0) w.push_back(std::stoul(tok.substr(1)));
      w.push_back(pick(300));
      r.sentences.push_back(sentence_of(w));
    }
    out.articles.push_back(std::move(a));
    out.references.push_back(std::move(r));
  }
  return out;
}

}  // namespace lrsumm::testing
