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

#include <algorithm>
#include <random>

#include "gtest/gtest.h"
#include "lrsumm/error.h"
#include "lrsumm/miner.h"
#include "oracles.h"
#include "synthetic.h"

namespace lrsumm {
namespace {

using testing::MinedKey;

std::set<MinedKey> keys(const MinedDataset &ds) {
  std::set<MinedKey> out;
  for (const auto &p : ds.pairs)
    out.insert({p.origin.summary_id, p.origin.source, p.source.raw, p.target.raw});
  return out;
}

Document doc_of(const std::string &id, const std::vector<std::string> &sentences) {
  Document d;
  d.id = id;
  for (const auto &s : sentences) d.sentences.push_back(tokenize(s));
  return d;
}

WordVectorTable axis_table() {
  // Words on distinct axes, plus "xy" halfway between x and y.
  WordVectorTable t(4);
  t.set("x", std::vector<double>{1, 0, 0, 0});
  t.set("y", std::vector<double>{0, 1, 0, 0});
  t.set("z", std::vector<double>{0, 0, 1, 0});
  t.set("w", std::vector<double>{0, 0, 0, 1});
  t.set("xy", std::vector<double>{1, 1, 0, 0});
  return t;
}

TEST(AlignDocumentsTest, CopyPairsWithItself) {
  WordVectorTable t = axis_table();
  MeanWordVectorEmbedder e(t);
  std::vector<Document> sums = {doc_of("s", {"x y", "z"})};
  std::vector<Document> arts = {doc_of("a", {"w"}), doc_of("copy", {"x y", "z"})};
  AlignConfig c;
  c.theta_d = 0.99;
  auto pairs = align_documents(embed_documents(sums, e), embed_documents(arts, e), c);
  ASSERT_EQ(pairs.size(), 1u);
  EXPECT_EQ(pairs[0].article_id, "copy");
  EXPECT_NEAR(pairs[0].similarity, 1.0, 1e-12);

  c.theta_d = 1.0;
  std::vector<Document> others = {doc_of("a", {"w"}), doc_of("b", {"x", "w z"})};
  EXPECT_TRUE(align_documents(embed_documents(sums, e), embed_documents(others, e), c).empty());
}

TEST(AlignDocumentsTest, OrderingAndNeighborLimit) {
  WordVectorTable t = axis_table();
  MeanWordVectorEmbedder e(t);
  std::vector<Document> sums = {doc_of("s2", {"x"}), doc_of("s1", {"x"}),
                                doc_of("oov", {"nothing here"})};
  std::vector<Document> arts = {doc_of("b", {"x"}), doc_of("a", {"x"}),
                                doc_of("c", {"xy"}), doc_of("d", {"z"}),
                                doc_of("zero", {"unknown"})};
  AlignConfig c;
  c.theta_d = 0.1;
  c.doc_neighbors = 2;
  auto pairs = align_documents(embed_documents(sums, e), embed_documents(arts, e), c);
  ASSERT_EQ(pairs.size(), 4u);
  EXPECT_EQ(pairs[0].summary_id, "s1");
  EXPECT_EQ(pairs[0].article_id, "a");
  EXPECT_EQ(pairs[1].article_id, "b");
  EXPECT_EQ(pairs[2].summary_id, "s2");
  for (const auto &p : pairs) EXPECT_NE(p.article_id, "c");
}

TEST(AlignSentencesTest, GridMatchesExhaustiveSearch) {
  WordVectorTable t = axis_table();
  Document s = doc_of("s", {"x", "x y", "w"});
  Document a = doc_of("a", {"y", "xy", "z w", "x z"});
  DocPair pair{"s", "a", 0.5};
  for (double theta : {0.0, 0.5, 0.7, 0.99, 1.01}) {
    std::set<std::pair<std::string, std::string>> expect;
    for (const auto &ss : s.sentences) {
      double best = -2;
      std::string arg;
      for (const auto &as : a.sentences) {
        double c = testing::sentence_cosine_oracle(ss, as, t);
        if (c > best + 1e-12) best = c, arg = as.raw;
      }
      if (best >= theta - 1e-12) expect.insert({arg, ss.raw});
    }
    std::set<std::pair<std::string, std::string>> got;
    for (const auto &p : align_sentences(pair, s, a, t, theta)) {
      EXPECT_GE(p.similarity, theta);
      EXPECT_EQ(p.provenance, Provenance::kPseudoParallel);
      got.insert({p.source.raw, p.target.raw});
    }
    EXPECT_EQ(got, expect) << theta;
  }
  EXPECT_THROW(align_sentences({"s", "other", 1.0}, s, a, t, 0.5), std::invalid_argument);
}

TEST(AlignSentencesTest, IdenticalSentence) {
  WordVectorTable t = axis_table();
  auto out = align_sentences({"s", "a", 1.0}, doc_of("s", {"x y"}),
                             doc_of("a", {"z", "x y"}), t, 0.99);
  ASSERT_EQ(out.size(), 1u);
  EXPECT_EQ(out[0].source.raw, "x y");
  EXPECT_NEAR(out[0].similarity, 1.0, 1e-12);
}

TEST(MineTest, DisjointVocabulariesYieldNothing) {
  WordVectorTable t = axis_table();
  std::vector<Document> sums = {doc_of("s", {"x", "y"})};
  std::vector<Document> arts = {doc_of("a", {"z", "w"})};
  AlignConfig c;
  c.theta_d = 0.0;
  c.theta_s = 0.0;
  MinedDataset ds = mine(sums, arts, t, c);
  // Orthogonal documents still reach theta_d = 0, but no sentence pair is
  // positive; with theta_s = 0 they are kept at similarity 0.
  for (const auto &p : ds.pairs) EXPECT_EQ(p.similarity, 0.0);
  c.theta_s = 1e-9;
  EXPECT_TRUE(mine(sums, arts, t, c).pairs.empty());
  EXPECT_TRUE(mine(sums, {}, t, c).pairs.empty());
}

TEST(MineTest, MatchesExhaustiveOracleOnRandomCorpora) {
  std::mt19937_64 rng(31);
  int compared = 0;
  for (int trial = 0; trial < 60; ++trial) {
    WordVectorTable t = testing::random_word_vectors(25, 6, rng());
    auto random_doc = [&](const std::string &id) {
      std::vector<std::string> s;
      for (size_t i = 0; i < 1 + rng() % 4; ++i) {
        std::string x;
        for (size_t k = 0; k < 1 + rng() % 4; ++k)
          x += "w" + std::to_string(rng() % 30) + " ";  // w25..w29 are unknown
        s.push_back(x);
      }
      return doc_of(id, s);
    };
    std::vector<Document> sums, arts;
    for (int i = 0; i < 8; ++i) sums.push_back(random_doc("s" + std::to_string(i)));
    for (int i = 0; i < 30; ++i) arts.push_back(random_doc("a" + std::to_string(i)));
    AlignConfig c;
    c.theta_d = 0.2;
    c.theta_s = 0.5;
    c.doc_neighbors = 3;
    c.batch_size = 7;
    auto oracle = testing::mine_oracle(sums, arts, t, c);
    if (oracle.margin < 1e-9) continue;
    ++compared;
    MinedDataset ds = mine(sums, arts, t, c, 3);
    EXPECT_EQ(keys(ds), oracle.pairs) << trial;
    EXPECT_EQ(ds.pairs.size(), oracle.pairs.size());
  }
  EXPECT_GE(compared, 20);
}

class PlantedCorpusTest : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    corpus_ = new testing::PlantedCorpus(testing::make_planted_corpus(150, 20, 77));
  }
  static void TearDownTestSuite() { delete corpus_; }
  static testing::PlantedCorpus *corpus_;

  AlignConfig config(double theta_s) {
    AlignConfig c;
    c.theta_d = 0.3;
    c.theta_s = theta_s;
    c.batch_size = 64;
    return c;
  }
};

testing::PlantedCorpus *PlantedCorpusTest::corpus_ = nullptr;

TEST_F(PlantedCorpusTest, RecoversPlantedPairsExactly) {
  MinedDataset ds = mine(corpus_->summaries, corpus_->articles, corpus_->table, config(0.8));
  EXPECT_EQ(keys(ds), corpus_->planted);
  EXPECT_EQ(ds.stats.pseudo_parallel_count, 20u);
  EXPECT_EQ(ds.stats.fraction_pp, 1.0);
  auto oracle = testing::mine_oracle(corpus_->summaries, corpus_->articles,
                                     corpus_->table, config(0.8));
  EXPECT_EQ(oracle.pairs, corpus_->planted);
}

TEST_F(PlantedCorpusTest, ThresholdSweepIsNested) {
  std::set<MinedKey> prev;
  bool first = true;
  for (double theta : {0.67, 0.63, 0.60}) {
    MinedDataset ds = mine(corpus_->summaries, corpus_->articles, corpus_->table,
                           config(theta));
    auto now = keys(ds);
    if (!first) EXPECT_TRUE(std::includes(now.begin(), now.end(), prev.begin(), prev.end()));
    first = false;
    prev = now;
    for (const auto &p : ds.pairs) {
      EXPECT_GE(p.similarity, theta);
      EXPECT_NEAR(p.similarity,
                  testing::sentence_cosine_oracle(p.source, p.target, corpus_->table),
                  1e-12);
    }
  }
  EXPECT_GT(prev.size(), corpus_->planted.size());
}

TEST_F(PlantedCorpusTest, WorkerCountDoesNotChangeOutput) {
  MinedDataset one = mine(corpus_->summaries, corpus_->articles, corpus_->table, config(0.6), 1);
  MinedDataset many = mine(corpus_->summaries, corpus_->articles, corpus_->table, config(0.6), 8);
  EXPECT_EQ(one.pairs, many.pairs);
}

TEST(AlignConfigTest, Validation) {
  AlignConfig c;
  EXPECT_NO_THROW(c.validate());
  c.theta_s = 1.5;
  EXPECT_THROW(c.validate(), InputError);
  c.theta_s = 0.5;
  c.doc_neighbors = 0;
  EXPECT_THROW(c.validate(), InputError);
}

}  // namespace
}  // namespace lrsumm
