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

#include <filesystem>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include <unistd.h>

#include "gtest/gtest.h"
#include "lrsumm/error.h"
#include "lrsumm/synthkit.h"
#include "oracles.h"

namespace lrsumm {
namespace {

using Strings = std::vector<std::string>;

Strings split(const std::string &s) {
  std::istringstream in(s);
  Strings out;
  for (std::string t; in >> t;) out.push_back(t);
  return out;
}

Strings first_distinct(const std::string &sentence, uint64_t seed, int j) {
  Strings out;
  std::set<std::string> seen;
  for (uint64_t a = 0; a < 16u * j && out.size() < size_t(j); ++a) {
    std::string v = testing::noise_variant_oracle(sentence, seed, a);
    if (seen.insert(v).second) out.push_back(v);
  }
  return out;
}

TEST(NoiserTest, SingleTokenIsNeverDropped) {
  EXPECT_EQ(builtin_noising_generator("a", 0, 1), Strings{"a"});
  EXPECT_EQ(builtin_noising_generator("a", 5, 3), Strings{"a"});
}

TEST(NoiserTest, Deterministic) {
  EXPECT_EQ(builtin_noising_generator("The quick brown fox jumps.", 1, 5),
            builtin_noising_generator("The quick brown fox jumps.", 1, 5));
  EXPECT_NE(builtin_noising_generator("The quick brown fox jumps over it.", 1, 5),
            builtin_noising_generator("The quick brown fox jumps over it.", 2, 5));
}

TEST(NoiserTest, MatchesIndependentImplementation) {
  Strings got = builtin_noising_generator("a b c d e", 7, 3);
  EXPECT_EQ(got.size(), 3u);
  EXPECT_EQ(got, first_distinct("a b c d e", 7, 3));

  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 300; ++trial) {
    std::string s;
    for (size_t k = 0; k < 1 + rng() % 25; ++k) s += "t" + std::to_string(rng() % 9) + " ";
    const uint64_t seed = rng();
    for (uint64_t a = 0; a < 4; ++a)
      EXPECT_EQ(noise_variant(s, seed, a), testing::noise_variant_oracle(s, seed, a));
  }
}

TEST(NoiserTest, VariantsAreLocallyReorderedSubsequences) {
  std::string s;
  for (int i = 0; i < 40; ++i) s += "t" + std::to_string(i) + " ";
  for (uint64_t seed = 0; seed < 50; ++seed)
    for (const auto &v : builtin_noising_generator(s, seed, 5)) {
      Strings out = split(v);
      ASSERT_FALSE(out.empty());
      std::vector<int> pos;
      for (const auto &t : out) pos.push_back(std::stoi(t.substr(1)));
      std::vector<int> kept = pos;
      std::sort(kept.begin(), kept.end());
      EXPECT_TRUE(std::adjacent_find(kept.begin(), kept.end()) == kept.end());
      for (size_t i = 0; i < pos.size(); ++i) {
        size_t rank = std::lower_bound(kept.begin(), kept.end(), pos[i]) - kept.begin();
        EXPECT_LE(std::abs(long(rank) - long(i)), 3);
      }
    }
}

std::vector<SummarySentence> sentences(const Strings &raw) {
  std::vector<SummarySentence> out;
  for (size_t i = 0; i < raw.size(); ++i) out.push_back({"s" + std::to_string(i), tokenize(raw[i])});
  return out;
}

TEST(ExpandTest, EchoGivesIdentityPairs) {
  EchoGenerator echo;
  auto ss = sentences({"First one.", "Second one."});
  auto pairs = expand_with_backtranslation(ss, echo, 1);
  ASSERT_EQ(pairs.size(), 2u);
  for (size_t i = 0; i < 2; ++i) {
    EXPECT_EQ(pairs[i].source, pairs[i].target);
    EXPECT_EQ(pairs[i].target, ss[i].sentence);
    EXPECT_EQ(pairs[i].provenance, Provenance::kBacktranslated);
    EXPECT_EQ(pairs[i].similarity, SentencePair::kUnsetSimilarity);
    EXPECT_EQ(pairs[i].origin, (Origin{ss[i].summary_id, "echo"}));
  }
}

TEST(ExpandTest, NoiserPairsMatchOracle) {
  NoisingGenerator gen(11);
  auto ss = sentences({"alpha beta gamma delta epsilon zeta.",
                       "one two three four five six seven.",
                       "red green blue cyan magenta yellow black."});
  auto pairs = expand_with_backtranslation(ss, gen, 2);
  ASSERT_EQ(pairs.size(), 6u);
  for (size_t i = 0; i < 3; ++i) {
    Strings want = first_distinct(ss[i].sentence.raw, 11, 2);
    EXPECT_EQ(pairs[2 * i].source.raw, want[0]);
    EXPECT_EQ(pairs[2 * i + 1].source.raw, want[1]);
    EXPECT_EQ(pairs[2 * i].target, ss[i].sentence);
  }
}

class ScriptedGenerator : public HypothesisGenerator {
 public:
  explicit ScriptedGenerator(std::vector<Strings> answers) : answers_(std::move(answers)) {}
  std::string tag() const override { return "scripted"; }
  std::vector<GeneratorResponse> generate(const std::vector<GeneratorRequest> &req) override {
    std::vector<GeneratorResponse> out;
    for (size_t i = 0; i < req.size(); ++i) out.push_back({req[i].id, answers_[i]});
    return out;
  }

 private:
  std::vector<Strings> answers_;
};

TEST(ExpandTest, ContractViolations) {
  auto ss = sentences({"a b.", "c d."});
  ScriptedGenerator skip({{}, {"x"}});
  std::ostringstream log;
  auto pairs = expand_with_backtranslation(ss, skip, 2, &log);
  ASSERT_EQ(pairs.size(), 1u);
  EXPECT_EQ(pairs[0].origin.summary_id, "s1");
  EXPECT_NE(log.str().find("warning"), std::string::npos);

  ScriptedGenerator too_many({{"x", "y", "z"}, {"x"}});
  EXPECT_THROW(expand_with_backtranslation(ss, too_many, 2), ProtocolError);
  ScriptedGenerator empty({{"x"}, {" "}});
  EXPECT_THROW(expand_with_backtranslation(ss, empty, 2), ProtocolError);
}

SentencePair pair(const std::string &src, const std::string &tgt, Provenance p,
                  const std::string &origin = "o") {
  return {tokenize(src), tokenize(tgt), p == Provenance::kPseudoParallel ? 0.9 : -1.0, p,
          {"s", origin}};
}

TEST(MergeTest, CollisionsAndStats) {
  MinedDataset pp;
  pp.pairs = {pair("a", "b", Provenance::kPseudoParallel),
              pair("c", "d", Provenance::kPseudoParallel)};
  MinedDataset only = merge_datasets(pp, {});
  EXPECT_EQ(only.stats.fraction_pp, 1.0);

  std::vector<SentencePair> bt = {pair("a", "b", Provenance::kBacktranslated),
                                  pair("e", "f", Provenance::kBacktranslated),
                                  pair("e", "f", Provenance::kBacktranslated, "other")};
  MinedDataset m = merge_datasets(pp, bt);
  ASSERT_EQ(m.pairs.size(), 3u);
  EXPECT_EQ(m.pairs[0].provenance, Provenance::kPseudoParallel);
  EXPECT_EQ(m.stats.pseudo_parallel_count, 2u);
  EXPECT_EQ(m.stats.backtranslated_count, 1u);
  EXPECT_DOUBLE_EQ(m.stats.fraction_pp, 2.0 / 3.0);
  EXPECT_EQ(m.stats, MixtureStats::count(m.pairs));

  // A pseudo-parallel pair wins even when a backtranslated copy came first.
  MinedDataset bt_first;
  bt_first.pairs = {pair("x", "y", Provenance::kBacktranslated)};
  MinedDataset w = merge_datasets(bt_first, std::vector<SentencePair>{pair("x", "y", Provenance::kPseudoParallel)});
  ASSERT_EQ(w.pairs.size(), 1u);
  EXPECT_EQ(w.pairs[0].provenance, Provenance::kPseudoParallel);
  EXPECT_EQ(merge_datasets({}, {}).stats.fraction_pp, 0.0);
}

TEST(MergeTest, AssociativeAsSets) {
  std::mt19937_64 rng(67);
  auto random_pairs = [&] {
    std::vector<SentencePair> v;
    for (int i = 0; i < 30; ++i)
      v.push_back(pair("x" + std::to_string(rng() % 6), "y" + std::to_string(rng() % 6),
                       rng() % 2 ? Provenance::kPseudoParallel : Provenance::kBacktranslated));
    return v;
  };
  auto as_set = [](const MinedDataset &d) {
    std::set<std::tuple<std::string, std::string, int>> s;
    for (const auto &p : d.pairs) s.insert({p.source.raw, p.target.raw, int(p.provenance)});
    return s;
  };
  for (int trial = 0; trial < 50; ++trial) {
    MinedDataset a{random_pairs(), {}};
    auto b = random_pairs(), c = random_pairs();
    MinedDataset left = merge_datasets(merge_datasets(a, b), c);
    MinedDataset bc = merge_datasets(MinedDataset{b, {}}, c);
    MinedDataset right = merge_datasets(a, bc.pairs);
    EXPECT_EQ(as_set(left), as_set(right));
    EXPECT_LE(left.pairs.size(), a.pairs.size() + b.size() + c.size());
  }
}

class ExportTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("lrsumm_export_" + std::to_string(::getpid()));
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }
  std::filesystem::path dir_;
};

TEST_F(ExportTest, RoundTrip) {
  MinedDataset d;
  d.pairs = {pair("Hello, world.", "Hi there!", Provenance::kPseudoParallel),
             pair("tab\there", "new\nline", Provenance::kBacktranslated, "noise"),
             pair("x", "y", Provenance::kPseudoParallel)};
  d.pairs[0].similarity = 0.1 + 0.2;  // Not exactly representable in decimal.
  d.stats = MixtureStats::count(d.pairs);
  const auto path = dir_ / "pairs.tsv";
  EXPECT_EQ(export_training_pairs(d, path), 3u);
  MinedDataset back = read_training_pairs(path);
  ASSERT_EQ(back.pairs.size(), 3u);
  EXPECT_EQ(back.pairs[0], d.pairs[0]);
  EXPECT_EQ(back.pairs[2], d.pairs[2]);
  EXPECT_EQ(back.pairs[1].source.raw, "tab here");
  EXPECT_EQ(back.pairs[1].target.raw, "new line");
  EXPECT_EQ(back.pairs[1].source.tokens, d.pairs[1].source.tokens);
  EXPECT_EQ(back.stats, d.stats);

  EXPECT_EQ(export_training_pairs(MinedDataset{}, dir_ / "empty.tsv"), 0u);
  EXPECT_EQ(std::filesystem::file_size(dir_ / "empty.tsv"), 0u);
}

TEST_F(ExportTest, FailureReportsCount) {
  MinedDataset d;
  d.pairs = {pair("a", "b", Provenance::kPseudoParallel)};
  try {
    export_training_pairs(d, dir_ / "missing" / "pairs.tsv");
    FAIL();
  } catch (const ExportError &e) {
    EXPECT_EQ(e.written(), 0u);
  }
  if (std::filesystem::exists("/dev/full")) {
    MinedDataset big;
    for (int i = 0; i < 20000; ++i)
      big.pairs.push_back(pair("source " + std::to_string(i), "target", Provenance::kPseudoParallel));
    EXPECT_THROW(export_training_pairs(big, "/dev/full"), ExportError);
  }
}

TEST(PairTsvTest, RejectsMalformedLines) {
  EXPECT_THROW(parse_pair_line("a\tb\t0.5\tpseudo_parallel", 4), FormatError);
  EXPECT_THROW(parse_pair_line("a\tb\tzz\tpseudo_parallel\ts|a", 4), FormatError);
  EXPECT_THROW(parse_pair_line("a\tb\t0.5\tmystery\ts|a", 4), FormatError);
  EXPECT_THROW(parse_pair_line("a\tb\t0.5\tbacktranslated\tnobar", 4), FormatError);
  try {
    parse_pair_line(" \tb\t0.5\tbacktranslated\ts|x", 9);
    FAIL();
  } catch (const FormatError &e) {
    EXPECT_EQ(e.line(), 9u);
  }
}

}  // namespace
}  // namespace lrsumm
