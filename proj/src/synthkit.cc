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

#include "lrsumm/synthkit.h"

#include <fstream>
#include <ostream>
#include <unordered_map>

#include "lrsumm/error.h"

namespace lrsumm {

SubprocessGenerator::SubprocessGenerator(const std::string &command)
    : process_(command) {}

std::vector<GeneratorResponse> SubprocessGenerator::generate(
    const std::vector<GeneratorRequest> &requests) {
  return process_.exchange(requests);
}

std::unique_ptr<HypothesisGenerator> make_generator(const std::string &command,
                                                    uint64_t seed) {
  if (command == "builtin") return std::make_unique<NoisingGenerator>(seed);
  if (command == "echo") return std::make_unique<EchoGenerator>();
  return std::make_unique<SubprocessGenerator>(command);
}

std::vector<SummarySentence> summary_sentences(std::span<const Document> summaries) {
  std::vector<SummarySentence> out;
  for (const auto &doc : summaries)
    for (const auto &s : doc.sentences) out.push_back({doc.id, s});
  return out;
}

std::vector<SentencePair> expand_with_backtranslation(
    std::span<const SummarySentence> sentences, HypothesisGenerator &generator,
    int j, std::ostream *log) {
  if (j < 1) throw InputError("j must be at least 1");
  std::vector<GeneratorRequest> requests;
  requests.reserve(sentences.size());
  for (size_t i = 0; i < sentences.size(); ++i)
    requests.push_back({std::to_string(i), sentences[i].sentence.raw, j});
  std::vector<GeneratorResponse> responses = generator.generate(requests);
  if (responses.size() != requests.size())
    throw ProtocolError("generator answered " + std::to_string(responses.size()) +
                        " of " + std::to_string(requests.size()) + " requests");

  const std::string tag = generator.tag();
  std::vector<SentencePair> out;
  for (size_t i = 0; i < sentences.size(); ++i) {
    const auto &r = responses[i];
    if (r.id != requests[i].id)
      throw ProtocolError("response '" + r.id + "' answers request '" +
                          requests[i].id + "'");
    if (r.hypotheses.size() > static_cast<size_t>(j))
      throw ProtocolError("request '" + r.id + "' asked for " + std::to_string(j) +
                          " hypotheses, got " + std::to_string(r.hypotheses.size()));
    if (r.hypotheses.empty()) {
      if (log)
        *log << "warning: no hypotheses for sentence " << i << " of summary '"
             << sentences[i].summary_id << "'; skipped\n";
      continue;
    }
    for (const auto &h : r.hypotheses) {
      SentencePair p;
      try {
        p.source = tokenize(h);
      } catch (const DegenerateSentenceError &) {
        throw ProtocolError("empty hypothesis for request '" + r.id + "'");
      }
      p.target = sentences[i].sentence;
      p.similarity = SentencePair::kUnsetSimilarity;
      p.provenance = Provenance::kBacktranslated;
      p.origin = {sentences[i].summary_id, tag};
      out.push_back(std::move(p));
    }
  }
  return out;
}

namespace {

struct RawKey {
  std::string source, target;
  bool operator==(const RawKey &) const = default;
};

struct RawKeyHash {
  size_t operator()(const RawKey &k) const {
    size_t h = std::hash<std::string>()(k.source);
    return h ^ (std::hash<std::string>()(k.target) + 0x9e3779b97f4a7c15ULL +
                (h << 6) + (h >> 2));
  }
};

}  // namespace

MinedDataset merge_datasets(const MinedDataset &pp,
                            std::span<const SentencePair> bt) {
  MinedDataset out;
  std::unordered_map<RawKey, size_t, RawKeyHash> where;
  auto add = [&](const SentencePair &p) {
    auto [it, fresh] = where.try_emplace({p.source.raw, p.target.raw},
                                         out.pairs.size());
    if (fresh) {
      out.pairs.push_back(p);
    } else if (p.provenance == Provenance::kPseudoParallel &&
               out.pairs[it->second].provenance != Provenance::kPseudoParallel) {
      out.pairs[it->second] = p;
    }
  };
  for (const auto &p : pp.pairs) add(p);
  for (const auto &p : bt) add(p);
  out.stats = MixtureStats::count(out.pairs);
  return out;
}

size_t export_training_pairs(const MinedDataset &dataset,
                             const std::filesystem::path &path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ExportError("cannot open " + path.string(), 0);
  size_t written = 0;
  for (const auto &p : dataset.pairs) {
    out << format_pair_line(p) << '\n';
    if (!out) throw ExportError("write to " + path.string() + " failed", written);
    ++written;
  }
  out.flush();
  if (!out) throw ExportError("write to " + path.string() + " failed", written);
  return written;
}

MinedDataset read_training_pairs(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path.string());
  MinedDataset out;
  out.pairs = read_pairs(in);
  out.stats = MixtureStats::count(out.pairs);
  return out;
}

}  // namespace lrsumm
