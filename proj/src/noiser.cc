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
#include <string_view>
#include <unordered_set>

#include "lrsumm/corpus.h"
#include "lrsumm/synthkit.h"

namespace lrsumm {
namespace {

constexpr double kDropProbability = 0.1;
constexpr double kShuffleSpan = 4.0;

uint64_t fnv1a64(std::string_view s) {
  uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

double unit(std::mt19937_64 &rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

std::string noise_variant(const std::string &sentence, uint64_t seed,
                          uint64_t attempt) {
  const TokenizedSentence ts = tokenize(sentence);
  std::mt19937_64 rng(
      splitmix64(splitmix64(fnv1a64(ts.raw) ^ seed) ^ attempt));

  std::vector<std::string_view> kept;
  for (const auto &t : ts.tokens)
    if (unit(rng) >= kDropProbability) kept.push_back(t);
  if (kept.empty()) kept.push_back(ts.tokens.front());

  std::vector<std::pair<double, size_t>> keys(kept.size());
  for (size_t i = 0; i < kept.size(); ++i)
    keys[i] = {static_cast<double>(i) + kShuffleSpan * unit(rng), i};
  std::stable_sort(keys.begin(), keys.end(),
                   [](const auto &a, const auto &b) { return a.first < b.first; });

  std::string out;
  for (const auto &[key, i] : keys) {
    if (!out.empty()) out.push_back(' ');
    out += kept[i];
  }
  return out;
}

std::vector<std::string> builtin_noising_generator(const std::string &sentence,
                                                   uint64_t seed, int j) {
  std::vector<std::string> out;
  std::unordered_set<std::string> seen;
  const uint64_t attempts = 16 * static_cast<uint64_t>(std::max(j, 0));
  for (uint64_t a = 0; a < attempts && out.size() < static_cast<size_t>(j); ++a) {
    std::string v = noise_variant(sentence, seed, a);
    if (seen.insert(v).second) out.push_back(std::move(v));
  }
  return out;
}

std::vector<GeneratorResponse> NoisingGenerator::generate(
    const std::vector<GeneratorRequest> &requests) {
  std::vector<GeneratorResponse> out;
  out.reserve(requests.size());
  for (const auto &r : requests)
    out.push_back({r.id, builtin_noising_generator(r.text, seed_, r.j)});
  return out;
}

std::vector<GeneratorResponse> EchoGenerator::generate(
    const std::vector<GeneratorRequest> &requests) {
  std::vector<GeneratorResponse> out;
  out.reserve(requests.size());
  for (const auto &r : requests) out.push_back({r.id, {r.text}});
  return out;
}

}  // namespace lrsumm
