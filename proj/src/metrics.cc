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

#include "lrsumm/metrics.h"

#include <omp.h>

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <unordered_map>

namespace lrsumm {

MetricTriple MetricTriple::from(double precision, double recall) {
  MetricTriple m{precision, recall, 0.0};
  if (precision + recall > 0.0)
    m.f1 = 2.0 * precision * recall / (precision + recall);
  return m;
}

namespace {

// Maps both sequences onto shared integer ids.
std::pair<std::vector<uint32_t>, std::vector<uint32_t>> intern(
    std::span<const std::string> a, std::span<const std::string> b) {
  std::unordered_map<std::string_view, uint32_t> ids;
  auto map = [&](std::span<const std::string> s) {
    std::vector<uint32_t> out;
    out.reserve(s.size());
    for (const auto &t : s)
      out.push_back(ids.try_emplace(t, static_cast<uint32_t>(ids.size()))
                        .first->second);
    return out;
  };
  auto ia = map(a);
  auto ib = map(b);
  return {std::move(ia), std::move(ib)};
}

std::map<std::vector<uint32_t>, size_t> ngram_counts(
    const std::vector<uint32_t> &seq, size_t n) {
  std::map<std::vector<uint32_t>, size_t> counts;
  if (seq.size() < n) return counts;
  for (size_t i = 0; i + n <= seq.size(); ++i)
    ++counts[std::vector<uint32_t>(seq.begin() + i, seq.begin() + i + n)];
  return counts;
}

}  // namespace

MetricTriple rouge_n(std::span<const std::string> candidate,
                     std::span<const std::string> reference, size_t n) {
  if (n == 0) throw std::invalid_argument("rouge_n: n must be positive");
  auto [c, r] = intern(candidate, reference);
  auto cc = ngram_counts(c, n);
  auto rc = ngram_counts(r, n);
  size_t overlap = 0;
  for (const auto &[gram, count] : cc)
    if (auto it = rc.find(gram); it != rc.end())
      overlap += std::min(count, it->second);
  const size_t c_total = c.size() >= n ? c.size() - n + 1 : 0;
  const size_t r_total = r.size() >= n ? r.size() - n + 1 : 0;
  double p = c_total ? static_cast<double>(overlap) / c_total : 0.0;
  double rec = r_total ? static_cast<double>(overlap) / r_total : 0.0;
  return MetricTriple::from(p, rec);
}

size_t lcs_length(std::span<const std::string> a,
                  std::span<const std::string> b) {
  auto [x, y] = intern(a, b);
  std::vector<size_t> prev(y.size() + 1, 0), cur(y.size() + 1, 0);
  for (size_t i = 1; i <= x.size(); ++i) {
    for (size_t j = 1; j <= y.size(); ++j)
      cur[j] = x[i - 1] == y[j - 1] ? prev[j - 1] + 1
                                    : std::max(prev[j], cur[j - 1]);
    std::swap(prev, cur);
  }
  return prev[y.size()];
}

MetricTriple rouge_l(std::span<const std::string> candidate,
                     std::span<const std::string> reference) {
  const size_t lcs = lcs_length(candidate, reference);
  double p = candidate.empty() ? 0.0
                               : static_cast<double>(lcs) / candidate.size();
  double r = reference.empty() ? 0.0
                               : static_cast<double>(lcs) / reference.size();
  return MetricTriple::from(p, r);
}

namespace {

double sorted_mean(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  double sum = 0.0;
  for (double v : values) sum += v;
  return sum / static_cast<double>(values.size());
}

}  // namespace

EvalReport evaluate(std::span<const Tokens> system,
                    std::span<const Tokens> references, int workers) {
  if (system.size() != references.size())
    throw std::invalid_argument(
        "evaluate: " + std::to_string(system.size()) + " system summaries vs " +
        std::to_string(references.size()) + " references");
  if (system.empty()) throw std::invalid_argument("evaluate: no examples");

  const size_t n = system.size();
  // r1 p/r/f, r2 p/r/f, rL p/r/f, meteor
  std::array<std::vector<double>, 10> cols;
  for (auto &c : cols) c.resize(n);

#pragma omp parallel for schedule(dynamic, 16) num_threads(std::max(workers, 1))
  for (long i = 0; i < static_cast<long>(n); ++i) {
    const auto &cand = system[i];
    const auto &ref = references[i];
    const MetricTriple triples[3] = {rouge_n(cand, ref, 1), rouge_n(cand, ref, 2),
                                     rouge_l(cand, ref)};
    for (int m = 0; m < 3; ++m) {
      cols[3 * m][i] = triples[m].precision;
      cols[3 * m + 1][i] = triples[m].recall;
      cols[3 * m + 2][i] = triples[m].f1;
    }
    cols[9][i] = meteor_lite(cand, ref);
  }

  EvalReport report;
  report.n_examples = n;
  MetricTriple *targets[3] = {&report.rouge1, &report.rouge2, &report.rougeL};
  for (int m = 0; m < 3; ++m) {
    targets[m]->precision = sorted_mean(std::move(cols[3 * m]));
    targets[m]->recall = sorted_mean(std::move(cols[3 * m + 1]));
    targets[m]->f1 = sorted_mean(std::move(cols[3 * m + 2]));
  }
  report.meteor = sorted_mean(std::move(cols[9]));
  uint64_t tokens = 0;
  for (const auto &s : system) tokens += s.size();
  report.avg_tokens = static_cast<double>(tokens) / static_cast<double>(n);
  return report;
}

nlohmann::json to_json(const MetricTriple &m) {
  return {{"p", m.precision}, {"r", m.recall}, {"f1", m.f1}};
}

nlohmann::json to_json(const EvalReport &report) {
  return {
      {"rouge1", to_json(report.rouge1)},
      {"rouge2", to_json(report.rouge2)},
      {"rougeL", to_json(report.rougeL)},
      {"meteor", report.meteor},
      {"avg_tokens", report.avg_tokens},
      {"n_examples", report.n_examples},
      {"tokenization", "lowercase, punctuation split"},
  };
}

EvalReport eval_report_from_json(const nlohmann::json &j) {
  auto triple = [](const nlohmann::json &t) {
    return MetricTriple{t.at("p").get<double>(), t.at("r").get<double>(),
                        t.at("f1").get<double>()};
  };
  EvalReport r;
  r.rouge1 = triple(j.at("rouge1"));
  r.rouge2 = triple(j.at("rouge2"));
  r.rougeL = triple(j.at("rougeL"));
  r.meteor = j.at("meteor").get<double>();
  r.avg_tokens = j.at("avg_tokens").get<double>();
  r.n_examples = j.at("n_examples").get<size_t>();
  return r;
}

}  // namespace lrsumm
