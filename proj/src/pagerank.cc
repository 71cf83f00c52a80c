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

#include <cmath>
#include <stdexcept>

#include "lrsumm/extractors.h"

namespace lrsumm {

std::vector<double> pagerank(const WeightMatrix &weights, double damping,
                             double epsilon, size_t max_iterations) {
  const size_t n = weights.size();
  if (n == 0) throw std::invalid_argument("pagerank: empty graph");

  // Row-stochastic transition matrix.
  WeightMatrix p(n);
  for (size_t i = 0; i < n; ++i) {
    double row = 0.0;
    for (size_t j = 0; j < n; ++j) {
      double w = weights.at(i, j);
      if (!(w >= 0.0) || !std::isfinite(w))
        throw std::invalid_argument("pagerank: weights must be finite and nonnegative");
      row += w;
    }
    for (size_t j = 0; j < n; ++j)
      p.at(i, j) = row > 0.0 ? weights.at(i, j) / row : 1.0 / n;
  }

  const double teleport = (1.0 - damping) / static_cast<double>(n);
  std::vector<double> rank(n, 1.0 / static_cast<double>(n)), next(n);
  for (size_t it = 0; it < max_iterations; ++it) {
    for (size_t j = 0; j < n; ++j) {
      double in = 0.0;
      for (size_t i = 0; i < n; ++i) in += p.at(i, j) * rank[i];
      next[j] = teleport + damping * in;
    }
    double delta = 0.0;
    for (size_t j = 0; j < n; ++j) delta += std::abs(next[j] - rank[j]);
    rank.swap(next);
    if (delta < epsilon) break;
  }

  double sum = 0.0;
  for (double r : rank) sum += r;
  for (double &r : rank) r /= sum;
  return rank;
}

}  // namespace lrsumm
