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
#include <stdexcept>
#include <string>

#include "kernels_internal.h"
#include "lrsumm/embeddings.h"
#include "lrsumm/kernels.h"

namespace lrsumm {
namespace kernels {

double dot(const double *a, const double *b, size_t n) {
  double s0 = 0.0, s1 = 0.0, s2 = 0.0, s3 = 0.0;
  size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    s0 += a[i] * b[i];
    s1 += a[i + 1] * b[i + 1];
    s2 += a[i + 2] * b[i + 2];
    s3 += a[i + 3] * b[i + 3];
  }
  for (; i < n; ++i) s0 += a[i] * b[i];
  return (s0 + s1) + (s2 + s3);
}

void EmbeddingMatrix::reserve(size_t rows) {
  data_.reserve(rows * dim_);
  zero_.reserve(rows);
}

void EmbeddingMatrix::append(const DenseEmbedding &e) {
  if (e.dimension() != dim_)
    throw std::invalid_argument("embedding has dimension " +
                                std::to_string(e.dimension()) + ", matrix has " +
                                std::to_string(dim_));
  data_.insert(data_.end(), e.values.begin(), e.values.end());
  zero_.push_back(e.is_zero ? 1 : 0);
}

void offer(std::vector<Neighbor> &best, size_t k, Neighbor candidate) {
  if (k == 0) return;
  if (best.size() == k && !ranks_before(candidate, best.back())) return;
  auto pos = std::upper_bound(best.begin(), best.end(), candidate, ranks_before);
  best.insert(pos, candidate);
  if (best.size() > k) best.pop_back();
}

void check_shapes(const EmbeddingMatrix &queries, const EmbeddingMatrix &base) {
  if (queries.dim() != base.dim())
    throw std::invalid_argument("query and base dimensions differ");
}

NeighborLists top_k_serial(const EmbeddingMatrix &queries,
                           const EmbeddingMatrix &base, size_t k,
                           double min_score) {
  check_shapes(queries, base);
  NeighborLists out(queries.rows());
  const size_t d = queries.dim();
  for (size_t q = 0; q < queries.rows(); ++q) {
    if (queries.is_zero(q)) continue;
    for (size_t b = 0; b < base.rows(); ++b) {
      if (base.is_zero(b)) continue;
      double s = dot(queries.row(q), base.row(b), d);
      if (s >= min_score)
        offer(out[q], k, {static_cast<uint32_t>(b), s});
    }
  }
  return out;
}

void merge_top_k(NeighborLists &acc, const NeighborLists &shard,
                 uint32_t index_offset, size_t k) {
  if (acc.size() != shard.size())
    throw std::invalid_argument("merge_top_k: query counts differ");
  for (size_t q = 0; q < acc.size(); ++q)
    for (Neighbor n : shard[q]) {
      n.index += index_offset;
      offer(acc[q], k, n);
    }
}

}  // namespace kernels
}  // namespace lrsumm
