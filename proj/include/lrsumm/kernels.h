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

// Exhaustive nearest-neighbour kernels over dense embedding matrices.
//
// top_k_serial() is the reference implementation; top_k_parallel() tiles the
// same computation and runs it under OpenMP. Every score is produced by the
// same dot() call with a fixed accumulation order, and candidates are ranked
// by the total order (score desc, index asc), so both return bit-identical
// results for any thread count.

#ifndef LRSUMM_KERNELS_H_
#define LRSUMM_KERNELS_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace lrsumm {

struct DenseEmbedding;

namespace kernels {

double dot(const double *a, const double *b, size_t n);

// Row-major matrix of embeddings. Zero rows (no in-vocabulary token) are kept
// so row indices line up with the caller's items but never match anything.
class EmbeddingMatrix {
 public:
  explicit EmbeddingMatrix(size_t dim) : dim_(dim) {}

  void reserve(size_t rows);
  // Throws std::invalid_argument on a dimension mismatch.
  void append(const DenseEmbedding &e);

  size_t rows() const { return zero_.size(); }
  size_t dim() const { return dim_; }
  const double *row(size_t i) const { return data_.data() + i * dim_; }
  bool is_zero(size_t i) const { return zero_[i] != 0; }

 private:
  size_t dim_;
  std::vector<double> data_;
  std::vector<uint8_t> zero_;
};

struct Neighbor {
  uint32_t index;
  double score;

  bool operator==(const Neighbor &) const = default;
};

// True when `a` ranks ahead of `b`.
inline bool ranks_before(const Neighbor &a, const Neighbor &b) {
  return a.score > b.score || (a.score == b.score && a.index < b.index);
}

using NeighborLists = std::vector<std::vector<Neighbor>>;

// For every query row, up to k base rows with dot >= min_score, best first.
NeighborLists top_k_serial(const EmbeddingMatrix &queries,
                           const EmbeddingMatrix &base, size_t k,
                           double min_score);

NeighborLists top_k_parallel(const EmbeddingMatrix &queries,
                             const EmbeddingMatrix &base, size_t k,
                             double min_score, int threads);

// Folds `shard` (indices relative to the shard) into `acc`, keeping the best k.
void merge_top_k(NeighborLists &acc, const NeighborLists &shard,
                 uint32_t index_offset, size_t k);

}  // namespace kernels
}  // namespace lrsumm

#endif  // LRSUMM_KERNELS_H_
