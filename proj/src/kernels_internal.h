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

#ifndef LRSUMM_SRC_KERNELS_INTERNAL_H_
#define LRSUMM_SRC_KERNELS_INTERNAL_H_

#include <vector>

#include "lrsumm/kernels.h"

namespace lrsumm {
namespace kernels {

// Inserts `candidate` into the sorted list `best` if it makes the top k.
void offer(std::vector<Neighbor> &best, size_t k, Neighbor candidate);

void check_shapes(const EmbeddingMatrix &queries, const EmbeddingMatrix &base);

}  // namespace kernels
}  // namespace lrsumm

#endif  // LRSUMM_SRC_KERNELS_INTERNAL_H_
