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

// Serial reference vs OpenMP nearest-neighbour search over unit vectors.
// Run with --benchmark_filter to pick one size.

#include <benchmark/benchmark.h>

#include <cmath>
#include <random>

#include "lrsumm/embeddings.h"
#include "lrsumm/kernels.h"

namespace {

using lrsumm::kernels::EmbeddingMatrix;

EmbeddingMatrix random_rows(size_t n, size_t dim, uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g;
  EmbeddingMatrix m(dim);
  m.reserve(n);
  for (size_t i = 0; i < n; ++i) {
    lrsumm::DenseEmbedding e;
    e.values.resize(dim);
    double norm = 0.0;
    for (auto &v : e.values) norm += (v = g(rng)) * v;
    for (auto &v : e.values) v /= std::sqrt(norm);
    e.is_zero = false;
    m.append(e);
  }
  return m;
}

void BM_TopKSerial(benchmark::State &state) {
  const size_t n = state.range(0);
  auto q = random_rows(n, 100, 1), b = random_rows(n, 100, 2);
  for (auto _ : state)
    benchmark::DoNotOptimize(lrsumm::kernels::top_k_serial(q, b, 5, -1.0));
  state.SetItemsProcessed(state.iterations() * n * n);
}

void BM_TopKParallel(benchmark::State &state) {
  const size_t n = state.range(0);
  const int threads = static_cast<int>(state.range(1));
  auto q = random_rows(n, 100, 1), b = random_rows(n, 100, 2);
  for (auto _ : state)
    benchmark::DoNotOptimize(lrsumm::kernels::top_k_parallel(q, b, 5, -1.0, threads));
  state.SetItemsProcessed(state.iterations() * n * n);
}

BENCHMARK(BM_TopKSerial)->Arg(1000)->Arg(4000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TopKParallel)
    ->ArgsProduct({{1000, 4000}, {1, 2, 4, 8}})
    ->Unit(benchmark::kMillisecond)
    ->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
