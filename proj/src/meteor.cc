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

// Staged unigram alignment for METEOR.
//
// Within a stage every candidate token can only match reference tokens of the
// same class (equal surface form, or equal stem), so the maximum number of
// matches is sum_w min(count_cand(w), count_ref(w)). Picking, among those
// maximum matchings, one with the fewest chunks generalizes minimum common
// string partition and is NP-hard, so each stage runs a depth-first search in
// leftmost order, bounded by a greedy solution and by a node budget.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <unordered_map>

#include "lrsumm/metrics.h"

namespace lrsumm {

namespace {

constexpr int kNone = -1;
constexpr size_t kNodeBudget = 20000;

class StageSearch {
 public:
  // cand_class/ref_class: class id per position, kNone when the position does
  // not take part in this stage. `align` holds links fixed by earlier stages.
  StageSearch(std::vector<int> cand_class, std::vector<int> ref_class,
              std::vector<int> align, size_t num_classes)
      : cand_class_(std::move(cand_class)),
        ref_class_(std::move(ref_class)),
        align_(std::move(align)),
        ref_used_(ref_class_.size(), false),
        refs_by_class_(num_classes),
        needed_(num_classes, 0),
        cand_left_(num_classes, 0) {
    for (int j : align_)
      if (j != kNone) ref_used_[j] = true;
    for (size_t j = 0; j < ref_class_.size(); ++j)
      if (ref_class_[j] != kNone && !ref_used_[j])
        refs_by_class_[ref_class_[j]].push_back(static_cast<int>(j));
    for (size_t i = 0; i < cand_class_.size(); ++i)
      if (eligible(i)) ++cand_left_[cand_class_[i]];
    for (size_t w = 0; w < num_classes; ++w)
      needed_[w] = std::min(cand_left_[w], refs_by_class_[w].size());
  }

  // Returns the chosen alignment (candidate -> reference or kNone).
  std::vector<int> run(bool *exact) {
    std::vector<int> greedy = align_;
    size_t greedy_chunks = run_greedy(greedy);
    bound_ = greedy_chunks;
    dfs(0, 0);
    *exact = nodes_ <= kNodeBudget;
    return found_ ? best_ : greedy;
  }

 private:
  bool eligible(size_t i) const {
    return cand_class_[i] != kNone && align_[i] == kNone;
  }

  bool continues(size_t i, int j) const {
    return i > 0 && j > 0 && align_[i - 1] == j - 1;
  }

  size_t run_length(size_t i, int j, const std::vector<int> &align,
                    const std::vector<bool> &used) const {
    size_t len = 0;
    while (i + len < cand_class_.size() &&
           static_cast<size_t>(j) + len < ref_class_.size()) {
      size_t ci = i + len, rj = j + len;
      if (cand_class_[ci] == kNone || align[ci] != kNone || used[rj] ||
          ref_class_[rj] != cand_class_[ci])
        break;
      ++len;
    }
    return len;
  }

  // Keeps the current chunk going when it can, otherwise starts at the
  // reference position with the longest run ahead.
  size_t run_greedy(std::vector<int> &align) const {
    std::vector<bool> used = ref_used_;
    size_t chunks = 0;
    for (size_t i = 0; i < align.size(); ++i) {
      if (align[i] == kNone && cand_class_[i] != kNone) {
        int w = cand_class_[i];
        int pick = kNone;
        if (i > 0 && align[i - 1] != kNone) {
          int next = align[i - 1] + 1;
          if (static_cast<size_t>(next) < ref_class_.size() && !used[next] &&
              ref_class_[next] == w)
            pick = next;
        }
        if (pick == kNone) {
          size_t best_len = 0;
          for (int j : refs_by_class_[w]) {
            if (used[j]) continue;
            size_t len = run_length(i, j, align, used);
            if (len > best_len) {
              best_len = len;
              pick = j;
            }
          }
        }
        if (pick != kNone) {
          align[i] = pick;
          used[pick] = true;
        }
      }
      if (align[i] != kNone &&
          !(i > 0 && align[i] > 0 && align[i - 1] == align[i] - 1))
        ++chunks;
    }
    return chunks;
  }

  void dfs(size_t i, size_t chunks) {
    if (++nodes_ > kNodeBudget) return;
    if (chunks > bound_ || (found_ && chunks >= best_chunks_)) return;
    if (i == align_.size()) {
      found_ = true;
      best_chunks_ = chunks;
      best_ = align_;
      return;
    }
    if (!eligible(i)) {
      size_t add = (align_[i] != kNone && !continues(i, align_[i])) ? 1 : 0;
      dfs(i + 1, chunks + add);
      return;
    }
    const int w = cand_class_[i];
    --cand_left_[w];
    if (needed_[w] > 0) {
      --needed_[w];
      for (int j : refs_by_class_[w]) {
        if (ref_used_[j]) continue;
        ref_used_[j] = true;
        align_[i] = j;
        dfs(i + 1, chunks + (continues(i, j) ? 0 : 1));
        align_[i] = kNone;
        ref_used_[j] = false;
        if (nodes_ > kNodeBudget) break;
      }
      ++needed_[w];
    }
    // Leaving this token unmatched must still allow the maximum cardinality.
    if (cand_left_[w] >= needed_[w] && nodes_ <= kNodeBudget) dfs(i + 1, chunks);
    ++cand_left_[w];
  }

  std::vector<int> cand_class_;
  std::vector<int> ref_class_;
  std::vector<int> align_;
  std::vector<bool> ref_used_;
  std::vector<std::vector<int>> refs_by_class_;
  std::vector<size_t> needed_;
  std::vector<size_t> cand_left_;

  size_t bound_ = 0;
  size_t nodes_ = 0;
  bool found_ = false;
  size_t best_chunks_ = 0;
  std::vector<int> best_;
};

// Runs one stage keyed by `key(token)` over positions still unaligned.
template <typename KeyFn>
std::vector<int> run_stage(std::span<const std::string> cand,
                           std::span<const std::string> ref,
                           std::vector<int> align, KeyFn key, bool *exact) {
  std::vector<bool> ref_used(ref.size(), false);
  for (int j : align)
    if (j != kNone) ref_used[j] = true;
  std::unordered_map<std::string, int> classes;
  std::vector<int> cand_class(cand.size(), kNone), ref_class(ref.size(), kNone);
  std::vector<std::string> cand_keys(cand.size());
  for (size_t i = 0; i < cand.size(); ++i)
    if (align[i] == kNone) cand_keys[i] = key(cand[i]);
  for (size_t j = 0; j < ref.size(); ++j) {
    if (ref_used[j]) continue;
    auto [it, _] = classes.try_emplace(key(ref[j]), static_cast<int>(classes.size()));
    ref_class[j] = it->second;
  }
  for (size_t i = 0; i < cand.size(); ++i) {
    if (align[i] != kNone) continue;
    auto it = classes.find(cand_keys[i]);
    if (it != classes.end()) cand_class[i] = it->second;
  }
  StageSearch search(std::move(cand_class), std::move(ref_class),
                     std::move(align), classes.size());
  return search.run(exact);
}

}  // namespace

MeteorAlignment meteor_align(std::span<const std::string> candidate,
                             std::span<const std::string> reference) {
  MeteorAlignment out;
  std::vector<int> align(candidate.size(), kNone);
  bool exact_stage = true, stem_stage = true;
  align = run_stage(candidate, reference, std::move(align),
                    [](const std::string &t) { return t; }, &exact_stage);
  align = run_stage(candidate, reference, std::move(align),
                    [](const std::string &t) { return porter_stem(t); },
                    &stem_stage);
  out.exact = exact_stage && stem_stage;
  for (size_t i = 0; i < align.size(); ++i) {
    if (align[i] == kNone) continue;
    out.links.emplace_back(i, static_cast<size_t>(align[i]));
    ++out.matches;
    if (!(i > 0 && align[i] > 0 && align[i - 1] == align[i] - 1)) ++out.chunks;
  }
  return out;
}

double meteor_lite(std::span<const std::string> candidate,
                   std::span<const std::string> reference) {
  if (candidate.empty() || reference.empty()) return 0.0;
  MeteorAlignment a = meteor_align(candidate, reference);
  if (a.matches == 0) return 0.0;
  const double m = static_cast<double>(a.matches);
  const double p = m / static_cast<double>(candidate.size());
  const double r = m / static_cast<double>(reference.size());
  const double f_mean = 10.0 * p * r / (r + 9.0 * p);
  const double penalty = 0.5 * std::pow(static_cast<double>(a.chunks) / m, 3.0);
  return f_mean * (1.0 - penalty);
}

}  // namespace lrsumm
