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

#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>

#include "lrsumm/dataset.h"
#include "lrsumm/error.h"

namespace lrsumm {

std::string_view to_string(Provenance p) {
  return p == Provenance::kPseudoParallel ? "pseudo_parallel" : "backtranslated";
}

Provenance parse_provenance(std::string_view name) {
  if (name == "pseudo_parallel") return Provenance::kPseudoParallel;
  if (name == "backtranslated") return Provenance::kBacktranslated;
  throw InputError("unknown provenance '" + std::string(name) + "'");
}

MixtureStats MixtureStats::count(std::span<const SentencePair> pairs) {
  MixtureStats s;
  for (const auto &p : pairs) {
    if (p.provenance == Provenance::kPseudoParallel)
      ++s.pseudo_parallel_count;
    else
      ++s.backtranslated_count;
  }
  const uint64_t total = s.pseudo_parallel_count + s.backtranslated_count;
  if (total > 0)
    s.fraction_pp = static_cast<double>(s.pseudo_parallel_count) /
                    static_cast<double>(total);
  return s;
}

nlohmann::json to_json(const MixtureStats &stats) {
  return {{"pseudo_parallel_count", stats.pseudo_parallel_count},
          {"backtranslated_count", stats.backtranslated_count},
          {"fraction_pp", stats.fraction_pp}};
}

namespace {

void append_clean(std::string &out, std::string_view text) {
  for (char c : text) out.push_back((c == '\t' || c == '\n' || c == '\r') ? ' ' : c);
}

std::string format_double(double v) {
  char buf[32];
  auto [p, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, p);
}

}  // namespace

std::string format_pair_line(const SentencePair &pair) {
  std::string line;
  append_clean(line, pair.source.raw);
  line.push_back('\t');
  append_clean(line, pair.target.raw);
  line.push_back('\t');
  line += format_double(pair.similarity);
  line.push_back('\t');
  line += to_string(pair.provenance);
  line.push_back('\t');
  append_clean(line, pair.origin.summary_id);
  line.push_back('|');
  append_clean(line, pair.origin.source);
  return line;
}

void write_pairs(std::ostream &out, std::span<const SentencePair> pairs) {
  for (const auto &p : pairs) out << format_pair_line(p) << '\n';
}

SentencePair parse_pair_line(std::string_view line, size_t line_no) {
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  std::vector<std::string_view> f;
  size_t b = 0;
  for (;;) {
    size_t t = line.find('\t', b);
    f.push_back(line.substr(b, t == std::string_view::npos ? t : t - b));
    if (t == std::string_view::npos) break;
    b = t + 1;
  }
  if (f.size() != 5)
    throw FormatError("expected 5 tab-separated fields, found " +
                          std::to_string(f.size()),
                      line_no);
  SentencePair p;
  try {
    p.source = tokenize(f[0]);
    p.target = tokenize(f[1]);
    p.provenance = parse_provenance(f[3]);
  } catch (const InputError &e) {
    throw FormatError(e.what(), line_no);
  }
  auto [end, ec] = std::from_chars(f[2].data(), f[2].data() + f[2].size(),
                                   p.similarity);
  if (ec != std::errc() || end != f[2].data() + f[2].size() ||
      !std::isfinite(p.similarity))
    throw FormatError("bad similarity '" + std::string(f[2]) + "'", line_no);
  size_t bar = f[4].find('|');
  if (bar == std::string_view::npos)
    throw FormatError("origin lacks '|' separator", line_no);
  p.origin.summary_id = std::string(f[4].substr(0, bar));
  p.origin.source = std::string(f[4].substr(bar + 1));
  return p;
}

std::vector<SentencePair> read_pairs(std::istream &in) {
  std::vector<SentencePair> out;
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    out.push_back(parse_pair_line(line, line_no));
  }
  return out;
}

}  // namespace lrsumm
