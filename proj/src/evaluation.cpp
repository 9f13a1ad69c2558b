/*
 * Copyright 2026 The InfoRank Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "inforank/evaluation.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>

#include "inforank/error.hpp"

namespace inforank {

namespace {

bool ranks_before(const ScoredIri& a, const ScoredIri& b) {
  return a.score > b.score || (a.score == b.score && a.iri < b.iri);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
    s.remove_prefix(1);
  }
  while (!s.empty() &&
         (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

std::string strip_brackets(std::string_view s) {
  if (s.size() >= 2 && s.front() == '<' && s.back() == '>') {
    s = s.substr(1, s.size() - 2);
  }
  return std::string(s);
}

[[noreturn]] void fail(const std::string& name, std::uint64_t line,
                       const std::string& reason) {
  throw DataError(name + ":" + std::to_string(line) + ": " + reason);
}

double parse_number(std::string_view text, const std::string& name,
                    std::uint64_t line) {
  double value = 0.0;
  const auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    fail(name, line, "invalid number '" + std::string(text) + "'");
  }
  return value;
}

std::vector<std::string_view> split_tabs(std::string_view s) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto tab = s.find('\t', start);
    parts.push_back(s.substr(start, tab - start));
    if (tab == std::string_view::npos) break;
    start = tab + 1;
  }
  return parts;
}

std::ifstream open_or_throw(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open " + path.string());
  return in;
}

}  // namespace

RankedList rank_from_scores(std::span<const ScoredIri> scores,
                            const IriSet* restrict_to) {
  RankedList out;
  out.entries_.reserve(scores.size());
  for (const ScoredIri& s : scores) {
    if (restrict_to == nullptr || restrict_to->contains(s.iri)) {
      out.entries_.push_back(s);
    }
  }
  IriSet seen;
  seen.reserve(out.entries_.size());
  for (const ScoredIri& s : out.entries_) {
    if (!seen.insert(s.iri).second) {
      throw DataError("duplicate IRI in scores: " + s.iri);
    }
  }
  std::sort(out.entries_.begin(), out.entries_.end(), ranks_before);
  return out;
}

RankedList rank_from_scores(const InstanceGraph& g, const ScoreVector& scores,
                            const IriSet* restrict_to) {
  std::vector<ScoredIri> scored;
  scored.reserve(g.size());
  for (NodeId v = 0; v < g.size(); ++v) {
    scored.push_back({g.iri(v), scores.scores.at(v)});
  }
  return rank_from_scores(scored, restrict_to);
}

GoldStandard::GoldStandard(std::vector<std::string> relevant)
    : relevant_(std::move(relevant)) {
  if (relevant_.empty()) throw DataError("gold standard is empty");
  set_.reserve(relevant_.size());
  for (const std::string& iri : relevant_) {
    if (!set_.insert(iri).second) {
      throw DataError("duplicate IRI in gold standard: " + iri);
    }
  }
}

double precision_at_k(const RankedList& ranked, const GoldStandard& gold,
                      std::size_t k) {
  if (k < 1 || k > ranked.size()) {
    throw ConfigError("k must lie in [1, " + std::to_string(ranked.size()) +
                      "], got " + std::to_string(k));
  }
  std::size_t hits = 0;
  for (std::size_t i = 0; i < k; ++i) {
    if (gold.contains(ranked[i].iri)) ++hits;
  }
  return static_cast<double>(hits) / static_cast<double>(k);
}

double average_precision(const RankedList& ranked, const GoldStandard& gold) {
  std::size_t hits = 0;
  double sum = 0.0;
  for (std::size_t i = 0; i < ranked.size(); ++i) {
    if (!gold.contains(ranked[i].iri)) continue;
    ++hits;
    sum += static_cast<double>(hits) / static_cast<double>(i + 1);
  }
  return sum / static_cast<double>(gold.size());
}

double cmap(std::span<const double> ap_values) {
  if (ap_values.empty()) throw ConfigError("cmap of an empty list");
  double sum = 0.0;
  for (const double ap : ap_values) sum += ap;
  return sum / static_cast<double>(ap_values.size());
}

std::size_t boundary_tie_count(const RankedList& ranked,
                               const GoldStandard& gold) {
  std::size_t count = 0;
  std::size_t i = 0;
  while (i < ranked.size()) {
    std::size_t j = i;
    std::size_t relevant = 0;
    while (j < ranked.size() && ranked[j].score == ranked[i].score) {
      if (gold.contains(ranked[j].iri)) ++relevant;
      ++j;
    }
    if (relevant > 0 && relevant < j - i) count += relevant;
    i = j;
  }
  return count;
}

double sum_votes(const RankedList& ranked,
                 const std::unordered_map<std::string, double>& votes,
                 std::size_t k) {
  double total = 0.0;
  for (std::size_t i = 0; i < std::min(k, ranked.size()); ++i) {
    const auto it = votes.find(ranked[i].iri);
    if (it != votes.end()) total += it->second;
  }
  return total;
}

std::vector<ScoredIri> read_scores(std::istream& in, const std::string& name) {
  std::vector<ScoredIri> out;
  std::string line;
  std::uint64_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view text = trim(line);
    if (text.empty() || text.front() == '#') continue;
    const auto parts = split_tabs(text);
    if (parts.size() != 3) {
      fail(name, line_no, "expected rank<TAB>iri<TAB>score");
    }
    const std::string iri = strip_brackets(trim(parts[1]));
    if (iri.empty()) fail(name, line_no, "empty IRI");
    out.push_back({iri, parse_number(trim(parts[2]), name, line_no)});
  }
  return out;
}

std::vector<ScoredIri> load_scores(const std::filesystem::path& path) {
  auto in = open_or_throw(path);
  return read_scores(in, path.string());
}

std::vector<std::string> read_iri_list(std::istream& in,
                                       const std::string& name) {
  std::vector<std::string> out;
  std::string line;
  std::uint64_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view text = trim(line);
    if (text.empty() || text.front() == '#') continue;
    if (text.find('\t') != std::string_view::npos) {
      fail(name, line_no, "expected a single IRI per line");
    }
    out.push_back(strip_brackets(text));
  }
  return out;
}

std::vector<std::string> load_iri_list(const std::filesystem::path& path) {
  auto in = open_or_throw(path);
  return read_iri_list(in, path.string());
}

GoldStandard load_gold(const std::filesystem::path& path) {
  auto list = load_iri_list(path);
  try {
    return GoldStandard(std::move(list));
  } catch (const DataError& e) {
    throw DataError(path.string() + ": " + e.what());
  }
}

std::unordered_map<std::string, double> load_votes(
    const std::filesystem::path& path) {
  auto in = open_or_throw(path);
  std::unordered_map<std::string, double> votes;
  std::string line;
  std::uint64_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view text = trim(line);
    if (text.empty() || text.front() == '#') continue;
    const auto parts = split_tabs(text);
    if (parts.size() != 2) fail(path.string(), line_no, "expected iri<TAB>votes");
    votes[strip_brackets(trim(parts[0]))] =
        parse_number(trim(parts[1]), path.string(), line_no);
  }
  return votes;
}

}  // namespace inforank
