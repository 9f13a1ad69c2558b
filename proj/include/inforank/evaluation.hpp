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

#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "inforank/graph.hpp"
#include "inforank/scores.hpp"

namespace inforank {

struct ScoredIri {
  std::string iri;
  double score = 0.0;

  friend bool operator==(const ScoredIri&, const ScoredIri&) = default;
};

using IriSet = std::unordered_set<std::string>;

// Entries ordered by descending score, ties by ascending IRI.
class RankedList {
 public:
  RankedList() = default;

  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }
  const ScoredIri& operator[](std::size_t i) const { return entries_[i]; }
  std::span<const ScoredIri> entries() const noexcept { return entries_; }
  auto begin() const noexcept { return entries_.begin(); }
  auto end() const noexcept { return entries_.end(); }

 private:
  friend RankedList rank_from_scores(std::span<const ScoredIri>,
                                     const IriSet*);
  std::vector<ScoredIri> entries_;
};

// Throws DataError if an IRI occurs twice.
RankedList rank_from_scores(std::span<const ScoredIri> scores,
                            const IriSet* restrict_to = nullptr);
RankedList rank_from_scores(const InstanceGraph& g, const ScoreVector& scores,
                            const IriSet* restrict_to = nullptr);

class GoldStandard {
 public:
  // Throws DataError on duplicates or an empty list.
  explicit GoldStandard(std::vector<std::string> relevant);

  const std::vector<std::string>& relevant() const noexcept {
    return relevant_;
  }
  bool contains(const std::string& iri) const {
    return set_.contains(iri);
  }
  std::size_t size() const noexcept { return relevant_.size(); }

 private:
  std::vector<std::string> relevant_;
  IriSet set_;
};

// |relevant among the first k| / k. Requires 1 <= k <= ranked.size();
// throws ConfigError otherwise.
double precision_at_k(const RankedList& ranked, const GoldStandard& gold,
                      std::size_t k);

// Mean of precision_at_k over the positions of relevant entries, divided
// by the gold size; relevant items missing from the ranking count as 0.
double average_precision(const RankedList& ranked, const GoldStandard& gold);

// Arithmetic mean. Throws ConfigError on an empty list.
double cmap(std::span<const double> ap_values);

// Gold items whose score is shared with a non-gold item. Their relative
// order (and so AP) depends on the IRI tie-break.
std::size_t boundary_tie_count(const RankedList& ranked,
                               const GoldStandard& gold);

// Sum of votes over the first k entries; IRIs without votes count 0.
double sum_votes(const RankedList& ranked,
                 const std::unordered_map<std::string, double>& votes,
                 std::size_t k);

// File readers. All throw DataError with the file name and line.
//
// Scores: lines `rank\tiri\tscore`; '#' lines are comments.
std::vector<ScoredIri> read_scores(std::istream& in,
                                   const std::string& name = "scores");
std::vector<ScoredIri> load_scores(const std::filesystem::path& path);
// One IRI per line (angle brackets optional), in rank order.
std::vector<std::string> read_iri_list(std::istream& in,
                                       const std::string& name = "list");
std::vector<std::string> load_iri_list(const std::filesystem::path& path);
GoldStandard load_gold(const std::filesystem::path& path);
// Lines `iri\tvotes`.
std::unordered_map<std::string, double> load_votes(
    const std::filesystem::path& path);

}  // namespace inforank
