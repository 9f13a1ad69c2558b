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

#include <filesystem>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "inforank/graph.hpp"
#include "inforank/scores.hpp"

namespace inforank {

enum class DegreeMode { in, out, total };

// Link weights per predicate IRI for Weighted PageRank.
class WeightTable {
 public:
  WeightTable() = default;
  explicit WeightTable(double default_weight);

  // Throws ConfigError for weights outside [0, 1].
  void set(std::string predicate, double weight);
  void set_default(double weight);

  double weight(std::string_view predicate) const;
  double default_weight() const noexcept { return default_; }
  const std::map<std::string, double, std::less<>>& entries() const noexcept {
    return entries_;
  }

  // Text format: `<predicate-iri>\t<weight>` lines plus an optional
  // `default\t<weight>` line; blank and '#' lines are ignored. Angle
  // brackets around the IRI are optional. Throws DataError.
  static WeightTable parse(std::istream& in);
  static WeightTable load(const std::filesystem::path& path);

 private:
  std::map<std::string, double, std::less<>> entries_;
  double default_ = 1.0;
};

ScoreVector degree_scores(const InstanceGraph& g, DegreeMode mode);

// Weight of each in-edge, aligned with g.in_edges().targets: the largest
// predicate weight recorded on the corresponding directed edge.
std::vector<double> in_edge_weights(const InstanceGraph& g,
                                    const WeightTable& weights);

// Iterative measures start from 1/n, or from `start` when it is non-empty
// (length must equal g.size()). They throw DataError on an empty graph and
// ConfigError on an invalid configuration.
ScoreVector pagerank(const InstanceGraph& g, const IterationConfig& cfg,
                     std::span<const double> start = {});
ScoreVector weighted_pagerank(const InstanceGraph& g, const WeightTable& weights,
                              const IterationConfig& cfg,
                              std::span<const double> start = {});
ScoreVector eigenvector_centrality(const InstanceGraph& g,
                                   const IterationConfig& cfg,
                                   std::span<const double> start = {});

}  // namespace inforank
