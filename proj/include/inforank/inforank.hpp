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

#include <cstdint>
#include <span>
#include <vector>

#include "inforank/graph.hpp"
#include "inforank/scores.hpp"

namespace inforank {

// Share of all datatype statements held by each node.
struct InfoWeights {
  std::vector<double> w;
  std::uint64_t total_dtp = 0;
  // No node has any datatype statement; w is uniform 1/n.
  bool fallback_used = false;
};

struct TopZConfig {
  std::size_t z = 10;

  void validate() const;  // throws ConfigError when z < 1
};

InfoWeights info_weights(const InstanceGraph& g);

// InfoRank I: the info weights themselves. No iteration.
ScoreVector inforank1(const InstanceGraph& g);

// InfoRank II: weighted neighbor propagation over the undirected graph with
// the info weights as node weights, L2-normalized each iteration. Starts
// from the info weights unless `start` is given.
ScoreVector inforank2(const InstanceGraph& g, const IterationConfig& cfg,
                      std::span<const double> start = {});

// InfoRank III: as InfoRank II, but each node only hears from its z
// best-scoring neighbors of the previous iteration.
ScoreVector inforank3(const InstanceGraph& g, const TopZConfig& zc,
                      const IterationConfig& cfg,
                      std::span<const double> start = {});

// The min(z, degree) neighbors of v with the highest `prev` score, ordered
// by (score desc, id asc).
std::vector<NodeId> top_z_neighbors(const InstanceGraph& g, NodeId v,
                                    std::span<const double> prev,
                                    std::size_t z);

}  // namespace inforank
