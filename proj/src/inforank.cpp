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

#include "inforank/inforank.hpp"

#include <algorithm>

#include "inforank/error.hpp"
#include "inforank/kernels.hpp"
#include "power_iteration.hpp"

namespace inforank {

void TopZConfig::validate() const {
  if (z < 1) throw ConfigError("z must be at least 1");
}

InfoWeights info_weights(const InstanceGraph& g) {
  if (g.empty()) throw DataError("empty graph");
  InfoWeights out;
  for (const std::uint32_t d : g.dtp_counts()) out.total_dtp += d;
  const std::size_t n = g.size();
  out.w.resize(n);
  if (out.total_dtp == 0) {
    out.fallback_used = true;
    std::fill(out.w.begin(), out.w.end(), 1.0 / static_cast<double>(n));
    return out;
  }
  const auto total = static_cast<double>(out.total_dtp);
  for (NodeId v = 0; v < n; ++v) out.w[v] = g.dtp_counts()[v] / total;
  return out;
}

ScoreVector inforank1(const InstanceGraph& g) {
  ScoreVector out;
  out.measure = Measure::inforank1;
  out.scores = info_weights(g).w;
  return out;
}

ScoreVector inforank2(const InstanceGraph& g, const IterationConfig& cfg,
                      std::span<const double> start) {
  cfg.validate();
  const InfoWeights weights = info_weights(g);
  auto x = detail::initial_vector(g.size(), start, weights.w);
  return detail::power_iterate(
      Measure::inforank2, std::move(x), cfg, /*normalize=*/true,
      [&](std::span<const double> prev, std::span<double> next) {
        if (cfg.backend == Backend::serial) {
          kernels::serial::propagate_step(g.undirected(), weights.w, prev,
                                          next);
        } else {
          kernels::propagate_step(g.undirected(), weights.w, prev, next);
        }
      });
}

ScoreVector inforank3(const InstanceGraph& g, const TopZConfig& zc,
                      const IterationConfig& cfg,
                      std::span<const double> start) {
  zc.validate();
  cfg.validate();
  const InfoWeights weights = info_weights(g);
  auto x = detail::initial_vector(g.size(), start, weights.w);
  return detail::power_iterate(
      Measure::inforank3, std::move(x), cfg, /*normalize=*/true,
      [&](std::span<const double> prev, std::span<double> next) {
        if (cfg.backend == Backend::serial) {
          kernels::serial::propagate_top_z_step(g.undirected(), weights.w,
                                                prev, next, zc.z);
        } else {
          kernels::propagate_top_z_step(g.undirected(), weights.w, prev, next,
                                        zc.z);
        }
      });
}

std::vector<NodeId> top_z_neighbors(const InstanceGraph& g, NodeId v,
                                    std::span<const double> prev,
                                    std::size_t z) {
  const auto row = g.neighbors(v);
  if (prev.size() != g.size()) {
    throw ConfigError("score vector length does not match graph size");
  }
  std::vector<NodeId> out(row.begin(), row.end());
  const auto before = [&prev](NodeId a, NodeId b) {
    return prev[a] > prev[b] || (prev[a] == prev[b] && a < b);
  };
  if (out.size() > z) {
    std::nth_element(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(z),
                     out.end(), before);
    out.resize(z);
  }
  std::sort(out.begin(), out.end(), before);
  return out;
}

}  // namespace inforank
