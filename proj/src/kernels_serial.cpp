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

#include <algorithm>
#include <cmath>
#include <vector>

#include "inforank/kernels.hpp"

namespace inforank::kernels::serial {

double sum(std::span<const double> x) {
  double acc = 0.0;
  for (const double v : x) acc += v;
  return acc;
}

double max_abs_diff(std::span<const double> a, std::span<const double> b) {
  double delta = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    delta = std::max(delta, std::abs(a[i] - b[i]));
  }
  return delta;
}

double l2_normalize(std::span<double> x) {
  double sq = 0.0;
  for (const double v : x) sq += v * v;
  const double norm = std::sqrt(sq);
  if (norm == 0.0) return norm;
  for (double& v : x) v /= norm;
  return norm;
}

void pagerank_step(const Csr& in, std::span<const std::uint32_t> out_degree,
                   std::span<const double> in_weights,
                   std::span<const double> prev, std::span<double> next,
                   double alpha, DanglingPolicy dangling) {
  const std::size_t n = prev.size();
  double mass = 0.0;
  if (dangling == DanglingPolicy::redistribute) {
    for (std::size_t t = 0; t < n; ++t) {
      if (out_degree[t] == 0) mass += prev[t];
    }
  }
  for (NodeId v = 0; v < n; ++v) {
    double acc = 0.0;
    for (std::uint64_t k = in.offsets[v]; k < in.offsets[v + 1]; ++k) {
      const NodeId t = in.targets[k];
      const double w = in_weights.empty() ? 1.0 : in_weights[k];
      acc += prev[t] / out_degree[t] * w;
    }
    next[v] = (1.0 - alpha) / static_cast<double>(n) + alpha * acc +
              alpha * mass / static_cast<double>(n);
  }
}

void propagate_step(const Csr& adj, std::span<const double> node_weights,
                    std::span<const double> prev, std::span<double> next) {
  for (NodeId v = 0; v < prev.size(); ++v) {
    double acc = 0.0;
    for (const NodeId t : adj.row(v)) {
      acc += node_weights.empty()
                 ? prev[t]
                 : prev[t] * (node_weights[v] + node_weights[t]);
    }
    next[v] = prev[v] + acc;
  }
}

void propagate_top_z_step(const Csr& adj, std::span<const double> node_weights,
                          std::span<const double> prev, std::span<double> next,
                          std::size_t z) {
  std::vector<NodeId> ranked;
  for (NodeId v = 0; v < prev.size(); ++v) {
    const auto row = adj.row(v);
    ranked.assign(row.begin(), row.end());
    std::sort(ranked.begin(), ranked.end(), [&](NodeId a, NodeId b) {
      return prev[a] > prev[b] || (prev[a] == prev[b] && a < b);
    });
    if (ranked.size() > z) ranked.resize(z);
    std::sort(ranked.begin(), ranked.end());
    double acc = 0.0;
    for (const NodeId t : ranked) {
      acc += node_weights.empty()
                 ? prev[t]
                 : prev[t] * (node_weights[v] + node_weights[t]);
    }
    next[v] = prev[v] + acc;
  }
}

}  // namespace inforank::kernels::serial
