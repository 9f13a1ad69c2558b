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

#include "inforank/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <utility>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace inforank::kernels {

namespace {

using Index = std::int64_t;

std::size_t block_count(std::size_t n) {
  return (n + kReductionBlock - 1) / kReductionBlock;
}

template <typename Term>
double blocked_reduce(std::size_t n, Term term) {
  const std::size_t blocks = block_count(n);
  if (blocks <= 1) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += term(i);
    return acc;
  }
  std::vector<double> partial(blocks, 0.0);
#pragma omp parallel for schedule(static)
  for (Index b = 0; b < static_cast<Index>(blocks); ++b) {
    const std::size_t lo = static_cast<std::size_t>(b) * kReductionBlock;
    const std::size_t hi = std::min(n, lo + kReductionBlock);
    double acc = 0.0;
    for (std::size_t i = lo; i < hi; ++i) acc += term(i);
    partial[static_cast<std::size_t>(b)] = acc;
  }
  double total = 0.0;
  for (const double p : partial) total += p;
  return total;
}

}  // namespace

void set_thread_count(int threads) {
#ifdef _OPENMP
  if (threads > 0) omp_set_num_threads(threads);
#else
  (void)threads;
#endif
}

int thread_count() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

double blocked_sum(std::span<const double> x) {
  return blocked_reduce(x.size(), [x](std::size_t i) { return x[i]; });
}

double blocked_sum_of_squares(std::span<const double> x) {
  return blocked_reduce(x.size(),
                        [x](std::size_t i) { return x[i] * x[i]; });
}

double max_abs_diff(std::span<const double> a, std::span<const double> b) {
  const auto n = static_cast<Index>(a.size());
  double delta = 0.0;
#pragma omp parallel for schedule(static) reduction(max : delta)
  for (Index i = 0; i < n; ++i) {
    delta = std::max(delta, std::abs(a[i] - b[i]));
  }
  return delta;
}

double l2_normalize(std::span<double> x) {
  const double norm = std::sqrt(blocked_sum_of_squares(x));
  if (norm == 0.0) return norm;
  const auto n = static_cast<Index>(x.size());
#pragma omp parallel for schedule(static)
  for (Index i = 0; i < n; ++i) x[i] /= norm;
  return norm;
}

void pagerank_step(const Csr& in, std::span<const std::uint32_t> out_degree,
                   std::span<const double> in_weights,
                   std::span<const double> prev, std::span<double> next,
                   double alpha, DanglingPolicy dangling) {
  const std::size_t n = prev.size();
  const double inv_n = 1.0 / static_cast<double>(n);

  std::vector<double> share(n);
#pragma omp parallel for schedule(static)
  for (Index t = 0; t < static_cast<Index>(n); ++t) {
    share[t] = out_degree[t] == 0 ? 0.0 : prev[t] / out_degree[t];
  }

  double base = (1.0 - alpha) * inv_n;
  if (dangling == DanglingPolicy::redistribute) {
    const double mass = blocked_reduce(n, [&](std::size_t t) {
      return out_degree[t] == 0 ? prev[t] : 0.0;
    });
    base += alpha * mass * inv_n;
  }

  const bool weighted = !in_weights.empty();
#pragma omp parallel for schedule(dynamic, 1024)
  for (Index v = 0; v < static_cast<Index>(n); ++v) {
    const std::uint64_t lo = in.offsets[v];
    const std::uint64_t hi = in.offsets[v + 1];
    double acc = 0.0;
    if (weighted) {
      for (std::uint64_t k = lo; k < hi; ++k) {
        acc += share[in.targets[k]] * in_weights[k];
      }
    } else {
      for (std::uint64_t k = lo; k < hi; ++k) acc += share[in.targets[k]];
    }
    next[v] = base + alpha * acc;
  }
}

void propagate_step(const Csr& adj, std::span<const double> node_weights,
                    std::span<const double> prev, std::span<double> next) {
  const auto n = static_cast<Index>(prev.size());
  const bool weighted = !node_weights.empty();
#pragma omp parallel for schedule(dynamic, 1024)
  for (Index v = 0; v < n; ++v) {
    const std::uint64_t lo = adj.offsets[v];
    const std::uint64_t hi = adj.offsets[v + 1];
    double acc = 0.0;
    if (weighted) {
      const double wv = node_weights[v];
      for (std::uint64_t k = lo; k < hi; ++k) {
        const NodeId t = adj.targets[k];
        acc += prev[t] * (wv + node_weights[t]);
      }
    } else {
      for (std::uint64_t k = lo; k < hi; ++k) acc += prev[adj.targets[k]];
    }
    next[v] = prev[v] + acc;
  }
}

void propagate_top_z_step(const Csr& adj, std::span<const double> node_weights,
                          std::span<const double> prev, std::span<double> next,
                          std::size_t z) {
  const auto n = static_cast<Index>(prev.size());
  const bool weighted = !node_weights.empty();
  using Candidate = std::pair<double, NodeId>;
  const auto ranks_before = [](const Candidate& a, const Candidate& b) {
    return a.first > b.first || (a.first == b.first && a.second < b.second);
  };

#pragma omp parallel
  {
    std::vector<Candidate> candidates;
    std::vector<NodeId> scratch;
#pragma omp for schedule(dynamic, 256)
    for (Index v = 0; v < n; ++v) {
      const std::uint64_t lo = adj.offsets[v];
      const std::uint64_t hi = adj.offsets[v + 1];
      std::span<const NodeId> chosen{adj.targets.data() + lo,
                                     adj.targets.data() + hi};
      if (chosen.size() > z) {
        candidates.clear();
        for (const NodeId t : chosen) candidates.emplace_back(prev[t], t);
        std::nth_element(candidates.begin(),
                         candidates.begin() + static_cast<std::ptrdiff_t>(z),
                         candidates.end(), ranks_before);
        scratch.clear();
        for (std::size_t k = 0; k < z; ++k) scratch.push_back(candidates[k].second);
        std::sort(scratch.begin(), scratch.end());
        chosen = scratch;
      }
      double acc = 0.0;
      if (weighted) {
        const double wv = node_weights[v];
        for (const NodeId t : chosen) acc += prev[t] * (wv + node_weights[t]);
      } else {
        for (const NodeId t : chosen) acc += prev[t];
      }
      next[v] = prev[v] + acc;
    }
  }
}

}  // namespace inforank::kernels
